#pragma once
// Command-line front end. Every command builds one JSON report; --format text
// flattens it to "key: value" lines. Exit codes: 0 success, 1 a verification
// came out negative, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thetalift/io/json.hpp"
#include "thetalift/regress.hpp"

namespace thetalift::cli {

using io::Json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

namespace detail {

/// Reads JSON from an inline literal ("{...}" or "[...]") or a file path.
inline Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      Json j = Json::parse(arg);
      io::check_schema(j);
      return j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON argument: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read \"" + arg + "\"");
  try {
    Json j = Json::parse(in);
    io::check_schema(j);
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in \"" + arg + "\": " + e.what());
  }
}

inline bool looks_like_json(const std::string& arg) {
  return std::filesystem::exists(arg) || arg.find_first_of("{[") == 0;
}

inline EvenLattice load_lattice(const std::string& arg) {
  if (!looks_like_json(arg)) return corpus::lattice(arg);
  return io::lattice_from(load_json(arg));
}

struct LoadedForm {
  VectorValuedForm form;
  std::optional<corpus::BundledForm> bundled;
};

inline LoadedForm load_form(const std::string& arg, const Rational& prec) {
  if (!looks_like_json(arg)) {
    auto all = corpus::bundled_forms();
    auto it = all.find(arg);
    if (it == all.end()) {
      std::string names;
      for (const auto& [k, v] : all) names += " " + k;
      throw InputError("unknown form \"" + arg + "\"; bundled forms:" + names);
    }
    return {it->second.build(prec), it->second};
  }
  return {io::form_from(load_json(arg), [](const std::string& n) { return corpus::lattice(n); }), std::nullopt};
}

struct FrameInput {
  CuspFrame frame;
  RationalVector witness;
};

/// The frame from --frame, falling back to the bundled form's default.
inline FrameInput load_frame(const LoadedForm& f, const std::string& arg) {
  const EvenLattice& m = f.form.disc()->lattice();
  std::optional<io::FrameSpec> spec;
  if (!arg.empty()) spec = io::frame_from(load_json(arg));
  std::optional<CuspFrame> frame;
  if (spec) frame.emplace(m, spec->z, spec->zprime);
  else if (f.bundled && f.bundled->z && f.bundled->zprime) frame.emplace(m, *f.bundled->z, *f.bundled->zprime);
  else if (f.bundled && f.bundled->z) frame.emplace(CuspFrame::with_partner(m, *f.bundled->z));
  else throw InputError("a frame is required: --frame '{\"z\": [...], \"zprime\": [...]}'");
  RationalVector witness = spec && spec->witness ? *spec->witness : default_witness(*frame, f.form);
  return {std::move(*frame), std::move(witness)};
}

inline RationalVector parse_vector(const std::string& arg) { return io::rational_vector_from(load_json(arg)); }

inline Json weyl_json(const WeylVector& w, bool convention_from_flag) {
  Json out;
  out["rho"] = io::vector_json(w.vector);
  out["rhoK"] = io::vector_json(w.rho_k);
  out["rhoZprime"] = io::rational_json(w.rho_zprime);
  out["rhoZ"] = io::rational_json(w.rho_z);
  out["norm"] = io::rational_json(w.norm);
  out["witness"] = io::vector_json(w.witness);
  out["convention"] = {{"value", to_string(w.convention)}, {"source", convention_from_flag ? "flag" : "default"}};
  return out;
}

inline void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

inline Json wall_json(const Wall& w) {
  return {{"root", io::vector_json(w.root)}, {"coeff", io::rational_json(w.coefficient)}};
}

}  // namespace detail

/// Splits a hyphenated command ("weyl-vector") into its two words.
inline std::vector<std::string> normalize_arguments(std::vector<std::string> args) {
  static const std::vector<std::string> groups = {"latt", "weil", "vvf", "weyl", "lift", "series"};
  if (!args.empty()) {
    const auto dash = args[0].find('-');
    if (dash != std::string::npos && args[0] != "paper-regress") {
      std::string head = args[0].substr(0, dash);
      if (std::find(groups.begin(), groups.end(), head) != groups.end()) {
        std::string tail = args[0].substr(dash + 1);
        args[0] = head;
        args.insert(args.begin() + 1, tail);
      }
    }
  }
  return args;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  args = normalize_arguments(std::move(args));
  CLI::App app{"Exact computations for singular theta lifts: Weil representations, theta series, Weyl vectors, "
               "product expansions and the singular Shimura lift."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string format = "json";
  std::string prec_text, height_text, convention_text, filter, frame_arg, height_vector_arg, ray_arg, wall_arg,
      side_arg, point_arg, lattice_arg, form_arg, stream_arg, expr_arg;
  long mplus = 2;
  bool components = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto with_prec = [&](CLI::App* c, const std::string& help) { c->add_option("--prec", prec_text, help); };
  auto with_convention = [&](CLI::App* c) {
    c->add_option("--convention", convention_text, "Weight of the zero vector in the Weyl vector sum")
        ->check(CLI::IsMember({"boundary-included", "boundary-excluded"}));
  };

  auto* latt = app.add_subcommand("latt", "Lattice data")->require_subcommand(1);
  auto* latt_info = latt->add_subcommand("info", "Rank, signature, determinant and discriminant group");
  latt_info->add_option("lattice", lattice_arg, "Bundled lattice name or lattice JSON")->required();
  auto* latt_theta = latt->add_subcommand("theta", "Theta series of a definite lattice");
  latt_theta->add_option("lattice", lattice_arg, "Bundled lattice name or lattice JSON")->required();
  with_prec(latt_theta, "Exponent bound (exclusive), default 4");
  latt_theta->add_flag("--components", components, "One series per discriminant class");

  auto* weil = app.add_subcommand("weil", "Weil representation")->require_subcommand(1);
  auto* weil_check = weil->add_subcommand("check", "Check the defining relations and the Milgram identity");
  weil_check->add_option("lattice", lattice_arg, "Bundled lattice name or lattice JSON")->required();

  auto* vvf = app.add_subcommand("vvf", "Vector-valued forms")->require_subcommand(1);
  auto* vvf_validate = vvf->add_subcommand("validate", "Structural checks on a form");
  vvf_validate->add_option("form", form_arg, "Bundled form name or form JSON")->required();
  with_prec(vvf_validate, "Precision for bundled forms, default 3");

  auto* weyl = app.add_subcommand("weyl", "Lorentzian and definite lattice computations")->require_subcommand(1);
  auto* weyl_vector_cmd = weyl->add_subcommand("vector", "Weyl vector of the chamber of a witness");
  auto* weyl_crossing = weyl->add_subcommand("crossing", "Difference of Weyl vectors across a wall");
  auto* weyl_phi = weyl->add_subcommand("phi", "Evaluate the piecewise linear function at a point");
  auto* weyl_congruence = weyl->add_subcommand("congruence", "Divisibility by 24 of a theta pairing");
  auto* weyl_reflective = weyl->add_subcommand("reflective", "Reflective lattice certificate");
  for (auto* c : {weyl_vector_cmd, weyl_crossing, weyl_phi, weyl_congruence, weyl_reflective}) {
    c->add_option("form", form_arg, "Bundled form name or form JSON")->required();
    with_prec(c, "Precision for bundled forms, default 3");
  }
  for (auto* c : {weyl_vector_cmd, weyl_phi, weyl_reflective}) {
    c->add_option("--frame", frame_arg, "Frame JSON {\"z\", \"zprime\", \"witness\"}");
    with_convention(c);
  }
  weyl_crossing->add_option("--wall", wall_arg, "Wall vector as a JSON array")->required();
  weyl_crossing->add_option("--side", side_arg, "A point on the starting side, JSON array")->required();
  weyl_phi->add_option("--point", point_arg, "Evaluation point, JSON array")->required();

  auto* lift = app.add_subcommand("lift", "Lifts")->require_subcommand(1);
  auto* lift_product = lift->add_subcommand("product", "Truncated product expansion at a cusp");
  lift_product->add_option("form", form_arg, "Bundled form name or form JSON")->required();
  lift_product->add_option("--frame", frame_arg,
                           "Frame JSON {\"z\", \"zprime\", \"inner\": {\"z\", \"zprime\"}, \"witness\"}");
  lift_product->add_option("--height-vector", height_vector_arg, "Height vector (ambient), JSON array");
  lift_product->add_option("--height-bound", height_text, "Height bound p/q");
  lift_product->add_option("--height", height_text, "Alias of --height-bound");
  lift_product->add_option("--ray", ray_arg, "Collapse along this ray (ambient), JSON array");
  with_prec(lift_product, "Precision for bundled forms, default 6");
  with_convention(lift_product);
  auto* lift_shimura = lift->add_subcommand("shimura", "Singular Shimura lift of a plus-space stream");
  lift_shimura->add_option("stream", stream_arg, "Coefficient stream JSON [{\"exp\", \"val\"}]")->required();
  lift_shimura->add_option("--mplus", mplus, "m+ (weight m+ + 1/2)");
  with_prec(lift_shimura, "Output precision (exclusive exponent bound)");

  auto* series = app.add_subcommand("series", "q-series")->require_subcommand(1);
  auto* series_eval = series->add_subcommand("eval", "Expand an expression such as \"E4^3 / Delta\"");
  series_eval->add_option("expression", expr_arg, "Series expression")->required();
  with_prec(series_eval, "Exponent bound (exclusive), default 4");

  auto* regress_cmd = app.add_subcommand("paper-regress", "Run the bundled regression checks");
  regress_cmd->add_option("--filter", filter, "Only checks whose names start with this prefix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto prec_or = [&](const Rational& fallback) { return prec_text.empty() ? fallback : parse_rational(prec_text); };
  const bool convention_flag = !convention_text.empty();
  const BoundaryConvention convention =
      convention_flag ? parse_convention(convention_text) : BoundaryConvention::included;

  Json report;
  report["schemaVersion"] = io::kSchemaVersion;
  int status = kOk;
  try {
    if (latt_info->parsed()) {
      EvenLattice l = detail::load_lattice(lattice_arg);
      DiscriminantForm d(l);
      report["command"] = "latt info";
      report["lattice"] = io::lattice_json(l);
      report["rank"] = l.rank();
      report["signature"] = {l.signature().first, l.signature().second};
      report["determinant"] = l.determinant_value().get_str();
      report["discriminant"] = {{"invariants", d.invariants()}, {"order", d.order()}, {"level", d.level()}};
    } else if (latt_theta->parsed()) {
      EvenLattice l = detail::load_lattice(lattice_arg);
      Rational prec = prec_or(4);
      report["command"] = "latt theta";
      report["lattice"] = l.name();
      if (components) {
        DiscriminantForm d(l);
        Json comps = Json::array();
        for (const auto& [x, s] : theta_components(d, prec)) comps.push_back({{"element", x}, {"series", io::series_json(s)}});
        report["components"] = std::move(comps);
      } else {
        report["series"] = io::series_json(theta_series(l, prec));
      }
    } else if (weil_check->parsed()) {
      EvenLattice l = detail::load_lattice(lattice_arg);
      DiscPtr d = make_discriminant(l);
      WeilRelations r = check_relations(weil_representation(d));
      MilgramReport mg = milgram_check(*d);
      report["command"] = "weil check";
      report["lattice"] = l.name();
      report["relations"] = {{"S^2 = Z", r.s_squared_is_z},
                             {"(ST)^3 = Z", r.st_cubed_is_z},
                             {"Z^4 = 1", r.z_fourth_is_identity},
                             {"Z e_x = i^(b- - b+) e_-x", r.z_acts_by_negation},
                             {"S unitary", r.s_unitary}};
      report["milgram"] = {{"squared", mg.squared_identity}, {"phase", mg.phase_identity}};
      const bool ok = r.all() && mg.holds();
      report["status"] = ok ? "relations hold" : "relations fail";
      if (!ok) status = kVerificationFailed;
    } else if (vvf_validate->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      auto problems = validate_vvf(f.form);
      report["command"] = "vvf validate";
      report["problems"] = problems;
      report["status"] = problems.empty() ? "valid" : "invalid";
      if (!problems.empty()) status = kVerificationFailed;
    } else if (weyl_vector_cmd->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      auto fr = detail::load_frame(f, frame_arg);
      report["command"] = "weyl vector";
      report["weyl"] = detail::weyl_json(weyl_vector(fr.frame, f.form, fr.witness, convention), convention_flag);
    } else if (weyl_crossing->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      RationalVector delta_vec =
          wall_crossing_delta(f.form.disc()->lattice(), f.form, detail::parse_vector(wall_arg), detail::parse_vector(side_arg));
      report["command"] = "weyl crossing";
      report["delta"] = io::vector_json(delta_vec);
    } else if (weyl_phi->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      auto fr = detail::load_frame(f, frame_arg);
      PhiValue v = phi_eval_hyperbolic(fr.frame, f.form, fr.witness, detail::parse_vector(point_arg), convention);
      report["command"] = "weyl phi";
      report["value"] = io::rational_json(v.value);
      report["rho"] = io::vector_json(v.rho);
      Json walls = Json::array();
      for (const auto& w : v.crossed) walls.push_back(detail::wall_json(w));
      report["crossed"] = std::move(walls);
      report["base"] = detail::weyl_json(v.base, convention_flag);
    } else if (weyl_congruence->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      CongruenceReport r = congruence_check(*f.form.disc(), f.form);
      report["command"] = "weyl congruence";
      report["ideal"] = r.ideal.get_str();
      report["constant"] = io::rational_json(r.constant);
      report["product"] = io::rational_json(r.product);
      report["divisible"] = r.divisible;
      if (!r.divisible) status = kVerificationFailed;
    } else if (weyl_reflective->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(3));
      auto fr = detail::load_frame(f, frame_arg);
      ReflectiveReport r = reflective_certificate(fr.frame, f.form, fr.witness, convention);
      report["command"] = "weyl reflective";
      report["reflective"] = r.reflective();
      report["failures"] = r.failures;
      report["classesChecked"] = r.classes_checked;
      report["wallsSampled"] = r.walls_sampled;
      report["weyl"] = detail::weyl_json(r.weyl, convention_flag);
      report["conclusion"] = r.conclusion;
      if (!r.reflective()) status = kVerificationFailed;
    } else if (lift_product->parsed()) {
      auto f = detail::load_form(form_arg, prec_or(6));
      const EvenLattice& m = f.form.disc()->lattice();
      std::optional<IntegerVector> z;
      std::optional<RationalVector> zp, inner_z, inner_zp, witness;
      if (!frame_arg.empty()) {
        Json j = detail::load_json(frame_arg);
        io::FrameSpec spec = io::frame_from(j);
        z = spec.z;
        zp = spec.zprime;
        witness = spec.witness;
        const Json& inner = io::field(j, "inner");
        inner_z = io::rational_vector_from(io::field(inner, "z"));
        if (inner.contains("zprime") && !inner.at("zprime").is_null())
          inner_zp = io::rational_vector_from(inner.at("zprime"));
      } else if (f.bundled && f.bundled->z && f.bundled->zprime && f.bundled->inner_z) {
        z = f.bundled->z;
        zp = f.bundled->zprime;
        inner_z = f.bundled->inner_z;
      } else {
        throw InputError("a frame with an inner cusp is required: --frame '{\"z\", \"zprime\", \"inner\": {\"z\"}}'");
      }
      ProductDatum datum(m, f.form, *z, *zp, *inner_z, inner_zp, witness, convention);
      const EvenLattice& k = datum.outer().reduced_lattice();
      RationalVector h = height_vector_arg.empty() ? datum.base_point() : datum.to_k(detail::parse_vector(height_vector_arg));
      std::optional<RationalVector> ray;
      if (!ray_arg.empty()) ray = datum.to_k(detail::parse_vector(ray_arg));
      Rational bound = height_text.empty() ? k.inner(datum.weyl().vector, h) + 3 : parse_rational(height_text);
      GroupRingSeries s = product_expansion(datum, h, bound, ray);
      LiftWeight lw = lift_weight(datum);
      report["command"] = "lift product";
      report["level"] = datum.level();
      report["weight"] = io::rational_json(lw.weight);
      report["singularWeight"] = io::rational_json(lw.singular_weight);
      report["weylVector"] = io::vector_json(datum.to_ambient(datum.weyl().vector));
      report["heightVector"] = io::vector_json(datum.to_ambient(h));
      report["heightBound"] = io::rational_json(bound);
      Json terms = Json::array();
      for (const auto& t : product_terms(datum, s))
        terms.push_back({{"lambda", io::vector_json(t.lambda)},
                         {"height", io::rational_json(t.height)},
                         {"phase", io::rational_json(t.phase)},
                         {"coeff", io::rational_json(t.coefficient)}});
      report["terms"] = std::move(terms);
      if (ray) report["raySeries"] = io::series_json(ray_series(datum, s, *ray));
    } else if (lift_shimura->parsed()) {
      ShimuraInput in;
      in.m_plus = mplus;
      Json j = detail::load_json(stream_arg);
      const Json& coeffs = j.is_object() ? io::field(j, "coefficients") : j;
      in.coefficients = io::stream_from(coeffs);
      if (j.is_object() && j.contains("precision")) in.precision = io::long_from(j.at("precision"));
      else in.precision = in.coefficients.empty() ? 0 : in.coefficients.rbegin()->first + 1;
      long out_prec = prec_text.empty() ? thetalift::detail::reachable_precision(in) : to_long(parse_rational(prec_text));
      FracPowerSeries lift_series = shimura_lift(in, out_prec);
      report["command"] = "lift shimura";
      report["mplus"] = mplus;
      report["series"] = io::series_json(lift_series);
    } else if (series_eval->parsed()) {
      report["command"] = "series eval";
      report["expression"] = expr_arg;
      report["series"] = io::series_json(evaluate_series(expr_arg, prec_or(4)));
    } else if (regress_cmd->parsed()) {
      corpus::Corpus data;
      auto outcomes = regress::run_checks(data, filter);
      Json checks = Json::array();
      long failed = 0;
      for (const auto& o : outcomes) {
        checks.push_back({{"name", o.name}, {"passed", o.result.passed}, {"detail", o.result.detail}});
        if (!o.result.passed) ++failed;
      }
      report["command"] = "paper-regress";
      report["filter"] = filter;
      report["checks"] = std::move(checks);
      report["passed"] = static_cast<long>(outcomes.size()) - failed;
      report["failed"] = failed;
      if (failed > 0 || outcomes.empty()) status = kVerificationFailed;
    }
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << " (precision bound: " << e.needed().get_str() << ")\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (format == "json") {
    out << report.dump(2) << "\n";
  } else if (regress_cmd->parsed()) {
    for (const auto& c : report["checks"])
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": "
          << c["detail"].get<std::string>() << "\n";
    out << report["passed"] << " passed, " << report["failed"] << " failed\n";
  } else {
    detail::flatten(report, "", out);
  }
  return status;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace thetalift::cli
