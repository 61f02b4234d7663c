#pragma once
// JSON encodings. Rationals are strings "p/q" ("p" when q = 1); integers in
// vectors may also be given as JSON numbers on input.

#include <functional>

#include <json.hpp>

#include "thetalift/weilrep/vvf.hpp"

namespace thetalift::io {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

inline std::string rational_json(const Rational& x) { return x.get_str(); }

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational given as a \"p/q\" string, got " + j.dump());
}

inline Integer integer_from(const Json& j) {
  Rational r = rational_from(j);
  if (!is_integral(r)) throw InputError("expected an integer, got " + j.dump());
  return r.get_num();
}

inline long long_from(const Json& j) { return to_long(integer_from(j)); }

inline Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

inline Json vector_json(const IntegerVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline RationalVector rational_vector_from(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from(x));
  return out;
}

inline IntegerVector integer_vector_from(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  IntegerVector out;
  for (const auto& x : j) out.push_back(integer_from(x));
  return out;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schemaVersion") && j.at("schemaVersion") != kSchemaVersion)
    throw InputError("unsupported schemaVersion " + j.at("schemaVersion").dump());
}

// -- series ------------------------------------------------------------------

inline Json series_json(const FracPowerSeries& s) {
  Json out;
  out["expDenominator"] = s.exponent_denominator();
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", rational_json(e)}, {"val", rational_json(c)}});
  out["terms"] = std::move(terms);
  out["truncation"] = s.truncation() ? Json(rational_json(*s.truncation())) : Json(nullptr);
  return out;
}

inline FracPowerSeries series_from(const Json& j) {
  std::map<Rational, Rational> terms;
  std::optional<Rational> trunc;
  if (j.contains("truncation") && !j.at("truncation").is_null()) trunc = rational_from(j.at("truncation"));
  for (const auto& t : field(j, "terms")) {
    Rational e = rational_from(field(t, "exp"));
    if (trunc && e >= *trunc) throw InputError("term q^" + e.get_str() + " lies at or beyond the truncation");
    if (!terms.emplace(e, rational_from(field(t, "val"))).second)
      throw InputError("exponent " + e.get_str() + " listed twice");
  }
  FracPowerSeries s = FracPowerSeries::from_terms(terms, trunc);
  if (j.contains("expDenominator")) {
    long den = long_from(j.at("expDenominator"));
    if (den <= 0 || den % s.exponent_denominator() != 0)
      throw InputError("expDenominator " + std::to_string(den) + " does not cover the listed exponents");
  }
  return s;
}

// -- lattices ----------------------------------------------------------------

inline Json lattice_json(const EvenLattice& l) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(to_long(l.gram()(i, j)));
    gram.push_back(std::move(row));
  }
  return {{"name", l.name()}, {"gram", std::move(gram)}};
}

inline EvenLattice lattice_from(const Json& j) {
  const Json& rows = field(j, "gram");
  if (!rows.is_array()) throw InputError("gram must be an array of rows");
  const std::size_t n = rows.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw InputError("gram matrix is not square");
    for (std::size_t k = 0; k < n; ++k) g(i, k) = integer_from(rows[i][k]);
  }
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  return EvenLattice(std::move(g), std::move(name));
}

using LatticeResolver = std::function<EvenLattice(const std::string&)>;

/// A lattice reference is either an inline lattice object or a name passed to the resolver.
inline EvenLattice lattice_ref_from(const Json& j, const LatticeResolver& resolve) {
  if (j.is_string()) {
    if (!resolve) throw InputError("lattice given by name but no corpus is available");
    return resolve(j.get<std::string>());
  }
  return lattice_from(j);
}

// -- forms -------------------------------------------------------------------

inline Json form_json(const VectorValuedForm& f) {
  Json out;
  out["lattice"] = lattice_json(f.disc()->lattice());
  out["weight"] = {rational_json(f.weight_plus()), rational_json(f.weight_minus())};
  out["parity"] = {f.parity_plus(), f.parity_minus()};
  Json comps = Json::array();
  for (const auto& [x, s] : f.components()) comps.push_back({{"element", x}, {"series", series_json(s)}});
  out["components"] = std::move(comps);
  return out;
}

inline VectorValuedForm form_from(const Json& j, const LatticeResolver& resolve = {}) {
  EvenLattice l = lattice_ref_from(field(j, "lattice"), resolve);
  DiscPtr d = make_discriminant(l);
  const Json& w = field(j, "weight");
  if (!w.is_array() || w.size() != 2) throw InputError("weight must be a pair [w+, w-]");
  int pp = 0, pm = 0;
  if (j.contains("parity")) {
    const Json& p = j.at("parity");
    if (!p.is_array() || p.size() != 2) throw InputError("parity must be a pair [m+, m-]");
    pp = static_cast<int>(long_from(p[0]));
    pm = static_cast<int>(long_from(p[1]));
  }
  std::map<DiscElement, FracPowerSeries> comps;
  for (const auto& c : field(j, "components")) {
    DiscElement x;
    for (const auto& v : field(c, "element")) x.push_back(long_from(v));
    if (x.size() != d->invariants().size())
      throw InputError("element " + field(c, "element").dump() + " has the wrong length for the discriminant group");
    for (std::size_t i = 0; i < x.size(); ++i) {
      long m = d->invariants()[i];
      x[i] = ((x[i] % m) + m) % m;
    }
    if (!comps.emplace(x, series_from(field(c, "series"))).second)
      throw InputError("element " + field(c, "element").dump() + " listed twice");
  }
  return VectorValuedForm(d, rational_from(w[0]), rational_from(w[1]), std::move(comps), pp, pm);
}

// -- frames ------------------------------------------------------------------

struct FrameSpec {
  IntegerVector z;
  RationalVector zprime;
  std::optional<RationalVector> witness;
};

inline FrameSpec frame_from(const Json& j) {
  FrameSpec f;
  f.z = integer_vector_from(field(j, "z"));
  f.zprime = rational_vector_from(field(j, "zprime"));
  if (j.contains("witness") && !j.at("witness").is_null()) f.witness = rational_vector_from(j.at("witness"));
  return f;
}

inline Json frame_json(const FrameSpec& f) {
  Json out{{"z", vector_json(f.z)}, {"zprime", vector_json(f.zprime)}};
  out["witness"] = f.witness ? vector_json(*f.witness) : Json(nullptr);
  return out;
}

// -- coefficient streams -----------------------------------------------------

inline std::map<long, Rational> stream_from(const Json& j) {
  if (!j.is_array()) throw InputError("coefficient stream must be an array of {\"exp\", \"val\"}");
  std::map<long, Rational> out;
  for (const auto& t : j)
    if (!out.emplace(long_from(field(t, "exp")), rational_from(field(t, "val"))).second)
      throw InputError("exponent " + field(t, "exp").dump() + " listed twice");
  return out;
}

inline Json stream_json(const std::map<long, Rational>& s) {
  Json out = Json::array();
  for (const auto& [n, c] : s) out.push_back({{"exp", n}, {"val", rational_json(c)}});
  return out;
}

}  // namespace thetalift::io
