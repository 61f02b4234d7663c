#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalift/corpus.hpp"
#include "thetalift/io/json.hpp"

using namespace thetalift;
using io::Json;

namespace {

EvenLattice resolve(const std::string& name) { return corpus::lattice(name); }

}  // namespace

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(io::rational_json(make_rational(-3, 4)), "-3/4");
  EXPECT_EQ(io::rational_from(Json("6/8")), make_rational(3, 4));
  EXPECT_EQ(io::rational_from(Json(5)), 5);
  EXPECT_THROW(io::rational_from(Json(0.5)), InputError);
  EXPECT_THROW(io::rational_from(Json("1/0")), InputError);
}

TEST(Json, SeriesRoundTrip) {
  for (int trial = 0; trial < 20; ++trial) {
    FracPowerSeries s = testing_support::random_series(-3, 6).rescaled(make_rational(1, testing_support::uniform(1, 4)));
    EXPECT_TRUE(io::series_from(io::series_json(s)) == s);
  }
  FracPowerSeries exact = FracPowerSeries::from_terms({{make_rational(-1, 4), 2}});
  Json j = io::series_json(exact);
  EXPECT_TRUE(j["truncation"].is_null());
  EXPECT_TRUE(io::series_from(j) == exact);
}

TEST(Json, SeriesRejectsInconsistentInput) {
  EXPECT_THROW(io::series_from(Json::parse(R"({"terms": [{"exp": "2", "val": "1"}], "truncation": "2"})")), InputError);
  EXPECT_THROW(io::series_from(Json::parse(R"({"terms": [{"exp": 1, "val": 1}, {"exp": "1", "val": 2}]})")), InputError);
  EXPECT_THROW(io::series_from(Json::parse(R"({"expDenominator": 2, "terms": [{"exp": "1/4", "val": 1}]})")),
               InputError);
  EXPECT_THROW(io::series_from(Json::parse(R"({"truncation": 3})")), InputError);
}

TEST(Json, LatticeAndFormRoundTrip) {
  for (const auto& name : {"A1", "A2", "I2,10even", "II1,9"}) {
    EvenLattice l = corpus::lattice(name);
    EvenLattice back = io::lattice_from(io::lattice_json(l));
    EXPECT_EQ(back.gram(), l.gram());
    EXPECT_EQ(back.name(), l.name());
  }
  VectorValuedForm f = corpus::level_two_product_form(3);
  VectorValuedForm g = io::form_from(io::form_json(f));
  EXPECT_EQ(g.weight_plus(), f.weight_plus());
  ASSERT_EQ(g.components().size(), f.components().size());
  for (const auto& [x, s] : f.components()) EXPECT_TRUE(g.component(x) == s);
}

TEST(Json, FormByLatticeName) {
  Json j = Json::parse(R"json({
    "lattice": "A1(-1)", "weight": ["-1/2", 0],
    "components": [{"element": [0], "series": {"terms": [{"exp": 0, "val": 10}], "truncation": 1}},
                   {"element": [-1], "series": {"terms": [{"exp": "-1/4", "val": 1}], "truncation": "3/4"}}]})json");
  VectorValuedForm f = io::form_from(j, resolve);
  EXPECT_EQ(f.coefficient({1}, make_rational(-1, 4)), 1);
  EXPECT_THROW(io::form_from(j), InputError);
  j["components"][1]["element"] = {1, 0};
  EXPECT_THROW(io::form_from(j, resolve), InputError);
}

TEST(Json, FramesAndStreams) {
  io::FrameSpec spec{{0, 1}, {1, 0}, std::nullopt};
  io::FrameSpec back = io::frame_from(io::frame_json(spec));
  EXPECT_EQ(back.z, spec.z);
  EXPECT_EQ(back.zprime, spec.zprime);
  EXPECT_FALSE(back.witness);
  EXPECT_THROW(io::frame_from(Json::parse(R"({"z": [1, "1/2"], "zprime": [0, 1]})")), InputError);

  std::map<long, Rational> stream = corpus::Corpus{}.shimura_stream;
  EXPECT_EQ(io::stream_from(io::stream_json(stream)), stream);
  EXPECT_THROW(io::stream_from(Json::parse(R"([{"exp": 1, "val": 1}, {"exp": 1, "val": 2}])")), InputError);
  EXPECT_THROW(io::stream_from(Json::parse(R"({"exp": 1})")), InputError);
}

TEST(Json, SchemaVersion) {
  EXPECT_NO_THROW(io::check_schema(Json::parse(R"({"schemaVersion": 1})")));
  EXPECT_NO_THROW(io::check_schema(Json::parse(R"({"gram": [[2]]})")));
  EXPECT_THROW(io::check_schema(Json::parse(R"({"schemaVersion": 2})")), InputError);
}
