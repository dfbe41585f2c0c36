#include <gtest/gtest.h>

#include <hksym/hksym.hpp>

using namespace hksym;
using io::json;

TEST(QuarticJson, RoundTrip) {
  Rng rng(43);
  for (std::size_t n = 1; n <= 3; ++n) {
    const SymTensor s = random_tensor(n, 4, rng);
    const json j = io::quartic_to_json(s);
    EXPECT_EQ(io::quartic_from_json(io::parse_json(j.dump())), s);
  }
  const SymTensor z(2, 4);
  EXPECT_EQ(io::quartic_from_json(io::quartic_to_json(z)), z);
}

TEST(QuarticJson, ParsesGaussianValues) {
  const json j = io::parse_json(R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0],"value":"1/2-3i"},
                                   {"monomial":[0,4],"value":"-7"}]})");
  const SymTensor s = io::quartic_from_json(j);
  EXPECT_EQ(s.coefficient({4, 0}), GaussRat::rational(1, 2) - GaussRat(3) * GaussRat::i());
  EXPECT_EQ(s.coefficient({0, 4}), GaussRat(-7));
}

TEST(QuarticJson, FormatErrors) {
  const std::vector<std::string> bad{
      "{",
      R"({"degree":4,"coeffs":[]})",
      R"({"n":1,"degree":3,"coeffs":[]})",
      R"({"n":0,"degree":4,"coeffs":[]})",
      R"({"n":1,"degree":4,"coeffs":{}})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0,0],"value":"1"}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[3,0],"value":"1"}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0],"value":"0.5"}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0],"value":1}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0],"value":"1/0"}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[-1,5],"value":"1"}]})",
      R"({"n":1,"degree":4,"coeffs":[{"monomial":[4,0],"value":"1"},{"monomial":[4,0],"value":"2"}]})",
  };
  for (const auto& text : bad) EXPECT_THROW(io::quartic_from_json(io::parse_json(text)), FormatError) << text;
}

TEST(AlgebraJson, RoundTripKeepsAllChecks) {
  Rng rng(47);
  const SymTensor s = random_symmetric_power(p_span(SymplecticSpace(2)), 4, rng);
  const LieAlgebraModel g = build_complex_algebra(s);
  const LieAlgebraModel back = io::algebra_from_json(io::parse_json(io::algebra_to_json(g).dump()));
  EXPECT_EQ(back.basis_labels, g.basis_labels);
  EXPECT_EQ(back.structure_constants, g.structure_constants);
  EXPECT_EQ(back.metric_on_m, g.metric_on_m);
  EXPECT_TRUE(verify_jacobi(back).ok);
}

TEST(AlgebraJson, ShapeErrors) {
  json j = io::algebra_to_json(build_complex_algebra(SymTensor::p(1, 0).pow(4)));
  j["basis_labels"].erase(0);
  EXPECT_THROW(io::algebra_from_json(j), FormatError);
  json k = io::algebra_to_json(build_complex_algebra(SymTensor::p(1, 0).pow(4)));
  k["structure_constants"][0]["a"] = 99;
  EXPECT_THROW(io::algebra_from_json(k), FormatError);
}

TEST(QuaternionicJson, RoundTripAndValidation) {
  const SymplecticSpace sp(2);
  const auto j = standard_quaternionic(sp, std::make_pair(p_span(sp), q_span(sp)));
  EXPECT_EQ(io::quaternionic_from_json(io::quaternionic_to_json(j)).c_matrix(), j.c_matrix());
  json bad = io::quaternionic_to_json(j);
  bad["c_matrix"][0][0] = "1";
  EXPECT_THROW(io::quaternionic_from_json(bad), FormatError);
}

TEST(Report, DeterministicJson) {
  Rng rng(53);
  const SymTensor s = random_symmetric_power(p_span(SymplecticSpace(2)), 4, rng);
  const std::string a = report_to_json(analyze(s, Mode::real)).dump();
  const std::string b = report_to_json(analyze(s, Mode::real)).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, E4AndNegativeControl) {
  const auto r = analyze(SymTensor::p(1, 0).pow(4), Mode::complex);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.holonomy->dimension, 1u);
  EXPECT_EQ(r.flat_complex_dim, 0u);
  EXPECT_EQ(r.classification, "e4");
  const auto bad = analyze(SymTensor::p(1, 0).pow(3) * SymTensor::q(1, 0), Mode::complex);
  EXPECT_FALSE(bad.invariance_ok);
  EXPECT_EQ(bad.invariance_witness, "(p1, q1)");
  const auto zero = analyze(SymTensor(1, 4), Mode::complex);
  EXPECT_TRUE(zero.ok());
  EXPECT_EQ(zero.flat_complex_dim, 4u);
  EXPECT_EQ(zero.classification, "flat");
}

TEST(Classify8Json, Format) {
  const json c = classify8_to_json(classify_complex8(petrov_normal_form("I"), p_span(SymplecticSpace(2))));
  EXPECT_EQ(c["type"], "I");
  EXPECT_EQ(c["mode"], "complex");
  EXPECT_EQ(c["pattern"], json({1, 1, 1, 1}));
  ASSERT_TRUE(c["invariant"].is_array());
  EXPECT_EQ(c["invariant"][0], "1");
  const json n = classify8_to_json(classify_complex8(petrov_normal_form("N"), p_span(SymplecticSpace(2))));
  EXPECT_TRUE(n["invariant"].is_null());
}

TEST(Generators, AdvertisedProperties) {
  for (const std::string t : {"I", "II", "D", "III", "N", "O"})
    EXPECT_EQ(classify_complex8(generate_quartic("petrov:" + t, 1), p_span(SymplecticSpace(2))).type, t);
  EXPECT_EQ(generate_quartic("dim4", 1), SymTensor::p(1, 0).pow(4));
  EXPECT_EQ(generate_quartic("random-lagrangian:3", 7), generate_quartic("random-lagrangian:3", 7));
  const SymTensor l = generate_quartic("random-lagrangian:2", 9);
  EXPECT_TRUE(in_symmetric_power(l, p_span(SymplecticSpace(2))));
  const SymTensor r = generate_quartic("real-random:1", 9);
  const SymplecticSpace sp(2);
  EXPECT_EQ(tau(r, standard_quaternionic(sp, std::make_pair(p_span(sp), q_span(sp)))), r);
  for (const std::string k : {"petrov:X", "random-lagrangian:0", "random-lagrangian:x", "cubic", "real-random:"})
    EXPECT_THROW(generate_quartic(k, 1), FormatError) << k;
}
