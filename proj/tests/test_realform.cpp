#include <gtest/gtest.h>

#include <hksym/random.hpp>
#include <hksym/real_form.hpp>

using namespace hksym;

namespace {

QuaternionicStructure split_j(const SymplecticSpace& sp) {
  return standard_quaternionic(sp, std::make_pair(p_span(sp), q_span(sp)));
}

// tau-fixed S in S^4(p-span) with full support.
SymTensor real_quartic(const SymplecticSpace& sp, const QuaternionicStructure& j, Rng& rng) {
  for (;;) {
    const SymTensor s = symmetrize_real(random_symmetric_power(p_span(sp), 4, rng), j);
    if (support(s).dim() == sp.n()) return s;
  }
}

}  // namespace

TEST(Reality, Examples) {
  Rng rng(3);
  const SymplecticSpace sp(2);
  const auto j = split_j(sp);
  const SymTensor t = random_tensor(2, 4, rng);
  const SymTensor s = symmetrize_real(t, j);
  const auto r = check_reality(s, j);
  EXPECT_TRUE(r.commutator_condition_ok);
  EXPECT_TRUE(r.tau_fixed);
  EXPECT_TRUE(r.equivalent);
  ASSERT_FALSE(s.is_zero());
  const auto ri = check_reality(GaussRat::i() * s, j);
  EXPECT_FALSE(ri.commutator_condition_ok);
  EXPECT_FALSE(ri.tau_fixed);
  EXPECT_TRUE(ri.equivalent);
  EXPECT_TRUE(ri.witness.has_value());
  const auto z = check_reality(SymTensor(2, 4), j);
  EXPECT_TRUE(z.commutator_condition_ok && z.tau_fixed);
  EXPECT_EQ(z.real_holonomy_dim, 0u);
}

TEST(Reality, EquivalenceOnRandomQuartics) {
  Rng rng(5);
  for (std::size_t n : {1u, 2u}) {
    const SymplecticSpace sp(n);
    std::vector<QuaternionicStructure> js{standard_quaternionic(sp)};
    if (n == 2) js.push_back(split_j(sp));
    for (const auto& j : js)
      for (int k = 0; k < 6; ++k) {
        SymTensor t = random_tensor(n, 4, rng);
        if (k % 2 == 0) t = symmetrize_real(t, j);
        const auto r = check_reality(t, j);
        EXPECT_EQ(r.commutator_condition_ok, r.tau_fixed);
        EXPECT_EQ(r.tau_fixed, k % 2 == 0);
      }
  }
}

TEST(Reality, SymmetrizeExamples) {
  Rng rng(7);
  const SymplecticSpace sp(2);
  const auto j = split_j(sp);
  const SymTensor s = symmetrize_real(random_tensor(2, 4, rng), j);
  EXPECT_EQ(symmetrize_real(s, j), GaussRat(2) * s);
  EXPECT_TRUE(symmetrize_real(SymTensor(2, 4), j).is_zero());
  EXPECT_EQ(tau(s, j), s);
}

TEST(RealHolonomy, CommutesWithJAndMatchesComplexDimension) {
  Rng rng(11);
  const SymplecticSpace sp(2);
  const auto j = split_j(sp);
  for (int k = 0; k < 3; ++k) {
    const SymTensor s = real_quartic(sp, j, rng);
    const auto h = real_holonomy(s, j);
    for (const auto& a : h.basis) EXPECT_TRUE(j.commutes_with(a));
    for (std::size_t a = 0; a < h.basis.size(); ++a)
      for (std::size_t b = 0; b < h.basis.size(); ++b) EXPECT_TRUE(commutator(h.basis[a], h.basis[b]).is_zero());
    const auto hc = holonomy(s);
    EXPECT_LE(h.basis.size(), 2 * hc.dimension);
    EXPECT_EQ(h.basis.size(), hc.dimension);
    // h is contained in h^C.
    for (const auto& a : h.basis) EXPECT_TRUE(hc.coordinates(a).has_value());
  }
  EXPECT_TRUE(real_holonomy(SymTensor(2, 4), j).basis.empty());
  EXPECT_THROW(real_holonomy(GaussRat::i() * real_quartic(sp, j, rng), j), NotReal);
}

TEST(RealAlgebra, FlatDim4) {
  const SymplecticSpace sp(2);
  const auto ra = build_real_algebra(SymTensor(2, 4), split_j(sp));
  EXPECT_EQ(ra.model.dim_h, 0u);
  EXPECT_EQ(ra.model.dim_m, 8u);
  EXPECT_EQ(ra.signature, (Inertia{4, 4, 0}));
  for (const auto& v : ra.m_basis) EXPECT_EQ(RealStructureRho(j_h(), split_j(sp)).apply(v), v);
}

TEST(RealAlgebra, SignatureAndAxioms) {
  Rng rng(13);
  const SymplecticSpace sp(2);
  const auto j = split_j(sp);
  for (int k = 0; k < 2; ++k) {
    const auto ra = build_real_algebra(real_quartic(sp, j, rng), j);
    EXPECT_EQ(ra.model.dim_m, 8u);
    EXPECT_EQ(ra.signature, (Inertia{4, 4, 0}));
    EXPECT_TRUE(has_real_constants(ra.model));
    EXPECT_TRUE(verify_grading(ra.model).ok);
    EXPECT_TRUE(verify_jacobi(ra.model).ok);
  }
}

TEST(RealAlgebra, SignatureDim8) {
  Rng rng(17);
  const SymplecticSpace sp(4);
  const auto j = split_j(sp);
  const auto ra = build_real_algebra(real_quartic(sp, j, rng), j);
  EXPECT_EQ(ra.model.dim_m, 16u);
  EXPECT_EQ(ra.signature, (Inertia{8, 8, 0}));
}

TEST(RealAlgebra, DefaultQuaternionic) {
  Rng rng(19);
  const SymplecticSpace sp(2);
  const auto j = split_j(sp);
  const SymTensor s = real_quartic(sp, j, rng);
  const auto jd = default_quaternionic_for(s);
  EXPECT_EQ(jd.c_matrix(), j.c_matrix());
  EXPECT_THROW(build_real_algebra(GaussRat::i() * s, j), NotReal);
}
