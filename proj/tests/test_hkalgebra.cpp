#include <gtest/gtest.h>

#include <hksym/hk_algebra.hpp>
#include <hksym/random.hpp>

#include "oracles.hpp"

using namespace hksym;

namespace {

SymTensor P(std::size_t n = 1, std::size_t a = 0) { return SymTensor::p(n, a); }
SymTensor Q(std::size_t n = 1, std::size_t a = 0) { return SymTensor::q(n, a); }

// Ricci oracle straight from R(h(x)e, h'(x)e') = -omega_H(h,h') S_{e,e'}
// acting on H (x) E, without the structure constants.
Matrix ricci_oracle(const SymTensor& s) {
  const std::size_t de = s.dim(), dm = 2 * de;
  const Matrix& oh = h_space().omega();
  Matrix ric(dm, dm);
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dm; ++y) {
      const std::size_t bx = x / de, kx = x % de, by = y / de, ky = y % de;
      GaussRat tr;
      for (std::size_t z = 0; z < dm; ++z) {
        const std::size_t bz = z / de, kz = z % de;
        // R(z, x) y = -omega_H(h_bz, h_bx) h_by (x) S_{e_kz, e_kx} e_ky
        if (oh(bz, bx).is_zero() || by != bz) continue;
        const Matrix a = double_contraction_endo(s, unit_vector(de, kz), unit_vector(de, kx));
        tr -= oh(bz, bx) * a(kz, ky);
      }
      ric(x, y) = tr;
    }
  return ric;
}

std::vector<SymTensor> corpus(std::size_t n, Rng& rng, int count) {
  const SymplecticSpace sp(n);
  std::vector<SymTensor> out;
  for (int k = 0; k < count; ++k) out.push_back(random_symmetric_power(p_span(sp), 4, rng));
  return out;
}

}  // namespace

TEST(Invariance, Examples) {
  EXPECT_TRUE(check_invariance(P().pow(4)).ok);
  const auto r = check_invariance(P().pow(3) * Q());
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  // First failing pair in lexicographic order is (p, q):
  // S_{p,p} = 0 and S_{p,q} = -1/4 p^2 with p^2 . p^3q = p^4 != 0.
  EXPECT_EQ(*r.witness, (BasisPair{0, 1}));
  EXPECT_TRUE(double_contraction_endo(P().pow(3) * Q(), unit_vector(2, 0), unit_vector(2, 0)).is_zero());
  EXPECT_FALSE(sp_action(double_contraction_endo(P().pow(3) * Q(), unit_vector(2, 0), unit_vector(2, 1)),
                         P().pow(3) * Q())
                   .is_zero());
  EXPECT_TRUE(check_invariance(SymTensor(2, 4)).ok);
}

TEST(Invariance, LagrangianSupportedQuarticsAreInvariant) {
  Rng rng(3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : corpus(n, rng, 4)) EXPECT_TRUE(check_invariance(s).ok);
}

TEST(Invariance, RandomGenericQuarticFails) {
  Rng rng(5);
  EXPECT_FALSE(check_invariance(random_tensor(2, 4, rng)).ok);
}

TEST(Holonomy, Examples) {
  const auto h = holonomy(P().pow(4));
  EXPECT_EQ(h.dimension, 1u);
  EXPECT_TRUE(h.is_abelian);
  EXPECT_TRUE(h.is_solvable);
  EXPECT_EQ(h.derived_series_lengths, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(holonomy(SymTensor(1, 4)).dimension, 0u);
  const SymTensor x = P(2, 0);
  EXPECT_EQ(holonomy(x.pow(4)).dimension, 1u);
}

TEST(Holonomy, NonSolvableGenerators) {
  // sl(2) = sp(2) spanned by p^2, pq, q^2 is perfect.
  std::vector<Matrix> gens{endo_of_quadratic(P().pow(2)), endo_of_quadratic(P() * Q()), endo_of_quadratic(Q().pow(2))};
  const auto h = holonomy_from_generators(gens, 2);
  EXPECT_EQ(h.dimension, 3u);
  EXPECT_FALSE(h.is_abelian);
  EXPECT_FALSE(h.is_solvable);
}

TEST(Holonomy, AbelianOnLagrangianCorpus) {
  Rng rng(7);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : corpus(n, rng, 3)) {
      const auto h = holonomy(s);
      EXPECT_TRUE(h.is_abelian);
      EXPECT_TRUE(h.is_solvable);
      for (const auto& a : h.basis) EXPECT_TRUE(is_in_sp(s.space(), a));
      EXPECT_LE(h.dimension, n * (n + 1) / 2);
    }
}

TEST(Algebra, ExamplesDimensions) {
  const auto g = build_complex_algebra(P().pow(4));
  EXPECT_EQ(g.dim_h, 1u);
  EXPECT_EQ(g.dim_m, 4u);
  EXPECT_EQ(g.dim(), 5u);
  EXPECT_TRUE(verify_jacobi(g).ok);
  const auto flat = build_complex_algebra(SymTensor(1, 4));
  EXPECT_EQ(flat.dim_h, 0u);
  for (const auto& row : flat.structure_constants)
    for (const auto& v : row) EXPECT_TRUE(is_zero(v));
  const auto g8 = build_complex_algebra(P(2, 0).pow(4));
  EXPECT_EQ(g8.dim_h, 1u);
  EXPECT_EQ(g8.dim_m, 8u);
}

TEST(Algebra, RejectsNonInvariant) {
  EXPECT_THROW(build_complex_algebra(P().pow(3) * Q()), NotHyperKahler);
}

TEST(Algebra, JacobiNegativeControl) {
  auto g = build_complex_algebra(P().pow(4));
  // [h1*p1, h2*q1] = S_{p,q} = 0; corrupt it to A1.
  const std::size_t x = g.dim_h + tensor_index(0, 0, 2), y = g.dim_h + tensor_index(1, 1, 2);
  g.structure_constants[x][y][0] += GaussRat(1);
  g.structure_constants[y][x][0] -= GaussRat(1);
  // Still antisymmetric, but Jacobi fails for some triple.
  EXPECT_TRUE(verify_antisymmetry(g).ok);
  const auto r = verify_jacobi(g);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  auto flat = build_complex_algebra(SymTensor(1, 4));
  EXPECT_TRUE(verify_jacobi(flat).ok);
}

TEST(Algebra, PropertiesOnCorpus) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& s : corpus(n, rng, 3)) {
      const auto g = build_complex_algebra(s);
      EXPECT_TRUE(verify_antisymmetry(g).ok);
      EXPECT_TRUE(verify_grading(g).ok);
      EXPECT_TRUE(verify_jacobi(g).ok);
      EXPECT_TRUE(verify_metric(g).ok());
      // Derivation identity on the holonomy basis.
      const auto h = holonomy(s);
      for (const auto& a : h.basis) {
        const SymTensor as = sp_action(a, s);
        for (std::size_t f = 0; f < s.dim(); ++f)
          for (std::size_t f2 = 0; f2 < s.dim(); ++f2) {
            const Vector ef = unit_vector(s.dim(), f), eg = unit_vector(s.dim(), f2);
            EXPECT_EQ(double_contraction_endo(as, ef, eg),
                      commutator(a, double_contraction_endo(s, ef, eg)) - double_contraction_endo(s, a.apply(ef), eg) -
                          double_contraction_endo(s, ef, a.apply(eg)));
          }
      }
    }
}

TEST(Ricci, ZeroAndMatchesOracle) {
  Rng rng(13);
  std::vector<SymTensor> cases{P().pow(4), SymTensor(1, 4)};
  for (const auto& s : corpus(2, rng, 3)) cases.push_back(s);
  for (const auto& s : cases) {
    const auto r = curvature_ricci(s);
    EXPECT_TRUE(r.metric_invariant);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(r.ricci, ricci_oracle(s));
  }
}

TEST(FindLagrangian, Examples) {
  const SymplecticSpace h(1);
  EXPECT_TRUE(same_subspace(find_lagrangian(P().pow(4)), Subspace(h, {h.p(0)})));
  const SymplecticSpace sp(2);
  EXPECT_TRUE(same_subspace(find_lagrangian(SymTensor(2, 4)), p_span(sp)));
  const SymTensor x = P(2, 0), y = P(2, 1);
  EXPECT_TRUE(find_lagrangian(x.pow(4) + y.pow(4)).contains(Subspace(sp, {sp.p(0), sp.p(1)})));
}

TEST(FindLagrangian, SymplecticImages) {
  Rng rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    const SymplecticSpace sp(n);
    for (const auto& s : corpus(n, rng, 2)) {
      const Matrix t = random_symplectic(sp, rng, 2);
      const SymTensor ts = act(t, s);
      const Subspace l = find_lagrangian(ts);
      EXPECT_TRUE(is_lagrangian(l));
      EXPECT_TRUE(in_symmetric_power(ts, l));
      EXPECT_TRUE(is_isotropic(support(ts)));
      EXPECT_TRUE(l.contains(support(ts)));
    }
  }
}

TEST(FindLagrangian, NonIsotropicSupportIsTheoremViolation) {
  EXPECT_THROW(find_lagrangian(P().pow(2) * Q().pow(2)), TheoremViolation);
}

TEST(Flat, Examples) {
  EXPECT_EQ(flat_decomposition(P().pow(4)).flat_complex_dim, 0u);
  EXPECT_EQ(flat_decomposition(SymTensor(1, 4)).flat_complex_dim, 4u);
  const auto d = flat_decomposition(P(2, 0).pow(4));
  EXPECT_EQ(d.flat_complex_dim, 4u);
  const SymplecticSpace sp(2);
  EXPECT_TRUE(same_subspace(d.e0, Subspace(sp, {sp.p(1), sp.q(1)})));
  EXPECT_TRUE(same_subspace(d.e1, Subspace(sp, {sp.p(0), sp.q(0)})));
  const SymTensor x = P(2, 0), y = P(2, 1);
  EXPECT_EQ(flat_decomposition(x.pow(4) + y.pow(4)).flat_complex_dim, 0u);
}

TEST(Flat, RandomImages) {
  Rng rng(19);
  const SymplecticSpace sp(3);
  for (int k = 0; k < 3; ++k) {
    // Support of dimension 2 inside a Lagrangian of dimension 3.
    const Subspace v(sp, {sp.p(0), sp.p(1)});
    const SymTensor s = act(random_symplectic(sp, rng, 1), random_symmetric_power(v, 4, rng));
    const auto d = flat_decomposition(s);
    EXPECT_EQ(d.e1_plus.dim(), 2u);
    EXPECT_EQ(d.flat_complex_dim, 4u);
  }
}

TEST(Aut, Examples) {
  const SymplecticSpace h(1);
  EXPECT_EQ(compute_aut(P().pow(4), Subspace(h, {h.p(0)})).dimension, 0u);
  const SymplecticSpace sp(2);
  EXPECT_EQ(compute_aut(SymTensor(2, 4), p_span(sp)).dimension, 4u);
  const auto r = compute_aut(P(2, 0).pow(3) * P(2, 1), p_span(sp));
  ASSERT_EQ(r.dimension, 1u);
  // B = diag(a, -3a): 3 a_x + a_y = 0.
  const Matrix& b = r.gl_basis[0];
  EXPECT_TRUE(b(0, 1).is_zero());
  EXPECT_TRUE(b(1, 0).is_zero());
  EXPECT_EQ(b(1, 1), GaussRat(-3) * b(0, 0));
  for (const auto& a : r.sp_basis) {
    EXPECT_TRUE(is_in_sp(sp, a));
    EXPECT_TRUE(sp_action(a, P(2, 0).pow(3) * P(2, 1)).is_zero());
  }
  EXPECT_THROW(compute_aut(Q(2, 0).pow(4), p_span(sp)), ContractError);
}

TEST(Aut, MatchesOracle) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 2; ++n) {
    const SymplecticSpace sp(n);
    std::vector<SymTensor> cases = corpus(n, rng, 3);
    cases.push_back(SymTensor(n, 4));
    if (n == 2) {
      const SymTensor x = P(2, 0), y = P(2, 1);
      cases.push_back(x.pow(4));
      cases.push_back(x.pow(2) * y.pow(2));
      cases.push_back(x.pow(3) * y);
    }
    for (const auto& s : cases) {
      const Matrix t = random_symplectic(sp, rng, 1);
      const SymTensor ts = act(t, s);
      const Subspace l = find_lagrangian(ts);
      EXPECT_EQ(compute_aut(ts, l).dimension, oracle::aut_dimension(ts, l));
      EXPECT_EQ(compute_aut(s, p_span(sp)).dimension, oracle::aut_dimension(s, p_span(sp)));
    }
  }
}

TEST(Equivariance, GlImagesKeepInvariants) {
  Rng rng(29);
  for (std::size_t n = 1; n <= 2; ++n) {
    const SymplecticSpace sp(n);
    for (const auto& s : corpus(n, rng, 3)) {
      const Matrix a = rng.invertible_matrix(n);
      const Matrix a_inv_t = inverse_or_throw(a).transpose();
      Matrix t(2 * n, 2 * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          t(i, j) = a(i, j);
          t(n + i, n + j) = a_inv_t(i, j);
        }
      ASSERT_TRUE(is_symplectic(sp, t));
      const SymTensor ts = act(t, s);
      EXPECT_EQ(holonomy(ts).dimension, holonomy(s).dimension);
      EXPECT_EQ(support(ts).dim(), support(s).dim());
      EXPECT_EQ(flat_decomposition(ts).flat_complex_dim, flat_decomposition(s).flat_complex_dim);
      EXPECT_EQ(compute_aut(ts, p_span(sp)).dimension, compute_aut(s, p_span(sp)).dimension);
    }
  }
}
