#include <gtest/gtest.h>

#include <hksym/matrix.hpp>
#include <hksym/random.hpp>

using namespace hksym;

namespace {

GaussRat q(long n, long d = 1) { return GaussRat::rational(n, d); }

}  // namespace

TEST(GaussRat, ConjugateProduct) {
  const GaussRat a = q(1, 2) + GaussRat::i();
  const GaussRat b = q(1, 2) - GaussRat::i();
  EXPECT_EQ(a * b, q(5, 4));
}

TEST(GaussRat, SubtractSelfIsZero) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const GaussRat x = rng.scalar();
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(GaussRat, Conj) {
  EXPECT_EQ(GaussRat::parse("3/4+2i").conj(), GaussRat::parse("3/4-2i"));
}

TEST(GaussRat, DivisionByZeroThrows) {
  EXPECT_THROW(GaussRat(1) / GaussRat(0), InvalidScalar);
}

TEST(GaussRat, CanonicalForm) {
  const GaussRat x(mpq_class(6, -4), mpq_class(10, 20));
  EXPECT_EQ(x.re().get_den(), 2);
  EXPECT_EQ(x.re().get_num(), -3);
  EXPECT_EQ(x.im(), mpq_class(1, 2));
  EXPECT_EQ(x.str(), "-3/2+1/2i");
}

TEST(GaussRat, ParseLiterals) {
  EXPECT_EQ(GaussRat::parse("-3/4+1/2i"), q(-3, 4) + q(1, 2) * GaussRat::i());
  EXPECT_EQ(GaussRat::parse(" 7 "), q(7));
  EXPECT_EQ(GaussRat::parse("i"), GaussRat::i());
  EXPECT_EQ(GaussRat::parse("-i"), -GaussRat::i());
  EXPECT_EQ(GaussRat::parse("2 - 3/5 i"), q(2) - q(3, 5) * GaussRat::i());
  EXPECT_EQ(GaussRat::parse("\xE2\x88\x92" "3/4"), q(-3, 4));
  EXPECT_EQ(GaussRat::parse("4/6"), q(2, 3));
  EXPECT_THROW(GaussRat::parse("1/0"), InvalidScalar);
  EXPECT_THROW(GaussRat::parse("abc"), InvalidScalar);
  EXPECT_THROW(GaussRat::parse(""), InvalidScalar);
  EXPECT_THROW(GaussRat::parse("0.5"), InvalidScalar);
}

TEST(GaussRat, StrRoundTrip) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const GaussRat x = rng.scalar();
    EXPECT_EQ(GaussRat::parse(x.str()), x);
  }
}

TEST(RankKernel, Identity) {
  const auto rk = rank_kernel(Matrix::identity(2));
  EXPECT_EQ(rk.rank, 2u);
  EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(RankKernel, Zero) {
  const auto rk = rank_kernel(Matrix(3, 3));
  EXPECT_EQ(rk.rank, 0u);
  ASSERT_EQ(rk.kernel_basis.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(rk.kernel_basis[k], unit_vector(3, k));
}

TEST(RankKernel, HermitianRankOne) {
  const GaussRat i = GaussRat::i();
  const Matrix m{{1, i}, {-i, 1}};
  const auto rk = rank_kernel(m);
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(rk.kernel_basis[0])));
  // The kernel line is spanned by (-i, 1); (i, 1) is not in it.
  EXPECT_EQ(rk.kernel_basis[0], (Vector{-i, 1}));
  EXPECT_FALSE(is_zero(m.apply(Vector{i, 1})));
}

TEST(RankKernel, RandomProperties) {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    Matrix m = rng.matrix(r, c);
    if (k % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * q(2);
    const auto rk = rank_kernel(m);
    EXPECT_EQ(rk.rank, rank(m.transpose()));
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), c);
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(SolveLinear, Examples) {
  const Vector b{q(3), q(-1, 2) + GaussRat::i()};
  EXPECT_EQ(solve_linear(Matrix::identity(2), b), b);
  EXPECT_FALSE(solve_linear(Matrix(2, 2), b).has_value());
  const Matrix a{{1, 1}, {0, 0}};
  EXPECT_EQ(solve_linear(a, Vector{2, 0}), (Vector{2, 0}));
}

TEST(SolveLinear, RandomConsistentSystems) {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    const Matrix a = rng.matrix(r, c);
    const Vector b = a.apply(rng.vector(c));
    const auto x = solve_linear(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(hermitian_inertia(Matrix::identity(4)), (Inertia{4, 0, 0}));
  EXPECT_EQ(hermitian_inertia(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}), (Inertia{1, 1, 1}));
  EXPECT_EQ(hermitian_inertia(Matrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  const GaussRat i = GaussRat::i();
  EXPECT_EQ(hermitian_inertia(Matrix{{0, i}, {-i, 0}}), (Inertia{1, 1, 0}));
  EXPECT_THROW(hermitian_inertia(Matrix{{0, 1}, {0, 0}}), ContractError);
}

TEST(Inertia, CongruenceInvariant) {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = rng.uniform(1, 5);
    // Random Hermitian of random rank: B^H D B.
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = GaussRat(rng.uniform(-1, 1));
    const Matrix b = rng.invertible_matrix(n);
    const Matrix h = b.adjoint() * d * b;
    const Inertia base = hermitian_inertia(h);
    const Inertia diag = hermitian_inertia(d);
    EXPECT_EQ(base, diag);
    const Matrix p = rng.invertible_matrix(n);
    EXPECT_EQ(hermitian_inertia(p.adjoint() * h * p), base);
  }
}

TEST(EchelonBasis, Coordinates) {
  Rng rng(29);
  for (int k = 0; k < 20; ++k) {
    std::vector<Vector> gens{rng.vector(4), rng.vector(4)};
    gens.push_back(gens[0] + q(3) * gens[1]);
    const EchelonBasis eb(gens, 4);
    EXPECT_EQ(eb.rank(), 2u);
    const Vector target = q(2) * gens[0] - gens[1];
    const auto c = eb.coordinates(target);
    ASSERT_TRUE(c.has_value());
    Vector back(4);
    for (std::size_t r = 0; r < eb.rank(); ++r) back = back + (*c)[r] * eb.rows()[r];
    EXPECT_EQ(back, target);
    EXPECT_FALSE(eb.contains(unit_vector(4, 0) + rng.vector(4)) && eb.contains(unit_vector(4, 1)) &&
                 eb.contains(unit_vector(4, 2)));
  }
}

TEST(Realify, RoundTrip) {
  Rng rng(31);
  const Vector v = rng.vector(5);
  const Vector r = realify(v);
  for (const auto& x : r) EXPECT_TRUE(x.is_real());
  EXPECT_EQ(derealify(r), v);
}
