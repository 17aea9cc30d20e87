#include "transgress/exactlin.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/integer.hpp>

#include <random>

using namespace transgress;

namespace {

// Independent oracle: the k-th invariant factor is g_k / g_{k-1}, where g_k is
// the gcd of all k x k minors (cofactor expansion, fine for tiny matrices).
Integer minor_det(const IntMatrix& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  if (r.size() == 1) return m(r[0], c[0]);
  Integer acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<std::size_t> rr(r.begin() + 1, r.end()), cc;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != j) cc.push_back(c[k]);
    Integer sub = m(r[0], c[j]) * minor_det(m, rr, cc);
    acc += (j % 2 ? -sub : sub);
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = boost::multiprecision::gcd(g, minor_det(m, r, c));
    if (g == 0) {
      out.resize(std::min(m.rows(), m.cols()), 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

}  // namespace

TEST(Smith, A2Cartan) {
  IntMatrix a{{2, -1}, {-1, 2}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{1, 3}));
  EXPECT_EQ(smith_violation(a, s), "");
}

TEST(Smith, RectangularAndZero) {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 6}));
  EXPECT_EQ(smith_violation(m, s), "");

  IntMatrix z(3, 2);
  auto sz = smith_normal_form(z);
  EXPECT_EQ(sz.rank(), 0u);
  EXPECT_EQ(smith_violation(z, sz), "");
}

TEST(Smith, DivisibilityNeedsRowMixing) {
  IntMatrix m{{2, 0}, {0, 3}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_violation(m, s), "");
}

TEST(Smith, RandomAgainstMinorOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int k = 0; k < 1000; ++k) {
    auto m = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), 6);
    auto s = smith_normal_form(m);
    ASSERT_EQ(smith_violation(m, s), "") << m;
    ASSERT_EQ(s.diagonal(), invariant_factors_by_minors(m)) << m;
  }
}

TEST(Smith, DeterministicOutput) {
  std::mt19937_64 rng(11);
  auto m = random_matrix(rng, 4, 4, 9);
  auto a = smith_normal_form(m), b = smith_normal_form(m);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
}

TEST(Smith, ViolationIsReported) {
  IntMatrix m{{2, 0}, {0, 3}};
  SmithDecomposition bogus{IntMatrix::identity(2), m, IntMatrix::identity(2)};
  EXPECT_NE(smith_violation(m, bogus), "");
}

TEST(Hermite, Example) {
  const IntMatrix m{{2, 0}, {1, 1}};
  auto h = hermite_normal_form(m);
  EXPECT_EQ(h.H, (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(h.U * m, h.H);
}

TEST(Hermite, RandomProperties) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    auto m = random_matrix(rng, 4, 3, 7);
    auto h = hermite_normal_form(m);
    ASSERT_EQ(h.U * m, h.H);
    auto d = determinant(h.U);
    ASSERT_TRUE(d == 1 || d == -1);
    // Pivots positive, entries above each pivot reduced, zeros below.
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
      while (col < h.H.cols() && h.H(i, col) == 0) {
        for (std::size_t r = i; r < h.H.rows(); ++r) ASSERT_EQ(h.H(r, col), 0);
        ++col;
      }
      if (col == h.H.cols()) break;
      ASSERT_GT(h.H(i, col), 0);
      for (std::size_t r = 0; r < i; ++r) {
        ASSERT_GE(h.H(r, col), 0);
        ASSERT_LT(h.H(r, col), h.H(i, col));
      }
      for (std::size_t r = i + 1; r < h.H.rows(); ++r) ASSERT_EQ(h.H(r, col), 0);
      ++col;
    }
  }
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(determinant(IntMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), InvalidInput);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto m = random_matrix(rng, 4, 4, 20);
    ASSERT_EQ(determinant(m), minor_det(m, {0, 1, 2, 3}, {0, 1, 2, 3}));
  }
}

TEST(Solve, A2Inverse) {
  auto inv = solve_rational(IntMatrix{{2, -1}, {-1, 2}}, IntMatrix::identity(2));
  EXPECT_EQ(inv, (RatMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}));
  EXPECT_THROW(solve_rational(IntMatrix{{1, 2}, {2, 4}}, IntMatrix::identity(2)), SingularMatrix);
}

TEST(Rank, RationalAndModular) {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank_rational(m), 2u);
  EXPECT_EQ(modp_rank(IntMatrix{{2, -1}, {-1, 2}}, 3), 1u);
  EXPECT_EQ(modp_rank(IntMatrix{{2, -1}, {-1, 2}}, 2), 2u);
  EXPECT_THROW(modp_rank(m, 4), InvalidInput);
  EXPECT_THROW(modp_rank(m, 1), InvalidInput);
}

TEST(ModP, KernelAndCokernel) {
  IntMatrix m{{2, -1}, {-1, 2}};
  auto ker = modp_kernel(m, 3);
  ASSERT_EQ(ker.dimension(), 1u);
  EXPECT_TRUE(in_kernel_modp(m, ker.basis[0], 3));
  auto coker = modp_cokernel(m, 3);
  ASSERT_EQ(coker.dimension(), 1u);
  EXPECT_EQ(coker.basis[0], (ModVector{1, 0}));
  EXPECT_FALSE(in_image_modp(m, coker.basis[0], 3));
  EXPECT_TRUE(modp_kernel(m, 5).trivial());
  EXPECT_TRUE(modp_cokernel(m, 5).trivial());
}

TEST(ModP, RankNullityRandom) {
  std::mt19937_64 rng(13);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int k = 0; k < 100; ++k) {
      auto m = random_matrix(rng, 4, 5, 3);
      const auto r = modp_rank(m, p);
      auto ker = modp_kernel(m, p);
      auto coker = modp_cokernel(m, p);
      ASSERT_EQ(ker.dimension() + r, m.cols());
      ASSERT_EQ(coker.dimension() + r, m.rows());
      for (const auto& v : ker.basis) ASSERT_TRUE(in_kernel_modp(m, v, p));
      for (const auto& v : coker.basis) ASSERT_FALSE(in_image_modp(m, v, p));
    }
  }
}

TEST(Primes, Recognition) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(-3));
}
