#pragma once

// Exact integer, rational and prime-field linear algebra.
//
// Everything here is a pure function of its arguments. Pivot choices are fixed
// (smallest nonzero absolute value, ties broken by lowest row then column) so
// that the unimodular transforms are reproducible.

#include "transgress/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transgress {

/// U * M * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
      if (d != 0) ++r;
    return r;
  }
};

struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
};

namespace detail {

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Smallest nonzero |a(i,j)| over i >= r0, j >= c0; ties by (i, j) lexicographic.
inline std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t r0,
                                                                    std::size_t c0) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = r0; i < a.rows(); ++i)
    for (std::size_t j = c0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs_value(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      auto pivot = detail::min_pivot(a, t, t);
      if (!pivot) break;
      auto [pi, pj] = *pivot;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and go again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, Integer(1));
      u.add_row_multiple(t, *offending, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

/// Row-style Hermite normal form: U * M = H, pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows last.
inline HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || detail::abs_value(h(i, c)) < detail::abs_value(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over the rationals (fraction-free elimination).
inline std::size_t rank_rational(const IntMatrix& m) {
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t s = r;
    while (s < a.rows() && a(s, c) == 0) ++s;
    if (s == a.rows()) continue;
    a.swap_rows(r, s);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Thrown when solve_rational is handed a singular system matrix.
class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

/// Exact solution X of M * X = B for square invertible M.
inline RatMatrix solve_rational(const IntMatrix& m, const IntMatrix& b) {
  if (!m.is_square()) throw InvalidInput("solve_rational requires a square system matrix");
  if (b.rows() != m.rows()) throw InvalidInput("solve_rational: right-hand side has wrong row count");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix x = to_rational(b);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t s = c;
    while (s < n && a(s, c) == 0) ++s;
    if (s == n) throw SingularMatrix();
    a.swap_rows(c, s);
    x.swap_rows(c, s);
    Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < x.cols(); ++j) x(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      a.add_row_multiple(i, c, f);
      x.add_row_multiple(i, c, f);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Prime fields

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not a prime");
}

using ModVector = std::vector<std::int64_t>;

/// A subspace of F_p^dim held as a reduced row echelon basis with unit pivots.
struct ModPSubspace {
  std::int64_t p = 2;
  std::size_t ambient_dim = 0;
  std::vector<ModVector> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
  bool trivial() const noexcept { return basis.empty(); }
};

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

inline std::int64_t invmod(std::int64_t a, std::int64_t p) {
  // Fermat; p prime and a != 0 mod p.
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

using ModRows = std::vector<ModVector>;

inline ModRows reduce_mod(const IntMatrix& m, std::int64_t p) {
  ModRows rows(m.rows(), ModVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = mod_residue(m(i, j), p);
  return rows;
}

/// In-place reduced row echelon form; returns pivot columns. Zero rows are dropped.
inline std::vector<std::size_t> rref_mod(ModRows& rows, std::size_t cols, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    std::int64_t inv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::int64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - mulmod(f, rows[r][j], p)) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

/// Rank of a matrix of residues (entries already in [0, p)).
inline std::size_t rank_mod(std::vector<ModVector> rows, std::size_t cols, std::int64_t p) {
  return detail::rref_mod(rows, cols, p).size();
}

inline std::size_t modp_rank(const IntMatrix& m, std::int64_t p) {
  require_prime(p);
  auto rows = detail::reduce_mod(m, p);
  return detail::rref_mod(rows, m.cols(), p).size();
}

/// Null space {x : M x = 0 mod p} on the column (domain) side.
inline ModPSubspace modp_kernel(const IntMatrix& m, std::int64_t p) {
  require_prime(p);
  auto rows = detail::reduce_mod(m, p);
  auto pivots = detail::rref_mod(rows, m.cols(), p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ModVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ModVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = (p - rows[k][f]) % p;
    basis.push_back(std::move(v));
  }
  detail::rref_mod(basis, m.cols(), p);
  return {p, m.cols(), std::move(basis)};
}

/// Coset representatives spanning F_p^rows / colspace(M mod p): the unit vectors
/// e_k chosen greedily by increasing k, each kept when it is independent of the
/// image and of the ones already kept.
inline ModPSubspace modp_cokernel(const IntMatrix& m, std::int64_t p) {
  require_prime(p);
  auto span = detail::reduce_mod(m.transpose(), p);
  std::size_t r = detail::rref_mod(span, m.rows(), p).size();
  std::vector<ModVector> basis;
  for (std::size_t k = 0; k < m.rows() && r < m.rows(); ++k) {
    ModVector v(m.rows(), 0);
    v[k] = 1;
    auto trial = span;
    trial.push_back(v);
    const std::size_t r2 = detail::rref_mod(trial, m.rows(), p).size();
    if (r2 == r) continue;
    span = std::move(trial);
    r = r2;
    basis.push_back(std::move(v));
  }
  return {p, m.rows(), std::move(basis)};
}

/// True when M v = 0 mod p.
inline bool in_kernel_modp(const IntMatrix& m, const ModVector& v, std::int64_t p) {
  if (v.size() != m.cols()) throw InvalidInput("vector length does not match matrix columns");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + detail::mulmod(mod_residue(m(i, j), p), ((v[j] % p) + p) % p, p)) % p;
    if (acc != 0) return false;
  }
  return true;
}

/// True when v lies in the column space of M mod p.
inline bool in_image_modp(const IntMatrix& m, const ModVector& v, std::int64_t p) {
  if (v.size() != m.rows()) throw InvalidInput("vector length does not match matrix rows");
  auto cols = detail::reduce_mod(m.transpose(), p);
  std::size_t r = detail::rref_mod(cols, m.rows(), p).size();
  ModVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = ((v[i] % p) + p) % p;
  cols.push_back(std::move(w));
  return detail::rref_mod(cols, m.rows(), p).size() == r;
}

inline bool is_zero_modp(const ModVector& v, std::int64_t p) {
  return std::all_of(v.begin(), v.end(), [p](std::int64_t x) { return x % p == 0; });
}

/// Checks every defining property of a Smith decomposition of m; returns an
/// empty string when all hold, otherwise a description of the first failure.
inline std::string smith_violation(const IntMatrix& m, const SmithDecomposition& s) {
  if (s.U * m * s.V != s.D) return "U * M * V != D";
  auto unit = [](const Integer& d) { return d == 1 || d == -1; };
  if (!unit(determinant(s.U))) return "U is not unimodular";
  if (!unit(determinant(s.V))) return "V is not unimodular";
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return "D is not diagonal";
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return "negative diagonal entry";
    if (i + 1 < d.size()) {
      if (d[i] == 0 && d[i + 1] != 0) return "zero before a nonzero diagonal entry";
      if (d[i] != 0 && d[i + 1] % d[i] != 0) return "divisibility chain broken";
    }
  }
  return {};
}

}  // namespace transgress
