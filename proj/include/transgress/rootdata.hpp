#pragma once

// Root systems of the simple types A-G in fundamental-weight coordinates.
//
// Conventions: nodes numbered as in Bourbaki/Humphreys (E6/E7/E8 branch node is
// 2, long chain 1-3-4-5-...). The Cartan matrix satisfies
//   cartan(i, j) = 2 (a_i, a_j) / (a_j, a_j),
// so row i of the Cartan matrix is the i-th simple root written in the basis of
// fundamental weights phi_j, where 2 (phi_i, a_j) / (a_j, a_j) = delta_ij.
// Long roots have squared length 2.

#include "transgress/exactlin.hpp"
#include "transgress/matrix.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace transgress {

enum class LieFamily { A, B, C, D, E, F, G };

inline char family_letter(LieFamily f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline std::optional<LieFamily> family_from_letter(char c) {
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<LieFamily>(c - 'A');
}

struct LieType {
  LieFamily family = LieFamily::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Empty string when valid, otherwise the violated rank constraint.
inline std::string rank_constraint_violation(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case LieFamily::A: return n >= 1 ? "" : "type A requires rank >= 1";
    case LieFamily::B: return n >= 2 ? "" : "type B requires rank >= 2";
    case LieFamily::C: return n >= 2 ? "" : "type C requires rank >= 2";
    case LieFamily::D: return n >= 3 ? "" : "type D requires rank >= 3";
    case LieFamily::E: return (n >= 6 && n <= 8) ? "" : "type E requires rank 6, 7 or 8";
    case LieFamily::F: return n == 4 ? "" : "type F requires rank 4";
    case LieFamily::G: return n == 2 ? "" : "type G requires rank 2";
  }
  return "unknown family";
}

inline void validate(const LieType& t) {
  if (auto why = rank_constraint_violation(t); !why.empty()) throw InvalidInput(t.name() + ": " + why);
}

/// Real dimension of the compact group of the given type.
inline long long group_dimension(const LieType& t) {
  const long long n = t.rank;
  switch (t.family) {
    case LieFamily::A: return n * (n + 2);
    case LieFamily::B:
    case LieFamily::C: return n * (2 * n + 1);
    case LieFamily::D: return n * (2 * n - 1);
    case LieFamily::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case LieFamily::F: return 52;
    case LieFamily::G: return 14;
  }
  return 0;
}

/// Integer coordinates with respect to the fundamental weights.
struct WeightVector {
  std::vector<std::int64_t> coords;

  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  WeightVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
  }

  WeightVector operator-() const {
    WeightVector r = *this;
    for (auto& x : r.coords) x = -x;
    return r;
  }

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Which of the two transposed Cartan matrices to store. `Transposed` gives the
/// dual root system (long and short roots exchanged); it exists so fixtures can
/// show that the convention matters.
enum class CartanConvention { Reference, Transposed };

struct RootSystem {
  LieType type;
  IntMatrix cartan;
  std::vector<WeightVector> simple_roots;
  /// Squared lengths (a_i, a_i) of the simple roots.
  std::vector<Rational> simple_norms;
  /// (phi_i, phi_j).
  RatMatrix gram;
  /// All roots, sorted lexicographically.
  std::vector<WeightVector> all_roots;

  std::size_t rank() const noexcept { return simple_roots.size(); }
};

inline Rational inner_product(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  Rational acc = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (w[j] != 0) acc += rs.gram(i, j) * v[i] * w[j];
  }
  return acc;
}

/// 2 (v, beta) / (beta, beta): the pairing of v with the coroot of beta.
inline Rational coroot_pairing(const RootSystem& rs, const WeightVector& v, const WeightVector& beta) {
  return 2 * inner_product(rs, v, beta) / inner_product(rs, beta, beta);
}

/// Simple reflection s_i(v) = v - v_i * a_i (index i is 0-based).
inline WeightVector reflect(const RootSystem& rs, const WeightVector& v, std::size_t i) {
  if (i >= rs.rank()) throw InvalidInput("simple reflection index " + std::to_string(i + 1) + " out of range");
  if (v.size() != rs.rank()) throw InvalidInput("weight vector has wrong length");
  WeightVector r = v;
  const std::int64_t c = v[i];
  if (c == 0) return r;
  for (std::size_t k = 0; k < rs.rank(); ++k) r[k] -= c * rs.simple_roots[i][k];
  return r;
}

/// Closure of the simple roots under simple reflections, applied in `schedule`
/// order (default 0..n-1). The result is sorted and independent of the schedule.
inline std::vector<WeightVector> generate_all_roots(const RootSystem& rs, std::span<const std::size_t> schedule = {}) {
  std::vector<std::size_t> order(schedule.begin(), schedule.end());
  if (order.empty()) {
    order.resize(rs.rank());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::set<WeightVector> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<WeightVector> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    WeightVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : order) {
      WeightVector w = reflect(rs, v, i);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace detail {

struct DynkinData {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based
  std::vector<Rational> norms;
};

inline DynkinData dynkin_data(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  DynkinData d;
  d.norms.assign(n, Rational(2));
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case LieFamily::A: chain(n); break;
    case LieFamily::B:
      chain(n);
      d.norms[n - 1] = 1;
      break;
    case LieFamily::C:
      chain(n);
      for (std::size_t i = 0; i + 1 < n; ++i) d.norms[i] = 1;
      break;
    case LieFamily::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case LieFamily::E:
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (std::size_t i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case LieFamily::F:
      chain(4);
      d.norms[2] = d.norms[3] = 1;
      break;
    case LieFamily::G:
      chain(2);
      d.norms[0] = Rational(2, 3);
      break;
  }
  return d;
}

}  // namespace detail

inline RootSystem build_root_system(const LieType& t, CartanConvention convention = CartanConvention::Reference) {
  validate(t);
  const std::size_t n = static_cast<std::size_t>(t.rank);
  auto dyn = detail::dynkin_data(t);
  if (convention == CartanConvention::Transposed) {
    Rational shortest = *std::min_element(dyn.norms.begin(), dyn.norms.end());
    for (auto& x : dyn.norms) x = 2 * shortest / x;
  }

  // (a_i, a_j) for simple roots; adjacent nodes have (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2.
  RatMatrix root_gram(n, n);
  for (std::size_t i = 0; i < n; ++i) root_gram(i, i) = dyn.norms[i];
  for (auto [i, j] : dyn.edges) {
    Rational v = -std::max(dyn.norms[i], dyn.norms[j]) / 2;
    root_gram(i, j) = root_gram(j, i) = v;
  }

  RootSystem rs;
  rs.type = t;
  rs.simple_norms = dyn.norms;
  rs.cartan = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational b = 2 * root_gram(i, j) / dyn.norms[j];
      if (boost::multiprecision::denominator(b) != 1) throw ConsistencyError("non-integral Cartan entry");
      rs.cartan(i, j) = boost::multiprecision::numerator(b);
    }
  for (std::size_t i = 0; i < n; ++i) {
    WeightVector a;
    a.coords.resize(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = static_cast<std::int64_t>(rs.cartan(i, j));
    rs.simple_roots.push_back(std::move(a));
  }

  // phi = A^{-1} a, so (phi_i, phi_j) = (A^{-1})_{ji} |a_i|^2 / 2.
  RatMatrix inv = solve_rational(rs.cartan, IntMatrix::identity(n));
  rs.gram = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram(i, j) = inv(j, i) * dyn.norms[i] / 2;

  rs.all_roots = generate_all_roots(rs);
  return rs;
}

/// Coefficients of a weight in the basis of simple roots (rational in general).
inline std::vector<Rational> simple_root_coordinates(const RootSystem& rs, const WeightVector& v) {
  // v = c^T A  <=>  A^T c = v.
  IntMatrix rhs(rs.rank(), 1);
  for (std::size_t i = 0; i < rs.rank(); ++i) rhs(i, 0) = v[i];
  RatMatrix c = solve_rational(rs.cartan.transpose(), rhs);
  std::vector<Rational> out(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) out[i] = c(i, 0);
  return out;
}

/// Positive roots (nonnegative simple-root coordinates), in all_roots order.
inline std::vector<WeightVector> positive_roots(const RootSystem& rs) {
  RatMatrix inv_t = solve_rational(rs.cartan.transpose(), IntMatrix::identity(rs.rank()));
  std::vector<WeightVector> out;
  for (const auto& r : rs.all_roots) {
    bool positive = true;
    for (std::size_t i = 0; i < rs.rank() && positive; ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < rs.rank(); ++j) c += inv_t(i, j) * r[j];
      if (c < 0) positive = false;
    }
    if (positive) out.push_back(r);
  }
  return out;
}

/// Reflection in an arbitrary root: v - <v, beta^vee> beta.
inline WeightVector reflect_in_root(const RootSystem& rs, const WeightVector& v, const WeightVector& beta) {
  Rational c = coroot_pairing(rs, v, beta);
  if (boost::multiprecision::denominator(c) != 1) throw ConsistencyError("non-integral coroot pairing on a weight");
  auto k = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
  WeightVector r = v;
  for (std::size_t i = 0; i < rs.rank(); ++i) r[i] -= k * beta[i];
  return r;
}

/// Number of roots predicted by the dimension table: dim G - rank.
inline std::size_t expected_root_count(const LieType& t) {
  return static_cast<std::size_t>(group_dimension(t) - t.rank);
}

/// Every valid type of rank <= max_rank, in family-then-rank order.
inline std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (int f = 0; f < 7; ++f)
    for (int n = 1; n <= max_rank; ++n) {
      LieType t{static_cast<LieFamily>(f), n};
      if (rank_constraint_violation(t).empty()) out.push_back(t);
    }
  return out;
}

}  // namespace transgress
