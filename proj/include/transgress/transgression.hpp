#pragma once

// The transgression H^1(T) -> H^2(G/T) in the bases {t_i} (dual to an ordered
// basis theta of the unit lattice) and {w_j} (the degree-2 Schubert classes).
//
// The stored matrix is the transpose of the transition matrix C, where
// (simple roots) = C (theta). It acts on coordinate columns: column i holds the
// w-coordinates of tau(t_i), so  tau(t_i) = sum_j matrix(j, i) w_j.

#include "transgress/exactlin.hpp"
#include "transgress/lattices.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace transgress {

struct TransgressionMap {
  GroupSpec group;
  UnitLatticeBasis basis;
  IntMatrix transition;
  IntMatrix matrix;
  std::vector<std::string> domain_labels;    // t_1..t_n
  std::vector<std::string> codomain_labels;  // w_1..w_n

  std::size_t rank() const noexcept { return matrix.rows(); }

  /// w-coordinates of tau(t_i), 0-based i.
  std::vector<Integer> image(std::size_t i) const { return matrix.column(i); }
};

inline std::vector<std::string> indexed_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + "_" + std::to_string(i));
  return out;
}

inline TransgressionMap transgression_matrix(const GroupSpec& g, ThetaChoice choice = ThetaChoice::Preferred) {
  TransgressionMap m;
  m.group = g;
  m.basis = unit_lattice_basis(g, choice);
  m.transition = transition_matrix(g, m.basis);
  m.matrix = m.transition.transpose();
  m.domain_labels = indexed_labels("t", g.rank());
  m.codomain_labels = indexed_labels("w", g.rank());
  return m;
}

struct ModPAnalysis {
  std::int64_t p = 2;
  ModPSubspace kernel;    // coordinates along t_1..t_n
  ModPSubspace cokernel;  // coset representatives along w_1..w_n
  bool is_isomorphism = true;
};

inline ModPAnalysis modp_analysis(const TransgressionMap& tau, std::int64_t p) {
  require_prime(p);
  ModPAnalysis a;
  a.p = p;
  a.kernel = modp_kernel(tau.matrix, p);
  a.cokernel = modp_cokernel(tau.matrix, p);
  a.is_isomorphism = a.kernel.trivial() && a.cokernel.trivial();
  if (a.is_isomorphism != (mod_residue(determinant(tau.matrix), p) != 0))
    throw ConsistencyError("mod-p kernel disagrees with the determinant");
  return a;
}

inline ModPAnalysis modp_analysis(const GroupSpec& g, std::int64_t p) {
  return modp_analysis(transgression_matrix(g), p);
}

/// Kernel membership of a t-combination.
inline bool kernel_contains(const TransgressionMap& tau, const ModVector& v, std::int64_t p) {
  return !is_zero_modp(v, p) && in_kernel_modp(tau.matrix, v, p);
}

/// True when the w-combination v is nonzero in the cokernel.
inline bool cokernel_class_nonzero(const TransgressionMap& tau, const ModVector& v, std::int64_t p) {
  return !in_image_modp(tau.matrix, v, p);
}

inline std::vector<std::int64_t> prime_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  if (n == 0) return out;
  for (std::int64_t d = 2; Integer(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<std::int64_t>(n));
  return out;
}

/// Primes at which the transgression fails to be an isomorphism mod p.
inline std::vector<std::int64_t> kac_contradiction_report(const TransgressionMap& tau) {
  return prime_divisors(determinant(tau.matrix));
}

inline std::vector<std::int64_t> kac_contradiction_report(const GroupSpec& g) {
  return kac_contradiction_report(transgression_matrix(g));
}

/// "t_1 - t_3 + t_5" style rendering; residues shown in the symmetric range.
inline std::string format_combination(const ModVector& v, std::int64_t p, const std::string& stem) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t c = ((v[i] % p) + p) % p;
    if (c == 0) continue;
    if (c > p / 2) c -= p;
    const bool neg = c < 0;
    const std::int64_t mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag);
    out += stem + "_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace transgress
