#pragma once

// The lattice chain  root lattice <= unit lattice <= weight lattice  in
// fundamental-weight coordinates, where the weight lattice is Z^n and the root
// lattice is the row lattice of the Cartan matrix. A compact form of a simple
// type is fixed by a subgroup of the center (weight lattice / root lattice);
// its unit lattice is the root lattice enlarged by that subgroup.

#include "transgress/exactlin.hpp"
#include "transgress/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace transgress {

struct CenterGroup {
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> invariant_factors;
  /// One weight per factor; generator k has order invariant_factors[k].
  std::vector<WeightVector> generators;
  /// Maps a weight to its coordinates along `generators`: coords = v * to_coords.
  IntMatrix to_coords;

  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
};

/// Canonical representative of v modulo the root lattice (HNF reduction).
inline WeightVector reduce_mod_root_lattice(const RootSystem& rs, const WeightVector& v) {
  if (v.size() != rs.rank()) throw InvalidInput("weight vector has wrong length");
  const IntMatrix h = hermite_normal_form(rs.cartan).H;
  std::vector<Integer> x(v.coords.begin(), v.coords.end());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) break;
    Integer q = floor_div(x[c], h(r, c));
    for (std::size_t j = 0; j < h.cols(); ++j) x[j] -= q * h(r, j);
  }
  WeightVector out;
  for (const auto& e : x) out.coords.push_back(static_cast<std::int64_t>(e));
  return out;
}

inline CenterGroup center_group(const RootSystem& rs) {
  const auto snf = smith_normal_form(rs.cartan);
  const std::size_t n = rs.rank();
  IntMatrix v_inv;
  if (!try_to_integral(solve_rational(snf.V, IntMatrix::identity(n)), v_inv))
    throw ConsistencyError("Smith transform is not unimodular");

  CenterGroup c;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (snf.D(k, k) == 1) continue;
    if (snf.D(k, k) == 0) throw ConsistencyError("Cartan matrix is singular");
    kept.push_back(k);
    c.invariant_factors.push_back(snf.D(k, k));
    WeightVector g;
    for (std::size_t j = 0; j < n; ++j) g.coords.push_back(static_cast<std::int64_t>(v_inv(k, j)));
    c.generators.push_back(reduce_mod_root_lattice(rs, g));
  }
  // v = sum_k coords_k * row_k(V^{-1})  =>  coords = v V.
  c.to_coords = IntMatrix(n, kept.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < kept.size(); ++k) c.to_coords(i, k) = snf.V(i, kept[k]);
  return c;
}

/// Element of the center as residues along the invariant factors.
using CenterElement = std::vector<std::int64_t>;

inline CenterElement center_coordinates(const CenterGroup& c, const WeightVector& v) {
  CenterElement e(c.invariant_factors.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    Integer acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += c.to_coords(i, k) * v[i];
    e[k] = mod_residue(acc, static_cast<std::int64_t>(c.invariant_factors[k]));
  }
  return e;
}

/// The subgroup of the center generated by the given elements, as a sorted set.
inline std::set<CenterElement> generated_subgroup(const CenterGroup& c, const std::vector<CenterElement>& gens) {
  const std::size_t k = c.invariant_factors.size();
  std::set<CenterElement> sub{CenterElement(k, 0)};
  std::vector<CenterElement> frontier{CenterElement(k, 0)};
  while (!frontier.empty()) {
    std::vector<CenterElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        CenterElement y(k);
        for (std::size_t i = 0; i < k; ++i)
          y[i] = (x[i] + g[i]) % static_cast<std::int64_t>(c.invariant_factors[i]);
        if (sub.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return sub;
}

inline std::vector<CenterElement> all_center_elements(const CenterGroup& c) {
  std::vector<CenterElement> out{CenterElement{}};
  for (const auto& d : c.invariant_factors) {
    std::vector<CenterElement> next;
    for (const auto& e : out)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(d); ++r) {
        auto f = e;
        f.push_back(r);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

/// Weight representing a center element, reduced mod the root lattice.
inline WeightVector center_element_weight(const RootSystem& rs, const CenterGroup& c, const CenterElement& e) {
  WeightVector v;
  v.coords.assign(rs.rank(), 0);
  for (std::size_t k = 0; k < e.size(); ++k)
    for (std::size_t i = 0; i < rs.rank(); ++i) v[i] += e[k] * c.generators[k][i];
  return reduce_mod_root_lattice(rs, v);
}

struct SubgroupDescriptor {
  /// "sc" for the trivial subgroup, "adj" for the whole center, otherwise
  /// "pi1=[...]" in group-spec syntax.
  std::string label;
  std::size_t order = 1;
  std::vector<WeightVector> generators;
  std::set<CenterElement> elements;
};

inline std::string format_pi1_suffix(const std::vector<WeightVector>& gens) {
  std::string s = "pi1=[";
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g) s += ';';
    for (std::size_t i = 0; i < gens[g].size(); ++i) s += (i ? "," : "") + std::to_string(gens[g][i]);
  }
  return s + "]";
}

/// Every subgroup of the center, ordered by (order, element set).
inline std::vector<SubgroupDescriptor> enumerate_pi1_choices(const RootSystem& rs, const CenterGroup& c) {
  const auto elements = all_center_elements(c);
  std::set<std::set<CenterElement>> subgroups{generated_subgroup(c, {})};
  std::vector<std::set<CenterElement>> frontier(subgroups.begin(), subgroups.end());
  while (!frontier.empty()) {
    std::vector<std::set<CenterElement>> next;
    for (const auto& s : frontier)
      for (const auto& g : elements) {
        if (s.count(g)) continue;
        std::vector<CenterElement> gens(s.begin(), s.end());
        gens.push_back(g);
        auto bigger = generated_subgroup(c, gens);
        if (subgroups.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }

  std::vector<SubgroupDescriptor> out;
  const auto full = static_cast<std::size_t>(c.order());
  for (const auto& s : subgroups) {
    SubgroupDescriptor d;
    d.order = s.size();
    d.elements = s;
    // Greedy lexicographic generating set.
    std::vector<CenterElement> chosen;
    std::set<CenterElement> span = generated_subgroup(c, {});
    for (const auto& e : s) {
      if (span.size() == s.size()) break;
      if (span.count(e)) continue;
      chosen.push_back(e);
      span = generated_subgroup(c, chosen);
    }
    for (const auto& e : chosen) d.generators.push_back(center_element_weight(rs, c, e));
    if (d.order == 1)
      d.label = "sc";
    else if (d.order == full)
      d.label = "adj";
    else
      d.label = format_pi1_suffix(d.generators);
    out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.elements < b.elements;
  });
  return out;
}

inline std::vector<SubgroupDescriptor> enumerate_pi1_choices(const RootSystem& rs) {
  return enumerate_pi1_choices(rs, center_group(rs));
}

/// Which ordered basis of the unit lattice a group presents by default.
enum class BasisPreference {
  SimpleRoots,          // simply connected: theta = simple roots
  FundamentalWeights,   // adjoint: theta = fundamental weights
  Hermite,              // anything else: Hermite normal form
};

/// A compact connected form of a simple type: its root data plus generators of
/// the fundamental group, as weights taken modulo the root lattice.
struct GroupSpec {
  RootSystem root_system;
  std::vector<WeightVector> pi1_generators;
  BasisPreference basis = BasisPreference::Hermite;

  std::size_t rank() const noexcept { return root_system.rank(); }
};

inline std::size_t pi1_order(const GroupSpec& g);

/// Reduces the generators and picks the basis preference from the subgroup they
/// generate (trivial: simple roots; whole center: fundamental weights).
inline GroupSpec make_group_spec(RootSystem rs, const std::vector<WeightVector>& pi1) {
  GroupSpec g;
  for (const auto& v : pi1) {
    if (v.size() != rs.rank())
      throw InvalidInput("fundamental group generator has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(rs.rank()));
    auto r = reduce_mod_root_lattice(rs, v);
    if (!r.is_zero() && std::find(g.pi1_generators.begin(), g.pi1_generators.end(), r) == g.pi1_generators.end())
      g.pi1_generators.push_back(std::move(r));
  }
  g.root_system = std::move(rs);
  const auto order = pi1_order(g);
  if (order == 1)
    g.basis = BasisPreference::SimpleRoots;
  else if (order == center_group(g.root_system).order())
    g.basis = BasisPreference::FundamentalWeights;
  return g;
}

inline GroupSpec simply_connected(const LieType& t, CartanConvention conv = CartanConvention::Reference) {
  auto g = make_group_spec(build_root_system(t, conv), {});
  g.basis = BasisPreference::SimpleRoots;
  return g;
}

/// The adjoint form; presents the fundamental weights even when the center is trivial.
inline GroupSpec adjoint(const LieType& t, CartanConvention conv = CartanConvention::Reference) {
  auto rs = build_root_system(t, conv);
  auto c = center_group(rs);
  auto g = make_group_spec(std::move(rs), c.generators);
  g.basis = BasisPreference::FundamentalWeights;
  return g;
}

/// Order of the subgroup of the center generated by the group's pi1 generators.
inline std::size_t pi1_order(const GroupSpec& g) {
  auto c = center_group(g.root_system);
  std::vector<CenterElement> gens;
  for (const auto& v : g.pi1_generators) gens.push_back(center_coordinates(c, v));
  return generated_subgroup(c, gens).size();
}

enum class ThetaChoice {
  /// Whatever the group's BasisPreference says.
  Preferred,
  /// Always the Hermite normal form basis.
  Hermite,
};

struct UnitLatticeBasis {
  /// Rows are the basis vectors theta_1..theta_n in weight coordinates.
  IntMatrix theta;
};

inline IntMatrix unit_lattice_generators(const GroupSpec& g) {
  const auto& rs = g.root_system;
  const std::size_t n = rs.rank();
  IntMatrix gens(n + g.pi1_generators.size(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens(i, j) = rs.cartan(i, j);
  for (std::size_t k = 0; k < g.pi1_generators.size(); ++k) {
    if (g.pi1_generators[k].size() != n) throw InvalidInput("fundamental group generator has wrong length");
    for (std::size_t j = 0; j < n; ++j) gens(n + k, j) = g.pi1_generators[k][j];
  }
  return gens;
}

inline UnitLatticeBasis unit_lattice_basis(const GroupSpec& g, ThetaChoice choice = ThetaChoice::Preferred) {
  const auto& rs = g.root_system;
  const std::size_t n = rs.rank();
  auto h = hermite_normal_form(unit_lattice_generators(g)).H;
  IntMatrix theta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta(i, j) = h(i, j);
  for (std::size_t i = n; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) != 0) throw ConsistencyError("unit lattice has rank above n");

  if (choice == ThetaChoice::Preferred && g.basis != BasisPreference::Hermite) {
    Integer d = abs(determinant(theta));
    if (g.basis == BasisPreference::SimpleRoots) {
      if (d != abs(determinant(rs.cartan))) throw ConsistencyError("simple roots do not span the unit lattice");
      theta = rs.cartan;
    } else {
      if (d != 1) throw ConsistencyError("fundamental weights do not span the unit lattice");
      theta = IntMatrix::identity(n);
    }
  }
  return {std::move(theta)};
}

/// C with  (simple roots) = C * (theta rows), i.e. C = A * theta^{-1}.
inline IntMatrix transition_matrix(const GroupSpec& g, const UnitLatticeBasis& basis) {
  const auto& a = g.root_system.cartan;
  RatMatrix ct;
  try {
    ct = solve_rational(basis.theta.transpose(), a.transpose());
  } catch (const SingularMatrix&) {
    throw ConsistencyError("unit lattice basis is singular");
  }
  IntMatrix c;
  if (!try_to_integral(ct, c))
    throw ConsistencyError("transition matrix is not integral: root lattice is not contained in the unit lattice");
  return c.transpose();
}

inline IntMatrix transition_matrix(const GroupSpec& g, ThetaChoice choice = ThetaChoice::Preferred) {
  return transition_matrix(g, unit_lattice_basis(g, choice));
}

/// [unit lattice : root lattice] from Smith invariants of both bases.
inline Integer lattice_index(const RootSystem& rs, const IntMatrix& theta) {
  auto product = [](const IntMatrix& m) {
    Integer p = 1;
    for (const auto& d : smith_normal_form(m).diagonal()) p *= d;
    return p;
  };
  Integer num = product(rs.cartan);
  Integer den = product(theta);
  if (den == 0 || num % den != 0) throw ConsistencyError("unit lattice does not contain the root lattice");
  return num / den;
}

/// Row lattice of `inner` is contained in the row lattice of `outer` (square, nonsingular outer).
inline bool row_lattice_contains(const IntMatrix& outer, const IntMatrix& inner) {
  IntMatrix x;
  try {
    return try_to_integral(solve_rational(outer.transpose(), inner.transpose()), x);
  } catch (const SingularMatrix&) {
    return false;
  }
}

}  // namespace transgress
