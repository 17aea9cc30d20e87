#pragma once

// The E2 page  H*(G/T) (x) Lambda(t_1..t_n)  of the fibration G -> G/T, with
// d2(x (x) t) = (x * tau(t)) (x) 1 extended as a derivation, and the ranks of
// its homology over Q or F_p.
//
// H*(G/T) is presented by Schubert classes s_w, w in the Weyl group, with the
// degree-2 classes w_i = s_{s_i}. Multiplication by w_i follows the Chevalley
// rule
//   w_i * s_w = sum over positive roots b with l(w s_b) = l(w) + 1
//               of <phi_i, b^vee> s_{w s_b}.

#include "transgress/exactlin.hpp"
#include "transgress/rootdata.hpp"
#include "transgress/transgression.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace transgress {

using SmallIntMatrix = Matrix<std::int64_t>;

inline constexpr std::size_t kDefaultWeylCap = 2000;

/// Thrown when a computation would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct WeylElement {
  /// Lexicographically least reduced word; w = s_{word[0]} s_{word[1]} ... (0-based).
  std::vector<std::size_t> word;
  /// Action on weight coordinates (acts on columns).
  SmallIntMatrix action;
  std::size_t length = 0;
  /// w(rho) with rho = (1, ..., 1); identifies w.
  WeightVector rho_image;
};

inline std::string format_word(const std::vector<std::size_t>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? " s" : "s") + std::to_string(word[k] + 1);
  return s;
}

/// |W| from the classification, without enumerating.
inline Integer weyl_group_order(const LieType& t) {
  Integer fact = 1;
  for (int k = 2; k <= t.rank + (t.family == LieFamily::A ? 1 : 0); ++k) fact *= k;
  switch (t.family) {
    case LieFamily::A: return fact;
    case LieFamily::B:
    case LieFamily::C: return (Integer(1) << t.rank) * fact;
    case LieFamily::D: return (Integer(1) << (t.rank - 1)) * fact;
    case LieFamily::E: return t.rank == 6 ? Integer(51840) : t.rank == 7 ? Integer(2903040) : Integer(696729600);
    case LieFamily::F: return 1152;
    case LieFamily::G: return 12;
  }
  return 0;
}

struct ChevalleyTerm {
  std::int64_t coefficient = 0;
  std::size_t element = 0;  // index into WeylGroup::elements
  friend bool operator==(const ChevalleyTerm&, const ChevalleyTerm&) = default;
};

/// The finite Weyl group of a root system, elements sorted by (length, word).
class WeylGroup {
 public:
  WeylGroup(const RootSystem& rs, std::size_t size_cap = kDefaultWeylCap) : rs_(rs) {
    const Integer order = weyl_group_order(rs.type);
    if (order > size_cap)
      throw CapExceeded("Weyl group of " + rs.type.name() + " has " + order.str() + " elements, above the cap of " +
                        std::to_string(size_cap));
    enumerate();
    prepare_chevalley();
  }

  const RootSystem& root_system() const noexcept { return rs_; }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return rs_.rank(); }
  std::size_t max_length() const noexcept { return elements_.empty() ? 0 : elements_.back().length; }

  /// Element indices of a given length, in basis order.
  const std::vector<std::size_t>& of_length(std::size_t l) const {
    static const std::vector<std::size_t> none;
    return l < by_length_.size() ? by_length_[l] : none;
  }

  /// Position of an element inside its length layer.
  std::size_t layer_position(std::size_t index) const { return layer_pos_[index]; }

  std::size_t index_of(const WeightVector& rho_image) const {
    auto it = index_.find(rho_image);
    if (it == index_.end()) throw ConsistencyError("weight is not in the Weyl orbit of rho");
    return it->second;
  }

  /// Count of elements of each length: the coefficients of sum_w q^{l(w)}.
  std::vector<Integer> length_generating_function() const {
    std::vector<Integer> c(max_length() + 1, 0);
    for (const auto& e : elements_) c[e.length] += 1;
    return c;
  }

  const std::vector<WeightVector>& positive_roots() const noexcept { return positive_; }

  /// w_i * s_w in the Schubert basis (i is 0-based).
  std::vector<ChevalleyTerm> chevalley_multiply(std::size_t i, std::size_t w) const {
    if (i >= rank()) throw InvalidInput("degree-2 class index out of range");
    const auto& elem = elements_.at(w);
    std::vector<ChevalleyTerm> terms;
    for (std::size_t b = 0; b < positive_.size(); ++b) {
      const std::int64_t coeff = pairings_[b][i];
      if (coeff == 0) continue;
      WeightVector image = apply(elem.action, reflected_rho_[b]);
      std::size_t target = index_of(image);
      if (elements_[target].length == elem.length + 1) terms.push_back({coeff, target});
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.element < b.element; });
    return terms;
  }

  static WeightVector apply(const SmallIntMatrix& m, const WeightVector& v) {
    WeightVector r;
    r.coords.assign(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
  }

 private:
  void enumerate() {
    const std::size_t n = rank();
    WeightVector rho(std::vector<std::int64_t>(n, 1));

    // Breadth-first over w(rho); s_i w is longer than w iff (w rho)_i > 0.
    std::vector<WeightVector> images{rho};
    std::vector<std::size_t> lengths{0};
    std::map<WeightVector, std::size_t> seen{{rho, 0}};
    for (std::size_t k = 0; k < images.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (images[k][i] <= 0) continue;
        WeightVector next = reflect(rs_, images[k], i);
        if (seen.emplace(next, images.size()).second) {
          images.push_back(next);
          lengths.push_back(lengths[k] + 1);
        }
      }

    std::vector<SmallIntMatrix> simple(n);
    for (std::size_t i = 0; i < n; ++i) {
      simple[i] = SmallIntMatrix::identity(n);
      for (std::size_t r = 0; r < n; ++r) simple[i](r, i) -= rs_.simple_roots[i][r];
    }

    // BFS order is by length, so s_i w is resolved before w.
    std::vector<WeylElement> raw(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
      auto& e = raw[k];
      e.rho_image = images[k];
      e.length = lengths[k];
      if (e.length == 0) {
        e.action = SmallIntMatrix::identity(n);
        continue;
      }
      std::size_t i = 0;
      while (images[k][i] >= 0) ++i;
      const auto& shorter = raw[seen.at(reflect(rs_, images[k], i))];
      e.word.push_back(i);
      e.word.insert(e.word.end(), shorter.word.begin(), shorter.word.end());
      e.action = simple[i] * shorter.action;
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
      return a.length != b.length ? a.length < b.length : a.word < b.word;
    });
    elements_ = std::move(raw);
    by_length_.assign(elements_.back().length + 1, {});
    layer_pos_.resize(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      index_[elements_[k].rho_image] = k;
      layer_pos_[k] = by_length_[elements_[k].length].size();
      by_length_[elements_[k].length].push_back(k);
    }
  }

  void prepare_chevalley() {
    const std::size_t n = rank();
    positive_ = transgress::positive_roots(rs_);
    WeightVector rho(std::vector<std::int64_t>(n, 1));
    for (const auto& beta : positive_) {
      reflected_rho_.push_back(reflect_in_root(rs_, rho, beta));
      std::vector<std::int64_t> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        WeightVector phi(std::vector<std::int64_t>(n, 0));
        phi[i] = 1;
        Rational c = coroot_pairing(rs_, phi, beta);
        if (boost::multiprecision::denominator(c) != 1 || c < 0)
          throw ConsistencyError("Chevalley coefficient is not a nonnegative integer");
        row[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
      }
      pairings_.push_back(std::move(row));
    }
  }

  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::size_t>> by_length_;
  std::vector<std::size_t> layer_pos_;
  std::map<WeightVector, std::size_t> index_;
  std::vector<WeightVector> positive_;
  std::vector<WeightVector> reflected_rho_;
  std::vector<std::vector<std::int64_t>> pairings_;
};

inline WeylGroup weyl_group(const RootSystem& rs, std::size_t size_cap = kDefaultWeylCap) {
  return WeylGroup(rs, size_cap);
}

/// Degrees d_1 <= ... <= d_n with prod_i (1 + q + ... + q^{d_i - 1}) = sum_w q^{l(w)}.
inline std::vector<int> weyl_degrees(const WeylGroup& w) {
  // P(q) (1 - q)^n = prod_i (1 - q^{d_i}); peel factors off from the lowest term.
  std::vector<Integer> q = w.length_generating_function();
  for (std::size_t k = 0; k < w.rank(); ++k) {
    std::vector<Integer> next(q.size() + 1, 0);
    for (std::size_t m = 0; m < q.size(); ++m) {
      next[m] += q[m];
      next[m + 1] -= q[m];
    }
    q = std::move(next);
  }
  std::vector<int> degrees;
  for (;;) {
    std::size_t k = 1;
    while (k < q.size() && q[k] == 0) ++k;
    if (k == q.size()) break;
    // A degree of multiplicity m shows up as -m q^k.
    if (q[k] >= 0) throw ConsistencyError("length generating function does not factor into q-integers");
    // Divide by (1 - q^k); the quotient has degree deg(q) - k.
    const std::size_t deg = q.size() - 1;
    if (deg < k) throw ConsistencyError("inexact division by 1 - q^d");
    std::vector<Integer> quotient(q.size(), 0);
    for (std::size_t m = 0; m < q.size(); ++m) quotient[m] = q[m] + (m >= k ? quotient[m - k] : Integer(0));
    for (std::size_t m = deg - k + 1; m < quotient.size(); ++m)
      if (quotient[m] != 0) throw ConsistencyError("inexact division by 1 - q^d");
    quotient.resize(deg - k + 1);
    q = std::move(quotient);
    degrees.push_back(static_cast<int>(k));
  }
  Integer product = 1;
  for (int d : degrees) product *= d;
  if (degrees.size() != w.rank() || product != Integer(w.size()))
    throw ConsistencyError("Weyl degrees inconsistent with |W| or rank");
  return degrees;
}

/// Poincare polynomial coefficients of an exterior algebra on generators of the given degrees.
inline std::vector<Integer> exterior_poincare(const std::vector<int>& generator_degrees) {
  std::vector<Integer> p{1};
  for (int d : generator_degrees) {
    std::vector<Integer> next(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t m = 0; m < p.size(); ++m) {
      next[m] += p[m];
      next[m + static_cast<std::size_t>(d)] += p[m];
    }
    p = std::move(next);
  }
  return p;
}

class Coefficients {
 public:
  static Coefficients rationals() { return Coefficients(0); }
  static Coefficients prime_field(std::int64_t p) {
    require_prime(p);
    return Coefficients(p);
  }
  bool is_rational() const noexcept { return p_ == 0; }
  std::int64_t characteristic() const noexcept { return p_; }
  std::string name() const { return is_rational() ? "Q" : "Z_" + std::to_string(p_); }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

/// Rank of an integer matrix over the given coefficients.
inline std::size_t rank_over(const IntMatrix& m, const Coefficients& k) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!k.is_rational()) return modp_rank(m, k.characteristic());
  // Rank mod a large prime is a lower bound; when it is already maximal it is exact.
  constexpr std::int64_t big = 2305843009213693951LL;  // 2^61 - 1
  std::vector<ModVector> rows(m.rows(), ModVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = mod_residue(m(i, j), big);
  const std::size_t lower = rank_mod(std::move(rows), m.cols(), big);
  if (lower == std::min(m.rows(), m.cols())) return lower;
  return rank_rational(m);
}

struct Bidegree {
  int s = 0;  // base degree (even)
  int t = 0;  // exterior degree
  int total() const noexcept { return s + t; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Sorted index sets of size t drawn from {0..n-1}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> exterior_monomials(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == t) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct E2Cell {
  Bidegree degree;
  /// Basis s_w (x) t_I, w-major: index = layer_position(w) * monomials.size() + I.
  std::vector<std::size_t> weyl_elements;
  std::vector<std::vector<std::size_t>> monomials;
  std::size_t dimension() const noexcept { return weyl_elements.size() * monomials.size(); }
};

struct E2Page {
  TransgressionMap tau;
  Coefficients coefficients = Coefficients::rationals();
  int max_total_degree = 0;
  std::map<Bidegree, E2Cell> cells;
  /// d2 out of (s, t) into (s + 2, t - 1); present for every cell with t >= 1.
  /// Integer entries, to be read in the page's coefficients.
  std::map<Bidegree, IntMatrix> d2;
};

/// Runs body(k) for k in [0, count) on up to `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, count); ++j)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct PageOptions {
  std::size_t weyl_cap = kDefaultWeylCap;
  unsigned jobs = 1;
};

namespace detail {

inline E2Cell make_cell(const WeylGroup& w, std::size_t n, Bidegree d) {
  E2Cell c;
  c.degree = d;
  c.weyl_elements = w.of_length(static_cast<std::size_t>(d.s / 2));
  c.monomials = exterior_monomials(n, static_cast<std::size_t>(d.t));
  return c;
}

inline std::size_t monomial_index(const std::vector<std::vector<std::size_t>>& monomials,
                                  const std::vector<std::size_t>& m) {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  return static_cast<std::size_t>(it - monomials.begin());
}

// d2(s_w (x) t_{i_1} ^ ... ^ t_{i_k}) = sum_j (-1)^{j-1} (tau(t_{i_j}) s_w) (x) t_{I \ i_j}.
inline IntMatrix build_d2(const WeylGroup& w, const TransgressionMap& tau, const E2Cell& src, const E2Cell& dst) {
  IntMatrix m(dst.dimension(), src.dimension());
  const std::size_t n = w.rank();
  const std::size_t src_mon = src.monomials.size();
  const std::size_t dst_mon = dst.monomials.size();
  for (std::size_t a = 0; a < src.weyl_elements.size(); ++a) {
    const std::size_t elem = src.weyl_elements[a];
    // tau(t_i) * s_w for every i, collected once per w.
    std::vector<std::map<std::size_t, Integer>> products(n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& term : w.chevalley_multiply(k, elem))
        for (std::size_t i = 0; i < n; ++i) {
          const Integer& coeff = tau.matrix(k, i);
          if (coeff != 0) products[i][term.element] += coeff * term.coefficient;
        }
    for (std::size_t mi = 0; mi < src_mon; ++mi) {
      const auto& mono = src.monomials[mi];
      const std::size_t col = a * src_mon + mi;
      for (std::size_t j = 0; j < mono.size(); ++j) {
        std::vector<std::size_t> rest = mono;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t target_mon = monomial_index(dst.monomials, rest);
        const int sign = (j % 2 == 0) ? 1 : -1;
        for (const auto& [target, coeff] : products[mono[j]]) {
          if (coeff == 0) continue;
          const std::size_t row = w.layer_position(target) * dst_mon + target_mon;
          m(row, col) += sign * coeff;
        }
      }
    }
  }
  return m;
}

}  // namespace detail

inline E2Page build_e2(const TransgressionMap& tau, const WeylGroup& w, const Coefficients& k, int max_total_degree,
                       unsigned jobs = 1) {
  const auto dim_g = group_dimension(tau.group.root_system.type);
  if (max_total_degree < 0 || max_total_degree > dim_g)
    throw InvalidInput("max total degree must lie in [0, " + std::to_string(dim_g) + "]");
  const std::size_t n = tau.rank();
  const int top_s = 2 * static_cast<int>(w.max_length());

  E2Page page;
  page.tau = tau;
  page.coefficients = k;
  page.max_total_degree = max_total_degree;
  for (int s = 0; s <= top_s; s += 2)
    for (int t = 0; t <= static_cast<int>(n); ++t)
      if (s + t <= max_total_degree) page.cells.emplace(Bidegree{s, t}, detail::make_cell(w, n, {s, t}));

  std::vector<Bidegree> sources;
  for (const auto& [d, cell] : page.cells)
    if (d.t >= 1) sources.push_back(d);
  std::vector<IntMatrix> results(sources.size());
  parallel_for(sources.size(), jobs, [&](std::size_t idx) {
    const Bidegree d = sources[idx];
    const Bidegree target{d.s + 2, d.t - 1};
    auto it = page.cells.find(target);
    const E2Cell dst = it != page.cells.end() ? it->second : detail::make_cell(w, n, target);
    results[idx] = detail::build_d2(w, tau, page.cells.at(d), dst);
  });
  for (std::size_t idx = 0; idx < sources.size(); ++idx) page.d2.emplace(sources[idx], std::move(results[idx]));
  return page;
}

inline E2Page build_e2(const GroupSpec& g, const Coefficients& k, int max_total_degree,
                       const PageOptions& opts = {}) {
  WeylGroup w(g.root_system, opts.weyl_cap);
  return build_e2(transgression_matrix(g), w, k, max_total_degree, opts.jobs);
}

struct GradedRanks {
  /// Rank of E3 in each total degree 0..max_total_degree.
  std::vector<std::size_t> by_total_degree;
  std::map<Bidegree, std::size_t> by_bidegree;
};

inline GradedRanks e3_ranks(const E2Page& page, unsigned jobs = 1) {
  std::vector<Bidegree> sources;
  for (const auto& [d, m] : page.d2) sources.push_back(d);
  std::vector<std::size_t> ranks(sources.size());
  parallel_for(sources.size(), jobs,
               [&](std::size_t idx) { ranks[idx] = rank_over(page.d2.at(sources[idx]), page.coefficients); });
  std::map<Bidegree, std::size_t> d_rank;
  for (std::size_t idx = 0; idx < sources.size(); ++idx) d_rank[sources[idx]] = ranks[idx];

  GradedRanks out;
  out.by_total_degree.assign(static_cast<std::size_t>(page.max_total_degree) + 1, 0);
  for (const auto& [d, cell] : page.cells) {
    auto rank_of = [&](Bidegree b) {
      auto it = d_rank.find(b);
      return it == d_rank.end() ? std::size_t{0} : it->second;
    };
    const std::size_t outgoing = rank_of(d);
    const std::size_t incoming = rank_of({d.s - 2, d.t + 1});
    const std::size_t h = cell.dimension() - outgoing - incoming;
    out.by_bidegree[d] = h;
    out.by_total_degree[static_cast<std::size_t>(d.total())] += h;
  }
  return out;
}

/// Number of nonzero entries of d2 o d2 over all composable pairs inside the
/// page, read in the page's coefficients. Zero means the page is a complex.
inline std::size_t d2_squared_violations(const E2Page& page) {
  std::size_t bad = 0;
  for (const auto& [d, first] : page.d2) {
    auto it = page.d2.find(Bidegree{d.s + 2, d.t - 1});
    if (it == page.d2.end()) continue;
    const IntMatrix composite = it->second * first;
    for (const auto& x : composite.data()) {
      const bool zero = page.coefficients.is_rational() ? x == 0 : mod_residue(x, page.coefficients.characteristic()) == 0;
      if (!zero) ++bad;
    }
  }
  return bad;
}

}  // namespace transgress
