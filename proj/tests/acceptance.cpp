// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.

#include "transgress/document.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace transgress;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<std::string()> check;  // empty string on success
};

ModVector unit(std::size_t n, std::size_t k) {
  ModVector v(n, 0);
  v[k] = 1;
  return v;
}

std::string modp_rows() {
  struct Row {
    std::string spec;
    std::int64_t p;
    ModVector kernel, cokernel;
  };
  std::vector<Row> rows;
  for (std::size_t n = 2; n <= 5; ++n) rows.push_back({"C" + std::to_string(n) + ":adj", 2, unit(n, n - 1), unit(n, 0)});
  rows.push_back({"E6:adj", 3, {1, 0, -1, 0, 1, -1}, unit(6, 0)});
  rows.push_back({"E7:adj", 2, {0, 1, 0, 0, 1, 0, 1}, unit(7, 1)});
  for (const auto& r : rows) {
    const auto tau = transgression_matrix(parse_group(r.spec));
    const auto a = modp_analysis(tau, r.p);
    if (a.kernel.dimension() != 1 || a.cokernel.dimension() != 1) return r.spec + ": kernel or cokernel not 1-dimensional";
    if (!kernel_contains(tau, r.kernel, r.p)) return r.spec + ": stated kernel generator rejected";
    if (!cokernel_class_nonzero(tau, r.cokernel, r.p)) return r.spec + ": stated cokernel generator is zero";
  }
  return {};
}

std::string tau_forms() {
  for (const auto& t : all_types_up_to_rank(8)) {
    if (transgression_matrix(simply_connected(t)).matrix != IntMatrix::identity(static_cast<std::size_t>(t.rank)))
      return t.name() + ":sc is not the identity";
    const auto g = adjoint(t);
    if (transgression_matrix(g).matrix != g.root_system.cartan.transpose()) return t.name() + ":adj is not A^T";
  }
  return {};
}

std::string determinant_law() {
  for (const auto& t : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(t);
    for (const auto& s : enumerate_pi1_choices(rs)) {
      const auto g = make_group_spec(rs, s.generators);
      const auto tau = transgression_matrix(g);
      Integer det = determinant(tau.matrix);
      if (det < 0) det = -det;
      const Integer index = lattice_index(rs, tau.basis.theta);
      const std::string name = t.name() + ":" + s.label;
      if (det != index) return name + ": |det| " + det.str() + " != index " + index.str();
      for (std::int64_t p : {2, 3, 5, 7})
        if (modp_analysis(tau, p).is_isomorphism != (index % p != 0)) return name + ": wrong isomorphism verdict mod " + std::to_string(p);
    }
  }
  return {};
}

std::string kac_report() {
  for (const auto* spec : {"C2:adj", "C3:adj", "C4:adj", "C5:adj", "E6:adj", "E7:adj"})
    if (kac_contradiction_report(parse_group(spec)).empty()) return std::string(spec) + ": no singular prime";
  return {};
}

std::string rational_e3() {
  for (const auto* spec : {"A1", "A2", "A3", "C2", "G2", "A1:adj", "A2:adj"}) {
    const auto g = parse_group(spec);
    WeylGroup w(g.root_system);
    std::vector<int> gens;
    for (int d : weyl_degrees(w)) gens.push_back(2 * d - 1);
    const auto want = exterior_poincare(gens);
    const int top = static_cast<int>(group_dimension(g.root_system.type));
    const auto got = e3_ranks(build_e2(transgression_matrix(g), w, Coefficients::rationals(), top)).by_total_degree;
    if (got.size() != want.size()) return std::string(spec) + ": degree range mismatch";
    for (std::size_t k = 0; k < got.size(); ++k)
      if (Integer(got[k]) != want[k]) return std::string(spec) + ": rank differs in degree " + std::to_string(k);
  }
  return {};
}

std::string modp_sanity() {
  using R = std::vector<std::size_t>;
  auto ranks = [](const char* spec, std::int64_t p) {
    return e3_ranks(build_e2(parse_group(spec), Coefficients::prime_field(p), 3)).by_total_degree;
  };
  if (ranks("A1:adj", 2) != R{1, 1, 1, 1}) return "PSU(2) mod 2 is not (1,1,1,1)";
  for (std::int64_t p = 2; p < 100; ++p)
    if (is_prime(p) && ranks("A1", p) != R{1, 0, 0, 1}) return "SU(2) mod " + std::to_string(p) + " is not (1,0,0,1)";
  return {};
}

std::string structural() {
  for (const auto* spec : {"A1", "A1:adj", "A2", "A2:adj", "A3", "A3:adj", "C2", "C2:adj", "G2"})
    for (const auto& k : {Coefficients::rationals(), Coefficients::prime_field(2), Coefficients::prime_field(3)}) {
      const auto g = parse_group(spec);
      const auto page = build_e2(g, k, static_cast<int>(group_dimension(g.root_system.type)));
      if (d2_squared_violations(page) != 0) return std::string(spec) + ": d2 o d2 != 0 over " + k.name();
    }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int n = 0; n < 1000; ++n) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    if (auto why = smith_violation(m, smith_normal_form(m)); !why.empty()) return "Smith form: " + why;
  }

  for (const auto& t : all_types_up_to_rank(8))
    if (build_root_system(t).all_roots.size() != expected_root_count(t)) return t.name() + ": wrong root count";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "mod-p kernel/cokernel generators for Sp(n) n=2..5 at 2, E6 at 3, E7 at 2", 1.0, modp_rows},
      {2, "simply connected tau = I, adjoint tau = A^T, all types rank <= 8", 1.0, tau_forms},
      {3, "|det tau| = lattice index and mod-p invertibility, all forms rank <= 8", 10.0, determinant_law},
      {4, "singular prime exists for adjoint Sp(n), E6, E7", 0.1, kac_report},
      {5, "rational E3 equals exterior algebra on 2d_i - 1", 60.0, rational_e3},
      {6, "PSU(2) mod 2 and SU(2) at every prime below 100", 1.0, modp_sanity},
      {7, "d2 o d2 = 0, 1000 random Smith forms, root counts rank <= 8", 30.0, structural},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > c.limit_seconds) why = "exceeded time limit";
    std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(1) << c.limit_seconds
              << " s]";
    if (!why.empty()) std::cout << " -- " << why;
    std::cout << '\n';
    if (!why.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
