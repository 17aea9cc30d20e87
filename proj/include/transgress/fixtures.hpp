#pragma once

// Regression fixture corpus. A corpus is a JSON object
//
//   { "schema_version": 1, "fixtures": [ { "id": ..., "kind": ..., ... }, ... ] }
//
// Every fixture carries "id", "kind" and an optional "anchor" string that names
// the result it pins down. Kinds and their fields:
//
//   modp_generators   group, p, kernel_dim, cokernel_dim, kernel_member, cokernel_member
//   tau_identity      max_rank          simply connected forms have tau = identity
//   tau_adjoint       max_rank          adjoint forms have tau = transpose(Cartan)
//   determinant_law   max_rank, primes  |det tau| = [unit lattice : root lattice] for every form
//   singular_primes   groups            each group has a prime where tau mod p is singular
//   e3_exterior       group             E3 over Q matches the exterior algebra on degrees 2d_i - 1
//   e3_ranks          group, coeff, ranks
//   d2_squared_zero   group, coeff
//   snf_random        count, max_dim, max_entry, seed
//   root_counts       max_rank

#include "transgress/document.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace transgress {

struct FixtureOptions {
  CartanConvention convention = CartanConvention::Reference;
  unsigned jobs = 1;
};

struct FixtureResult {
  std::string id;
  std::string kind;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

namespace detail {

struct FixtureContext {
  const Json& fx;
  const FixtureOptions& opts;

  GroupSpec group(const std::string& key = "group") const {
    return to_group_spec(parse_group_spec(fx.at(key).get<std::string>()), opts.convention);
  }
};

inline std::string join_ints(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

inline std::vector<GroupSpec> every_form(const LieType& t, CartanConvention conv) {
  std::vector<GroupSpec> out;
  auto rs = build_root_system(t, conv);
  for (const auto& sub : enumerate_pi1_choices(rs)) out.push_back(make_group_spec(rs, sub.generators));
  return out;
}

inline std::string run_modp_generators(const FixtureContext& c) {
  const auto tau = transgression_matrix(c.group());
  const auto p = c.fx.at("p").get<std::int64_t>();
  const auto a = modp_analysis(tau, p);
  const auto want_ker = c.fx.at("kernel_dim").get<std::size_t>();
  const auto want_coker = c.fx.at("cokernel_dim").get<std::size_t>();
  if (a.kernel.dimension() != want_ker)
    return "kernel has dimension " + std::to_string(a.kernel.dimension()) + ", expected " + std::to_string(want_ker);
  if (a.cokernel.dimension() != want_coker)
    return "cokernel has dimension " + std::to_string(a.cokernel.dimension()) + ", expected " +
           std::to_string(want_coker);
  const auto ker = c.fx.at("kernel_member").get<ModVector>();
  const auto coker = c.fx.at("cokernel_member").get<ModVector>();
  if (!kernel_contains(tau, ker, p)) return format_combination(ker, p, "t") + " is not in the kernel";
  if (!cokernel_class_nonzero(tau, coker, p)) return format_combination(coker, p, "w") + " is zero in the cokernel";
  return {};
}

inline std::string run_tau_identity(const FixtureContext& c) {
  for (const auto& t : all_types_up_to_rank(c.fx.at("max_rank").get<int>())) {
    const auto tau = transgression_matrix(simply_connected(t, c.opts.convention));
    if (tau.matrix != IntMatrix::identity(static_cast<std::size_t>(t.rank))) return t.name() + ": tau is not the identity";
  }
  return {};
}

inline std::string run_tau_adjoint(const FixtureContext& c) {
  for (const auto& t : all_types_up_to_rank(c.fx.at("max_rank").get<int>())) {
    const auto g = adjoint(t, c.opts.convention);
    const auto tau = transgression_matrix(g);
    if (tau.matrix != g.root_system.cartan.transpose()) return t.name() + ": tau differs from the transposed Cartan matrix";
  }
  return {};
}

inline std::string run_determinant_law(const FixtureContext& c) {
  const auto primes = c.fx.at("primes").get<std::vector<std::int64_t>>();
  for (const auto& t : all_types_up_to_rank(c.fx.at("max_rank").get<int>()))
    for (const auto& g : every_form(t, c.opts.convention)) {
      const auto tau = transgression_matrix(g);
      const Integer index = lattice_index(g.root_system, tau.basis.theta);
      Integer det = determinant(tau.matrix);
      if (det < 0) det = -det;
      const std::string name = t.name() + ":" + format_pi1_suffix(g.pi1_generators);
      if (det != index) return name + ": |det tau| = " + det.str() + " but the lattice index is " + index.str();
      if (index != Integer(pi1_order(g))) return name + ": lattice index differs from the subgroup order";
      for (auto p : primes)
        if (modp_analysis(tau, p).is_isomorphism != (index % p != 0))
          return name + ": isomorphism mod " + std::to_string(p) + " disagrees with the index";
    }
  return {};
}

inline std::string run_singular_primes(const FixtureContext& c) {
  for (const auto& spec : c.fx.at("groups")) {
    const auto g = to_group_spec(parse_group_spec(spec.get<std::string>()), c.opts.convention);
    if (kac_contradiction_report(g).empty()) return spec.get<std::string>() + ": tau is invertible at every prime";
  }
  return {};
}

inline std::string run_e3_exterior(const FixtureContext& c) {
  const auto g = c.group();
  WeylGroup w(g.root_system);
  const int top = static_cast<int>(group_dimension(g.root_system.type));
  const auto page = build_e2(transgression_matrix(g), w, Coefficients::rationals(), top, c.opts.jobs);
  const auto ranks = e3_ranks(page, c.opts.jobs);
  std::vector<int> gens;
  for (int d : weyl_degrees(w)) gens.push_back(2 * d - 1);
  const auto oracle = exterior_poincare(gens);
  std::vector<std::size_t> expected(ranks.by_total_degree.size(), 0);
  for (std::size_t k = 0; k < oracle.size() && k < expected.size(); ++k) expected[k] = static_cast<std::size_t>(oracle[k]);
  if (ranks.by_total_degree != expected)
    return "E3 ranks " + join_ints(ranks.by_total_degree) + " differ from exterior algebra " + join_ints(expected);
  return {};
}

inline std::string run_e3_ranks(const FixtureContext& c) {
  const auto g = c.group();
  const auto expected = c.fx.at("ranks").get<std::vector<std::size_t>>();
  const auto k = parse_coefficients(c.fx.at("coeff").get<std::string>());
  const auto page = build_e2(g, k, static_cast<int>(expected.size()) - 1, PageOptions{kDefaultWeylCap, c.opts.jobs});
  const auto ranks = e3_ranks(page, c.opts.jobs);
  if (ranks.by_total_degree != expected)
    return "E3 ranks " + join_ints(ranks.by_total_degree) + ", expected " + join_ints(expected);
  return {};
}

inline std::string run_d2_squared_zero(const FixtureContext& c) {
  const auto g = c.group();
  const auto k = parse_coefficients(c.fx.at("coeff").get<std::string>());
  const auto page = build_e2(g, k, static_cast<int>(group_dimension(g.root_system.type)),
                             PageOptions{kDefaultWeylCap, c.opts.jobs});
  if (auto bad = d2_squared_violations(page)) return std::to_string(bad) + " nonzero entries in d2 o d2";
  return {};
}

inline std::string run_snf_random(const FixtureContext& c) {
  std::mt19937_64 rng(c.fx.at("seed").get<std::uint64_t>());
  const auto count = c.fx.at("count").get<int>();
  const auto max_dim = c.fx.at("max_dim").get<int>();
  const auto max_entry = c.fx.at("max_entry").get<int>();
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  for (int k = 0; k < count; ++k) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    if (auto why = smith_violation(m, smith_normal_form(m)); !why.empty()) {
      std::ostringstream os;
      os << "matrix " << m << ": " << why;
      return os.str();
    }
  }
  return {};
}

inline std::string run_root_counts(const FixtureContext& c) {
  for (const auto& t : all_types_up_to_rank(c.fx.at("max_rank").get<int>())) {
    const auto rs = build_root_system(t, c.opts.convention);
    if (rs.all_roots.size() != expected_root_count(t))
      return t.name() + ": " + std::to_string(rs.all_roots.size()) + " roots, expected " +
             std::to_string(expected_root_count(t));
  }
  return {};
}

}  // namespace detail

inline FixtureResult run_fixture(const Json& fx, const FixtureOptions& opts = {}) {
  FixtureResult r;
  r.id = fx.value("id", std::string("?"));
  r.kind = fx.value("kind", std::string("?"));
  r.anchor = fx.value("anchor", std::string());
  const detail::FixtureContext c{fx, opts};
  try {
    if (r.kind == "modp_generators")
      r.detail = detail::run_modp_generators(c);
    else if (r.kind == "tau_identity")
      r.detail = detail::run_tau_identity(c);
    else if (r.kind == "tau_adjoint")
      r.detail = detail::run_tau_adjoint(c);
    else if (r.kind == "determinant_law")
      r.detail = detail::run_determinant_law(c);
    else if (r.kind == "singular_primes")
      r.detail = detail::run_singular_primes(c);
    else if (r.kind == "e3_exterior")
      r.detail = detail::run_e3_exterior(c);
    else if (r.kind == "e3_ranks")
      r.detail = detail::run_e3_ranks(c);
    else if (r.kind == "d2_squared_zero")
      r.detail = detail::run_d2_squared_zero(c);
    else if (r.kind == "snf_random")
      r.detail = detail::run_snf_random(c);
    else if (r.kind == "root_counts")
      r.detail = detail::run_root_counts(c);
    else
      r.detail = "unknown fixture kind '" + r.kind + "'";
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.passed = r.detail.empty();
  return r;
}

inline std::vector<FixtureResult> run_fixture_corpus(const Json& corpus, const FixtureOptions& opts = {}) {
  if (!corpus.is_object() || !corpus.contains("fixtures") || !corpus.at("fixtures").is_array())
    throw InvalidInput("fixture corpus must be an object with a 'fixtures' array");
  const auto& list = corpus.at("fixtures");
  if (list.empty()) throw InvalidInput("no fixtures");
  std::vector<FixtureResult> out;
  for (const auto& fx : list) out.push_back(run_fixture(fx, opts));
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline ResultDocument fixtures_document(const std::vector<FixtureResult>& results) {
  ResultDocument doc;
  doc.group = Json{{"spec", "corpus"}, {"type", ""}, {"form", ""}};
  doc.kind = "fixtures";
  Json rows = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    rows.push_back(Json{{"id", r.id}, {"kind", r.kind}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) ++failed;
    doc.provenance.push_back(r.anchor);
  }
  doc.payload = Json{{"results", rows}, {"passed", results.size() - failed}, {"failed", failed}};
  return doc;
}

inline std::string render_fixtures_text(const std::vector<FixtureResult>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.id;
    if (!r.anchor.empty()) os << "  (" << r.anchor << ")";
    if (!r.passed) {
      os << "\n     " << r.detail;
      ++failed;
    }
    os << '\n';
  }
  os << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace transgress
