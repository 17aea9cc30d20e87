#pragma once

// Result documents produced by the command-line front end. The JSON form is the
// source of truth; the text form is rendered from it.

#include "transgress/group_spec_string.hpp"
#include "transgress/lattices.hpp"
#include "transgress/spectral.hpp"
#include "transgress/transgression.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace transgress {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ResultDocument {
  int schema_version = kSchemaVersion;
  Json group;  // {"spec", "type", "form"}
  std::string kind;
  Json payload;
  std::vector<std::string> provenance;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

inline void to_json(Json& j, const ResultDocument& d) {
  j = Json{{"schema_version", d.schema_version},
           {"group", d.group},
           {"kind", d.kind},
           {"payload", d.payload},
           {"provenance", d.provenance}};
}

inline void from_json(const Json& j, ResultDocument& d) {
  j.at("schema_version").get_to(d.schema_version);
  d.group = j.at("group");
  j.at("kind").get_to(d.kind);
  d.payload = j.at("payload");
  j.at("provenance").get_to(d.provenance);
}

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

inline Json matrix_json(const IntMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline IntMatrix matrix_from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& data = j.at("data");
  if (data.size() != m.rows()) throw InvalidInput("matrix row count mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (data[i].size() != m.cols()) throw InvalidInput("matrix column count mismatch");
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) m(i, j2) = integer_from_json(data[i][j2]);
  }
  return m;
}

inline Json weights_json(const std::vector<WeightVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.coords);
  return a;
}

inline Json group_echo(const GroupSpecString& s) {
  return Json{{"spec", s.canonical()}, {"type", s.type.name()}, {"form", s.form_label()}};
}

// ---------------------------------------------------------------------------
// describe

inline ResultDocument cmd_describe(std::string_view spec_text) {
  const auto parsed = parse_group_spec(spec_text);
  const auto g = to_group_spec(parsed);
  const auto& rs = g.root_system;
  const auto center = center_group(rs);
  const auto basis = unit_lattice_basis(g);
  const auto c = transition_matrix(g, basis);

  Json factors = Json::array();
  for (const auto& d : center.invariant_factors) factors.push_back(integer_json(d));

  ResultDocument doc;
  doc.group = group_echo(parsed);
  doc.kind = "describe";
  doc.payload = Json{
      {"rank", rs.rank()},
      {"dimension", group_dimension(rs.type)},
      {"root_count", rs.all_roots.size()},
      {"weyl_group_order", integer_json(weyl_group_order(rs.type))},
      {"cartan", matrix_json(rs.cartan)},
      {"simple_roots", weights_json(rs.simple_roots)},
      {"center", Json{{"invariant_factors", factors}, {"generators", weights_json(center.generators)}}},
      {"pi1_generators", weights_json(g.pi1_generators)},
      {"pi1_order", pi1_order(g)},
      {"theta", matrix_json(basis.theta)},
      {"transition", matrix_json(c)},
  };
  return doc;
}

// ---------------------------------------------------------------------------
// tau

inline Json subspace_json(const ModPSubspace& s, const std::string& stem) {
  Json a = Json::array();
  for (const auto& v : s.basis) a.push_back(Json{{"vector", v}, {"label", format_combination(v, s.p, stem)}});
  return a;
}

inline ResultDocument cmd_transgression(std::string_view spec_text, std::optional<std::int64_t> p = std::nullopt) {
  const auto parsed = parse_group_spec(spec_text);
  if (p) require_prime(*p);
  const auto tau = transgression_matrix(to_group_spec(parsed));

  Json images = Json::array();
  for (std::size_t i = 0; i < tau.rank(); ++i) {
    Json coeffs = Json::array();
    for (const auto& x : tau.image(i)) coeffs.push_back(integer_json(x));
    images.push_back(Json{{"domain", tau.domain_labels[i]}, {"coefficients", coeffs}});
  }

  ResultDocument doc;
  doc.group = group_echo(parsed);
  doc.kind = "tau";
  doc.payload = Json{
      {"matrix", matrix_json(tau.matrix)},
      {"images", images},
      {"domain_labels", tau.domain_labels},
      {"codomain_labels", tau.codomain_labels},
      {"determinant", integer_json(determinant(tau.matrix))},
      {"singular_primes", kac_contradiction_report(tau)},
  };
  if (p) {
    const auto a = modp_analysis(tau, *p);
    doc.payload["mod"] = Json{{"p", *p},
                              {"kernel", subspace_json(a.kernel, "t")},
                              {"cokernel", subspace_json(a.cokernel, "w")},
                              {"is_isomorphism", a.is_isomorphism}};
  }
  return doc;
}

// ---------------------------------------------------------------------------
// e3

struct E3Options {
  Coefficients coefficients = Coefficients::rationals();
  std::optional<int> max_degree;
  bool bidegrees = false;
  unsigned jobs = 1;
  std::size_t weyl_cap = kDefaultWeylCap;
};

inline Coefficients parse_coefficients(std::string_view text) {
  if (text == "q" || text == "Q") return Coefficients::rationals();
  std::int64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidInput("coefficients must be 'q' or a prime, got '" + std::string(text) + "'");
  return Coefficients::prime_field(p);
}

inline std::string poincare_string(const std::vector<std::size_t>& ranks) {
  std::string s;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (ranks[k] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string mono = k == 0 ? "" : k == 1 ? "q" : "q^" + std::to_string(k);
    if (ranks[k] != 1 || k == 0) s += std::to_string(ranks[k]);
    s += mono;
  }
  return s.empty() ? "0" : s;
}

inline ResultDocument cmd_e3(std::string_view spec_text, const E3Options& opts = {}) {
  const auto parsed = parse_group_spec(spec_text);
  const auto g = to_group_spec(parsed);
  const int max_degree = opts.max_degree.value_or(static_cast<int>(group_dimension(g.root_system.type)));
  const auto page = build_e2(g, opts.coefficients, max_degree, PageOptions{opts.weyl_cap, opts.jobs});
  const auto ranks = e3_ranks(page, opts.jobs);

  ResultDocument doc;
  doc.group = group_echo(parsed);
  doc.kind = "e3";
  doc.payload = Json{{"coefficients", opts.coefficients.name()},
                     {"max_total_degree", max_degree},
                     {"ranks", ranks.by_total_degree},
                     {"poincare", poincare_string(ranks.by_total_degree)}};
  if (opts.bidegrees) {
    Json cells = Json::array();
    for (const auto& [d, cell] : page.cells)
      cells.push_back(Json{{"s", d.s}, {"t", d.t}, {"e2", cell.dimension()}, {"e3", ranks.by_bidegree.at(d)}});
    doc.payload["bidegrees"] = cells;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// text rendering

namespace detail {

inline std::string render_table(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                                const std::vector<std::vector<std::string>>& cells) {
  std::size_t w = 0;
  for (const auto& l : row_labels) w = std::max(w, l.size());
  std::vector<std::size_t> cw(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    cw[j] = col_labels[j].size();
    for (const auto& r : cells) cw[j] = std::max(cw[j], r[j].size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n - s.size(), ' ') + s; };
  os << std::string(w, ' ');
  for (std::size_t j = 0; j < col_labels.size(); ++j) os << "  " << pad(col_labels[j], cw[j]);
  os << '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    os << row_labels[i] << std::string(w - row_labels[i].size(), ' ');
    for (std::size_t j = 0; j < col_labels.size(); ++j) os << "  " << pad(cells[i][j], cw[j]);
    os << '\n';
  }
  return os.str();
}

inline std::string cell_text(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

inline std::string render_matrix(const Json& m, const std::string& row_stem, const std::string& col_stem) {
  const auto rows = m.at("rows").get<std::size_t>();
  const auto cols = m.at("cols").get<std::size_t>();
  std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) cells[i][j] = cell_text(m.at("data")[i][j]);
  return render_table(indexed_labels(row_stem, rows), indexed_labels(col_stem, cols), cells);
}

inline std::string render_vectors(const Json& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += "; ";
    s += "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
    s += ")";
  }
  return s.empty() ? "none" : s;
}

}  // namespace detail

inline std::string render_text(const ResultDocument& doc) {
  std::ostringstream os;
  const auto& p = doc.payload;
  os << "group " << doc.group.at("spec").get<std::string>() << '\n';
  if (doc.kind == "describe") {
    os << "rank " << p.at("rank") << ", dimension " << p.at("dimension") << ", " << p.at("root_count")
       << " roots, |W| = " << detail::cell_text(p.at("weyl_group_order")) << "\n\n";
    os << "Cartan matrix (row i = simple root a_i in fundamental weights phi_j):\n"
       << detail::render_matrix(p.at("cartan"), "a", "phi") << '\n';
    os << "center invariant factors: " << detail::render_vectors(Json::array({p.at("center").at("invariant_factors")}))
       << ", generators " << detail::render_vectors(p.at("center").at("generators")) << '\n';
    os << "pi1 generators: " << detail::render_vectors(p.at("pi1_generators")) << ", |pi1| = " << p.at("pi1_order")
       << "\n\n";
    os << "unit lattice basis (row i = theta_i in fundamental weights):\n"
       << detail::render_matrix(p.at("theta"), "theta", "phi") << '\n';
    os << "transition matrix C (simple roots = C * theta):\n" << detail::render_matrix(p.at("transition"), "a", "theta");
  } else if (doc.kind == "tau") {
    const auto labels = p.at("codomain_labels").get<std::vector<std::string>>();
    std::vector<std::string> rows;
    std::vector<std::vector<std::string>> cells;
    for (const auto& img : p.at("images")) {
      rows.push_back("tau(" + img.at("domain").get<std::string>() + ")");
      std::vector<std::string> r;
      for (const auto& c : img.at("coefficients")) r.push_back(detail::cell_text(c));
      cells.push_back(std::move(r));
    }
    os << "transgression (row: tau(t_i); column: coefficient of w_j):\n"
       << detail::render_table(rows, labels, cells);
    os << "determinant " << detail::cell_text(p.at("determinant")) << ", singular primes "
       << detail::render_vectors(Json::array({p.at("singular_primes")})) << '\n';
    if (p.contains("mod")) {
      const auto& m = p.at("mod");
      auto names = [](const Json& sub) {
        std::string s;
        for (const auto& g : sub) s += (s.empty() ? "" : ", ") + g.at("label").get<std::string>();
        return s.empty() ? std::string("0") : s;
      };
      os << "\nmod " << m.at("p") << ": " << (m.at("is_isomorphism").get<bool>() ? "isomorphism" : "not an isomorphism")
         << '\n';
      os << "  kernel generators:   " << names(m.at("kernel")) << '\n';
      os << "  cokernel generators: " << names(m.at("cokernel")) << '\n';
    }
  } else if (doc.kind == "e3") {
    os << "E3 ranks over " << p.at("coefficients").get<std::string>() << " up to total degree "
       << p.at("max_total_degree") << ":\n";
    const auto ranks = p.at("ranks").get<std::vector<std::size_t>>();
    for (std::size_t k = 0; k < ranks.size(); ++k) os << "  degree " << k << ": " << ranks[k] << '\n';
    os << "Poincare series: " << p.at("poincare").get<std::string>() << '\n';
    if (p.contains("bidegrees")) {
      os << "\n  (s,t)   E2   E3\n";
      for (const auto& c : p.at("bidegrees"))
        os << "  (" << c.at("s") << "," << c.at("t") << ")  " << c.at("e2") << "  " << c.at("e3") << '\n';
    }
  } else {
    os << p.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace transgress
