// transgress: command-line front end.
//
//   transgress describe <group> [--json]
//   transgress tau      <group> [--mod p] [--json]
//   transgress e3       <group> [--coeff q|p] [--max-degree D] [--bidegrees] [--jobs N] [--force] [--json]
//   transgress fixtures [corpus.json] [--jobs N] [--json]
//
// Exit codes: 0 success, 1 size cap refusal, 2 input error, 3 fixture failure.

#include "transgress/document.hpp"
#include "transgress/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <optional>
#include <string>

#ifndef TRANSGRESS_DEFAULT_CORPUS
#define TRANSGRESS_DEFAULT_CORPUS "data/fixtures.json"
#endif

namespace {

enum ExitCode { kOk = 0, kCapRefusal = 1, kInputError = 2, kFixtureFailure = 3 };

struct Options {
  std::string spec;
  std::optional<std::int64_t> mod;
  std::string coeff = "q";
  std::optional<int> max_degree;
  bool json = false;
  bool bidegrees = false;
  unsigned jobs = 1;
  bool force = false;
  std::size_t weyl_cap = transgress::kDefaultWeylCap;
  bool transpose_cartan = false;
};

void emit(const transgress::ResultDocument& doc, bool json) {
  if (json)
    std::cout << transgress::Json(doc).dump(2) << '\n';
  else
    std::cout << transgress::render_text(doc);
}

int run_fixtures(const Options& o) {
  const std::string path = o.spec.empty() ? std::string(TRANSGRESS_DEFAULT_CORPUS) : o.spec;
  transgress::FixtureOptions fo;
  fo.jobs = o.jobs;
  if (o.transpose_cartan) fo.convention = transgress::CartanConvention::Transposed;
  const auto results = transgress::run_fixture_corpus(transgress::load_json_file(path), fo);
  if (o.json)
    std::cout << transgress::Json(transgress::fixtures_document(results)).dump(2) << '\n';
  else
    std::cout << transgress::render_fixtures_text(results);
  for (const auto& r : results)
    if (!r.passed) return kFixtureFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel transgression and Leray-Serre E2/E3 pages for compact Lie groups"};
  app.require_subcommand(1);
  Options o;

  const std::string group_help = "group, e.g. C3, A3:adj, D4:pi1=[0,0,1,0]";
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit JSON (schema v1)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* describe = app.add_subcommand("describe", "root data, center and unit lattice basis");
  describe->add_option("spec", o.spec, group_help)->required();
  add_common(describe);

  auto* tau = app.add_subcommand("tau", "transgression matrix, optionally with kernel and cokernel mod p");
  tau->add_option("spec", o.spec, group_help)->required();
  tau->add_option("--mod", o.mod, "prime p");
  add_common(tau);

  auto* e3 = app.add_subcommand("e3", "graded ranks of the E3 page");
  e3->add_option("spec", o.spec, group_help)->required();
  e3->add_option("--coeff", o.coeff, "q for rationals or a prime p")->capture_default_str();
  e3->add_option("--max-degree", o.max_degree, "largest total degree (default dim G)")->check(CLI::NonNegativeNumber);
  e3->add_flag("--bidegrees", o.bidegrees, "include the per-bidegree breakdown");
  e3->add_flag("--force", o.force, "lift the Weyl group size cap");
  e3->add_option("--weyl-cap", o.weyl_cap, "Weyl group size cap")->capture_default_str();
  add_common(e3);

  auto* fixtures = app.add_subcommand("fixtures", "run the regression fixture corpus");
  fixtures->add_option("spec", o.spec, "corpus file (default: installed corpus)");
  fixtures->add_flag("--transpose-cartan", o.transpose_cartan, "build root data with the transposed Cartan matrix")
      ->group("");
  add_common(fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*describe) {
      emit(transgress::cmd_describe(o.spec), o.json);
    } else if (*tau) {
      emit(transgress::cmd_transgression(o.spec, o.mod), o.json);
    } else if (*e3) {
      transgress::E3Options eo;
      eo.coefficients = transgress::parse_coefficients(o.coeff);
      eo.max_degree = o.max_degree;
      eo.bidegrees = o.bidegrees;
      eo.jobs = o.jobs;
      eo.weyl_cap = o.force ? std::numeric_limits<std::size_t>::max() : o.weyl_cap;
      emit(transgress::cmd_e3(o.spec, eo), o.json);
    } else if (*fixtures) {
      return run_fixtures(o);
    }
  } catch (const transgress::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << " (use --force to lift it)\n";
    return kCapRefusal;
  } catch (const transgress::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
