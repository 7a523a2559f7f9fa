// boolsemi: exact censuses, certificates, character transforms, and
// product-set density tables for graded semirings of boolean groups.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "boolsemi/census.hpp"
#include "boolsemi/errors.hpp"
#include "boolsemi/factorizer.hpp"
#include "boolsemi/ford.hpp"
#include "boolsemi/selftest.hpp"
#include "boolsemi/text.hpp"
#include "boolsemi/transform.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 ok, 1 usage/parse, 2 budget/overflow, 3 oracle or law
// mismatch, 4 unrealizable signature on the inverse transform.
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitSignature = 4;

struct oracle_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusArgs {
  unsigned l = 1;
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;  // 0 = single n
  bool list = false;
  bool oracle = false;
  std::string format = "csv";
  std::uint64_t budget_pairs = 1'000'000'000;
  std::uint64_t budget_bytes = 256ull << 20;
  unsigned threads = 0;
};

struct FordArgs {
  std::uint64_t m = 0, n = 0;
  std::uint64_t a1 = 0, b1 = 1, a2 = 0, b2 = 1;
  unsigned min_log2 = 8, max_log2 = 12;
  std::string format = "csv";
  std::uint64_t budget_bytes = 256ull << 20;
};

ordered_json census_json(const boolsemi::CensusResult& r) {
  ordered_json j;
  j["l"] = r.rank;
  j["n"] = r.grade;
  j["grade_size"] = r.grade_size;
  j["theta"] = r.theta;
  j["prime_count"] = r.prime_count;
  j["omega"] = r.omega;
  j["p_minus"] = r.p_minus;
  if (r.normalized)
    j["normalized"] = *r.normalized;
  else
    j["normalized"] = nullptr;
  return j;
}

ordered_json density_json(const boolsemi::DensityRecord& r) {
  ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["cardinality"] = r.cardinality;
  if (r.normalized > 0)
    j["normalized"] = r.normalized;
  else
    j["normalized"] = nullptr;
  return j;
}

int run_census(const CensusArgs& args) {
  if (args.n < 2) throw std::invalid_argument("census requires --n >= 2");
  std::uint64_t last = args.n_max == 0 ? args.n : args.n_max;
  if (last < args.n) throw std::invalid_argument("--n-max must be >= --n");

  boolsemi::CensusConfig config;
  config.pair_budget = args.budget_pairs;
  config.bitmap_bytes = args.budget_bytes;
  config.threads = args.threads;

  std::vector<boolsemi::CensusResult> rows;
  std::vector<std::vector<boolsemi::Element>> listings;
  for (std::uint64_t n = args.n; n <= last; ++n) {
    boolsemi::GradeSpec spec{args.l, n};
    boolsemi::CensusResult r = boolsemi::census(spec, config);

    if (args.list || args.oracle) {
      std::vector<boolsemi::Element> comps = boolsemi::composites_of_grade(spec, config);
      if (comps.size() != r.theta)
        throw oracle_mismatch("composite count differs between the census paths at n=" +
                              std::to_string(n));
      if (args.oracle) {
        std::vector<boolsemi::Element> brute = boolsemi::brute_force_composites(spec);
        std::sort(brute.begin(), brute.end(), std::greater<>());
        if (brute != comps)
          throw oracle_mismatch("composite sets differ between product union and "
                                "per-element certification at n=" +
                                std::to_string(n));
      }
      if (args.list) listings.push_back(std::move(comps));
    }
    rows.push_back(r);
  }

  if (args.format == "json") {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ordered_json j = census_json(rows[i]);
      if (args.list) {
        ordered_json elems = ordered_json::array();
        for (const auto& e : listings[i]) elems.push_back(boolsemi::format_element(e));
        j["composites"] = elems;
      }
      out.push_back(j);
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << boolsemi::census_csv_header() << "\n";
    for (const auto& r : rows) std::cout << boolsemi::census_csv_row(r) << "\n";
    if (args.list) {
      std::cout << "l,n,element\n";
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& e : listings[i])
          std::cout << rows[i].rank << ',' << rows[i].grade << ",\""
                    << boolsemi::format_element(e) << "\"\n";
    }
  }
  return 0;
}

int run_certify(const std::string& coeffs) {
  boolsemi::Element w = boolsemi::parse_element(coeffs);
  boolsemi::Certificate cert = boolsemi::certify(w);
  if (cert.verdict == boolsemi::Verdict::kComposite) {
    std::cout << "Composite " << boolsemi::format_element(cert.witness->first) << " × "
              << boolsemi::format_element(cert.witness->second) << "\n";
  } else {
    std::cout << boolsemi::to_string(cert.verdict) << "\n";
  }
  return 0;
}

int run_transform(bool inverse, const std::string& coeffs, const std::string& values) {
  if (inverse) {
    if (values.empty()) throw std::invalid_argument("--inverse requires --values");
    boolsemi::Signature sig = boolsemi::parse_signature(values);
    std::cout << boolsemi::format_element(boolsemi::inverse_transform(sig)) << "\n";
  } else {
    if (coeffs.empty()) throw std::invalid_argument("transform requires --coeffs");
    boolsemi::Element u = boolsemi::parse_element(coeffs);
    std::cout << boolsemi::format_signature(boolsemi::transform(u)) << "\n";
  }
  return 0;
}

void print_density_rows(const std::vector<boolsemi::DensityRecord>& rows,
                        const std::string& format) {
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) out.push_back(density_json(r));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << boolsemi::density_csv_header() << "\n";
    for (const auto& r : rows) std::cout << boolsemi::density_csv_row(r) << "\n";
  }
}

int run_ford_table(const FordArgs& args) {
  boolsemi::FordConfig config{args.budget_bytes};
  boolsemi::DensityRecord rec;
  if (16 <= args.m && args.m <= args.n) {
    rec = boolsemi::normalized_density(args.m, args.n, config);
  } else {
    rec.m = args.m;
    rec.n = args.n;
    rec.cardinality = boolsemi::multiplication_table_size(args.m, args.n, config);
  }
  print_density_rows({rec}, args.format);
  return 0;
}

int run_ford_progression(const FordArgs& args) {
  boolsemi::FordConfig config{args.budget_bytes};
  boolsemi::ProgressionSpec p{args.a1, args.b1, args.m};
  boolsemi::ProgressionSpec q{args.a2, args.b2, args.n};
  boolsemi::DensityRecord rec;
  rec.m = args.m;
  rec.n = args.n;
  rec.cardinality = boolsemi::progression_product_size(p, q, boolsemi::CountStrategy::kAuto, config);
  print_density_rows({rec}, args.format);
  return 0;
}

int run_ford_sweep(const FordArgs& args) {
  if (args.min_log2 < 4) throw std::invalid_argument("--min-log2 must be >= 4 (so m >= 16)");
  if (args.max_log2 < args.min_log2 || args.max_log2 > 31)
    throw std::invalid_argument("--max-log2 must be in [--min-log2, 31]");
  boolsemi::FordConfig config{args.budget_bytes};
  std::vector<boolsemi::DensityRecord> rows;
  for (unsigned k = args.min_log2; k <= args.max_log2; ++k) {
    std::uint64_t side = std::uint64_t{1} << k;
    rows.push_back(boolsemi::normalized_density(side, side, config));
  }
  print_density_rows(rows, args.format);
  return 0;
}

int run_selftest(std::uint64_t seed, std::uint64_t cases, unsigned max_rank) {
  boolsemi::SelftestReport report = boolsemi::run_selftest(seed, cases, max_rank);
  if (!report.ok) {
    std::cerr << "error: law violated: " << report.failure << "\n";
    return kExitMismatch;
  }
  std::cout << "ok: " << report.cases << " random cases across ranks 1.." << max_rank
            << " (seed " << seed << ")\n";
  return 0;
}

std::optional<std::uint64_t> env_budget_bytes() {
  const char* env = std::getenv("SEMIRING_BUDGET_BYTES");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw std::invalid_argument("SEMIRING_BUDGET_BYTES is not a number");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic, censuses, and product-set densities in N[(Z/2Z)^l]"};
  app.require_subcommand(1);

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "count composite elements per grade");
  census_cmd->add_option("--l", census_args.l, "group rank l")->required()->check(CLI::Range(1u, 6u));
  census_cmd->add_option("--n", census_args.n, "grade (>= 2)")->required();
  census_cmd->add_option("--n-max", census_args.n_max, "sweep grades n..n-max");
  census_cmd->add_flag("--list", census_args.list, "also list the composite elements");
  census_cmd->add_flag("--oracle", census_args.oracle,
                       "cross-check against per-element certification");
  census_cmd->add_option("--format", census_args.format)->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--budget-pairs", census_args.budget_pairs, "product-count cap")
      ->check(CLI::PositiveNumber);
  auto* census_bytes =
      census_cmd->add_option("--budget-bytes", census_args.budget_bytes, "bitmap cap in bytes")
          ->check(CLI::PositiveNumber);
  census_cmd->add_option("--threads", census_args.threads, "worker cap, 0 = auto");

  std::string certify_coeffs;
  auto* certify_cmd = app.add_subcommand("certify", "certify one element");
  certify_cmd->add_option("--coeffs", certify_coeffs, "element text, e.g. 2,2")->required();

  bool transform_inverse = false;
  std::string transform_coeffs, transform_values;
  auto* transform_cmd = app.add_subcommand("transform", "character transform of an element");
  transform_cmd->add_option("--coeffs", transform_coeffs, "element text");
  transform_cmd->add_flag("--inverse", transform_inverse, "invert a signature");
  transform_cmd->add_option("--values", transform_values, "signature text");

  FordArgs ford_args;
  auto* ford_cmd = app.add_subcommand("ford", "distinct-product tables and densities");
  ford_cmd->require_subcommand(1);
  auto* table_cmd = ford_cmd->add_subcommand("table", "distinct products over a box");
  table_cmd->add_option("--m", ford_args.m)->required();
  table_cmd->add_option("--n", ford_args.n)->required();
  auto* prog_cmd = ford_cmd->add_subcommand("progression", "distinct products of two progressions");
  prog_cmd->add_option("--a1", ford_args.a1);
  prog_cmd->add_option("--b1", ford_args.b1);
  prog_cmd->add_option("--m", ford_args.m)->required();
  prog_cmd->add_option("--a2", ford_args.a2);
  prog_cmd->add_option("--b2", ford_args.b2);
  prog_cmd->add_option("--n", ford_args.n)->required();
  auto* sweep_cmd = ford_cmd->add_subcommand("sweep", "dyadic ladder of normalized densities");
  sweep_cmd->add_option("--min-log2", ford_args.min_log2)->required();
  sweep_cmd->add_option("--max-log2", ford_args.max_log2)->required();
  std::vector<CLI::Option*> ford_bytes;
  for (auto* cmd : {table_cmd, prog_cmd, sweep_cmd}) {
    cmd->add_option("--format", ford_args.format)->check(CLI::IsMember({"csv", "json"}));
    ford_bytes.push_back(cmd->add_option("--budget-bytes", ford_args.budget_bytes,
                                         "bitmap cap in bytes")
                             ->check(CLI::PositiveNumber));
  }

  std::uint64_t selftest_seed = 42, selftest_cases = 10'000;
  unsigned selftest_rank = 4;
  auto* selftest_cmd = app.add_subcommand("selftest", "random sweep of the algebra laws");
  selftest_cmd->add_option("--seed", selftest_seed);
  selftest_cmd->add_option("--cases", selftest_cases, "cases per rank");
  selftest_cmd->add_option("--max-rank", selftest_rank)->check(CLI::Range(1u, 6u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    // The environment may cap bitmap memory; an explicit flag wins.
    if (auto env = env_budget_bytes()) {
      if (census_bytes->count() == 0) census_args.budget_bytes = *env;
      for (CLI::Option* opt : ford_bytes)
        if (opt->count() == 0) ford_args.budget_bytes = *env;
    }

    if (*census_cmd) return run_census(census_args);
    if (*certify_cmd) return run_certify(certify_coeffs);
    if (*transform_cmd) return run_transform(transform_inverse, transform_coeffs, transform_values);
    if (*table_cmd) return run_ford_table(ford_args);
    if (*prog_cmd) return run_ford_progression(ford_args);
    if (*sweep_cmd) return run_ford_sweep(ford_args);
    if (*selftest_cmd) return run_selftest(selftest_seed, selftest_cases, selftest_rank);
  } catch (const oracle_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const boolsemi::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const boolsemi::not_integral& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSignature;
  } catch (const boolsemi::negative_coefficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSignature;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
