// zetaspan: exact verification of the categorified zeta factorization of a
// quadratic field at desk scale. Subcommands: table, verify, fidelity.
//
// Exit codes: 0 success, 1 normative divergence (verify), 2 usage or
// configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "zetaspan/serialize.hpp"
#include "zetaspan/theorems.hpp"

namespace {

using namespace zetaspan;

struct RunConfig {
  std::optional<std::int64_t> disc;
  std::optional<std::int64_t> d;
  std::int64_t bound = 200;
  std::string variant = "normative-parity";
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  bool no_header = false;
};

QuadField field_from(const RunConfig& cfg) {
  if (cfg.bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (cfg.disc && cfg.d)
    throw std::invalid_argument("give either --disc or --d, not both");
  if (cfg.disc) return QuadField::from_discriminant(*cfg.disc, cfg.bound);
  if (cfg.d) return QuadField::from_d(*cfg.d, cfg.bound);
  throw std::invalid_argument("one of --disc or --d is required");
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open --out path " + cfg.out_path);
  out << payload;
}

void emit_header(const RunConfig& cfg, const std::string& command,
                 const QuadField& K) {
  if (cfg.no_header) return;
  // timestamps never enter the payload; the header goes to stderr only
  const std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  std::cerr << "# zetaspan " << command << " disc=" << K.disc
            << " bound=" << cfg.bound << " variant=" << cfg.variant
            << " generated=" << buf << "\n";
}

void parallel_rows(std::int64_t n_rows, int jobs,
                   const std::function<void(std::int64_t)>& body) {
  if (jobs <= 1 || n_rows < 64) {
    for (std::int64_t i = 1; i <= n_rows; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::int64_t chunk = (n_rows + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const std::int64_t lo = w * chunk + 1;
    const std::int64_t hi = std::min<std::int64_t>(n_rows, lo + chunk - 1);
    if (lo > hi) break;
    workers.emplace_back([&body, lo, hi] {
      for (std::int64_t i = lo; i <= hi; ++i) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

int cmd_table(const RunConfig& cfg) {
  const QuadField K = field_from(cfg);
  emit_header(cfg, "table", K);

  struct Row {
    std::int64_t n;
    std::int64_t a;
    int chi;
    Int conv;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.bound));
  const ReducedFn conv =
      convolve(ReducedFn::zeta(cfg.bound), character_coefficients(K, cfg.bound));
  parallel_rows(cfg.bound, cfg.jobs, [&](std::int64_t n) {
    rows[static_cast<std::size_t>(n - 1)] =
        Row{n, ideal_count(K, n), K.character(n), conv.at(n)};
  });

  std::string payload;
  if (cfg.format == "json") {
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      jrows.push_back({{"n", std::to_string(r.n)},
                       {"ideal_count", std::to_string(r.a)},
                       {"character", std::to_string(r.chi)},
                       {"zeta_conv_character", to_decimal(r.conv)}});
    nlohmann::ordered_json j = {{"command", "table"},
                                {"discriminant", std::to_string(K.disc)},
                                {"bound", std::to_string(cfg.bound)},
                                {"rows", jrows}};
    payload = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    payload = "n,ideal_count,character,zeta_conv_character\n";
    for (const auto& r : rows)
      payload += std::to_string(r.n) + "," + std::to_string(r.a) + "," +
                 std::to_string(r.chi) + "," + to_decimal(r.conv) + "\n";
  } else {
    payload = "| n | ideal_count | character | zeta*character |\n";
    payload += "|---|---|---|---|\n";
    for (const auto& r : rows)
      payload += "| " + std::to_string(r.n) + " | " + std::to_string(r.a) +
                 " | " + std::to_string(r.chi) + " | " + to_decimal(r.conv) +
                 " |\n";
  }
  emit(cfg, payload);
  return 0;
}

std::vector<FidelityRecord> run_suite(const QuadField& K, const RunConfig& cfg,
                                      const std::string& suite,
                                      CharVariant variant) {
  std::vector<FidelityRecord> records;
  const std::int64_t N = cfg.bound;

  const auto add_reduced_local = [&] {
    for (std::int64_t p = 2; p <= std::min<std::int64_t>(N, 100); ++p) {
      if (factorize(p).entries.size() != 1 || factorize(p).entries[0].second != 1)
        continue;
      const BijectionWitness w = local_factorization_witness(K, p, 12);
      const std::string construction = std::string("reduced-local-") +
                                       to_string(K.splitting(p)) +
                                       "@p=" + std::to_string(p);
      if (w.valid()) {
        records.push_back({construction, "literal", Verdict::Confirmed, {}});
      } else {
        records.push_back({construction, "literal", Verdict::Diverges,
                           Counterexample{"witness", Int(w.leftover_left.size()),
                                          Int(w.leftover_right.size())}});
      }
    }
  };

  const auto add_reduced_global = [&] {
    if (variant == CharVariant::NormativeParity) {
      const BijectionWitness w = global_factorization_witness(K, N);
      if (w.valid()) {
        records.push_back(
            {"reduced-global", to_string(variant), Verdict::Confirmed, {}});
      } else {
        FidelityRecord rec{"reduced-global", to_string(variant),
                           Verdict::Diverges,
                           Counterexample{"witness", Int(w.leftover_left.size()),
                                          Int(w.leftover_right.size())}};
        for (const auto& [label, sizes] : w.fiber_sizes())
          if (sizes.first != sizes.second) {
            rec.counterexample = Counterexample{label_to_string(label),
                                                sizes.first, sizes.second};
            break;
          }
        records.push_back(std::move(rec));
      }
    } else {
      records.push_back(check_global_cardinality(K, N, variant));
    }
  };

  const std::int64_t interval_bound = std::min<std::int64_t>(N, 2000);
  if (suite == "reduced-local" || suite == "all") add_reduced_local();
  if (suite == "reduced-global" || suite == "all") add_reduced_global();
  if (suite == "full-numerical" || suite == "all")
    records.push_back(check_interval_factorization(K, interval_bound));
  if (suite == "reduction" || suite == "all")
    records.push_back(check_reduction(K, interval_bound));
  if (suite == "relative-zeta" || suite == "all") {
    records.push_back(check_signfree_mobius(std::min<std::int64_t>(N, 500)));
    for (std::int64_t p : {2, 3, 5})
      records.push_back(check_prime_factor_zeta(p, N));
    records.push_back(check_quadratic_relative_zeta(K, N));
  }
  return records;
}

std::string render_records(const RunConfig& cfg, const std::string& command,
                           const QuadField& K,
                           const std::vector<FidelityRecord>& records,
                           bool pass) {
  if (cfg.format == "json") {
    nlohmann::ordered_json jrecords = nlohmann::ordered_json::array();
    for (const auto& r : records) jrecords.push_back(to_json(r));
    nlohmann::ordered_json j = {{"command", command},
                                {"discriminant", std::to_string(K.disc)},
                                {"bound", std::to_string(cfg.bound)}};
    if (command == "verify") {
      j["variant"] = cfg.variant;
      j["suite"] = cfg.suite;
    }
    j["records"] = jrecords;
    j["pass"] = pass;
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    std::string out = "construction,variant,verdict,label,left_card,right_card\n";
    for (const auto& r : records) {
      out += r.construction + "," + r.variant + "," + to_string(r.verdict) + ",";
      if (r.counterexample)
        out += r.counterexample->label + "," + to_decimal(r.counterexample->left) +
               "," + to_decimal(r.counterexample->right);
      else
        out += ",,";
      out += "\n";
    }
    return out;
  }
  std::string out = "| construction | variant | verdict | counterexample |\n";
  out += "|---|---|---|---|\n";
  for (const auto& r : records) {
    out += "| " + r.construction + " | " + r.variant + " | " +
           to_string(r.verdict) + " | ";
    if (r.counterexample)
      out += r.counterexample->label + ": " + to_decimal(r.counterexample->left) +
             " vs " + to_decimal(r.counterexample->right);
    else
      out += "-";
    out += " |\n";
  }
  return out;
}

int cmd_verify(const RunConfig& cfg) {
  const QuadField K = field_from(cfg);
  const auto variant = char_variant_from_string(cfg.variant);
  if (!variant) throw std::invalid_argument("unknown variant " + cfg.variant);
  emit_header(cfg, "verify", K);

  const auto records = run_suite(K, cfg, cfg.suite, *variant);
  bool pass = true;
  for (const auto& r : records) pass = pass && r.verdict == Verdict::Confirmed;
  emit(cfg, render_records(cfg, "verify", K, records, pass));
  return pass ? 0 : 1;
}

int cmd_fidelity(const RunConfig& cfg) {
  const QuadField K = field_from(cfg);
  emit_header(cfg, "fidelity", K);
  const auto records = fidelity_report(K, cfg.bound);
  bool normative_pass = true;
  for (const auto& r : records)
    if (r.variant == "normative-parity" || r.variant == "derived")
      normative_pass = normative_pass && r.verdict == Verdict::Confirmed;
  emit(cfg, render_records(cfg, "fidelity", K, records, normative_pass));
  return 0;  // divergences are findings, not failures
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact incidence-algebra verification for quadratic fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env_jobs = std::getenv("ZETASPAN_JOBS")) {
    try {
      cfg.jobs = std::stoi(env_jobs);
    } catch (...) {
      std::cerr << "error: ZETASPAN_JOBS is not an integer\n";
      return 2;
    }
  }

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--disc", cfg.disc, "fundamental discriminant D");
    sub->add_option("--d", cfg.d, "squarefree d of Q(sqrt(d))");
    sub->add_option("--bound", cfg.bound, "norm / index bound N")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", cfg.out_path, "write payload to a file");
    sub->add_option("--jobs", cfg.jobs,
                    "worker threads (env ZETASPAN_JOBS as fallback)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-header", cfg.no_header, "suppress the stderr header line");
  };

  CLI::App* table = app.add_subcommand(
      "table", "coefficient table n, ideal_count, character, zeta*character");
  add_common(table);

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite; exit 1 on divergence");
  add_common(verify);
  verify->add_option("--variant", cfg.variant, "character-set variant")
      ->check(CLI::IsMember(
          {"normative-parity", "literal-present-odd", "literal-all-even"}));
  verify->add_option("--suite", cfg.suite, "which suite to run")
      ->check(CLI::IsMember({"reduced-local", "reduced-global", "full-numerical",
                             "reduction", "relative-zeta", "all"}));

  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "full fidelity report, divergences reported as data");
  add_common(fidelity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, every parse error is usage
  }

  try {
    if (table->parsed()) return cmd_table(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (fidelity->parsed()) return cmd_fidelity(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
