// qsorep: build and verify Gel'fand-Tsetlin matrix representations of the
// nonstandard q-deformed algebra U'_q(so_n).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsorep/repmatrix.hpp"
#include "qsorep/serialize.hpp"
#include "qsorep/suite.hpp"
#include "qsorep/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

struct JobConfig {
  int n = 0;
  std::string flavor = "classical";
  std::string kind = "classical";
  std::string weight;           // comma-separated half-integer tokens
  std::vector<int> signs;
  double q = 2.0;
  double tol = 1e-9;
  std::string output;
  std::string format = "json";
  std::string input;            // pre-built matrix file for verify
  bool print_patterns = false;
};

std::vector<int> parse_weight(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(qsorep::parse_half(tok));
  if (out.empty()) throw std::invalid_argument("empty weight");
  return out;
}

qsorep::RepSpec<double> make_spec(const JobConfig& cfg) {
  const qsorep::RepKind kind = qsorep::kind_from_string(cfg.kind);
  qsorep::HighestWeight w;
  w.n = cfg.n;
  w.flavor = (kind == qsorep::RepKind::classical || kind == qsorep::RepKind::prime)
                 ? qsorep::Flavor::classical
                 : qsorep::Flavor::nonclassical;
  w.twice = parse_weight(cfg.weight);
  std::optional<qsorep::SignVector> signs;
  if (!cfg.signs.empty()) signs = qsorep::SignVector{cfg.signs};
  return {w, signs, qsorep::QParam<double>(cfg.q), kind};
}

void warn_unused_odd_signs(const qsorep::RepSpec<double>& spec) {
  if (spec.kind != qsorep::RepKind::prime || !spec.signs) return;
  for (int k = 3; k <= spec.weight.n; k += 2)
    if (spec.signs->at(k) != 1) {
      std::cerr << "warning: odd signs ignored by the T' builder\n";
      return;
    }
}

void write_output(const JobConfig& cfg, const qsorep::json& doc) {
  if (cfg.output.empty())
    std::cout << doc.dump(2) << "\n";
  else
    qsorep::atomic_write_file(cfg.output, doc.dump(2));
}

int cmd_enumerate(const JobConfig& cfg) {
  qsorep::HighestWeight w{cfg.n, qsorep::flavor_from_string(cfg.flavor),
                          parse_weight(cfg.weight)};
  const auto basis = qsorep::enumerate_patterns(w);
  std::cout << "dim = " << basis.size() << "\n";
  if (cfg.print_patterns)
    for (const auto& pat : basis)
      std::cout << qsorep::pattern_to_json(pat).dump() << "\n";
  if (!cfg.output.empty()) {
    qsorep::json doc;
    doc["n"] = cfg.n;
    doc["flavor"] = cfg.flavor;
    doc["dim"] = basis.size();
    auto arr = qsorep::json::array();
    for (const auto& pat : basis) arr.push_back(qsorep::pattern_to_json(pat));
    doc["patterns"] = std::move(arr);
    qsorep::atomic_write_file(cfg.output, doc.dump(2));
  }
  return kExitPass;
}

int cmd_build(const JobConfig& cfg) {
  const auto spec = make_spec(cfg);
  warn_unused_odd_signs(spec);
  const auto rep = qsorep::build(spec);
  if (cfg.format == "csv") {
    if (cfg.output.empty())
      throw std::invalid_argument("csv export requires --output");
    qsorep::write_csv(rep, cfg.output);
    return kExitPass;
  }
  write_output(cfg, qsorep::rep_to_json(rep));
  return kExitPass;
}

int cmd_verify(const JobConfig& cfg) {
  qsorep::RepMatrices<double> rep =
      cfg.input.empty() ? qsorep::build(make_spec(cfg))
                        : qsorep::rep_from_json(qsorep::load_json_file(cfg.input));
  const auto report = qsorep::check_relations(rep, cfg.tol);
  write_output(cfg, qsorep::relation_report_to_json(report));
  if (!report.pass) {
    for (const auto& [id, res] : report.residuals)
      if (res >= cfg.tol) {
        std::cerr << "check failed: " << id << " residual " << res << "\n";
        break;
      }
    return kExitCheckFailed;
  }
  return kExitPass;
}

int cmd_decompose(const JobConfig& cfg) {
  JobConfig prime_cfg = cfg;
  prime_cfg.kind = "prime";
  if (prime_cfg.signs.empty())
    prime_cfg.signs.assign(static_cast<std::size_t>(cfg.n - 1), 1);
  const auto spec = make_spec(prime_cfg);
  warn_unused_odd_signs(spec);
  const auto rep = qsorep::build_prime(spec);
  const auto report = qsorep::decompose_prime(rep, cfg.tol);
  qsorep::json doc = qsorep::decomposition_report_to_json(report);
  // Match each block against the nonclassical candidates.
  auto& blocks = doc["blocks"];
  bool all_matched = true;
  for (std::size_t bi = 0; bi < report.blocks.size(); ++bi) {
    const auto& blk = report.blocks[bi];
    int matches = 0;
    std::vector<int> eps;
    for (int m = 0; m < (1 << (cfg.n - 1)); ++m) {
      qsorep::SignVector cand;
      for (int b = 0; b < cfg.n - 1; ++b) cand.eps.push_back((m >> b) & 1 ? -1 : 1);
      qsorep::HighestWeight nw{cfg.n, qsorep::Flavor::nonclassical,
                               parse_weight(cfg.weight)};
      const auto candidate = qsorep::build_nonclassical(
          {nw, cand, qsorep::QParam<double>(cfg.q), qsorep::RepKind::nonclassical});
      if (candidate.dim() == blk.rep.dim() &&
          qsorep::match_block_to_nonclassical(blk.rep, candidate, 1e-8)) {
        ++matches;
        eps = cand.eps;
      }
    }
    blocks[bi]["matched_signs"] = eps;
    blocks[bi]["match_count"] = matches;
    if (matches != 1) all_matched = false;
  }
  write_output(cfg, doc);
  return all_matched ? kExitPass : kExitCheckFailed;
}

int cmd_suite(const JobConfig& cfg) {
  const auto results = qsorep::suite::run_all();
  qsorep::json doc = qsorep::json::array();
  bool all_pass = true;
  for (const auto& res : results) {
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << "criterion " << res.id
              << ": " << res.name << " — " << res.detail << "\n";
    doc.push_back({{"id", res.id},
                   {"name", res.name},
                   {"pass", res.pass},
                   {"detail", res.detail}});
    all_pass = all_pass && res.pass;
  }
  if (!cfg.output.empty()) qsorep::atomic_write_file(cfg.output, doc.dump(2));
  return all_pass ? kExitPass : kExitCheckFailed;
}

void apply_config_file(int argc, char** argv, JobConfig& cfg) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) != "--config") continue;
    const auto doc = qsorep::load_json_file(argv[i + 1]);
    if (doc.contains("n")) cfg.n = doc["n"].get<int>();
    if (doc.contains("flavor")) cfg.flavor = doc["flavor"].get<std::string>();
    if (doc.contains("kind")) cfg.kind = doc["kind"].get<std::string>();
    if (doc.contains("weight")) {
      if (doc["weight"].is_array()) {
        std::string joined;
        for (const auto& t : doc["weight"]) {
          if (!joined.empty()) joined += ",";
          joined += t.get<std::string>();
        }
        cfg.weight = joined;
      } else {
        cfg.weight = doc["weight"].get<std::string>();
      }
    }
    if (doc.contains("signs")) cfg.signs = doc["signs"].get<std::vector<int>>();
    if (doc.contains("q")) cfg.q = doc["q"].get<double>();
    if (doc.contains("tol")) cfg.tol = doc["tol"].get<double>();
    if (doc.contains("output")) cfg.output = doc["output"].get<std::string>();
    if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  if (const char* env_tol = std::getenv("QSOREP_TOL")) cfg.tol = std::atof(env_tol);

  CLI::App app{"Gel'fand-Tsetlin representations of U'_q(so_n)"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (same keys as flags)");

  try {
    apply_config_file(argc, argv, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  auto add_common = [&](CLI::App* sub, bool needs_weight) {
    sub->add_option("--n", cfg.n, "rank parameter of so_n")->required(cfg.n == 0);
    sub->add_option("--weight", cfg.weight,
                    "comma-separated entries, e.g. 3/2,1/2")
        ->required(needs_weight && cfg.weight.empty());
    sub->add_option("--q", cfg.q, "deformation parameter (real, > 0, != 1)");
    sub->add_option("--tol", cfg.tol, "verification tolerance");
    sub->add_option("--output", cfg.output, "output file (atomic write)");
    sub->add_option("--config", config_path, "JSON config file");
  };

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the pattern basis");
  add_common(enumerate, true);
  enumerate->add_option("--flavor", cfg.flavor, "classical|nonclassical");
  enumerate->add_flag("--patterns", cfg.print_patterns, "print every tableau");

  auto* build = app.add_subcommand("build", "build and export generator matrices");
  add_common(build, true);
  build->add_option("--kind", cfg.kind, "classical|nonclassical|one-dim|prime");
  build->add_option("--signs", cfg.signs, "sign vector eps_2..eps_n (+1/-1)")->delimiter(',');
  build->add_option("--format", cfg.format, "json|csv");

  auto* verify = app.add_subcommand("verify", "check the defining relations");
  add_common(verify, false);
  verify->add_option("--kind", cfg.kind, "classical|nonclassical|one-dim|prime");
  verify->add_option("--signs", cfg.signs, "sign vector eps_2..eps_n")->delimiter(',');
  verify->add_option("--input", cfg.input, "verify a previously exported file");

  auto* decompose =
      app.add_subcommand("decompose", "split T' into invariant subspaces");
  add_common(decompose, true);
  decompose->add_option("--signs", cfg.signs, "even signs used by T'")->delimiter(',');

  auto* suite = app.add_subcommand("suite", "run the full verification grid");
  suite->add_option("--output", cfg.output, "JSON report path");
  suite->add_option("--config", config_path, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (decompose->parsed()) return cmd_decompose(cfg);
    if (suite->parsed()) return cmd_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInvalidInput;
}
