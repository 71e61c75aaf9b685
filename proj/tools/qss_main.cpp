// qss: stabilizer quantum secret sharing with advance sharing.
//
//   qss access <file> [--oracle]            access-structure report
//   qss protocol <file> --advance 1,2,3     advance-sharing bundle summary
//   qss roundtrip <file> --advance 1,2,3 --secret plus
//                                           end-to-end encode/reconstruct
//
// All reports are JSON on stdout; diagnostics go to stderr.
// Exit codes: 0 success, 2 input error, 3 semantic rejection.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qss/access.hpp"
#include "qss/errors.hpp"
#include "qss/pauli.hpp"
#include "qss/protocol.hpp"
#include "qss/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRejected = 3;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::vector<int> advance_set;
  std::string advance_csv;
  std::string secret_spec = "plus";
  std::string output_path;
  std::string dump_dir;
  std::size_t dim_cap = qss::kDefaultDimCap;
  double compare_tol = qss::kComparisonTol;
  bool oracle = false;
  unsigned long long seed = 0;
  int count = 1;
};

double round12(double x) {
  if (x == 0.0) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::vector<int> parse_index_csv(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = tok.find_last_not_of(" \t");
    tok = tok.substr(first, last - first + 1);
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw qss::ParseError("bad share index '" + tok + "'");
    }
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& json) {
  if (cfg.output_path.empty()) {
    std::cout << json << "\n";
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw qss::ParseError("cannot write output file: " + cfg.output_path);
  out << json << "\n";
}

qss::StateVector named_secret(const std::string& spec, int p, int k) {
  const std::size_t d = qss::pow_size(p, k);
  if (spec == "zero") return qss::basis_state(p, k, 0);
  if (spec == "one") {
    if (d < 2) throw qss::ParseError("secret 'one' needs p^k >= 2");
    return qss::basis_state(p, k, 1);
  }
  if (spec == "plus") {
    qss::StateVector v(p, k);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (auto& a : v.amps) a = c;
    return v;
  }
  if (spec == "iplus") {
    if (d < 2) throw qss::ParseError("secret 'iplus' needs p^k >= 2");
    qss::StateVector v(p, k);
    const double c = 1.0 / std::sqrt(2.0);
    v.amps[0] = c;
    v.amps[1] = qss::cxd(0.0, c);
    return v;
  }
  if (spec.rfind("v:", 0) == 0) {
    const std::string digits = spec.substr(2);
    if (static_cast<int>(digits.size()) != k) {
      throw qss::ParseError("secret 'v:' needs exactly k = " +
                            std::to_string(k) + " digits");
    }
    std::size_t index = 0;
    for (char c : digits) {
      if (c < '0' || c - '0' >= p) {
        throw qss::ParseError(std::string("secret digit '") + c +
                              "' out of range");
      }
      index = index * static_cast<std::size_t>(p) +
              static_cast<std::size_t>(c - '0');
    }
    return qss::basis_state(p, k, index);
  }
  throw qss::ParseError("unknown named secret '" + spec + "'");
}

// Amplitude-list secrets: "[1,0]" (reals) or "[[re,im],...]". The list must
// already be normalized to within 1e-6; it is then renormalized exactly.
qss::StateVector amplitude_secret(const std::string& spec, int p, int k) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(spec);
  } catch (const std::exception& e) {
    throw qss::ParseError(std::string("bad amplitude list: ") + e.what());
  }
  if (!arr.is_array()) throw qss::ParseError("amplitude list must be an array");
  qss::StateVector v(p, k);
  if (arr.size() != v.dim()) {
    throw qss::ParseError("amplitude list needs p^k = " +
                          std::to_string(v.dim()) + " entries");
  }
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (arr[i].is_array()) {
      if (arr[i].size() != 2) throw qss::ParseError("complex entries are [re,im]");
      v.amps[i] = qss::cxd(arr[i][0].get<double>(), arr[i][1].get<double>());
    } else {
      v.amps[i] = qss::cxd(arr[i].get<double>(), 0.0);
    }
  }
  if (std::abs(v.norm() - 1.0) > 1e-6) {
    throw qss::ParseError("amplitude list is not normalized (norm " +
                          std::to_string(v.norm()) + ")");
  }
  v.normalize();
  return v;
}

qss::StateVector random_secret(std::mt19937_64& rng, int p, int k) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qss::StateVector v(p, k);
  for (auto& a : v.amps) a = qss::cxd(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

int cmd_access(const RunConfig& cfg) {
  std::vector<std::string> warnings;
  const qss::StabilizerCode code =
      qss::read_stabilizer_file(cfg.input_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  const qss::AccessReport report = qss::enumerate_access_structure(
      code, cfg.oracle, cfg.dim_cap, cfg.compare_tol);
  emit(cfg, qss::access_report_json(report));
  return kExitOk;
}

int cmd_protocol(const RunConfig& cfg) {
  std::vector<std::string> warnings;
  const qss::StabilizerCode code =
      qss::read_stabilizer_file(cfg.input_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  try {
    const qss::ProtocolBundle bundle =
        qss::build_bundle(code, cfg.advance_set, cfg.dim_cap);
    emit(cfg, qss::bundle_summary_json(bundle));
    return kExitOk;
  } catch (const qss::NotQualified& e) {
    nlohmann::ordered_json j;
    j["status"] = "not_forbidden";
    j["advance_set"] = qss::normalize_index_set(cfg.advance_set, code.n);
    j["detail"] = e.what();
    emit(cfg, j.dump());
    return kExitRejected;
  } catch (const qss::PaddingError& e) {
    nlohmann::ordered_json j;
    j["status"] = "padding_error";
    j["advance_set"] = qss::normalize_index_set(cfg.advance_set, code.n);
    j["detail"] = e.what();
    emit(cfg, j.dump());
    return kExitRejected;
  }
}

int cmd_roundtrip(const RunConfig& cfg) {
  std::vector<std::string> warnings;
  const qss::StabilizerCode code =
      qss::read_stabilizer_file(cfg.input_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  qss::ProtocolBundle bundle;
  try {
    bundle = qss::build_bundle(code, cfg.advance_set, cfg.dim_cap);
  } catch (const qss::NotQualified& e) {
    nlohmann::ordered_json j;
    j["status"] = "not_forbidden";
    j["advance_set"] = qss::normalize_index_set(cfg.advance_set, code.n);
    j["detail"] = e.what();
    emit(cfg, j.dump());
    return kExitRejected;
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<std::string, qss::StateVector>> secrets;
  if (cfg.secret_spec == "random") {
    for (int i = 0; i < cfg.count; ++i) {
      secrets.emplace_back("random#" + std::to_string(i),
                           random_secret(rng, code.p, code.k));
    }
  } else if (!cfg.secret_spec.empty() && cfg.secret_spec[0] == '[') {
    secrets.emplace_back(cfg.secret_spec,
                         amplitude_secret(cfg.secret_spec, code.p, code.k));
  } else {
    secrets.emplace_back(cfg.secret_spec,
                         named_secret(cfg.secret_spec, code.p, code.k));
  }

  nlohmann::ordered_json out;
  out["status"] = "ok";
  out["seed"] = cfg.seed;
  out["advance_set"] = bundle.advance_set;
  out["k"] = bundle.k;
  out["ell"] = bundle.ell;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  double min_enc = 1.0, min_rec = 1.0;
  bool first = true;
  for (const auto& [spec, secret] : secrets) {
    const qss::StateVector direct = qss::encode_direct(code, secret, cfg.dim_cap);
    const qss::StateVector advance = qss::encode_advance(bundle, secret);
    const qss::StateVector recovered = qss::reconstruct(bundle, advance);
    const double f_enc = qss::fidelity(advance, direct);
    const double f_rec = qss::fidelity(recovered, secret);
    min_enc = std::min(min_enc, f_enc);
    min_rec = std::min(min_rec, f_rec);
    nlohmann::ordered_json je;
    je["spec"] = spec;
    je["fidelity_encode"] = round12(f_enc);
    je["fidelity_reconstruct"] = round12(f_rec);
    results.push_back(std::move(je));
    if (first && !cfg.dump_dir.empty()) {
      namespace fs = std::filesystem;
      fs::create_directories(cfg.dump_dir);
      auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream f(fs::path(cfg.dump_dir) / name);
        f << body << "\n";
      };
      write("bundle.json", qss::bundle_summary_json(bundle));
      write("phi.json", qss::state_json(bundle.phi));
      write("unitary.json", qss::operator_json(bundle.unitary));
      write("secret.json", qss::state_json(secret));
      write("direct.json", qss::state_json(direct));
      write("advance.json", qss::state_json(advance));
      write("reconstructed.json", qss::state_json(recovered));
    }
    first = false;
  }
  out["secrets"] = std::move(results);
  out["min_fidelity_encode"] = round12(min_enc);
  out["min_fidelity_reconstruct"] = round12(min_rec);
  const bool ok = min_enc >= 1.0 - qss::kRoundTripTol &&
                  min_rec >= 1.0 - qss::kRoundTripTol;
  if (!ok) out["status"] = "fidelity_below_threshold";
  emit(cfg, out.dump());
  return ok ? kExitOk : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer quantum secret sharing with advance sharing"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_advance) {
    sub->add_option("file", cfg.input_path, "stabilizer file")->required();
    sub->add_option("--output", cfg.output_path, "write JSON here instead of stdout");
    sub->add_option("--dim-cap", cfg.dim_cap,
                    "maximum simulated dimension p^n (default 16384)");
    if (needs_advance) {
      sub->add_option("--advance", cfg.advance_csv,
                      "advance-shareable candidate set, e.g. 1,2,3,4 "
                      "(empty for the empty set)");
    }
  };

  CLI::App* access = app.add_subcommand("access", "classify every share set");
  add_common(access, false);
  access->add_flag("--oracle", cfg.oracle,
                   "cross-check with the density-matrix oracle");
  access->add_option("--compare-tol", cfg.compare_tol,
                     "entrywise tolerance for the oracle (default 1e-7)");

  CLI::App* protocol = app.add_subcommand(
      "protocol", "build the advance-sharing bundle for a candidate set");
  add_common(protocol, true);

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "encode a secret both ways, reconstruct, report fidelities");
  add_common(roundtrip, true);
  roundtrip->add_option("--secret", cfg.secret_spec,
                        "zero|one|plus|iplus|v:<digits>|random|[amps...] "
                        "(default plus)");
  roundtrip->add_option("--seed", cfg.seed, "PRNG seed for random secrets");
  roundtrip->add_option("--count", cfg.count,
                        "number of random secrets (default 1)");
  roundtrip->add_option("--dump-states", cfg.dump_dir,
                        "directory for state/bundle JSON dumps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (access->parsed()) return cmd_access(cfg);
    cfg.advance_set = parse_index_csv(cfg.advance_csv);
    if (protocol->parsed()) return cmd_protocol(cfg);
    if (roundtrip->parsed()) return cmd_roundtrip(cfg);
  } catch (const qss::NotACodeword& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
