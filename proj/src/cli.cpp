#include "regjm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "regjm/construct.hpp"
#include "regjm/report.hpp"
#include "regjm/textio.hpp"

namespace regjm {

namespace {

struct Config {
  std::optional<int> n, N, k, d;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::string module_path;
  std::string input_path;
  std::string format;
  std::string out_path;
  std::optional<double> max_seconds;
  std::string expect_seq;
  std::string strategy = "normal";
  std::string k_range;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw UsageError("cannot write " + cfg.out_path);
  f << text;
}

int need(const std::optional<int>& v, const char* flag, int min) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  if (*v < min) throw UsageError(std::string(flag) + " must be at least " + std::to_string(min));
  return *v;
}

void check_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format must be one of: " + list);
}

PairStrategy strategy_of(const Config& cfg) {
  if (cfg.strategy == "normal") return PairStrategy::NormalDegree;
  if (cfg.strategy == "fifo") return PairStrategy::Fifo;
  throw UsageError("--strategy must be normal or fifo");
}

DegreeSequence parse_seq(const std::string& text) {
  DegreeSequence s;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      s.values.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--expect-seq needs comma-separated integers, got '" + text + "'");
    }
  }
  if (s.values.empty()) throw UsageError("--expect-seq is empty");
  return s;
}

/// M plus its provenance, from either the pure-family flags or --module.
struct Source {
  ModuleInput module;
  std::optional<int> d;
  std::string label;
};

/// Returns nullopt after printing the failed clauses.
std::optional<Source> load_source(const Config& cfg, int k, int N, std::ostream& err) {
  if (!cfg.module_path.empty()) {
    if (cfg.n || cfg.d) throw UsageError("--module excludes --n and --d");
    auto [ring, pres] = parse_module_file(read_file(cfg.module_path), cfg.prime);
    ModuleInput m = module_from_presentation(ring, pres);
    HypothesisResult h = hypothesis_check(m, k, N);
    if (!h.pass()) {
      for (const auto& c : h.failed) err << "hypothesis failed: " << c << '\n';
      return std::nullopt;
    }
    std::string label = module_label(m);
    return Source{std::move(m), std::nullopt, std::move(label)};
  }
  PureModuleSpec spec{need(cfg.n, "--n", 1), k, need(cfg.d, "--d", 0)};
  HypothesisResult h = hypothesis_check(pure_module_summary(spec), k, N);
  if (!h.pass()) {
    for (const auto& c : h.failed) err << "hypothesis failed: " << c << '\n';
    return std::nullopt;
  }
  std::string label = "pure(n=" + std::to_string(spec.n) + ",k=" + std::to_string(k) + ",d=" +
                      std::to_string(spec.d) + ")";
  return Source{pure_module(spec, cfg.prime), spec.d, std::move(label)};
}

int run_pure(Config cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "ascii";
  check_format(cfg, {"ascii", "json"});
  PureModuleSpec spec{need(cfg.n, "--n", 1), need(cfg.k, "--k", 1), need(cfg.d, "--d", 0)};
  ModuleInput m = pure_module(spec, cfg.prime);
  if (cfg.format == "json") {
    nlohmann::json j = {{"n", spec.n},
                        {"k", spec.k},
                        {"d", spec.d},
                        {"prime", cfg.prime},
                        {"presentation", format_matrix(m.ring, m.presentation)},
                        {"betti", nlohmann::json::parse(betti_json(m.betti))},
                        {"degree_sequence", m.degrees.values},
                        {"pure", is_pure(m.betti)}};
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "# pure module n=" << spec.n << " k=" << spec.k << " d=" << spec.d << " over F_" << cfg.prime << '\n'
      << format_matrix(m.ring, m.presentation) << '\n'
      << betti_ascii(m.betti) << '\n'
      << "degree sequence " << m.degrees.str() << (is_pure(m.betti) ? ", pure" : ", not pure") << '\n'
      << "beta_0 = " << m.betti.total(0) << '\n';
    emit(cfg, out, s.str());
  }
  err << "pure module with " << m.betti.total(0) << " generators, degree sequence " << m.degrees.str() << '\n';
  return kExitPass;
}

int run_construct(Config cfg, std::ostream& out, std::ostream& err, bool export_mode) {
  if (cfg.format.empty()) cfg.format = export_mode ? "cas" : "ascii";
  check_format(cfg, {"ascii", "cas", "json"});
  const int k = need(cfg.k, "--k", 1), N = need(cfg.N, "--N", 1);
  auto src = load_source(cfg, k, N, err);
  if (!src) return kExitHypothesis;
  const RingContext ring = ambient_ring(src->module, N);
  std::vector<Polynomial> gens = build_jm(src->module, ring, k);
  if (cfg.format == "cas") {
    emit(cfg, out, cas_snippet(ring, gens));
  } else if (cfg.format == "json") {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& p : gens) g.push_back(format_polynomial(ring, p));
    nlohmann::json j = {{"ring", {{"n", ring.n()}, {"N", ring.N()}, {"prime", ring.prime()}}},
                        {"variables", ring.var_names()},
                        {"k", k},
                        {"module", src->label},
                        {"generators", g}};
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    emit(cfg, out, format_generator_file(GeneratorFile{ring, k, src->d, src->label, src->module.presentation, gens}));
  }
  err << gens.size() << " generators of J_M in " << ring.nvars() << " variables\n";
  return kExitPass;
}

int run_resolve(Config cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "ascii";
  check_format(cfg, {"ascii", "json"});
  if (cfg.input_path.empty()) throw UsageError("resolve needs --input");
  const std::string text = read_file(cfg.input_path);
  RingHeader h = parse_ring_header(text);
  auto [xi, yi] = scan_variable_indices(text);
  const int n = cfg.n.value_or(h.n.value_or(std::max(1, xi)));
  const int N = cfg.N.value_or(h.N.value_or(yi));
  RingContext ring(n, N, cfg.prime);
  ResolutionOptions opts;
  if (cfg.max_seconds) opts.deadline = Deadline::after(*cfg.max_seconds);
  opts.strategy = strategy_of(cfg);
  const auto lines = content_lines(text);
  BettiTable table;
  if (!lines.empty() && lines[0].rfind("matrix", 0) == 0) {
    table = betti_table(minimal_resolution(ring, parse_matrix(ring, text), opts));
    err << "resolved the cokernel of a " << table.total(0) << "-generator presentation\n";
  } else {
    std::vector<Polynomial> gens;
    for (const auto& l : lines) gens.push_back(parse_polynomial(ring, l));
    table = ideal_table(betti_table(minimal_resolution(ring, GradedMatrix::row(gens), opts)));
    err << "resolved an ideal with " << gens.size() << " listed generators (table of the ideal as a module)\n";
  }
  if (cfg.format == "json") emit(cfg, out, betti_json(table) + "\n");
  else emit(cfg, out, betti_ascii(table));
  return kExitPass;
}

int run_verify(Config cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "json";
  check_format(cfg, {"json", "ascii"});
  VerifyOptions opts;
  opts.strategy = strategy_of(cfg);
  if (!cfg.expect_seq.empty()) opts.expect_seq = parse_seq(cfg.expect_seq);
  if (cfg.max_seconds) opts.deadline = Deadline::after(*cfg.max_seconds);

  JmCertificate cert;
  if (!cfg.input_path.empty()) {
    if (cfg.n || cfg.d || !cfg.module_path.empty()) throw UsageError("--input excludes --n, --d and --module");
    GeneratorFile f = parse_generator_file(read_file(cfg.input_path), cfg.prime);
    if (cfg.k && *cfg.k != f.k) throw UsageError("--k disagrees with the input file");
    if (cfg.N && *cfg.N != f.ring.N()) throw UsageError("--N disagrees with the input file");
    ModuleInput m = module_from_presentation(f.ring.subring(), f.module);
    HypothesisResult h = hypothesis_check(m, f.k, f.ring.N());
    if (!h.pass()) {
      for (const auto& c : h.failed) err << "hypothesis failed: " << c << '\n';
      return kExitHypothesis;
    }
    opts.generators = f.generators;
    cert = verify(m, f.ring.N(), f.k, opts);
    cert.d = f.d;
    if (!f.module_label.empty()) cert.module_label = f.module_label;
  } else {
    const int k = need(cfg.k, "--k", 1), N = need(cfg.N, "--N", 1);
    auto src = load_source(cfg, k, N, err);
    if (!src) return kExitHypothesis;
    cert = verify(src->module, N, k, opts);
    cert.d = src->d;
    cert.module_label = src->label;
  }
  emit(cfg, out, cfg.format == "json" ? certificate_json(cert) + "\n" : certificate_ascii(cert));
  for (const auto& c : cert.checks)
    if (!c.pass) err << "check " << c.name << " failed: " << c.detail << '\n';
  err << (cert.pass() ? "PASS" : "FAIL") << ' ' << cert.module_label << " reg J_M = " << cert.computed_regularity
      << " in " << cert.wall_seconds << "s\n";
  return cert.pass() ? kExitPass : kExitMismatch;
}

std::pair<int, int> parse_range(const Config& cfg) {
  if (!cfg.k_range.empty()) {
    const std::string& r = cfg.k_range;
    auto dots = r.find("..");
    try {
      if (dots == std::string::npos) {
        int v = std::stoi(r);
        return {v, v};
      }
      return {std::stoi(r.substr(0, dots)), std::stoi(r.substr(dots + 2))};
    } catch (const std::exception&) {
      throw UsageError("--k expects an integer or a range like 2..6");
    }
  }
  throw UsageError("missing --k");
}

int run_scan(Config cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "csv";
  check_format(cfg, {"csv"});
  const int n = need(cfg.n, "--n", 1), N = need(cfg.N, "--N", 1);
  auto [lo, hi] = parse_range(cfg);
  if (lo < 1 || hi < lo) throw UsageError("--k range must satisfy 1 <= lo <= hi");
  ScanOptions opts;
  opts.max_seconds = cfg.max_seconds;
  opts.prime = cfg.prime;
  auto rows = scan(n, N, lo, hi, opts);
  emit(cfg, out, scan_csv(rows));
  if (rows.size() >= 2) err << "log-log slope of predicted reg vs k: " << loglog_slope(rows) << '\n';
  bool mismatch = false;
  for (const auto& r : rows)
    if (r.mismatch) {
      mismatch = true;
      err << "k=" << r.k << ": computed instance disagrees with its prediction\n";
    }
  return mismatch ? kExitMismatch : kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build ideals J_M with prescribed Betti data and verify them by direct resolution", "regjm"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "coefficient field characteristic")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format");
    sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  };
  auto module_flags = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension of X (x-block has n+1 variables)");
    sub->add_option("--N", cfg.N, "codimension of X (number of y variables)");
    sub->add_option("--k", cfg.k, "generating degree of M");
    sub->add_option("--d", cfg.d, "jump of the pure module");
    sub->add_option("--module", cfg.module_path, "presentation of M over R in matrix text format");
  };

  auto* pure = app.add_subcommand("pure", "build the pure module and print its presentation and Betti table");
  pure->add_option("--n", cfg.n)->required();
  pure->add_option("--k", cfg.k)->required();
  pure->add_option("--d", cfg.d)->required();
  common(pure);

  auto* construct = app.add_subcommand("construct", "list generators of J_M");
  module_flags(construct);
  common(construct);

  auto* exporter = app.add_subcommand("export", "export generators of J_M for an external system");
  module_flags(exporter);
  common(exporter);

  auto* resolve = app.add_subcommand("resolve", "Betti table of a matrix cokernel or of an ideal");
  resolve->add_option("--input", cfg.input_path, "matrix or polynomial file")->required();
  resolve->add_option("--n", cfg.n);
  resolve->add_option("--N", cfg.N);
  resolve->add_option("--max-seconds", cfg.max_seconds);
  resolve->add_option("--strategy", cfg.strategy, "normal or fifo");
  common(resolve);

  auto* verify_cmd = app.add_subcommand("verify", "compare predicted and computed Betti data of J_M");
  module_flags(verify_cmd);
  verify_cmd->add_option("--input", cfg.input_path, "generator file written by construct");
  verify_cmd->add_option("--expect-seq", cfg.expect_seq, "override the predicted degree sequence");
  verify_cmd->add_option("--max-seconds", cfg.max_seconds);
  verify_cmd->add_option("--strategy", cfg.strategy, "normal or fifo");
  common(verify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "regularity growth over a range of k with d = d_max");
  scan_cmd->add_option("--n", cfg.n)->required();
  scan_cmd->add_option("--N", cfg.N)->required();
  scan_cmd->add_option("--k", cfg.k_range, "k or lo..hi")->required();
  scan_cmd->add_option("--max-seconds", cfg.max_seconds, "per-instance budget for the computed column");
  common(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cfg.prime < 2 || !is_prime(cfg.prime)) throw UsageError("--prime must be a prime");
    if (*pure) return run_pure(cfg, out, err);
    if (*construct) return run_construct(cfg, out, err, false);
    if (*exporter) return run_construct(cfg, out, err, true);
    if (*resolve) return run_resolve(cfg, out, err);
    if (*verify_cmd) return run_verify(cfg, out, err);
    if (*scan_cmd) return run_scan(cfg, out, err);
  } catch (const HypothesisFailure& e) {
    for (const auto& c : e.clauses()) err << "hypothesis failed: " << c << '\n';
    return kExitHypothesis;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HomogeneityError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "incomplete: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace regjm
