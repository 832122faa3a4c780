#include "regjm/report.hpp"

#include <algorithm>
#include <iomanip>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "regjm/textio.hpp"

namespace regjm {

using nlohmann::json;

namespace {

json table_json(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [ij, v] : b.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  json out = {{"entries", entries}, {"pd", b.pd()}};
  out["reg"] = b.empty() ? json(nullptr) : json(regularity(b));
  return out;
}

std::vector<std::string> ascii_lines(const BettiTable& b) {
  if (b.empty()) return {"(zero)"};
  const int pd = b.pd();
  int lo = regularity(b), hi = lo;
  for (const auto& [ij, v] : b.entries()) lo = std::min(lo, ij.second - ij.first);
  std::vector<std::string> label{"", "total:"};
  std::vector<std::vector<std::string>> cells(2);
  for (int i = 0; i <= pd; ++i) {
    cells[0].push_back(std::to_string(i));
    cells[1].push_back(std::to_string(b.total(i)));
  }
  for (int row = lo; row <= hi; ++row) {
    label.push_back(std::to_string(row) + ":");
    cells.emplace_back();
    for (int i = 0; i <= pd; ++i) {
      auto v = b.at(i, i + row);
      cells.back().push_back(v == 0 ? "." : std::to_string(v));
    }
  }
  std::size_t lw = 0;
  for (const auto& l : label) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(pd + 1, 0);
  for (const auto& r : cells)
    for (int i = 0; i <= pd; ++i) cw[i] = std::max(cw[i], r[i].size());
  std::vector<std::string> out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::ostringstream line;
    line << std::setw(static_cast<int>(lw)) << label[r];
    for (int i = 0; i <= pd; ++i) line << ' ' << std::setw(static_cast<int>(cw[i])) << cells[r][i];
    out.push_back(line.str());
  }
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + '\n';
  return s;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// `key=value` pairs from a header line after its tag.
std::vector<std::pair<std::string, std::string>> key_values(const std::string& rest) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(rest);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InvalidInput("header field '" + tok + "' is not key=value");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

int to_int(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw InvalidInput("header field " + key + " needs an integer, got '" + s + "'");
  }
}

}  // namespace

std::string betti_json(const BettiTable& b) { return table_json(b).dump(); }

BettiTable betti_from_json(std::string_view text) {
  BettiTable b;
  try {
    json j = json::parse(text);
    for (const auto& e : j.at("entries")) {
      auto v = e.at("beta").get<std::int64_t>();
      if (v <= 0) throw InvalidInput("Betti entries must be positive");
      b.add(e.at("i").get<int>(), e.at("j").get<int>(), v);
    }
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("bad Betti table JSON: ") + ex.what());
  }
  return b;
}

std::string betti_ascii(const BettiTable& b) { return join_lines(ascii_lines(b)); }

std::string betti_side_by_side(const BettiTable& left, const BettiTable& right, const std::string& left_title,
                               const std::string& right_title) {
  auto a = ascii_lines(left), b = ascii_lines(right);
  a.insert(a.begin(), left_title);
  b.insert(b.begin(), right_title);
  std::size_t w = 0;
  for (const auto& l : a) w = std::max(w, l.size());
  std::string out;
  for (std::size_t r = 0; r < std::max(a.size(), b.size()); ++r) {
    std::string l = r < a.size() ? a[r] : "";
    l.resize(w, ' ');
    std::string line = l + "    " + (r < b.size() ? b[r] : "");
    out += trim(line).empty() ? "\n" : line.substr(0, line.find_last_not_of(' ') + 1) + '\n';
  }
  return out;
}

std::string certificate_json(const JmCertificate& c, bool include_timing) {
  json checks = json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  json out;
  out["parameters"] = {{"n", c.n},
                       {"N", c.N},
                       {"k", c.k},
                       {"d", c.d ? json(*c.d) : json(nullptr)},
                       {"module", c.module_label},
                       {"prime", c.prime},
                       {"strategy", c.strategy}};
  out["convention"] = "Betti tables of J_M as a module: minimal generators at i = 0";
  out["module"] = {{"betti", table_json(c.module_betti)},
                   {"degree_sequence", c.module_degrees.values},
                   {"regularity", c.module_regularity}};
  out["embedding"] = c.embedding;
  out["generators"] = c.generator_count;
  out["predicted"] = {{"degree_sequence", c.predicted_degrees.values},
                      {"regularity", c.predicted_regularity},
                      {"betti", table_json(c.predicted_betti)}};
  out["computed"] = {{"degree_sequence", c.computed_degrees.values},
                     {"regularity", c.computed_regularity},
                     {"betti", table_json(c.computed_betti)},
                     {"minimal_generators", c.minimal_generator_count}};
  out["checks"] = checks;
  out["pass"] = c.pass();
  if (include_timing) out["wall_seconds"] = c.wall_seconds;
  return out.dump(2);
}

std::string certificate_ascii(const JmCertificate& c) {
  std::ostringstream out;
  out << "J_M for " << c.module_label << " with n=" << c.n << " N=" << c.N << " k=" << c.k << " over F_" << c.prime
      << "\n\n";
  out << "M over R: degree sequence " << c.module_degrees.str() << ", reg " << c.module_regularity << "\n"
      << betti_ascii(c.module_betti) << '\n';
  out << betti_side_by_side(c.predicted_betti, c.computed_betti, "predicted", "computed") << '\n';
  for (const auto& ch : c.checks)
    out << (ch.pass ? "ok   " : "FAIL ") << ch.name << ": " << ch.detail << '\n';
  out << (c.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string cas_snippet(const RingContext& ring, const std::vector<Polynomial>& gens) {
  std::ostringstream out;
  out << "R = ZZ/" << ring.prime() << "[";
  for (int i = 0; i < ring.nvars(); ++i) out << (i ? "," : "") << ring.var_name(i);
  out << ", MonomialOrder => GRevLex];\n";
  out << "J = ideal(";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ",\n    " : "") << format_polynomial(ring, gens[i]);
  out << ");\n";
  out << "betti res module J\n";
  return out.str();
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "k,d_max,reg_predicted,reg_computed,wall_seconds\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.d_max << ',' << r.reg_predicted << ',';
    if (r.reg_computed) out << *r.reg_computed;
    out << ',';
    if (r.wall_seconds) out << std::fixed << std::setprecision(4) << *r.wall_seconds << std::defaultfloat;
    out << '\n';
  }
  return out.str();
}

RingHeader parse_ring_header(std::string_view text) {
  RingHeader h;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.rfind("# ring", 0) != 0) continue;
    for (const auto& [key, value] : key_values(line.substr(6))) {
      if (key == "n") h.n = to_int(value, key);
      else if (key == "N") h.N = to_int(value, key);
      else if (key == "prime") h.prime = static_cast<std::uint32_t>(to_int(value, key));
      else throw InvalidInput("unknown ring header field '" + key + "'");
    }
  }
  return h;
}

std::pair<int, int> scan_variable_indices(std::string_view text) {
  int x = -1, y = 0;
  static const std::regex var(R"(([xy])(\d+))");
  std::string s(text);
  for (std::sregex_iterator it(s.begin(), s.end(), var), end; it != end; ++it) {
    const int idx = std::stoi((*it)[2]);
    if ((*it)[1] == "x") x = std::max(x, idx);
    else y = std::max(y, idx);
  }
  return {x, y};
}

std::string format_generator_file(const GeneratorFile& f) {
  std::ostringstream out;
  out << "# generators of J_M\n";
  out << "# ring n=" << f.ring.n() << " N=" << f.ring.N() << " prime=" << f.ring.prime() << '\n';
  out << "# params k=" << f.k;
  if (f.d) out << " d=" << *f.d;
  if (!f.module_label.empty()) out << " module=" << f.module_label;
  out << '\n';
  std::istringstream m(format_matrix(f.ring.subring(), f.module));
  std::string line;
  while (std::getline(m, line)) out << "#! " << line << '\n';
  for (const auto& g : f.generators) out << format_polynomial(f.ring, g) << '\n';
  return out.str();
}

GeneratorFile parse_generator_file(std::string_view text, std::optional<std::uint32_t> prime) {
  RingHeader h = parse_ring_header(text);
  if (!h.n || !h.N) throw InvalidInput("generator file needs a '# ring n=.. N=..' header");
  RingContext ring(*h.n, *h.N, prime.value_or(h.prime.value_or(PrimeField::kDefaultPrime)));
  std::optional<int> k, d;
  std::string label, module_text;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.rfind("# params", 0) == 0) {
      for (const auto& [key, value] : key_values(t.substr(8))) {
        if (key == "k") k = to_int(value, key);
        else if (key == "d") d = to_int(value, key);
        else if (key == "module") label = value;
        else throw InvalidInput("unknown params field '" + key + "'");
      }
    } else if (t.rfind("#!", 0) == 0) {
      module_text += t.substr(2) + '\n';
    }
  }
  if (!k) throw InvalidInput("generator file needs a '# params k=..' header");
  if (module_text.empty()) throw InvalidInput("generator file does not embed its module ('#! matrix ...')");
  GeneratorFile f{ring, *k, d, label, parse_matrix(ring.subring(), module_text), {}};
  for (const auto& l : content_lines(text)) f.generators.push_back(parse_polynomial(ring, l));
  return f;
}

std::pair<RingContext, GradedMatrix> parse_module_file(std::string_view text, std::optional<std::uint32_t> prime) {
  RingHeader h = parse_ring_header(text);
  if (h.N && *h.N != 0) throw InvalidInput("module files live over R; the ring header must have N=0 or omit N");
  int n = h.n.value_or(std::max(1, scan_variable_indices(text).first));
  RingContext ring(n, 0, prime.value_or(h.prime.value_or(PrimeField::kDefaultPrime)));
  return {ring, parse_matrix(ring, text)};
}

}  // namespace regjm
