#include "regjm/textio.hpp"

#include <cctype>
#include <sstream>

namespace regjm {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  if (s.empty()) throw InvalidInput("expected an integer in '" + std::string(context) + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidInput("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    v = v * 10 + (c - '0');
    if (v > (std::int64_t{1} << 50)) throw InvalidInput("integer too large in '" + std::string(context) + "'");
  }
  return v;
}

// One term without its sign: factors joined by '*'.
Term parse_term(const RingContext& ring, std::string_view text, std::string_view context) {
  const auto& F = ring.field();
  Scalar coef = F.one();
  std::vector<int> e(ring.nvars(), 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.empty()) throw InvalidInput("empty factor in '" + std::string(context) + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coef = F.mul(coef, F.from_int(parse_int(factor, context)));
    } else {
      std::size_t caret = factor.find('^');
      std::string_view name = factor.substr(0, caret);
      auto idx = ring.var_index(name);
      if (!idx) throw InvalidInput("unknown variable '" + std::string(name) + "' in '" + std::string(context) + "'");
      int power = 1;
      if (caret != std::string_view::npos) power = static_cast<int>(parse_int(factor.substr(caret + 1), context));
      e[*idx] += power;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return {Monomial(ring.nvars(), e), coef};
}

}  // namespace

Polynomial parse_polynomial(const RingContext& ring, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty polynomial");
  const auto& F = ring.field();
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InvalidInput("expected '+' or '-' in '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string_view body = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (body.empty()) throw InvalidInput("dangling sign in '" + s + "'");
    Term t = parse_term(ring, body, s);
    if (negative) t.coef = F.neg(t.coef);
    terms.push_back(t);
    pos = end == std::string::npos ? s.size() : end;
  }
  return Polynomial::from_terms(F, std::move(terms));
}

std::string format_monomial(const RingContext& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const RingContext& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::int64_t c = ring.field().symmetric(t.coef);
    bool neg = c < 0;
    std::int64_t a = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mon.is_one()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + '*';
      out += format_monomial(ring, t.mon);
    }
  }
  return out;
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

GradedMatrix parse_matrix(const RingContext& ring, std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].rfind("matrix", 0) != 0) throw InvalidInput("matrix text must start with 'matrix'");
  std::string header = lines[0].substr(6);
  auto arrow = header.find("<-");
  if (arrow == std::string::npos) throw InvalidInput("matrix header needs '<-'");
  auto read_twists = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InvalidInput("bad twist '" + tok + "' in matrix header");
      }
    }
    return v;
  };
  GradedFreeModule target(read_twists(header.substr(0, arrow)));
  GradedFreeModule source(read_twists(header.substr(arrow + 2)));
  if (static_cast<int>(lines.size()) - 1 != source.rank())
    throw InvalidInput("matrix has " + std::to_string(lines.size() - 1) + " column lines but " +
                       std::to_string(source.rank()) + " source generators");
  std::vector<ModuleElement> cols;
  for (int c = 0; c < source.rank(); ++c) {
    const std::string& line = lines[c + 1];
    std::vector<ModTerm> terms;
    if (line != "0") {
      std::istringstream in(line);
      std::string entry;
      while (std::getline(in, entry, ';')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos) throw InvalidInput("matrix entry needs 'row: poly': " + entry);
        int r = static_cast<int>(parse_int(strip(entry.substr(0, colon)), entry));
        if (r < 0 || r >= target.rank()) throw InvalidInput("matrix row index out of range: " + entry);
        Polynomial p = parse_polynomial(ring, entry.substr(colon + 1));
        for (const auto& t : p.terms()) terms.push_back({static_cast<std::uint32_t>(r), t.mon, t.coef});
      }
    }
    cols.push_back(ModuleElement::from_terms(ring.field(), target, std::move(terms)));
  }
  return GradedMatrix(std::move(target), std::move(source), std::move(cols));
}

std::string format_matrix(const RingContext& ring, const GradedMatrix& m) {
  std::ostringstream out;
  out << "matrix";
  for (int t : m.target().twists()) out << ' ' << t;
  out << " <-";
  for (int t : m.source().twists()) out << ' ' << t;
  out << '\n';
  for (const auto& col : m.columns()) {
    if (col.is_zero()) {
      out << "0\n";
      continue;
    }
    bool first = true;
    for (int r = 0; r < m.rows(); ++r) {
      Polynomial e = col.entry(r);
      if (e.is_zero()) continue;
      if (!first) out << "; ";
      out << r << ": " << format_polynomial(ring, e);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace regjm
