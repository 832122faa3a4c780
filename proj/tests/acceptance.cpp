// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "regjm/construct.hpp"

using namespace regjm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct GridInstance {
  PureModuleSpec spec;
  int N;
  JmCertificate cert;
};

const Check* find_check(const JmCertificate& c, const std::string& name) {
  for (const auto& ch : c.checks)
    if (ch.name == name) return &ch;
  return nullptr;
}

std::int64_t binom64(int a, int b) { return binomial(a, b); }

std::vector<Polynomial> variables(const RingContext& ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring.nvars(); ++i) v.push_back(ring.var_poly(i));
  return v;
}

std::vector<GridInstance> grid;
double grid_seconds = 0;
int grid_skipped = 0;

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 2; ++n)
    for (int N = 2; N <= 3; ++N)
      for (int k = 1; k <= 3; ++k)
        for (int d = 0; d <= 2; ++d) {
          PureModuleSpec spec{n, k, d};
          if (!hypothesis_check(pure_module_summary(spec), k, N).pass()) {
            ++grid_skipped;
            continue;
          }
          grid.push_back({spec, N, verify(spec, N)});
        }
  grid_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  for (const auto& g : grid) {
    const auto& c = g.cert;
    const bool ok = c.computed_degrees == predicted_degree_sequence(c.module_degrees, g.N) &&
                    c.computed_regularity == c.module_regularity + 1;
    if (!ok) {
      o.pass = false;
      o.detail += " mismatch at n=" + std::to_string(g.spec.n) + " N=" + std::to_string(g.N) +
                  " k=" + std::to_string(g.spec.k) + " d=" + std::to_string(g.spec.d) + ";";
    }
  }
  if (grid_seconds >= 60) o.pass = false;
  std::ostringstream s;
  s << grid.size() << " instances verified, " << grid_skipped << " excluded by the hypotheses, " << grid_seconds
    << "s (limit 60s)" << o.detail;
  o.detail = s.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  int entries = 0;
  for (const auto& g : grid) {
    entries += static_cast<int>(g.cert.predicted_betti.entries().size());
    if (g.cert.computed_betti != predicted_betti_jm(g.cert.module_betti, g.spec.k, g.N)) o.pass = false;
  }
  o.detail = std::to_string(grid.size()) + " tables, " + std::to_string(entries) + " predicted entries compared";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d)
      for (int k = 1; k <= 3; ++k) {
        ModuleInput m = pure_module({n, k, d});
        std::vector<int> expect;
        for (int i = 0; i <= n; ++i) expect.push_back(k + i);
        expect.push_back(k + n + 1 + d);
        ++count;
        if (!is_pure(m.betti) || m.degrees.values != expect || m.betti.total(0) != binom64(n + d, n)) {
          o.pass = false;
          o.detail += " n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d) + ";";
        }
      }
  o.detail = std::to_string(count) + " pure modules checked" + o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  int powers = 0, hilbert = 0, strategies = 0;
  for (int q = 1; q <= 4; ++q) {
    RingContext Q(q - 1, 0);
    for (int a = 1; a <= 4; ++a) {
      std::vector<Polynomial> gens;
      for (const auto& m : monomials_of_degree(Q.nvars(), 0, q, a)) gens.push_back(Polynomial::monomial(m));
      GradedMatrix pres = GradedMatrix::row(gens);
      BettiTable b = betti_table(minimal_resolution(Q, pres));
      ++powers;
      if (ideal_table(b) != power_ideal_betti(q, a)) {
        o.pass = false;
        o.detail += " power q=" + std::to_string(q) + " a=" + std::to_string(a) + ";";
      }
      ++hilbert;
      if (!hilbert_check(Q, pres, b)) o.pass = false;
    }
  }
  for (const auto& g : grid) {
    ++hilbert;
    const Check* h = find_check(g.cert, "hilbert");
    if (!h || !h->pass) o.pass = false;
    ModuleInput m = pure_module(g.spec);
    ++hilbert;
    if (!hilbert_check(m.ring, m.presentation, m.betti)) o.pass = false;
    VerifyOptions fifo;
    fifo.strategy = PairStrategy::Fifo;
    ++strategies;
    if (verify(g.spec, g.N, fifo).computed_betti != g.cert.computed_betti) {
      o.pass = false;
      o.detail += " strategies differ;";
    }
  }
  o.detail = std::to_string(powers) + " power ideals, " + std::to_string(hilbert) + " Hilbert checks, " +
             std::to_string(strategies) + " strategy comparisons" + o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  int cis = 0;
  for (int c = 1; c <= 3; ++c)
    for (int k = 1; k <= 3; ++k) {
      RingContext R(c - 1, 0);
      // Pure powers, then forms with mixed terms that still form a regular sequence.
      std::vector<std::vector<Polynomial>> families(2);
      for (int i = 0; i < c; ++i) {
        families[0].push_back(Polynomial::monomial(R.x(i, k)));
        Polynomial f = Polynomial::monomial(R.x(i, k));
        if (k >= 1 && i + 1 < c)
          f = add(R.field(), f, Polynomial::monomial(R.x(i + 1, 1) * R.x(i, k - 1)));
        families[1].push_back(f);
      }
      for (const auto& gens : families) {
        GradedMatrix pres = GradedMatrix::row(gens);
        IntPoly ci{{0, 1}};
        for (int i = 0; i < c; ++i) {
          IntPoly next;
          for (auto [e, v] : ci) {
            next[e] += v;
            next[e + k] -= v;
          }
          std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
          ci = next;
        }
        if (hilbert_numerator(R, pres) != ci) {
          o.pass = false;
          o.detail += " not a complete intersection c=" + std::to_string(c) + " k=" + std::to_string(k) + ";";
          continue;
        }
        ++cis;
        if (regularity(ideal_table(betti_table(minimal_resolution(R, pres)))) != c * (k - 1) + 1) o.pass = false;
      }
    }
  int residue = 0;
  for (int nv = 1; nv <= 6; ++nv) {
    RingContext R(nv - 1, 0);
    BettiTable b = betti_table(minimize(R, free_resolution(R, GradedMatrix::row(variables(R)))));
    BettiTable expect;
    for (int i = 0; i <= nv; ++i) expect.add(i, i, binom64(nv, i));
    ++residue;
    if (b != expect) o.pass = false;
  }
  o.detail = std::to_string(cis) + " complete intersections, " + std::to_string(residue) + " residue fields" + o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  ScanOptions opts;
  opts.max_seconds = 30.0;
  auto rows = scan(1, 3, 2, 6, opts);
  int computed = 0;
  for (const auto& r : rows) {
    if (r.d_max != binom64(r.k + 2, 2) - 1 || r.reg_predicted != r.k + r.d_max + 1) o.pass = false;
    if (r.reg_computed) {
      ++computed;
      if (*r.reg_computed != r.reg_predicted || r.mismatch) o.pass = false;
    }
  }
  const double slope = loglog_slope(rows);
  const bool slope_ok = slope >= 1.7 && slope <= 2.3;
  if (!slope_ok) o.pass = false;
  std::ostringstream s;
  s << "reg column";
  for (const auto& r : rows) s << ' ' << r.reg_predicted;
  s << ", " << computed << "/" << rows.size() << " computed and matching, slope " << slope << " (required [1.7, 2.3])";
  o.detail = s.str();
  return o;
}

Outcome criterion7() {
  const auto start = std::chrono::steady_clock::now();
  HypothesisResult h = hypothesis_check(pure_module_summary({20, 50, 50}), 50, 5000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = h.pass() && secs < 1.0;
  std::ostringstream s;
  s << "beta_0 = " << h.beta0.str() << " <= binom(5049, 50) (" << h.bound.str().size() << " digits) in " << secs
    << "s";
  o.detail = s.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& g : grid) {
    const Check* s = find_check(g.cert, "support");
    const Check* c = find_check(g.cert, "containment");
    if (!s || !s->pass || !c || !c->pass) o.pass = false;
  }
  o.detail = std::to_string(grid.size()) + " instances: y_i^(k+1) in J_M and J_M in I";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 theorem grid", criterion1},        {"2 Betti additivity", criterion2},
      {"3 pure modules", criterion3},        {"4 oracle agreement", criterion4},
      {"5 baselines", criterion5},           {"6 growth scan", criterion6},
      {"7 full-scale hypothesis", criterion7}, {"8 support and containment", criterion8},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s criterion %s: %s [%.3fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
