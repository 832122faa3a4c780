#include "regjm/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace regjm {

// ---------------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------------

void BettiTable::add(int i, int j, std::int64_t count) {
  if (count == 0) return;
  auto& v = entries_[{i, j}];
  v += count;
  if (v == 0) entries_.erase({i, j});
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int r = -1;
  for (const auto& [ij, v] : entries_) r = std::max(r, ij.first);
  return r;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [ij, v] : entries_)
    if (ij.first == i) s += v;
  return s;
}

bool DegreeSequence::strictly_increasing() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1]) return false;
  return true;
}

std::string DegreeSequence::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ')';
  return out.str();
}

int regularity(const BettiTable& b) {
  if (b.empty()) throw InvalidInput("regularity of an empty Betti table");
  int r = b.entries().begin()->first.second - b.entries().begin()->first.first;
  for (const auto& [ij, v] : b.entries()) r = std::max(r, ij.second - ij.first);
  return r;
}

namespace {

DegreeSequence degree_sequence(const BettiTable& b, bool maximal) {
  if (b.empty()) throw InvalidInput("degree sequence of an empty Betti table");
  const int pd = b.pd();
  std::vector<std::optional<int>> best(pd + 1);
  for (const auto& [ij, v] : b.entries()) {
    auto& slot = best[ij.first];
    if (!slot || (maximal ? ij.second > *slot : ij.second < *slot)) slot = ij.second;
  }
  DegreeSequence s;
  for (int i = 0; i <= pd; ++i) {
    if (!best[i]) throw InvalidInput("Betti table has an empty column " + std::to_string(i));
    s.values.push_back(*best[i]);
  }
  return s;
}

}  // namespace

DegreeSequence max_degree_sequence(const BettiTable& b) { return degree_sequence(b, true); }
DegreeSequence min_degree_sequence(const BettiTable& b) { return degree_sequence(b, false); }

bool is_pure(const BettiTable& b) { return !b.empty() && max_degree_sequence(b) == min_degree_sequence(b); }

BettiTable betti_table(const Complex& c) {
  for (int i = 1; i <= c.length(); ++i)
    if (c.map(i).has_unit_entry())
      throw InvalidInput("betti_table: differential d_" + std::to_string(i) +
                         " has a unit entry; minimize the complex first");
  BettiTable b;
  for (int i = 0; i <= c.length(); ++i)
    for (int t : c.module(i).twists()) b.add(i, t, 1);
  return b;
}

BettiTable ideal_table(const BettiTable& quotient) {
  BettiTable b;
  for (const auto& [ij, v] : quotient.entries())
    if (ij.first > 0) b.add(ij.first - 1, ij.second, v);
  return b;
}

BettiTable dual_table(const BettiTable& b, int length) {
  BettiTable d;
  for (const auto& [ij, v] : b.entries()) d.add(length - ij.first, -ij.second, v);
  return d;
}

// ---------------------------------------------------------------------------
// Resolutions
// ---------------------------------------------------------------------------

Complex free_resolution(const RingContext& ring, const GradedMatrix& presentation, const ResolutionOptions& options) {
  const int limit = options.max_length.value_or(ring.nvars());
  if (limit < 0) throw InvalidInput("max_length must be non-negative");
  BuchbergerOptions bopts{options.strategy, options.deadline};
  const GradedFreeModule& f0 = presentation.target();
  std::vector<GradedMatrix> maps;
  if (limit == 0) return Complex(f0);
  GroebnerBasis gb = buchberger(ring, f0, presentation.columns(), bopts);
  if (gb.empty()) return Complex(f0);
  maps.push_back(gb.as_matrix());
  while (true) {
    GroebnerBasis syz = schreyer_syzygies(ring, gb, options.deadline);
    if (syz.empty()) break;
    if (static_cast<int>(maps.size()) >= limit) {
      if (!options.max_length)
        throw InternalError("resolution did not terminate within the number of variables");
      break;
    }
    maps.push_back(syz.as_matrix());
    gb = std::move(syz);
  }
  return Complex(f0, std::move(maps));
}

namespace {

// Mutable column store for one differential during minimization.
struct WorkMap {
  std::vector<ModuleElement> cols;
};

int first_constant_row(const ModuleElement& col, const std::vector<char>& row_alive) {
  for (const auto& t : col.terms())
    if (t.mon.is_one() && row_alive[t.comp]) return static_cast<int>(t.comp);
  return -1;
}

ModuleElement drop_dead_rows(const ModuleElement& col, const std::vector<char>& row_alive,
                             const GradedFreeModule& target) {
  bool any = false;
  for (const auto& t : col.terms())
    if (!row_alive[t.comp]) any = true;
  if (!any) return col;
  std::vector<ModTerm> terms;
  for (const auto& t : col.terms())
    if (row_alive[t.comp]) terms.push_back(t);
  return ModuleElement::from_sorted(target, std::move(terms));
}

}  // namespace

Complex minimize(const RingContext& ring, const Complex& c) {
  const auto& F = ring.field();
  const int L = c.length();
  std::vector<std::vector<char>> alive(L + 1);
  for (int i = 0; i <= L; ++i) alive[i].assign(c.module(i).rank(), 1);
  std::vector<WorkMap> work(L + 1);
  for (int i = 1; i <= L; ++i) work[i].cols = c.map(i).columns();

  for (int i = 1; i <= L; ++i) {
    const GradedFreeModule& target = c.module(i - 1);
    auto& cols = work[i].cols;
    for (auto& col : cols) col = drop_dead_rows(col, alive[i - 1], target);
    std::size_t cursor = 0;
    while (true) {
      int pc = -1, pr = -1;
      for (std::size_t j = cursor; j < cols.size(); ++j) {
        if (!alive[i][j]) continue;
        int r = first_constant_row(cols[j], alive[i - 1]);
        if (r >= 0) {
          pc = static_cast<int>(j);
          pr = r;
          break;
        }
      }
      if (pc < 0) break;
      const ModuleElement pivot_col = cols[pc];
      const Scalar u_inv = F.inv(pivot_col.entry(pr).lead().coef);
      std::size_t next_cursor = static_cast<std::size_t>(pc);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(j) == pc || !alive[i][j]) continue;
        Polynomial p = cols[j].entry(pr);
        if (p.is_zero()) continue;
        Polynomial factor = scale(F, p, u_inv, ring.one());
        cols[j] = combine(F, cols[j], pivot_col, factor);
        if (p.is_constant() && j < next_cursor) next_cursor = j;
      }
      alive[i][pc] = 0;
      alive[i - 1][pr] = 0;
      cols[pc] = ModuleElement();
      cursor = next_cursor;
    }
  }

  // Compact the surviving generators.
  std::vector<std::vector<int>> index(L + 1);
  std::vector<GradedFreeModule> modules;
  for (int i = 0; i <= L; ++i) {
    std::vector<int> twists;
    index[i].assign(alive[i].size(), -1);
    for (std::size_t g = 0; g < alive[i].size(); ++g)
      if (alive[i][g]) {
        index[i][g] = static_cast<int>(twists.size());
        twists.push_back(c.module(i).twist(static_cast<int>(g)));
      }
    modules.emplace_back(std::move(twists));
  }
  std::vector<GradedMatrix> maps;
  for (int i = 1; i <= L; ++i) {
    std::vector<ModuleElement> cols;
    for (std::size_t g = 0; g < alive[i].size(); ++g)
      if (alive[i][g]) cols.push_back(reindex(work[i].cols[g], index[i - 1], modules[i - 1]));
    maps.emplace_back(modules[i - 1], modules[i], std::move(cols));
  }
  return Complex(modules[0], std::move(maps));
}

Complex minimal_resolution(const RingContext& ring, const GradedMatrix& presentation,
                           const ResolutionOptions& options) {
  return minimize(ring, free_resolution(ring, presentation, options));
}

// ---------------------------------------------------------------------------
// Koszul complexes and tensor products
// ---------------------------------------------------------------------------

Complex koszul_complex(const RingContext& ring, std::span<const Polynomial> elems) {
  const auto& F = ring.field();
  const int q = static_cast<int>(elems.size());
  if (q > 20) throw InvalidInput("Koszul complex on more than 20 elements");
  for (const auto& f : elems)
    if (f.is_zero()) throw InvalidInput("Koszul complex on a zero element");
  // Subsets of each size, as bitmasks in lex order of their sorted elements.
  std::vector<std::vector<std::uint32_t>> subsets(q + 1);
  {
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int size) -> void {
      if (static_cast<int>(idx.size()) == size) {
        std::uint32_t mask = 0;
        for (int v : idx) mask |= 1u << v;
        subsets[size].push_back(mask);
        return;
      }
      for (int v = start; v < q; ++v) {
        idx.push_back(v);
        self(self, v + 1, size);
        idx.pop_back();
      }
    };
    for (int s = 0; s <= q; ++s) rec(rec, 0, s);
  }
  auto twist_of = [&](std::uint32_t mask) {
    int t = 0;
    for (int v = 0; v < q; ++v)
      if (mask >> v & 1u) t += *elems[v].degree();
    return t;
  };
  std::vector<GradedFreeModule> modules;
  std::vector<std::map<std::uint32_t, int>> position(q + 1);
  for (int s = 0; s <= q; ++s) {
    std::vector<int> tw;
    for (std::size_t k = 0; k < subsets[s].size(); ++k) {
      position[s][subsets[s][k]] = static_cast<int>(k);
      tw.push_back(twist_of(subsets[s][k]));
    }
    modules.emplace_back(std::move(tw));
  }
  std::vector<GradedMatrix> maps;
  for (int s = 1; s <= q; ++s) {
    std::vector<ModuleElement> cols;
    for (std::uint32_t mask : subsets[s]) {
      std::vector<ModTerm> terms;
      int t = 0;
      for (int v = 0; v < q; ++v) {
        if (!(mask >> v & 1u)) continue;
        Scalar sign = t % 2 == 0 ? F.one() : F.neg(F.one());
        auto row = static_cast<std::uint32_t>(position[s - 1].at(mask & ~(1u << v)));
        for (const auto& term : elems[v].terms()) terms.push_back({row, term.mon, F.mul(sign, term.coef)});
        ++t;
      }
      cols.push_back(ModuleElement::from_terms(F, modules[s - 1], std::move(terms)));
    }
    maps.emplace_back(modules[s - 1], modules[s], std::move(cols));
  }
  return Complex(modules[0], std::move(maps));
}

Complex tensor_complexes(const RingContext& ring, const Complex& a, const Complex& b) {
  const auto& F = ring.field();
  const int La = a.length(), Lb = b.length();
  const int L = La + Lb;
  // offset[i][p]: start of block (p, i-p) inside total position i.
  std::vector<std::vector<int>> offset(L + 1, std::vector<int>(La + 1, -1));
  std::vector<GradedFreeModule> modules;
  for (int i = 0; i <= L; ++i) {
    std::vector<int> tw;
    for (int p = 0; p <= La; ++p) {
      int qd = i - p;
      if (qd < 0 || qd > Lb) continue;
      offset[i][p] = static_cast<int>(tw.size());
      for (int u : a.module(p).twists())
        for (int v : b.module(qd).twists()) tw.push_back(u + v);
    }
    modules.emplace_back(std::move(tw));
  }
  std::vector<GradedMatrix> maps;
  for (int i = 1; i <= L; ++i) {
    std::vector<ModuleElement> cols;
    for (int p = 0; p <= La; ++p) {
      int qd = i - p;
      if (qd < 0 || qd > Lb) continue;
      const int ra = a.module(p).rank(), rb = b.module(qd).rank();
      const Scalar sign = p % 2 == 0 ? F.one() : F.neg(F.one());
      for (int u = 0; u < ra; ++u)
        for (int v = 0; v < rb; ++v) {
          std::vector<ModTerm> terms;
          if (p > 0) {
            const int rb_same = b.module(qd).rank();
            for (const auto& t : a.map(p).column(u).terms()) {
              int row = offset[i - 1][p - 1] + static_cast<int>(t.comp) * rb_same + v;
              terms.push_back({static_cast<std::uint32_t>(row), t.mon, t.coef});
            }
          }
          if (qd > 0) {
            const int rb_lower = b.module(qd - 1).rank();
            for (const auto& t : b.map(qd).column(v).terms()) {
              int row = offset[i - 1][p] + u * rb_lower + static_cast<int>(t.comp);
              terms.push_back({static_cast<std::uint32_t>(row), t.mon, F.mul(sign, t.coef)});
            }
          }
          cols.push_back(ModuleElement::from_terms(F, modules[i - 1], std::move(terms)));
        }
    }
    maps.emplace_back(modules[i - 1], modules[i], std::move(cols));
  }
  return Complex(modules[0], std::move(maps));
}

BettiTable power_ideal_betti(int q, int a) {
  if (q < 1 || a < 1) throw InvalidInput("power_ideal_betti needs q >= 1 and a >= 1");
  BettiTable b;
  for (int i = 0; i < q; ++i) {
    std::int64_t beta = 0;
    for (int m = i + 1; m <= q; ++m) beta += binomial(a + m - 2, a - 1) * binomial(m - 1, i);
    b.add(i, a + i, beta);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Hilbert series
// ---------------------------------------------------------------------------

namespace {

void poly_add(IntPoly& into, const IntPoly& p, std::int64_t scale = 1, int shift = 0) {
  for (const auto& [e, c] : p) {
    auto& v = into[e + shift];
    v += scale * c;
    if (v == 0) into.erase(e + shift);
  }
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& v = r[ea + eb];
      v += ca * cb;
      if (v == 0) r.erase(ea + eb);
    }
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return lex_cmp(x, y) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  if (gens.front().is_one()) return {};
  // Pairwise coprime generators: a complete intersection of monomials.
  std::array<int, kMaxVars> uses{};
  for (const auto& g : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (g[v] > 0) ++uses[v];
  int pivot_var = -1;
  for (int v = 0; v < kMaxVars; ++v)
    if (uses[v] > 1 && (pivot_var < 0 || uses[v] > uses[pivot_var])) pivot_var = v;
  if (pivot_var < 0) {
    IntPoly r{{0, 1}};
    for (const auto& g : gens) r = poly_mul(r, IntPoly{{0, 1}, {g.degree(), -1}});
    return r;
  }
  // Split on x^e with e the smallest positive exponent of the pivot variable:
  //   N(L) = N(L + x^e) + t^e N(L : x^e).
  int e = 255;
  for (const auto& g : gens)
    if (g[pivot_var] > 0) e = std::min(e, g[pivot_var]);
  const Monomial p = Monomial::variable(gens.front().nvars(), pivot_var, e);
  std::vector<Monomial> sum = gens;
  sum.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / gcd(g, p));
  IntPoly r = numerator_rec(std::move(sum));
  poly_add(r, numerator_rec(std::move(colon)), 1, e);
  return r;
}

}  // namespace

IntPoly monomial_ideal_numerator(std::vector<Monomial> gens) { return numerator_rec(std::move(gens)); }

IntPoly hilbert_numerator(const RingContext& ring, const GradedMatrix& presentation) {
  const GradedFreeModule& f0 = presentation.target();
  GroebnerBasis gb = buchberger(ring, f0, presentation.columns());
  auto leads = leading_monomials(gb);
  IntPoly total;
  for (int c = 0; c < f0.rank(); ++c) poly_add(total, monomial_ideal_numerator(leads[c]), 1, f0.twist(c));
  return total;
}

IntPoly betti_numerator(const BettiTable& b) {
  IntPoly r;
  for (const auto& [ij, v] : b.entries()) {
    auto& x = r[ij.second];
    x += (ij.first % 2 == 0 ? 1 : -1) * v;
    if (x == 0) r.erase(ij.second);
  }
  return r;
}

bool hilbert_check(const RingContext& ring, const GradedMatrix& presentation, const BettiTable& b) {
  return hilbert_numerator(ring, presentation) == betti_numerator(b);
}

}  // namespace regjm
