#include "regjm/freemod.hpp"

#include <algorithm>
#include <cassert>

namespace regjm {

namespace {

// f - c*m*g, both POT-sorted.
std::vector<ModTerm> merge_sub(const PrimeField& field, const std::vector<ModTerm>& f,
                               const std::vector<ModTerm>& g, Scalar c, const Monomial& m) {
  std::vector<ModTerm> r;
  r.reserve(f.size() + g.size());
  const Scalar nc = field.neg(c);
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(f[i++]);
      continue;
    }
    ModTerm gt{g[j].comp, g[j].mon * m, field.mul(nc, g[j].coef)};
    int cmp = i == f.size() ? -1 : pot_cmp(f[i], gt);
    if (cmp > 0) {
      r.push_back(f[i++]);
    } else if (cmp < 0) {
      ++j;
      if (!gt.coef.is_zero()) r.push_back(gt);
    } else {
      Scalar v = field.add(f[i++].coef, gt.coef);
      ++j;
      if (!v.is_zero()) r.push_back({gt.comp, gt.mon, v});
    }
  }
  return r;
}

std::optional<int> element_degree(const GradedFreeModule& module, const std::vector<ModTerm>& terms) {
  std::optional<int> deg;
  for (const auto& t : terms) {
    if (static_cast<int>(t.comp) >= module.rank())
      throw InvalidInput("module element component out of range");
    int d = t.mon.degree() + module.twist(static_cast<int>(t.comp));
    if (!deg) deg = d;
    if (*deg != d) throw HomogeneityError("module element is not homogeneous");
  }
  return deg;
}

}  // namespace

ModuleElement ModuleElement::from_terms(const PrimeField& field, const GradedFreeModule& module,
                                        std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) { return pot_cmp(a, b) > 0; });
  ModuleElement v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mon == t.mon) {
      v.terms_.back().coef = field.add(v.terms_.back().coef, t.coef);
    } else {
      if (!v.terms_.empty() && v.terms_.back().coef.is_zero()) v.terms_.pop_back();
      v.terms_.push_back(t);
    }
  }
  if (!v.terms_.empty() && v.terms_.back().coef.is_zero()) v.terms_.pop_back();
  v.degree_ = element_degree(module, v.terms_);
  return v;
}

ModuleElement ModuleElement::from_sorted(const GradedFreeModule& module, std::vector<ModTerm> terms) {
  ModuleElement v;
  v.terms_ = std::move(terms);
  v.degree_ = element_degree(module, v.terms_);
  return v;
}

ModuleElement ModuleElement::basis(const RingContext& ring, const GradedFreeModule& module, int index) {
  return from_sorted(module, {{static_cast<std::uint32_t>(index), ring.one(), Scalar{1}}});
}

ModuleElement ModuleElement::from_polynomial(const Polynomial& f) {
  ModuleElement v;
  for (const auto& t : f.terms()) v.terms_.push_back({0, t.mon, t.coef});
  v.degree_ = f.degree();
  return v;
}

ModuleElement ModuleElement::from_entries(const PrimeField& field, const GradedFreeModule& module,
                                          std::span<const Polynomial> entries) {
  if (static_cast<int>(entries.size()) != module.rank())
    throw InvalidInput("entry count does not match module rank");
  std::vector<ModTerm> terms;
  for (std::size_t c = 0; c < entries.size(); ++c)
    for (const auto& t : entries[c].terms()) terms.push_back({static_cast<std::uint32_t>(c), t.mon, t.coef});
  return from_terms(field, module, std::move(terms));
}

ModuleElement ModuleElement::rebased(const GradedFreeModule& module) const {
  return from_sorted(module, terms_);
}

Polynomial ModuleElement::entry(int comp) const {
  auto lo = std::lower_bound(terms_.begin(), terms_.end(), comp,
                             [](const ModTerm& t, int c) { return static_cast<int>(t.comp) < c; });
  std::vector<Term> out;
  for (auto it = lo; it != terms_.end() && static_cast<int>(it->comp) == comp; ++it)
    out.push_back({it->mon, it->coef});
  return Polynomial::from_sorted(std::move(out));
}

std::vector<Polynomial> ModuleElement::entries(int rank) const {
  std::vector<std::vector<Term>> buckets(rank);
  for (const auto& t : terms_) buckets.at(t.comp).push_back({t.mon, t.coef});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& b : buckets) out.push_back(Polynomial::from_sorted(std::move(b)));
  return out;
}

ModuleElement combine(const PrimeField& field, const ModuleElement& f, const ModuleElement& g,
                      const Polynomial& p) {
  if (g.is_zero() || p.is_zero()) return f;
  const int pg = *p.degree() + *g.degree();
  if (!f.is_zero() && *f.degree() != pg) throw HomogeneityError("combine: degree mismatch");
  ModuleElement r = f;
  for (const auto& t : p.terms()) r.terms_ = merge_sub(field, r.terms_, g.terms_, t.coef, t.mon);
  r.degree_ = r.terms_.empty() ? std::nullopt : std::optional<int>(pg);
  return r;
}

ModuleElement add(const PrimeField& field, const ModuleElement& f, const ModuleElement& g) {
  if (g.is_zero()) return f;
  int nv = g.terms().front().mon.nvars();
  return combine(field, f, g, Polynomial::monomial(Monomial(nv), field.neg(field.one())));
}

ModuleElement scale(const PrimeField& field, const ModuleElement& f, Scalar c, const Monomial& m) {
  ModuleElement r;
  if (c.is_zero() || f.is_zero()) return r;
  r.terms_.reserve(f.size());
  for (const auto& t : f.terms_) r.terms_.push_back({t.comp, t.mon * m, field.mul(t.coef, c)});
  r.degree_ = *f.degree_ + m.degree();
  return r;
}

ModuleElement reindex(const ModuleElement& v, std::span<const int> new_index, const GradedFreeModule& target) {
  std::vector<ModTerm> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms_) {
    int c = new_index[t.comp];
    if (c >= 0) terms.push_back({static_cast<std::uint32_t>(c), t.mon, t.coef});
  }
  std::stable_sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) { return a.comp < b.comp; });
  return ModuleElement::from_sorted(target, std::move(terms));
}

// ---------------------------------------------------------------------------

GradedMatrix::GradedMatrix(GradedFreeModule target, GradedFreeModule source, std::vector<ModuleElement> columns)
    : target_(std::move(target)), source_(std::move(source)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank())
    throw InvalidInput("matrix column count does not match source rank");
  for (int j = 0; j < source_.rank(); ++j) {
    columns_[j] = columns_[j].rebased(target_);
    if (!columns_[j].is_zero() && *columns_[j].degree() != source_.twist(j))
      throw HomogeneityError("matrix column " + std::to_string(j) + " has degree " +
                             std::to_string(*columns_[j].degree()) + " but its source twist is " +
                             std::to_string(source_.twist(j)));
  }
}

GradedMatrix GradedMatrix::identity(const RingContext& ring, const GradedFreeModule& module) {
  std::vector<ModuleElement> cols;
  for (int i = 0; i < module.rank(); ++i) cols.push_back(ModuleElement::basis(ring, module, i));
  return GradedMatrix(module, module, std::move(cols));
}

GradedMatrix GradedMatrix::zero(const GradedFreeModule& target, const GradedFreeModule& source) {
  return GradedMatrix(target, source, std::vector<ModuleElement>(source.rank()));
}

GradedMatrix GradedMatrix::from_entries(const RingContext& ring, const GradedFreeModule& target,
                                        const GradedFreeModule& source,
                                        const std::vector<std::vector<Polynomial>>& entries) {
  if (static_cast<int>(entries.size()) != target.rank()) throw InvalidInput("row count does not match target rank");
  std::vector<ModuleElement> cols;
  for (int c = 0; c < source.rank(); ++c) {
    std::vector<Polynomial> col;
    for (int r = 0; r < target.rank(); ++r) {
      if (static_cast<int>(entries[r].size()) != source.rank())
        throw InvalidInput("column count does not match source rank");
      col.push_back(entries[r][c]);
    }
    cols.push_back(ModuleElement::from_entries(ring.field(), target, col));
  }
  return GradedMatrix(target, source, std::move(cols));
}

GradedMatrix GradedMatrix::row(std::span<const Polynomial> generators) {
  std::vector<int> twists;
  std::vector<ModuleElement> cols;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    twists.push_back(*g.degree());
    cols.push_back(ModuleElement::from_polynomial(g));
  }
  return GradedMatrix(GradedFreeModule({0}), GradedFreeModule(std::move(twists)), std::move(cols));
}

bool GradedMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const ModuleElement& c) { return c.is_zero(); });
}

bool GradedMatrix::has_unit_entry() const {
  for (const auto& c : columns_)
    for (const auto& t : c.terms())
      if (t.mon.is_one()) return true;
  return false;
}

GradedMatrix GradedMatrix::transpose(const PrimeField& field) const {
  std::vector<int> new_source, new_target;
  for (int t : target_.twists()) new_source.push_back(-t);
  for (int t : source_.twists()) new_target.push_back(-t);
  GradedFreeModule src(std::move(new_source)), tgt(std::move(new_target));
  std::vector<std::vector<ModTerm>> cols(target_.rank());
  for (int c = 0; c < source_.rank(); ++c)
    for (const auto& t : columns_[c].terms())
      cols[t.comp].push_back({static_cast<std::uint32_t>(c), t.mon, t.coef});
  std::vector<ModuleElement> out;
  out.reserve(cols.size());
  for (auto& col : cols) out.push_back(ModuleElement::from_terms(field, tgt, std::move(col)));
  return GradedMatrix(std::move(tgt), std::move(src), std::move(out));
}

ModuleElement apply(const RingContext& ring, const GradedMatrix& m, const ModuleElement& v) {
  const auto& field = ring.field();
  ModuleElement r;
  for (const auto& t : v.terms()) {
    if (static_cast<int>(t.comp) >= m.cols()) throw InvalidInput("apply: element outside the source module");
    r = combine(field, r, m.column(static_cast<int>(t.comp)), Polynomial::monomial(t.mon, field.neg(t.coef)));
  }
  if (!v.is_zero() && !r.is_zero()) {
    r = r.rebased(m.target());
    int expected = 0;
    const auto& t0 = v.terms().front();
    expected = t0.mon.degree() + m.source().twist(static_cast<int>(t0.comp));
    if (*r.degree() != expected) throw HomogeneityError("apply: degree not preserved");
  }
  return r;
}

GradedMatrix compose(const RingContext& ring, const GradedMatrix& a, const GradedMatrix& b) {
  if (b.target() != a.source()) throw InvalidInput("compose: modules do not match");
  std::vector<ModuleElement> cols;
  cols.reserve(b.cols());
  for (const auto& c : b.columns()) cols.push_back(apply(ring, a, c));
  return GradedMatrix(a.target(), b.source(), std::move(cols));
}

// ---------------------------------------------------------------------------

Complex::Complex(GradedFreeModule f0) { modules_.push_back(std::move(f0)); }

Complex::Complex(std::vector<GradedMatrix> maps) {
  if (maps.empty()) throw InvalidInput("complex needs at least one map or an explicit F_0");
  GradedFreeModule f0 = maps.front().target();
  *this = Complex(std::move(f0), std::move(maps));
}

Complex::Complex(GradedFreeModule f0, std::vector<GradedMatrix> maps) : maps_(std::move(maps)) {
  modules_.push_back(std::move(f0));
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].target() != modules_.back())
      throw InvalidInput("complex maps are not composable at position " + std::to_string(i + 1));
    modules_.push_back(maps_[i].source());
  }
}

std::vector<int> Complex::ranks() const {
  std::vector<int> r;
  for (const auto& m : modules_) r.push_back(m.rank());
  return r;
}

ChainCheck check_chain(const RingContext& ring, std::span<const GradedMatrix> maps) {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i].source() != maps[i + 1].target())
      return {ChainCheck::Status::NotComposable, static_cast<int>(i + 1)};
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!compose(ring, maps[i], maps[i + 1]).is_zero())
      return {ChainCheck::Status::NonzeroComposite, static_cast<int>(i + 1)};
  return {};
}

ChainCheck compose_is_zero(const RingContext& ring, const Complex& c) { return check_chain(ring, c.maps()); }

Complex dualize(const PrimeField& field, const Complex& c) {
  const int L = c.length();
  std::vector<int> f0;
  for (int t : c.module(L).twists()) f0.push_back(-t);
  std::vector<GradedMatrix> maps;
  for (int i = 1; i <= L; ++i) maps.push_back(c.map(L - i + 1).transpose(field));
  return Complex(GradedFreeModule(std::move(f0)), std::move(maps));
}

Complex twist_complex(const Complex& c, int s) {
  auto shift = [s](const GradedFreeModule& m) {
    std::vector<int> t = m.twists();
    for (int& x : t) x += s;
    return GradedFreeModule(std::move(t));
  };
  std::vector<GradedMatrix> maps;
  for (const auto& d : c.maps()) maps.emplace_back(shift(d.target()), shift(d.source()), d.columns());
  return Complex(shift(c.module(0)), std::move(maps));
}

}  // namespace regjm
