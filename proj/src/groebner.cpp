#include "regjm/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace regjm {

using detail::ETerm;
using detail::FrameOrder;
using detail::Vec;

ModuleFrame ModuleFrame::pot(int rank, int nvars) {
  ModuleFrame f;
  for (int i = 0; i < rank; ++i) {
    f.base_comp.push_back(static_cast<std::uint32_t>(i));
    f.base_mon.emplace_back(nvars);
  }
  return f;
}

namespace {

Vec to_engine(const ModuleElement& v, const ModuleFrame& frame, const FrameOrder& ord) {
  Vec out;
  out.reserve(v.size());
  for (const auto& t : v.terms()) {
    if (static_cast<int>(t.comp) >= frame.rank()) throw InvalidInput("element outside the basis' module");
    out.push_back({t.mon * frame.base_mon[t.comp], t.comp, t.coef});
  }
  std::sort(out.begin(), out.end(), [&](const ETerm& a, const ETerm& b) { return ord.cmp(a, b) > 0; });
  return out;
}

ModuleElement from_engine(const Vec& v, const ModuleFrame& frame, const GradedFreeModule& module) {
  std::vector<ModTerm> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.comp, t.tot / frame.base_mon[t.comp], t.coef});
  std::sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) { return pot_cmp(a, b) > 0; });
  return ModuleElement::from_sorted(module, std::move(terms));
}

int term_degree(const ETerm& t, const ModuleFrame& frame, const GradedFreeModule& module) {
  return t.tot.degree() - frame.base_mon[t.comp].degree() + module.twist(static_cast<int>(t.comp));
}

// a[ai..] - c*m*b[bi..]
Vec sub_mul(const PrimeField& F, const FrameOrder& ord, const Vec& a, std::size_t ai, const Vec& b,
            std::size_t bi, Scalar c, const Monomial& m) {
  Vec r;
  r.reserve(a.size() - ai + b.size() - bi);
  const Scalar nc = F.neg(c);
  while (ai < a.size() || bi < b.size()) {
    if (bi == b.size()) {
      r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(ai), a.end());
      break;
    }
    ETerm bt{b[bi].tot * m, b[bi].comp, F.mul(nc, b[bi].coef)};
    int cmp = ai == a.size() ? -1 : ord.cmp(a[ai], bt);
    if (cmp > 0) {
      r.push_back(a[ai++]);
    } else if (cmp < 0) {
      ++bi;
      r.push_back(bt);
    } else {
      Scalar v = F.add(a[ai++].coef, bt.coef);
      ++bi;
      if (!v.is_zero()) r.push_back({bt.tot, bt.comp, v});
    }
  }
  return r;
}

void make_monic(const PrimeField& F, Vec& v) {
  if (v.empty() || v[0].coef == F.one()) return;
  Scalar inv = F.inv(v[0].coef);
  for (auto& t : v) t.coef = F.mul(t.coef, inv);
}

struct Quotient {
  int index;
  Monomial mult;
  Scalar coef;
};

/// Division against a growing list of monic elements owned by the caller.
class Reducer {
 public:
  Reducer(const PrimeField& F, const FrameOrder& ord, const std::vector<Vec>& elems, int rank)
      : F_(F), ord_(ord), elems_(elems), by_comp_(rank) {}

  void add(int index) { by_comp_.at(elems_[index][0].comp).push_back(index); }
  void clear() {
    for (auto& v : by_comp_) v.clear();
  }

  int find_divisor(const ETerm& t, int exclude = -1) const {
    for (int i : by_comp_[t.comp]) {
      if (i == exclude) continue;
      const Monomial& lead = elems_[i][0].tot;
      if (lead.degree() <= t.tot.degree() && lead.divides(t.tot)) return i;
    }
    return -1;
  }

  Vec full_reduce(Vec f, const Deadline& deadline, int exclude = -1) const {
    Vec done;
    std::size_t steps = 0;
    while (!f.empty()) {
      if ((++steps & 0xff) == 0) deadline.check();
      int j = find_divisor(f[0], exclude);
      if (j < 0) {
        done.push_back(f[0]);
        f.erase(f.begin());
        // Irreducible prefixes are moved out in bulk to keep this linear.
        std::size_t k = 0;
        while (k < f.size() && find_divisor(f[k], exclude) < 0) ++k;
        done.insert(done.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
        continue;
      }
      const Vec& g = elems_[j];
      f = sub_mul(F_, ord_, f, 1, g, 1, f[0].coef, f[0].tot / g[0].tot);
    }
    return done;
  }

  /// Top-reduces f; returns true if it reaches zero. Quotients are recorded.
  bool reduce_to_zero(Vec f, std::vector<Quotient>& quots, const Deadline& deadline) const {
    std::size_t steps = 0;
    while (!f.empty()) {
      if ((++steps & 0xff) == 0) deadline.check();
      int j = find_divisor(f[0]);
      if (j < 0) return false;
      const Vec& g = elems_[j];
      Monomial q = f[0].tot / g[0].tot;
      quots.push_back({j, q, f[0].coef});
      f = sub_mul(F_, ord_, f, 1, g, 1, f[0].coef, q);
    }
    return true;
  }

 private:
  const PrimeField& F_;
  const FrameOrder& ord_;
  const std::vector<Vec>& elems_;
  std::vector<std::vector<int>> by_comp_;
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int degree;
  std::uint64_t serial;
};

class Buchberger {
 public:
  Buchberger(const RingContext& ring, const GradedFreeModule& module, const ModuleFrame& frame,
             const BuchbergerOptions& opts)
      : F_(ring.field()),
        module_(module),
        frame_(frame),
        ord_(frame_),
        opts_(opts),
        reducer_(F_, ord_, elems_, module.rank()),
        ideal_case_(module.rank() == 1) {}

  GroebnerBasis run(std::span<const ModuleElement> gens) {
    struct Input {
      Vec v;
      int degree;
      int index;
    };
    std::vector<Input> inputs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      Vec v = to_engine(gens[i], frame_, ord_);
      int d = term_degree(v[0], frame_, module_);
      inputs.push_back({std::move(v), d, static_cast<int>(i)});
    }
    const bool normal = opts_.strategy == PairStrategy::NormalDegree;
    if (normal)
      std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.degree < b.degree; });

    std::size_t next_input = 0;
    std::optional<int> current_degree;
    while (!pairs_.empty() || next_input < inputs.size()) {
      opts_.deadline.check();
      // Select the next task.
      std::size_t best = pairs_.size();
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (best == pairs_.size()) {
          best = p;
          continue;
        }
        const Pair& a = pairs_[p];
        const Pair& b = pairs_[best];
        bool better = normal ? (a.degree < b.degree || (a.degree == b.degree && a.serial < b.serial))
                             : a.serial < b.serial;
        if (better) best = p;
      }
      bool take_input = next_input < inputs.size() &&
                        (!normal || best == pairs_.size() || inputs[next_input].degree <= pairs_[best].degree);
      if (!normal && next_input < inputs.size()) take_input = true;
      const int task_degree = take_input ? inputs[next_input].degree : pairs_[best].degree;
      if (normal && current_degree && task_degree > *current_degree) autoreduce_degree(*current_degree);
      current_degree = task_degree;

      if (take_input) {
        Input& in = inputs[next_input++];
        Vec h = reducer_.full_reduce(std::move(in.v), opts_.deadline);
        if (!h.empty()) insert(std::move(h), {Provenance::Kind::Input, in.index, -1});
      } else {
        Pair pr = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        const Vec& gi = elems_[pr.i];
        const Vec& gj = elems_[pr.j];
        Vec left = sub_mul(F_, ord_, Vec{}, 0, gi, 0, F_.neg(F_.one()), pr.lcm / gi[0].tot);
        Vec s = sub_mul(F_, ord_, left, 1, gj, 1, F_.one(), pr.lcm / gj[0].tot);
        Vec h = reducer_.full_reduce(std::move(s), opts_.deadline);
        if (!h.empty()) insert(std::move(h), {Provenance::Kind::SPair, pr.i, pr.j});
      }
    }
    if (normal && current_degree) autoreduce_degree(*current_degree);
    if (!normal) interreduce();
    return finish();
  }

 private:
  void insert(Vec h, Provenance prov) {
    make_monic(F_, h);
    const int t = static_cast<int>(elems_.size());
    const ETerm& L = h[0];

    // Chain criterion on pending pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (elems_[p.i][0].comp != L.comp || !L.tot.divides(p.lcm)) return false;
      return lcm(elems_[p.i][0].tot, L.tot) != p.lcm && lcm(elems_[p.j][0].tot, L.tot) != p.lcm;
    });

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (elems_[i][0].comp != L.comp) continue;
      const Monomial& li = elems_[i][0].tot;
      // The product criterion only holds for ideals.
      cands.push_back({i, lcm(li, L.tot), ideal_case_ && li.coprime(L.tot)});
    }
    for (auto& c : cands)
      for (const auto& d : cands)
        if (&c != &d && d.lcm != c.lcm && d.lcm.divides(c.lcm)) {
          c.keep = false;
          break;
        }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      if (any_coprime) cands[a].keep = false;
    }
    const int hdeg = term_degree(L, frame_, module_);
    for (const auto& c : cands) {
      if (!c.keep) continue;
      int deg = hdeg + (c.lcm.degree() - L.tot.degree());
      pairs_.push_back({c.i, t, c.lcm, deg, serial_++});
    }
    elems_.push_back(std::move(h));
    degrees_.push_back(hdeg);
    provenance_.push_back(prov);
    reducer_.add(t);
  }

  void autoreduce_degree(int degree) {
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      if (degrees_[e] != degree) continue;
      elems_[e] = reducer_.full_reduce(std::move(elems_[e]), opts_.deadline, static_cast<int>(e));
    }
  }

  // Drops elements with redundant leading terms and tail-reduces the rest.
  void interreduce() {
    std::vector<bool> alive(elems_.size(), true);
    for (std::size_t a = 0; a < elems_.size(); ++a)
      for (std::size_t b = 0; b < elems_.size(); ++b)
        if (a != b && alive[b] && elems_[a][0].comp == elems_[b][0].comp && elems_[b][0].tot.divides(elems_[a][0].tot) &&
            (elems_[b][0].tot != elems_[a][0].tot || b < a)) {
          alive[a] = false;
          break;
        }
    reducer_.clear();
    for (std::size_t e = 0; e < elems_.size(); ++e)
      if (alive[e]) reducer_.add(static_cast<int>(e));
    for (std::size_t e = 0; e < elems_.size(); ++e)
      if (alive[e]) elems_[e] = reducer_.full_reduce(std::move(elems_[e]), opts_.deadline, static_cast<int>(e));
    std::vector<Vec> kept;
    std::vector<int> degs;
    std::vector<Provenance> prov;
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      if (!alive[e]) continue;
      kept.push_back(std::move(elems_[e]));
      degs.push_back(degrees_[e]);
      prov.push_back(provenance_[e]);
    }
    elems_ = std::move(kept);
    degrees_ = std::move(degs);
    provenance_ = std::move(prov);
  }

  GroebnerBasis finish() {
    std::vector<int> perm(elems_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const ETerm& la = elems_[a][0];
      const ETerm& lb = elems_[b][0];
      if (la.comp != lb.comp) return la.comp < lb.comp;
      return lex_cmp(la.tot, lb.tot) > 0;
    });
    std::vector<Vec> out;
    std::vector<int> degs;
    std::vector<Provenance> prov;
    for (int p : perm) {
      out.push_back(std::move(elems_[p]));
      degs.push_back(degrees_[p]);
      prov.push_back(provenance_[p]);
    }
    return GroebnerBasis(module_, frame_, std::move(out), std::move(degs), std::move(prov));
  }

  const PrimeField& F_;
  const GradedFreeModule& module_;
  ModuleFrame frame_;
  FrameOrder ord_;
  BuchbergerOptions opts_;
  std::vector<Vec> elems_;
  std::vector<int> degrees_;
  std::vector<Provenance> provenance_;
  Reducer reducer_;
  std::vector<Pair> pairs_;
  std::uint64_t serial_ = 0;
  bool ideal_case_;
};

}  // namespace

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(GradedFreeModule module, ModuleFrame frame, std::vector<Vec> elems,
                             std::vector<int> degrees, std::vector<Provenance> provenance)
    : module_(std::move(module)),
      frame_(std::move(frame)),
      elems_(std::move(elems)),
      degrees_(std::move(degrees)),
      provenance_(std::move(provenance)) {
  if (frame_.rank() != module_.rank()) throw InternalError("Groebner basis frame does not match its module");
}

ModuleElement GroebnerBasis::element(int i) const { return from_engine(elems_.at(i), frame_, module_); }

std::vector<ModuleElement> GroebnerBasis::elements() const {
  std::vector<ModuleElement> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(from_engine(e, frame_, module_));
  return out;
}

ModTerm GroebnerBasis::leading_term(int i) const {
  const ETerm& t = elems_.at(i)[0];
  return {t.comp, t.tot / frame_.base_mon[t.comp], t.coef};
}

std::vector<ModTerm> GroebnerBasis::leading_terms() const {
  std::vector<ModTerm> out;
  for (int i = 0; i < size(); ++i) out.push_back(leading_term(i));
  return out;
}

GradedMatrix GroebnerBasis::as_matrix() const { return GradedMatrix(module_, GradedFreeModule(degrees_), elements()); }

std::vector<std::vector<Monomial>> leading_monomials(const GroebnerBasis& basis) {
  std::vector<std::vector<Monomial>> out(basis.module().rank());
  for (const auto& t : basis.leading_terms()) out[t.comp].push_back(t.mon);
  for (auto& v : out) std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) { return lex_cmp(a, b) > 0; });
  return out;
}

GroebnerBasis buchberger(const RingContext& ring, const GradedFreeModule& module, const ModuleFrame& frame,
                         std::span<const ModuleElement> gens, const BuchbergerOptions& options) {
  if (frame.rank() != module.rank()) throw InvalidInput("module order does not match the module");
  Buchberger b(ring, module, frame, options);
  return b.run(gens);
}

GroebnerBasis buchberger(const RingContext& ring, const GradedFreeModule& module, std::span<const ModuleElement> gens,
                         const BuchbergerOptions& options) {
  return buchberger(ring, module, ModuleFrame::pot(module.rank(), ring.nvars()), gens, options);
}

GroebnerBasis buchberger(const RingContext& ring, std::span<const Polynomial> gens, const BuchbergerOptions& options) {
  std::vector<ModuleElement> v;
  for (const auto& g : gens) v.push_back(ModuleElement::from_polynomial(g));
  return buchberger(ring, GradedFreeModule({0}), v, options);
}

ModuleElement normal_form(const RingContext& ring, const ModuleElement& v, const GroebnerBasis& basis) {
  FrameOrder ord(basis.frame());
  Reducer red(ring.field(), ord, basis.raw(), basis.module().rank());
  for (int i = 0; i < basis.size(); ++i) red.add(i);
  Vec r = red.full_reduce(to_engine(v, basis.frame(), ord), Deadline{});
  return from_engine(r, basis.frame(), basis.module());
}

Polynomial normal_form(const RingContext& ring, const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.module().rank() != 1) throw InvalidInput("polynomial normal form needs a basis of an ideal");
  return normal_form(ring, ModuleElement::from_polynomial(f), basis).entry(0);
}

GroebnerBasis schreyer_syzygies(const RingContext& ring, const GroebnerBasis& basis, const Deadline& deadline) {
  const auto& F = ring.field();
  const int s = basis.size();
  const auto& elems = basis.raw();
  // The induced order: generator i of the syzygy module is compared through
  // the leading term of basis element i.
  ModuleFrame frame;
  std::vector<int> twists;
  for (int i = 0; i < s; ++i) {
    const ETerm& L = elems[i][0];
    if (L.coef != F.one()) throw InvalidInput("schreyer_syzygies needs a monic basis");
    frame.base_comp.push_back(basis.frame().base_comp[L.comp]);
    frame.base_mon.push_back(L.tot);
    twists.push_back(basis.degree(i));
    if (i > 0 && elems[i - 1][0].comp > L.comp)
      throw InvalidInput("schreyer_syzygies needs basis elements sorted by leading component");
  }
  GradedFreeModule module(twists);
  FrameOrder lower(basis.frame());
  FrameOrder upper(frame);
  Reducer red(F, lower, elems, basis.module().rank());
  for (int i = 0; i < s; ++i) red.add(i);

  struct Syz {
    Vec v;
    int lead_index;
    Monomial lead_mult;
    int degree;
    Provenance prov;
  };
  std::vector<Syz> out;
  std::vector<Quotient> quots;
  for (int i = 0; i < s; ++i) {
    const ETerm& Li = elems[i][0];
    struct Cand {
      int j;
      Monomial mult;
    };
    std::vector<Cand> cands;
    for (int j = i + 1; j < s; ++j) {
      if (elems[j][0].comp != Li.comp) continue;
      cands.push_back({j, lcm(Li.tot, elems[j][0].tot) / Li.tot});
    }
    // Minimal generators of the ideal of multipliers.
    std::vector<Cand> minimal;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
        if (a == b) continue;
        if (cands[b].mult.divides(cands[a].mult) && (cands[b].mult != cands[a].mult || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(cands[a]);
    }
    for (const auto& c : minimal) {
      deadline.check();
      const Vec& gi = elems[i];
      const Vec& gj = elems[c.j];
      const Monomial l = c.mult * Li.tot;
      const Monomial mj = l / gj[0].tot;
      Vec left = sub_mul(F, lower, Vec{}, 0, gi, 0, F.neg(F.one()), c.mult);
      Vec spair = sub_mul(F, lower, left, 1, gj, 1, F.one(), mj);
      quots.clear();
      if (!red.reduce_to_zero(std::move(spair), quots, deadline))
        throw InternalError("S-pair did not reduce to zero: input is not a Groebner basis");
      Vec syz;
      syz.push_back({l, static_cast<std::uint32_t>(i), F.one()});
      syz.push_back({l, static_cast<std::uint32_t>(c.j), F.neg(F.one())});
      for (const auto& q : quots)
        syz.push_back({q.mult * elems[q.index][0].tot, static_cast<std::uint32_t>(q.index), F.neg(q.coef)});
      std::sort(syz.begin(), syz.end(), [&](const ETerm& a, const ETerm& b) { return upper.cmp(a, b) > 0; });
      Vec merged;
      for (const auto& t : syz) {
        if (!merged.empty() && upper.cmp(merged.back(), t) == 0) {
          merged.back().coef = F.add(merged.back().coef, t.coef);
          if (merged.back().coef.is_zero()) merged.pop_back();
        } else {
          merged.push_back(t);
        }
      }
      if (merged.empty() || merged[0].comp != static_cast<std::uint32_t>(i) || merged[0].tot != l ||
          merged[0].coef != F.one())
        throw InternalError("syzygy leading term is not the expected Schreyer leading term");
      int deg = basis.degree(i) + c.mult.degree();
      out.push_back({std::move(merged), i, c.mult, deg, {Provenance::Kind::Syzygy, i, c.j}});
    }
  }
  // Within each leading component, descending lex on the multiplier: this
  // keeps the iterated resolution within the number of variables.
  std::stable_sort(out.begin(), out.end(), [](const Syz& a, const Syz& b) {
    if (a.lead_index != b.lead_index) return a.lead_index < b.lead_index;
    return lex_cmp(a.lead_mult, b.lead_mult) > 0;
  });
  std::vector<Vec> vecs;
  std::vector<int> degs;
  std::vector<Provenance> prov;
  for (auto& z : out) {
    vecs.push_back(std::move(z.v));
    degs.push_back(z.degree);
    prov.push_back(z.prov);
  }
  return GroebnerBasis(std::move(module), std::move(frame), std::move(vecs), std::move(degs), std::move(prov));
}

}  // namespace regjm
