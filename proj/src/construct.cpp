#include "regjm/construct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "regjm/textio.hpp"

namespace regjm {

void PureModuleSpec::validate() const {
  if (n < 1) throw InvalidInput("pure module needs n >= 1, got n = " + std::to_string(n));
  if (k < 1) throw InvalidInput("pure module needs k >= 1, got k = " + std::to_string(k));
  if (d < 0) throw InvalidInput("pure module needs d >= 0, got d = " + std::to_string(d));
  if (n + 1 > kMaxVars) throw InvalidInput("n = " + std::to_string(n) + " exceeds the variable limit");
  if (k + n + 1 + d > 250) throw InvalidInput("pure module degrees exceed the exponent range");
}

int ModuleInput::min_generator_degree() const {
  const auto& tw = presentation.target().twists();
  if (tw.empty()) throw InvalidInput("module has no generators");
  return *std::min_element(tw.begin(), tw.end());
}

ModuleInput module_from_presentation(const RingContext& ring, const GradedMatrix& presentation,
                                     const ResolutionOptions& options) {
  if (ring.N() != 0) throw InvalidInput("module presentations live over R (no y variables)");
  if (presentation.rows() == 0) throw InvalidInput("module presentation has no generators");
  Complex res = minimal_resolution(ring, presentation, options);
  if (res.module(0).rank() == 0) throw InvalidInput("module presentation has zero cokernel");
  const int beta1 = res.length() >= 1 ? res.module(1).rank() : 0;
  // A presentation with beta_0 rows and beta_1 columns is already minimal; keep it verbatim.
  GradedMatrix pres = presentation.rows() == res.module(0).rank() && presentation.cols() == beta1
                          ? presentation
                      : res.length() >= 1 ? res.map(1)
                                          : GradedMatrix::zero(res.module(0), GradedFreeModule());
  BettiTable b = betti_table(res);
  DegreeSequence t = max_degree_sequence(b);
  return ModuleInput{ring, std::move(pres), std::move(res), std::move(b), std::move(t)};
}

ModuleInput pure_module(const PureModuleSpec& spec, std::uint32_t prime, const Deadline& deadline) {
  spec.validate();
  RingContext ring(spec.n, 0, prime);
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ring.nvars(), 0, ring.nvars(), spec.d + 1))
    gens.push_back(Polynomial::monomial(m));
  ResolutionOptions opts;
  opts.deadline = deadline;
  Complex quotient = minimal_resolution(ring, GradedMatrix::row(gens), opts);
  Complex dual = twist_complex(dualize(ring.field(), quotient), spec.k + spec.d + 1 + spec.n);
  ModuleInput m = module_from_presentation(ring, dual.map(1), opts);

  std::vector<int> expected;
  for (int i = 0; i <= spec.n; ++i) expected.push_back(spec.k + i);
  expected.push_back(spec.k + spec.n + 1 + spec.d);
  const auto beta0 = binomial(spec.n + spec.d, spec.n);
  if (!is_pure(m.betti) || m.degrees.values != expected || m.betti.total(0) != beta0 ||
      m.betti.pd() != spec.n + 1 || m.betti != betti_table(dual))
    throw InternalError("pure module builder produced " + m.degrees.str() + " with beta_0 = " +
                        std::to_string(m.betti.total(0)));
  return m;
}

ModuleSummary summarize(const ModuleInput& m) {
  return ModuleSummary{m.n(), m.degrees, BigInteger(static_cast<unsigned long>(m.betti.total(0))),
                       m.min_generator_degree()};
}

ModuleSummary pure_module_summary(const PureModuleSpec& spec) {
  if (spec.n < 1 || spec.k < 1 || spec.d < 0)
    throw InvalidInput("pure module summary needs n >= 1, k >= 1, d >= 0");
  ModuleSummary s;
  s.n = spec.n;
  for (int i = 0; i <= spec.n; ++i) s.degrees.values.push_back(spec.k + i);
  s.degrees.values.push_back(spec.k + spec.n + 1 + spec.d);
  s.beta0 = big_binomial(BigInteger(static_cast<unsigned long>(spec.n + spec.d)),
                         BigInteger(static_cast<unsigned long>(spec.n)));
  s.min_generator_degree = spec.k;
  return s;
}

HypothesisResult hypothesis_check(const ModuleSummary& m, int k, int N) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (N < 1) throw InvalidInput("N must be at least 1");
  if (m.degrees.values.empty()) throw InvalidInput("empty degree sequence");
  HypothesisResult h;
  const auto& t = m.degrees.values;
  if (t[0] < 1 || m.min_generator_degree != k)
    h.failed.push_back("(a) positive generation in degree k: t_0 = " + std::to_string(t[0]) +
                       ", minimal generator degree " + std::to_string(m.min_generator_degree) +
                       ", k = " + std::to_string(k));
  if (!m.degrees.strictly_increasing())
    h.failed.push_back("(b) degree sequence " + m.degrees.str() + " is not strictly increasing");
  const int r = m.degrees.size() - 1;
  if (r > m.n + 1)
    h.failed.push_back("(c) projective dimension r = " + std::to_string(r) + " exceeds n+1 = " +
                       std::to_string(m.n + 1));
  h.beta0 = m.beta0;
  h.bound = big_binomial(BigInteger(static_cast<unsigned long>(k + N - 1)), BigInteger(static_cast<unsigned long>(k)));
  if (h.beta0 > h.bound)
    h.failed.push_back("(d) number of generators " + h.beta0.str() + " exceeds binom(k+N-1, k) = " + h.bound.str());
  return h;
}

HypothesisResult hypothesis_check(const ModuleInput& m, int k, int N) {
  return hypothesis_check(summarize(m), k, N);
}

RingContext ambient_ring(const ModuleInput& m, int N) {
  if (N < 1) throw InvalidInput("N must be at least 1");
  return RingContext(m.n(), N, m.ring.prime());
}

std::vector<Monomial> conormal_basis(const RingContext& ring, int k) {
  if (k < 1 || ring.N() < 1) throw InvalidInput("conormal basis needs k >= 1 and N >= 1");
  return monomials_of_degree(ring.nvars(), ring.x_count(), ring.N(), k);
}

EmbeddingAssignment embed(const ModuleInput& m, const RingContext& ring, int k) {
  const auto& tw = m.presentation.target().twists();
  std::vector<Monomial> basis = conormal_basis(ring, k);
  if (tw.size() > basis.size())
    throw HypothesisFailure({"(d) " + std::to_string(tw.size()) + " generators do not fit into " +
                             std::to_string(basis.size()) + " conormal coordinates"});
  EmbeddingAssignment e;
  e.order.resize(tw.size());
  std::iota(e.order.begin(), e.order.end(), 0);
  std::stable_sort(e.order.begin(), e.order.end(), [&](int a, int b) { return tw[a] < tw[b]; });
  e.target.resize(tw.size());
  e.x_power.resize(tw.size());
  for (std::size_t slot = 0; slot < e.order.size(); ++slot) {
    const int g = e.order[slot];
    if (tw[g] < k)
      throw HypothesisFailure({"(a) generator " + std::to_string(g) + " has degree " + std::to_string(tw[g]) +
                               " < k = " + std::to_string(k)});
    e.target[g] = basis[slot];
    e.x_power[g] = tw[g] - k;
  }
  return e;
}

Polynomial extended_to(const Polynomial& f, const RingContext& ring) { return extended(f, ring.nvars()); }

GradedMatrix extended_to(const GradedMatrix& m, const RingContext& ring) {
  std::vector<ModuleElement> cols;
  cols.reserve(m.cols());
  for (const auto& c : m.columns()) {
    std::vector<ModTerm> terms;
    terms.reserve(c.size());
    for (const auto& t : c.terms()) terms.push_back({t.comp, t.mon.extended(ring.nvars()), t.coef});
    cols.push_back(ModuleElement::from_sorted(m.target(), std::move(terms)));
  }
  return GradedMatrix(m.target(), m.source(), std::move(cols));
}

std::vector<Polynomial> build_jm(const ModuleInput& m, const RingContext& ring, int k,
                                 const EmbeddingAssignment& embedding) {
  const auto& F = ring.field();
  std::vector<Polynomial> gens;
  for (const auto& mon : monomials_of_degree(ring.nvars(), ring.x_count(), ring.N(), k + 1))
    gens.push_back(Polynomial::monomial(mon));
  for (const auto& col : m.presentation.columns()) {
    Polynomial lifted;
    for (int comp = 0; comp < m.presentation.rows(); ++comp) {
      Polynomial s = col.entry(comp);
      if (s.is_zero()) continue;
      Monomial mult = ring.x(0, embedding.x_power[comp]) * embedding.target[comp];
      lifted = add(F, lifted, scale(F, extended_to(s, ring), F.one(), mult));
    }
    if (!lifted.is_zero()) gens.push_back(std::move(lifted));
  }
  return gens;
}

std::vector<Polynomial> build_jm(const ModuleInput& m, const RingContext& ring, int k) {
  return build_jm(m, ring, k, embed(m, ring, k));
}

DegreeSequence predicted_degree_sequence(const DegreeSequence& t, int N) {
  if (t.values.empty() || !t.strictly_increasing())
    throw InvalidInput("predicted degree sequence needs a strictly increasing input, got " + t.str());
  DegreeSequence out;
  out.values.assign(t.values.begin() + 1, t.values.end());
  for (int i = 1; i <= N; ++i) out.values.push_back(t.values.back() + i);
  return out;
}

BettiTable predicted_betti_e(const BettiTable& betti_m, int N) {
  BettiTable b;
  for (const auto& [ij, v] : betti_m.entries()) {
    if (ij.first < 1) continue;
    for (int q = 0; q <= N; ++q) b.add(ij.first - 1 + q, ij.second + q, binomial(N, q) * v);
  }
  return b;
}

BettiTable predicted_betti_jm(const BettiTable& betti_m, int k, int N) {
  BettiTable b = power_ideal_betti(N, k + 1);
  for (const auto& [ij, v] : predicted_betti_e(betti_m, N).entries()) b.add(ij.first, ij.second, v);
  return b;
}

BettiTable e_betti_direct(const ModuleInput& m, const RingContext& ring, const ResolutionOptions& options) {
  if (m.presentation.cols() == 0) return {};
  const GradedFreeModule& f1 = m.presentation.source();
  std::vector<ModuleElement> cols;
  if (m.resolution.length() >= 2) {
    const GradedMatrix d2 = extended_to(m.resolution.map(2), ring);
    cols = d2.columns();
  }
  std::vector<int> twists = m.resolution.length() >= 2 ? m.resolution.map(2).source().twists() : std::vector<int>{};
  for (int j = 1; j <= ring.N(); ++j)
    for (int g = 0; g < f1.rank(); ++g) {
      cols.push_back(ModuleElement::from_sorted(
          f1, {ModTerm{static_cast<std::uint32_t>(g), ring.y(j), ring.field().one()}}));
      twists.push_back(f1.twist(g) + 1);
    }
  GradedMatrix pres(f1, GradedFreeModule(std::move(twists)), std::move(cols));
  return betti_table(minimal_resolution(ring, pres, options));
}

Complex e_resolution_tensor(const ModuleInput& m, const RingContext& ring) {
  if (m.presentation.cols() == 0) return Complex(GradedFreeModule());
  std::vector<GradedMatrix> maps;
  for (int i = 2; i <= m.resolution.length(); ++i) maps.push_back(extended_to(m.resolution.map(i), ring));
  Complex g(m.resolution.module(1), std::move(maps));
  std::vector<Polynomial> ys;
  for (int j = 1; j <= ring.N(); ++j) ys.push_back(Polynomial::monomial(ring.y(j)));
  return tensor_complexes(ring, g, koszul_complex(ring, ys));
}

bool JmCertificate::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string module_label(const ModuleInput& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : format_matrix(m.ring, m.presentation)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string table_diff(const BettiTable& predicted, const BettiTable& computed) {
  std::set<std::pair<int, int>> keys;
  for (const auto& [ij, v] : predicted.entries()) keys.insert(ij);
  for (const auto& [ij, v] : computed.entries()) keys.insert(ij);
  std::ostringstream out;
  for (const auto& ij : keys) {
    auto p = predicted.at(ij.first, ij.second), c = computed.at(ij.first, ij.second);
    if (p != c)
      out << (out.tellp() > 0 ? "; " : "") << "beta_{" << ij.first << "," << ij.second << "} predicted " << p
          << " computed " << c;
  }
  return out.str();
}

const char* strategy_name(PairStrategy s) { return s == PairStrategy::Fifo ? "fifo" : "normal"; }

}  // namespace

JmCertificate verify(const ModuleInput& m, int N, int k, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  HypothesisResult hyp = hypothesis_check(m, k, N);
  if (!hyp.pass()) throw HypothesisFailure(hyp.failed);

  const RingContext ring = ambient_ring(m, N);
  JmCertificate cert;
  cert.n = m.n();
  cert.N = N;
  cert.k = k;
  cert.module_label = module_label(m);
  cert.prime = ring.prime();
  cert.strategy = strategy_name(options.strategy);
  cert.module_betti = m.betti;
  cert.module_degrees = m.degrees;
  cert.module_regularity = regularity(m.betti);

  const EmbeddingAssignment emb = embed(m, ring, k);
  for (int g = 0; g < static_cast<int>(emb.target.size()); ++g)
    cert.embedding.push_back("e" + std::to_string(g) + " -> " +
                             format_monomial(ring, ring.x(0, emb.x_power[g]) * emb.target[g]));
  const std::vector<Polynomial> gens = options.generators ? *options.generators : build_jm(m, ring, k, emb);
  cert.generator_count = static_cast<int>(gens.size());

  const DegreeSequence theorem_seq = predicted_degree_sequence(m.degrees, N);
  cert.predicted_degrees = options.expect_seq ? *options.expect_seq : theorem_seq;
  cert.predicted_regularity = cert.module_regularity + 1;
  cert.predicted_betti = predicted_betti_jm(m.betti, k, N);

  ResolutionOptions ropts;
  ropts.strategy = options.strategy;
  ropts.deadline = options.deadline;
  const GradedMatrix pres = GradedMatrix::row(gens);
  const Complex raw = free_resolution(ring, pres, ropts);
  const Complex res = minimize(ring, raw);
  const BettiTable quotient = betti_table(res);
  cert.computed_betti = ideal_table(quotient);
  cert.computed_degrees = max_degree_sequence(cert.computed_betti);
  cert.computed_regularity = regularity(cert.computed_betti);
  cert.minimal_generator_count = static_cast<int>(cert.computed_betti.total(0));

  auto add = [&](std::string name, bool pass, std::string detail) {
    cert.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("degree_sequence", cert.computed_degrees == cert.predicted_degrees,
      "predicted " + cert.predicted_degrees.str() + ", computed " + cert.computed_degrees.str());
  add("regularity", cert.computed_regularity == cert.predicted_regularity,
      "reg M + 1 = " + std::to_string(cert.predicted_regularity) + ", computed " +
          std::to_string(cert.computed_regularity));
  {
    std::string diff = table_diff(cert.predicted_betti, cert.computed_betti);
    add("betti_table", diff.empty(), diff.empty() ? "all entries agree" : diff);
  }
  add("prediction_consistency",
      max_degree_sequence(cert.predicted_betti) == theorem_seq &&
          regularity(cert.predicted_betti) == cert.predicted_regularity,
      "predicted table has sequence " + max_degree_sequence(cert.predicted_betti).str() + " and regularity " +
          std::to_string(regularity(cert.predicted_betti)));
  {
    auto cz = compose_is_zero(ring, raw);
    auto czm = compose_is_zero(ring, res);
    add("complex", cz.ok() && czm.ok(),
        cz.ok() && czm.ok() ? "d_i d_{i+1} = 0 before and after minimization"
                            : "composite fails at position " + std::to_string(cz.ok() ? czm.position : cz.position));
  }
  add("hilbert", hilbert_check(ring, pres, quotient), "Hilbert numerator against alternating Betti sum");
  {
    BuchbergerOptions bopts{options.strategy, options.deadline};
    const GroebnerBasis gb = buchberger(ring, gens, bopts);
    std::string bad;
    for (int i = 1; i <= N; ++i)
      if (!normal_form(ring, Polynomial::monomial(ring.y(i, k + 1)), gb).is_zero())
        bad += (bad.empty() ? "" : ", ") + ring.var_name(ring.x_count() + i - 1) + "^" + std::to_string(k + 1);
    add("support", bad.empty(), bad.empty() ? "every y_i^(k+1) lies in J" : "not in J: " + bad);
  }
  {
    std::vector<Polynomial> ys;
    for (int j = 1; j <= N; ++j) ys.push_back(Polynomial::monomial(ring.y(j)));
    const GroebnerBasis gi = buchberger(ring, ys);
    int outside = 0;
    for (const auto& g : gens)
      if (!normal_form(ring, g, gi).is_zero()) ++outside;
    add("containment", outside == 0,
        outside == 0 ? "every generator lies in I" : std::to_string(outside) + " generators outside I");
  }
  {
    std::set<std::vector<int>> seen;
    for (const auto& t : emb.target) seen.insert(t.exponents());
    add("embedding", seen.size() == emb.target.size(), "distinct conormal coordinates per generator");
  }
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

JmCertificate verify(const PureModuleSpec& spec, int N, const VerifyOptions& options, std::uint32_t prime) {
  const auto start = std::chrono::steady_clock::now();
  HypothesisResult hyp = hypothesis_check(pure_module_summary(spec), spec.k, N);
  if (!hyp.pass()) throw HypothesisFailure(hyp.failed);
  ModuleInput m = pure_module(spec, prime, options.deadline);
  JmCertificate cert = verify(m, N, spec.k, options);
  cert.d = spec.d;
  cert.module_label = "pure(n=" + std::to_string(spec.n) + ",k=" + std::to_string(spec.k) +
                      ",d=" + std::to_string(spec.d) + ")";
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::int64_t max_jump(int n, int N, int k) {
  if (n < 1 || N < 1 || k < 1) throw InvalidInput("max_jump needs n, N, k >= 1");
  const BigInteger bound = big_binomial(BigInteger(static_cast<unsigned long>(k + N - 1)),
                                        BigInteger(static_cast<unsigned long>(k)));
  auto fits = [&](std::int64_t d) {
    return big_binomial(BigInteger(static_cast<unsigned long>(n + d)), BigInteger(static_cast<unsigned long>(n))) <=
           bound;
  };
  std::int64_t lo = 0, hi = 1;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  // fits(lo) and !fits(hi)
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::vector<ScanRow> scan(int n, int N, int k_min, int k_max, const ScanOptions& options) {
  if (k_min < 1 || k_max < k_min) throw InvalidInput("scan needs 1 <= k_min <= k_max");
  std::vector<ScanRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    ScanRow row;
    row.k = k;
    row.d_max = max_jump(n, N, k);
    row.reg_predicted = k + row.d_max + 1;
    if (options.max_seconds) {
      const auto start = std::chrono::steady_clock::now();
      try {
        VerifyOptions vopts;
        vopts.deadline = Deadline::after(*options.max_seconds);
        if (row.d_max > 250) throw BudgetExceeded("jump outside the exponent range");
        JmCertificate cert = verify(PureModuleSpec{n, k, static_cast<int>(row.d_max)}, N, vopts, options.prime);
        row.reg_computed = cert.computed_regularity;
        row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        row.mismatch = !cert.pass() || cert.computed_regularity != row.reg_predicted;
      } catch (const BudgetExceeded&) {
      } catch (const InvalidInput&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(const std::vector<ScanRow>& rows) {
  if (rows.size() < 2) throw InvalidInput("slope fit needs at least two rows");
  double sx = 0, sy = 0;
  for (const auto& r : rows) {
    sx += std::log(static_cast<double>(r.k));
    sy += std::log(static_cast<double>(r.reg_predicted));
  }
  const double mx = sx / rows.size(), my = sy / rows.size();
  double num = 0, den = 0;
  for (const auto& r : rows) {
    const double dx = std::log(static_cast<double>(r.k)) - mx;
    num += dx * (std::log(static_cast<double>(r.reg_predicted)) - my);
    den += dx * dx;
  }
  return num / den;
}

}  // namespace regjm
