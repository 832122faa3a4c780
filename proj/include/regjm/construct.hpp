#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regjm/arith.hpp"
#include "regjm/budget.hpp"
#include "regjm/freemod.hpp"
#include "regjm/groebner.hpp"
#include "regjm/resolution.hpp"

namespace regjm {

/// Pure module with degree sequence (k, k+1, ..., k+n, k+n+1+d).
struct PureModuleSpec {
  int n = 1;
  int k = 1;
  int d = 0;

  /// Throws InvalidInput unless n >= 1, k >= 1, d >= 0 and the ring fits.
  void validate() const;
};

/// A graded R-module M = coker(presentation) with its minimal resolution.
struct ModuleInput {
  RingContext ring;
  /// Minimal presentation F_1 -> F_0.
  GradedMatrix presentation;
  Complex resolution;
  BettiTable betti;
  DegreeSequence degrees;

  int n() const { return ring.n(); }
  int min_generator_degree() const;
};

/// Resolves coker(presentation) over R and keeps the minimal presentation.
ModuleInput module_from_presentation(const RingContext& ring, const GradedMatrix& presentation,
                                     const ResolutionOptions& options = {});

/// Dual of the minimal resolution of R/m^{d+1}, twisted so F_0 sits in degree
/// k. Throws InternalError if the result is not pure with the expected data.
ModuleInput pure_module(const PureModuleSpec& spec, std::uint32_t prime = PrimeField::kDefaultPrime,
                        const Deadline& deadline = {});

/// The numbers the hypothesis check looks at. Computable without building M.
struct ModuleSummary {
  int n = 1;
  DegreeSequence degrees;
  BigInteger beta0;
  int min_generator_degree = 0;
};

ModuleSummary summarize(const ModuleInput& m);
/// Closed form for the pure family.
ModuleSummary pure_module_summary(const PureModuleSpec& spec);

struct HypothesisResult {
  std::vector<std::string> failed;
  BigInteger beta0;
  BigInteger bound;

  bool pass() const { return failed.empty(); }
};

HypothesisResult hypothesis_check(const ModuleSummary& m, int k, int N);
HypothesisResult hypothesis_check(const ModuleInput& m, int k, int N);

/// Degree-k monomials in y_1..y_N in lex order.
std::vector<Monomial> conormal_basis(const RingContext& ring, int k);

/// F_0 generator g goes to x_0^{x_power[g]} * target[g] in I^k/I^{k+1}.
struct EmbeddingAssignment {
  std::vector<Monomial> target;
  std::vector<int> x_power;
  /// Generator indices in the order they consumed conormal monomials.
  std::vector<int> order;
};

EmbeddingAssignment embed(const ModuleInput& m, const RingContext& ring, int k);

/// The ambient ring S for M and N.
RingContext ambient_ring(const ModuleInput& m, int N);

/// Degree-(k+1) y-monomials followed by one lifted element per column of
/// the presentation.
std::vector<Polynomial> build_jm(const ModuleInput& m, const RingContext& ring, int k,
                                 const EmbeddingAssignment& embedding);
std::vector<Polynomial> build_jm(const ModuleInput& m, const RingContext& ring, int k);

DegreeSequence predicted_degree_sequence(const DegreeSequence& t, int N);
/// Table of E = ker(F_0 -> M) over S, where y acts as zero.
BettiTable predicted_betti_e(const BettiTable& betti_m, int N);
BettiTable predicted_betti_jm(const BettiTable& betti_m, int k, int N);

/// E presented over S as coker(d_2 | y_1 | ... | y_N) on F_1, then resolved.
BettiTable e_betti_direct(const ModuleInput& m, const RingContext& ring, const ResolutionOptions& options = {});
/// Resolution of E over R, extended to S, tensored with Koszul(y).
Complex e_resolution_tensor(const ModuleInput& m, const RingContext& ring);

Polynomial extended_to(const Polynomial& f, const RingContext& ring);
GradedMatrix extended_to(const GradedMatrix& m, const RingContext& ring);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct JmCertificate {
  int n = 0;
  int N = 0;
  int k = 0;
  std::optional<int> d;
  std::string module_label;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::string strategy;

  BettiTable module_betti;
  DegreeSequence module_degrees;
  int module_regularity = 0;
  std::vector<std::string> embedding;
  int generator_count = 0;

  DegreeSequence predicted_degrees;
  int predicted_regularity = 0;
  BettiTable predicted_betti;

  DegreeSequence computed_degrees;
  int computed_regularity = 0;
  BettiTable computed_betti;
  int minimal_generator_count = 0;

  std::vector<Check> checks;
  double wall_seconds = 0;

  bool pass() const;
};

struct VerifyOptions {
  PairStrategy strategy = PairStrategy::NormalDegree;
  /// Replaces the predicted sequence (testing hook for the mismatch path).
  std::optional<DegreeSequence> expect_seq;
  /// Replaces build_jm's output; used when re-verifying exported generators.
  std::optional<std::vector<Polynomial>> generators;
  Deadline deadline;
};

/// Throws HypothesisFailure when the hypotheses do not hold.
JmCertificate verify(const ModuleInput& m, int N, int k, const VerifyOptions& options = {});
JmCertificate verify(const PureModuleSpec& spec, int N, const VerifyOptions& options = {},
                     std::uint32_t prime = PrimeField::kDefaultPrime);

/// Stable label for a presentation: FNV-1a of its text form.
std::string module_label(const ModuleInput& m);

struct ScanRow {
  int k = 0;
  std::int64_t d_max = 0;
  std::int64_t reg_predicted = 0;
  std::optional<int> reg_computed;
  std::optional<double> wall_seconds;
  /// Set when the computed instance ran and disagreed with its prediction.
  bool mismatch = false;
};

/// Largest d with binom(n+d, n) <= binom(k+N-1, k).
std::int64_t max_jump(int n, int N, int k);

struct ScanOptions {
  /// Per-instance budget for the computed column; nullopt skips computing.
  std::optional<double> max_seconds;
  std::uint32_t prime = PrimeField::kDefaultPrime;
};

std::vector<ScanRow> scan(int n, int N, int k_min, int k_max, const ScanOptions& options = {});
/// Least-squares slope of log(reg_predicted) against log(k).
double loglog_slope(const std::vector<ScanRow>& rows);

}  // namespace regjm
