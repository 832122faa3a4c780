#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regjm/budget.hpp"
#include "regjm/freemod.hpp"
#include "regjm/groebner.hpp"

namespace regjm {

/// β_{i,j}: number of degree-j generators in homological position i.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, std::int64_t>;

  BettiTable() = default;

  /// Adds `count` to β_{i,j}; entries that reach zero are removed.
  void add(int i, int j, std::int64_t count);
  std::int64_t at(int i, int j) const;
  const Entries& entries() const& { return entries_; }
  /// By value, so iterating a temporary table is safe.
  Entries entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  /// Largest i present; -1 for the empty table.
  int pd() const;
  std::int64_t total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Entries entries_;
};

struct DegreeSequence {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values.at(i); }
  bool strictly_increasing() const;
  std::string str() const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// max (j - i). Throws InvalidInput on the empty table.
int regularity(const BettiTable& b);
/// Per-column maximum / minimum degree. Throws InvalidInput on the empty
/// table or an interior empty column.
DegreeSequence max_degree_sequence(const BettiTable& b);
DegreeSequence min_degree_sequence(const BettiTable& b);
bool is_pure(const BettiTable& b);

/// Betti table read off a minimal complex. Throws InvalidInput if some
/// differential still has a unit entry.
BettiTable betti_table(const Complex& c);
/// Table of an ideal J from the table of S/J: drop position 0 and shift.
BettiTable ideal_table(const BettiTable& quotient);
/// Reverse-with-negated-degrees: β'_{i,j} = β_{L-i,-j}.
BettiTable dual_table(const BettiTable& b, int length);

struct ResolutionOptions {
  /// Defaults to the number of ring variables; exceeding it is an internal error.
  std::optional<int> max_length;
  PairStrategy strategy = PairStrategy::NormalDegree;
  Deadline deadline;
};

/// Schreyer resolution of coker(presentation). Exact, not necessarily minimal.
Complex free_resolution(const RingContext& ring, const GradedMatrix& presentation,
                        const ResolutionOptions& options = {});
/// Strips unit entries by exact row/column operations.
Complex minimize(const RingContext& ring, const Complex& c);
/// minimize(free_resolution(...)).
Complex minimal_resolution(const RingContext& ring, const GradedMatrix& presentation,
                           const ResolutionOptions& options = {});

Complex koszul_complex(const RingContext& ring, std::span<const Polynomial> elems);
/// Total complex of a ⊗ b with d(u⊗v) = d(u)⊗v + (-1)^p u⊗d(v).
Complex tensor_complexes(const RingContext& ring, const Complex& a, const Complex& b);

/// Linear resolution of (z_1..z_q)^a as a module: β_{i,a+i}.
BettiTable power_ideal_betti(int q, int a);

/// Integer Laurent polynomial in t, exponent -> coefficient (no zeros stored).
using IntPoly = std::map<int, std::int64_t>;

/// HS(coker) * (1-t)^nvars, from the leading-term module of a fresh Gröbner basis.
IntPoly hilbert_numerator(const RingContext& ring, const GradedMatrix& presentation);
/// Numerator of HS(S/L) for a monomial ideal L.
IntPoly monomial_ideal_numerator(std::vector<Monomial> gens);
/// sum_i (-1)^i sum_j β_{i,j} t^j
IntPoly betti_numerator(const BettiTable& b);
bool hilbert_check(const RingContext& ring, const GradedMatrix& presentation, const BettiTable& b);

}  // namespace regjm
