#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "regjm/arith.hpp"

namespace regjm {

/// ⊕ S(-twists[i]): generator e_i sits in degree twists[i].
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

  static GradedFreeModule zero() { return GradedFreeModule(); }

  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int i) const { return twists_.at(i); }
  const std::vector<int>& twists() const { return twists_; }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> twists_;
};

struct ModTerm {
  std::uint32_t comp;
  Monomial mon;
  Scalar coef;
  friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

/// Homogeneous element of a graded free module. Terms are kept in
/// position-over-term order: component ascending, then degrevlex descending.
class ModuleElement {
 public:
  ModuleElement() = default;

  /// Canonicalizes and checks homogeneity against the module's twists.
  static ModuleElement from_terms(const PrimeField& field, const GradedFreeModule& module,
                                  std::vector<ModTerm> terms);
  static ModuleElement basis(const RingContext& ring, const GradedFreeModule& module, int index);
  /// Trusted constructor for POT-sorted, zero-free terms; recomputes the degree.
  static ModuleElement from_sorted(const GradedFreeModule& module, std::vector<ModTerm> terms);
  /// Rank-1 element f*e_0.
  static ModuleElement from_polynomial(const Polynomial& f);
  /// sum_i entries[i] e_i
  static ModuleElement from_entries(const PrimeField& field, const GradedFreeModule& module,
                                    std::span<const Polynomial> entries);

  bool is_zero() const { return terms_.empty(); }
  /// deg(mon) + twist(comp), shared by all terms.
  std::optional<int> degree() const { return degree_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Same terms, degree recomputed against `module`. Throws HomogeneityError.
  ModuleElement rebased(const GradedFreeModule& module) const;

  Polynomial entry(int comp) const;
  /// Dense list of entries, one per module generator.
  std::vector<Polynomial> entries(int rank) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<ModTerm> terms_;
  std::optional<int> degree_;

  friend ModuleElement combine(const PrimeField&, const ModuleElement&, const ModuleElement&,
                               const Polynomial&);
  friend ModuleElement scale(const PrimeField&, const ModuleElement&, Scalar, const Monomial&);
  friend ModuleElement reindex(const ModuleElement&, std::span<const int>, const GradedFreeModule&);
};

/// POT comparison of module terms: >0 if a > b.
inline int pot_cmp(const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return degrevlex_cmp(a.mon, b.mon);
}

/// f - p*g for a polynomial multiplier p (homogeneity is checked).
ModuleElement combine(const PrimeField& field, const ModuleElement& f, const ModuleElement& g,
                      const Polynomial& p);
ModuleElement add(const PrimeField& field, const ModuleElement& f, const ModuleElement& g);
ModuleElement scale(const PrimeField& field, const ModuleElement& f, Scalar c, const Monomial& m);
/// Renames component c to new_index[c] (-1 drops it); result lives in `target`.
ModuleElement reindex(const ModuleElement& v, std::span<const int> new_index,
                      const GradedFreeModule& target);

/// Degree-0 map source -> target, stored as one target element per source
/// generator.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Throws HomogeneityError if column j is not of degree source.twist(j) and
  /// InvalidInput on rank mismatches.
  GradedMatrix(GradedFreeModule target, GradedFreeModule source, std::vector<ModuleElement> columns);

  static GradedMatrix identity(const RingContext& ring, const GradedFreeModule& module);
  static GradedMatrix zero(const GradedFreeModule& target, const GradedFreeModule& source);
  /// entries[r][c] is the (row r, column c) entry.
  static GradedMatrix from_entries(const RingContext& ring, const GradedFreeModule& target,
                                   const GradedFreeModule& source,
                                   const std::vector<std::vector<Polynomial>>& entries);
  /// 1 x s matrix S(-d_1) ⊕ ... → S of the given generators; zero generators are skipped.
  static GradedMatrix row(std::span<const Polynomial> generators);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const std::vector<ModuleElement>& columns() const { return columns_; }
  const ModuleElement& column(int j) const { return columns_.at(j); }
  Polynomial entry(int r, int c) const { return columns_.at(c).entry(r); }
  bool is_zero() const;
  /// True if some entry is a nonzero constant.
  bool has_unit_entry() const;

  GradedMatrix transpose(const PrimeField& field) const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

 private:
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<ModuleElement> columns_;
};

ModuleElement apply(const RingContext& ring, const GradedMatrix& m, const ModuleElement& v);
/// a ∘ b
GradedMatrix compose(const RingContext& ring, const GradedMatrix& a, const GradedMatrix& b);

/// F_0 <-d_1- F_1 <-d_2- ... <-d_L- F_L. Modules are stored explicitly so a
/// zero or length-0 complex is representable.
class Complex {
 public:
  Complex() = default;
  /// Length-0 complex 0 -> F_0.
  explicit Complex(GradedFreeModule f0);
  /// Throws InvalidInput when source(d_i) != target(d_{i+1}).
  explicit Complex(std::vector<GradedMatrix> maps);
  Complex(GradedFreeModule f0, std::vector<GradedMatrix> maps);

  int length() const { return static_cast<int>(maps_.size()); }
  const GradedFreeModule& module(int i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  /// d_i : F_i -> F_{i-1}, 1 <= i <= length().
  const GradedMatrix& map(int i) const { return maps_.at(i - 1); }
  const std::vector<GradedMatrix>& maps() const { return maps_; }
  std::vector<int> ranks() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<GradedFreeModule> modules_;
  std::vector<GradedMatrix> maps_;
};

struct ChainCheck {
  enum class Status { Ok, NotComposable, NonzeroComposite };
  Status status = Status::Ok;
  /// For failures: i such that d_i ∘ d_{i+1} is the offending composite.
  int position = 0;
  bool ok() const { return status == Status::Ok; }
};

/// Checks a raw chain d_1, d_2, ... for composability and d_i ∘ d_{i+1} = 0.
ChainCheck check_chain(const RingContext& ring, std::span<const GradedMatrix> maps);
ChainCheck compose_is_zero(const RingContext& ring, const Complex& c);

/// Transposes and reverses the maps; twists are negated. Position i of the
/// result is F_{L-i}^*.
Complex dualize(const PrimeField& field, const Complex& c);
/// Adds s to every twist.
Complex twist_complex(const Complex& c, int s);

}  // namespace regjm
