#pragma once

#include <span>
#include <vector>

#include "regjm/budget.hpp"
#include "regjm/freemod.hpp"

namespace regjm {

/// Monomial order on a free module, induced from a base module. Generator i
/// is compared through the module monomial base_mon[i]*e_{base_comp[i]} of the
/// base; ties go to the smaller generator index. With base_comp[i] = i and
/// base_mon[i] = 1 this is position-over-term with degrevlex.
struct ModuleFrame {
  std::vector<std::uint32_t> base_comp;
  std::vector<Monomial> base_mon;

  static ModuleFrame pot(int rank, int nvars);
  int rank() const { return static_cast<int>(base_comp.size()); }
  friend bool operator==(const ModuleFrame&, const ModuleFrame&) = default;
};

namespace detail {

/// Engine term: `tot` is the term's monomial times base_mon[comp].
struct ETerm {
  Monomial tot;
  std::uint32_t comp;
  Scalar coef;
};
using Vec = std::vector<ETerm>;

class FrameOrder {
 public:
  explicit FrameOrder(const ModuleFrame& frame) : base_(&frame.base_comp) {}
  /// >0 if a > b.
  int cmp(const ETerm& a, const ETerm& b) const {
    std::uint32_t ba = (*base_)[a.comp], bb = (*base_)[b.comp];
    if (ba != bb) return ba < bb ? 1 : -1;
    if (int c = degrevlex_cmp(a.tot, b.tot)) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

 private:
  const std::vector<std::uint32_t>* base_;
};

}  // namespace detail

enum class PairStrategy {
  /// Lowest S-pair degree first, ties by creation order.
  NormalDegree,
  /// Creation order regardless of degree.
  Fifo,
};

/// Where a basis element came from. For syzygies `first`/`second` are the
/// pair (i, j) of the lower basis whose S-pair produced it.
struct Provenance {
  enum class Kind { Input, SPair, Syzygy };
  Kind kind = Kind::Input;
  int first = -1;
  int second = -1;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(GradedFreeModule module, ModuleFrame frame, std::vector<detail::Vec> elems,
                std::vector<int> degrees, std::vector<Provenance> provenance);

  const GradedFreeModule& module() const { return module_; }
  const ModuleFrame& frame() const { return frame_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  int degree(int i) const { return degrees_.at(i); }
  const Provenance& provenance(int i) const { return provenance_.at(i); }

  ModuleElement element(int i) const;
  std::vector<ModuleElement> elements() const;
  /// Leading term under the basis' order (monic: coefficient 1).
  ModTerm leading_term(int i) const;
  std::vector<ModTerm> leading_terms() const;
  /// Columns are the basis elements; source twists are their degrees.
  GradedMatrix as_matrix() const;

  const detail::Vec& raw(int i) const { return elems_.at(i); }
  const std::vector<detail::Vec>& raw() const { return elems_; }

 private:
  GradedFreeModule module_;
  ModuleFrame frame_;
  std::vector<detail::Vec> elems_;
  std::vector<int> degrees_;
  std::vector<Provenance> provenance_;
};

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::NormalDegree;
  Deadline deadline;
};

/// Reduced Gröbner basis of the submodule of `module` generated by `gens`,
/// under the order given by `frame` (position-over-term when omitted).
/// Elements are monic and sorted by leading component, then by leading
/// monomial in descending lex order.
GroebnerBasis buchberger(const RingContext& ring, const GradedFreeModule& module,
                         std::span<const ModuleElement> gens, const BuchbergerOptions& options = {});
GroebnerBasis buchberger(const RingContext& ring, const GradedFreeModule& module, const ModuleFrame& frame,
                         std::span<const ModuleElement> gens, const BuchbergerOptions& options = {});
/// Ideal case.
GroebnerBasis buchberger(const RingContext& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& options = {});

/// Fully reduced remainder of v modulo the basis.
ModuleElement normal_form(const RingContext& ring, const ModuleElement& v, const GroebnerBasis& basis);
Polynomial normal_form(const RingContext& ring, const Polynomial& f, const GroebnerBasis& basis);

/// Syzygies of the basis elements from their S-pair reductions. The result
/// lives in ⊕ S(-deg g_i) with the induced Schreyer order and is itself a
/// Gröbner basis there, so it can be fed straight back in.
GroebnerBasis schreyer_syzygies(const RingContext& ring, const GroebnerBasis& basis,
                                const Deadline& deadline = {});

/// Leading-term monomial sets per component, for comparing bases.
std::vector<std::vector<Monomial>> leading_monomials(const GroebnerBasis& basis);

}  // namespace regjm
