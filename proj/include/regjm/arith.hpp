#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "regjm/errors.hpp"

namespace regjm {

// ---------------------------------------------------------------------------
// Prime field F_p
// ---------------------------------------------------------------------------

/// An element of F_p, always reduced into [0, p).
struct Scalar {
  std::uint32_t v = 0;

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Scalar, Scalar) = default;
};

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws InvalidInput unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  Scalar from_int(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar{static_cast<std::uint32_t>(r)};
  }
  Scalar one() const { return Scalar{1}; }

  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a.v + b.v;
    return Scalar{s >= p_ ? s - p_ : s};
  }
  Scalar sub(Scalar a, Scalar b) const {
    return Scalar{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
  }
  Scalar neg(Scalar a) const { return Scalar{a.v == 0 ? 0 : p_ - a.v}; }
  Scalar mul(Scalar a, Scalar b) const {
    return Scalar{static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  /// Extended Euclid. Throws InvalidInput for zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(Scalar a) const {
    return a.v > p_ / 2 ? static_cast<std::int64_t>(a.v) - p_ : a.v;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

inline constexpr int kMaxVars = 16;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in a ring with `nvars` variables.
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);

  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return e_[i]; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Same exponents in a ring with more variables (appended with zero exponent).
  Monomial extended(int nvars) const;
  /// Drops trailing variables; they must have zero exponent.
  Monomial restricted(int nvars) const;

  std::vector<int> exponents() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

enum class MonomialOrder { DegRevLex, Lex };

/// Unchecked degrevlex comparison: >0 if a > b, <0 if a < b.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// Pure lex with x_0 > x_1 > ...
inline int lex_cmp(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

/// Throws InvalidInput on mismatched variable counts.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      MonomialOrder order = MonomialOrder::DegRevLex);

/// All monomials of degree `degree` in the variables [first, first+count) of an
/// `nvars`-variable ring, in descending lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int first, int count, int degree);

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

struct Term {
  Monomial mon;
  Scalar coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse homogeneous polynomial, terms strictly descending in degrevlex.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts, merges duplicates, drops zeros. Throws HomogeneityError when the
  /// surviving terms have different degrees.
  static Polynomial from_terms(const PrimeField& field, std::vector<Term> terms);
  static Polynomial monomial(const Monomial& m, Scalar c = Scalar{1});
  /// Trusted constructor for terms already canonical (checked in debug builds).
  static Polynomial from_sorted(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mon.degree();
  }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  /// Degree-0 nonzero polynomial.
  bool is_constant() const { return terms_.size() == 1 && terms_[0].mon.is_one(); }

  /// Validator: sorted, zero-free, homogeneous.
  bool is_canonical() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;

  friend Polynomial poly_combine(const PrimeField&, const Polynomial&, const Polynomial&,
                                 Scalar, const Monomial&);
  friend Polynomial add(const PrimeField&, const Polynomial&, const Polynomial&);
  friend Polynomial scale(const PrimeField&, const Polynomial&, Scalar, const Monomial&);
  friend Polynomial extended(const Polynomial&, int);
};

/// f - c*m*g. Throws HomogeneityError when deg f != deg m + deg g (f, g nonzero).
Polynomial poly_combine(const PrimeField& field, const Polynomial& f, const Polynomial& g,
                        Scalar c, const Monomial& m);
Polynomial add(const PrimeField& field, const Polynomial& f, const Polynomial& g);
Polynomial sub(const PrimeField& field, const Polynomial& f, const Polynomial& g);
/// c*m*f
Polynomial scale(const PrimeField& field, const Polynomial& f, Scalar c, const Monomial& m);
Polynomial multiply(const PrimeField& field, const Polynomial& f, const Polynomial& g);
/// Embeds into a ring with more variables.
Polynomial extended(const Polynomial& f, int nvars);

// ---------------------------------------------------------------------------
// Ring context
// ---------------------------------------------------------------------------

/// S = F_p[x_0..x_n, y_1..y_N]; N = 0 is the subring R.
class RingContext {
 public:
  RingContext(int n, int N, std::uint32_t prime = PrimeField::kDefaultPrime);

  int n() const { return n_; }
  int N() const { return N_; }
  int nvars() const { return n_ + 1 + N_; }
  int x_count() const { return n_ + 1; }
  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.prime(); }
  MonomialOrder order() const { return MonomialOrder::DegRevLex; }

  const std::string& var_name(int i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<int> var_index(std::string_view name) const;

  Monomial one() const { return Monomial(nvars()); }
  Monomial x(int i, int power = 1) const;
  /// 1-based, as in y_1..y_N.
  Monomial y(int i, int power = 1) const;
  Polynomial var_poly(int index) const { return Polynomial::monomial(Monomial::variable(nvars(), index)); }

  /// The y-free subcontext R.
  RingContext subring() const { return RingContext(n_, 0, field_.prime()); }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.n_ == b.n_ && a.N_ == b.N_ && a.field_ == b.field_;
  }

 private:
  int n_;
  int N_;
  PrimeField field_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Big integers
// ---------------------------------------------------------------------------

/// Arbitrary-precision non-negative integer.
class BigInteger {
 public:
  BigInteger() = default;
  BigInteger(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInteger(const std::string& decimal);
  explicit BigInteger(mpz_class v);

  std::string str() const { return v_.get_str(); }
  bool fits_ulong() const { return v_.fits_ulong_p(); }
  unsigned long to_ulong() const { return v_.get_ui(); }
  const mpz_class& raw() const { return v_; }

  friend BigInteger operator+(const BigInteger& a, const BigInteger& b) { return BigInteger(mpz_class(a.v_ + b.v_)); }
  friend BigInteger operator-(const BigInteger& a, const BigInteger& b);
  friend BigInteger operator*(const BigInteger& a, const BigInteger& b) { return BigInteger(mpz_class(a.v_ * b.v_)); }
  friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

/// Exact binomial coefficient; zero when b > a.
BigInteger big_binomial(const BigInteger& a, const BigInteger& b);
/// Machine-size convenience; throws InvalidInput if the value exceeds 63 bits.
std::int64_t binomial(std::int64_t a, std::int64_t b);

}  // namespace regjm
