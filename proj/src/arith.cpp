#include "regjm/arith.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace regjm {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t q = 3; static_cast<std::uint64_t>(q) * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidInput("characteristic must be a prime below 2^31, got " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const {
  if (a.is_zero()) throw InvalidInput("inverse of zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.v;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return from_int(t);
}

// ---------------------------------------------------------------------------

Monomial::Monomial(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw InvalidInput("variable count " + std::to_string(nvars) + " outside [0, " +
                       std::to_string(kMaxVars) + "]");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw InvalidInput("exponent vector length does not match the variable count");
  int deg = 0;
  for (int i = 0; i < nvars; ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw InvalidInput("exponent out of range");
    e_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw InvalidInput("variable index out of range");
  if (power < 0 || power > 255) throw InvalidInput("exponent out of range");
  Monomial m(nvars);
  m.e_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e_[i] + b.e_[i];
    if (s > 255) throw InvalidInput("exponent overflow in monomial product");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = a.nvars_;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  int deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  int deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial Monomial::extended(int nvars) const {
  if (nvars < nvars_ || nvars > kMaxVars) throw InvalidInput("cannot extend monomial");
  Monomial r = *this;
  r.nvars_ = static_cast<std::uint8_t>(nvars);
  return r;
}

Monomial Monomial::restricted(int nvars) const {
  if (nvars > nvars_ || nvars < 0) throw InvalidInput("cannot restrict monomial");
  for (int i = nvars; i < nvars_; ++i)
    if (e_[i] != 0) throw InvalidInput("monomial involves a dropped variable");
  Monomial r = *this;
  r.nvars_ = static_cast<std::uint8_t>(nvars);
  return r;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(e_.begin(), e_.begin() + nvars_);
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw InvalidInput("monomials from rings with different variable counts");
  int c = order == MonomialOrder::DegRevLex ? degrevlex_cmp(a, b) : lex_cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::vector<Monomial> monomials_of_degree(int nvars, int first, int count, int degree) {
  if (first < 0 || count < 0 || first + count > nvars) throw InvalidInput("variable block out of range");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (count == 0) {
    if (degree == 0) out.emplace_back(nvars);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Descending lex: the first variable's exponent runs from `degree` down.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == first + count - 1) {
      e[var] = remaining;
      out.emplace_back(nvars, e);
      e[var] = 0;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, remaining - a);
    }
    e[var] = 0;
  };
  rec(rec, first, degree);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_cmp(a.mon, b.mon) > 0; }

}  // namespace

Polynomial Polynomial::from_terms(const PrimeField& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef = field.add(p.terms_.back().coef, t.coef);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(t);
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  for (const auto& t : p.terms_)
    if (t.mon.degree() != p.terms_.front().mon.degree())
      throw HomogeneityError("polynomial is not homogeneous");
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, Scalar c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  assert(p.is_canonical());
  return p;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef.is_zero()) return false;
    if (terms_[i].mon.degree() != terms_[0].mon.degree()) return false;
    if (i > 0 && degrevlex_cmp(terms_[i - 1].mon, terms_[i].mon) <= 0) return false;
  }
  return true;
}

Polynomial poly_combine(const PrimeField& field, const Polynomial& f, const Polynomial& g, Scalar c,
                        const Monomial& m) {
  if (!f.is_zero() && !g.is_zero() && *f.degree() != m.degree() + *g.degree())
    throw HomogeneityError("poly_combine: degree mismatch between f and m*g");
  Polynomial r;
  r.terms_.reserve(f.size() + g.size());
  const Scalar nc = field.neg(c);
  std::size_t i = 0, j = 0;
  const auto& ft = f.terms_;
  const auto& gt = g.terms_;
  while (i < ft.size() || j < gt.size()) {
    if (j == gt.size()) {
      r.terms_.push_back(ft[i++]);
      continue;
    }
    Monomial gm = m * gt[j].mon;
    int cmp = i == ft.size() ? -1 : degrevlex_cmp(ft[i].mon, gm);
    if (cmp > 0) {
      r.terms_.push_back(ft[i++]);
    } else if (cmp < 0) {
      Scalar v = field.mul(nc, gt[j++].coef);
      if (!v.is_zero()) r.terms_.push_back({gm, v});
    } else {
      Scalar v = field.add(ft[i++].coef, field.mul(nc, gt[j++].coef));
      if (!v.is_zero()) r.terms_.push_back({gm, v});
    }
  }
  return r;
}

Polynomial add(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  return poly_combine(field, f, g, field.neg(field.one()), Monomial(g.lead().mon.nvars()));
}

Polynomial sub(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return f;
  return poly_combine(field, f, g, field.one(), Monomial(g.lead().mon.nvars()));
}

Polynomial scale(const PrimeField& field, const Polynomial& f, Scalar c, const Monomial& m) {
  Polynomial r;
  if (c.is_zero()) return r;
  r.terms_.reserve(f.size());
  for (const auto& t : f.terms()) r.terms_.push_back({t.mon * m, field.mul(t.coef, c)});
  return r;
}

Polynomial multiply(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  Polynomial r;
  for (const auto& t : g.terms()) r = poly_combine(field, r, f, field.neg(t.coef), t.mon);
  return r;
}

Polynomial extended(const Polynomial& f, int nvars) {
  // Appended variables have zero exponent, so degrevlex order is preserved.
  Polynomial r;
  r.terms_.reserve(f.size());
  for (const auto& t : f.terms()) r.terms_.push_back({t.mon.extended(nvars), t.coef});
  return r;
}

// ---------------------------------------------------------------------------

RingContext::RingContext(int n, int N, std::uint32_t prime) : n_(n), N_(N), field_(prime) {
  if (n < 0 || N < 0) throw InvalidInput("ring block sizes must be non-negative");
  if (n + 1 + N > kMaxVars)
    throw InvalidInput("ring with " + std::to_string(n + 1 + N) + " variables exceeds the limit of " +
                       std::to_string(kMaxVars));
  for (int i = 0; i <= n; ++i) names_.push_back("x" + std::to_string(i));
  for (int i = 1; i <= N; ++i) names_.push_back("y" + std::to_string(i));
}

std::optional<int> RingContext::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Monomial RingContext::x(int i, int power) const {
  if (i < 0 || i > n_) throw InvalidInput("x index out of range");
  return Monomial::variable(nvars(), i, power);
}

Monomial RingContext::y(int i, int power) const {
  if (i < 1 || i > N_) throw InvalidInput("y index out of range");
  return Monomial::variable(nvars(), n_ + i, power);
}

// ---------------------------------------------------------------------------

BigInteger::BigInteger(const std::string& decimal) {
  if (v_.set_str(decimal, 10) != 0 || v_ < 0) throw InvalidInput("not a non-negative integer: " + decimal);
}

BigInteger::BigInteger(mpz_class v) : v_(std::move(v)) {
  if (v_ < 0) throw InvalidInput("BigInteger must be non-negative");
}

BigInteger operator-(const BigInteger& a, const BigInteger& b) {
  if (a < b) throw InvalidInput("BigInteger subtraction would be negative");
  return BigInteger(mpz_class(a.v_ - b.v_));
}

BigInteger big_binomial(const BigInteger& a, const BigInteger& b) {
  if (b > a) return BigInteger(0ul);
  // C(a, b) = C(a, a-b); iterate over the smaller of the two.
  mpz_class lower = b.raw();
  mpz_class other = a.raw() - b.raw();
  if (other < lower) lower = other;
  if (!lower.fits_ulong_p()) throw InvalidInput("binomial lower index too large");
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), a.raw().get_mpz_t(), lower.get_ui());
  return BigInteger(r);
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw InvalidInput("binomial arguments must be non-negative");
  BigInteger r = big_binomial(BigInteger(static_cast<unsigned long>(a)), BigInteger(static_cast<unsigned long>(b)));
  if (r.raw() > std::numeric_limits<std::int64_t>::max()) throw InvalidInput("binomial overflow");
  return static_cast<std::int64_t>(r.raw().get_si());
}

}  // namespace regjm
