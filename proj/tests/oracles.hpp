#pragma once

// Test-side reference computations. Nothing here calls the Gröbner or
// resolution engine; the oracles work from definitions.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "regjm/arith.hpp"
#include "regjm/freemod.hpp"
#include "regjm/resolution.hpp"

namespace oracle {

using regjm::Monomial;
using regjm::Polynomial;
using regjm::RingContext;

inline std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return static_cast<std::int64_t>(r);
}

/// Degrevlex straight from the definition: higher degree wins, then the
/// last nonzero entry of a - b is negative.
inline int degrevlex(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da > db ? 1 : -1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] - b[i] < 0 ? 1 : -1;
  return 0;
}

/// All exponent vectors of total degree t in nv variables.
inline std::vector<std::vector<int>> exponents_of_degree(int nv, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(nv, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nv - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[var] = x;
      self(self, var + 1, left - x);
    }
  };
  if (nv == 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, t);
  return out;
}

/// Rank of a dense matrix over F_p by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  auto powmod = [p](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c]) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = powmod(rows[rank][c], p - 2);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || !rows[r][c]) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

/// dim_k (S/(gens))_t by spanning the degree-t part of the ideal.
inline std::int64_t hilbert_function(const RingContext& ring, const std::vector<Polynomial>& gens, int t) {
  const int nv = ring.nvars();
  auto basis = exponents_of_degree(nv, t);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || *g.degree() > t) continue;
    for (const auto& m : exponents_of_degree(nv, t - *g.degree())) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& term : g.terms()) {
        auto e = term.mon.exponents();
        for (int v = 0; v < nv; ++v) e[v] += m[v];
        row[index.at(e)] = term.coef.v;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size()) - rank_mod_p(std::move(rows), ring.prime());
}

/// dim_k (coker of columns in the free module with these twists)_t.
inline std::int64_t module_hilbert_function(const RingContext& ring, const std::vector<int>& twists,
                                            const std::vector<regjm::ModuleElement>& columns, int t) {
  const int nv = ring.nvars();
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> index;
  for (std::uint32_t c = 0; c < twists.size(); ++c)
    if (t >= twists[c])
      for (const auto& e : exponents_of_degree(nv, t - twists[c])) index.emplace(std::make_pair(c, e), index.size());
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& col : columns) {
    if (col.is_zero() || *col.degree() > t) continue;
    for (const auto& m : exponents_of_degree(nv, t - *col.degree())) {
      std::vector<std::uint32_t> row(index.size(), 0);
      for (const auto& term : col.terms()) {
        auto e = term.mon.exponents();
        for (int v = 0; v < nv; ++v) e[v] += m[v];
        row[index.at({term.comp, e})] = term.coef.v;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(index.size()) - rank_mod_p(std::move(rows), ring.prime());
}

/// Hilbert function of a graded module from the Betti table of its resolution.
inline std::int64_t hilbert_from_betti(const regjm::BettiTable& b, int nvars, int t) {
  std::int64_t h = 0;
  for (const auto& [ij, v] : b.entries()) {
    const int shift = t - ij.second;
    if (shift < 0) continue;
    h += (ij.first % 2 == 0 ? 1 : -1) * v * binom(shift + nvars - 1, nvars - 1);
  }
  return h;
}

/// Eliahou-Kervaire for a stable monomial ideal generated in one degree:
/// beta_i = sum over generators u of binom(max(u) - 1, i), max(u) 1-based.
inline regjm::BettiTable eliahou_kervaire_power(int q, int a) {
  regjm::BettiTable b;
  for (const auto& e : exponents_of_degree(q, a)) {
    int mx = 0;
    for (int v = 0; v < q; ++v)
      if (e[v] > 0) mx = v + 1;
    for (int i = 0; i < mx; ++i) b.add(i, a + i, binom(mx - 1, i));
  }
  return b;
}

/// Dense homogeneous polynomial of degree `deg` with random coefficients.
inline Polynomial random_form(const RingContext& ring, int deg, std::mt19937& rng, double density = 0.5) {
  std::vector<regjm::Term> terms;
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<std::int64_t> coef(1, ring.prime() - 1);
  for (const auto& e : exponents_of_degree(ring.nvars(), deg))
    if (coin(rng) < density) terms.push_back({Monomial(ring.nvars(), e), ring.field().from_int(coef(rng))});
  return Polynomial::from_terms(ring.field(), std::move(terms));
}

/// Schoolbook product through a dense exponent map.
inline std::map<std::vector<int>, std::uint64_t> multiply_dense(const Polynomial& f, const Polynomial& g,
                                                                std::uint32_t p) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      auto e = a.mon.exponents();
      auto eb = b.mon.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto& v = out[e];
      v = (v + static_cast<std::uint64_t>(a.coef.v) * b.coef.v) % p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle
