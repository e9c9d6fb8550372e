#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdc/galois.hpp"
#include "sdc/ring_rl.hpp"

namespace sdc {

/// Skew polynomial in R[x;sigma,delta], ascending coefficients (c[i] is the
/// coefficient of x^i).  Normalized: no stored zero leading coefficient;
/// the zero polynomial is the empty vector.
template <typename Elem>
struct SkewPoly {
  std::vector<Elem> c;
  int degree() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

template <typename C>
concept CoefficientContext = requires(const C& ctx, const typename C::Elem& a) {
  { ctx.add(a, a) } -> std::convertible_to<typename C::Elem>;
  { ctx.sub(a, a) } -> std::convertible_to<typename C::Elem>;
  { ctx.mul(a, a) } -> std::convertible_to<typename C::Elem>;
  { ctx.neg(a) } -> std::convertible_to<typename C::Elem>;
  { ctx.sigma(a) } -> std::convertible_to<typename C::Elem>;
  { ctx.delta(a) } -> std::convertible_to<typename C::Elem>;
  { ctx.is_zero(a) } -> std::same_as<bool>;
  { ctx.zero() } -> std::convertible_to<typename C::Elem>;
  { ctx.one() } -> std::convertible_to<typename C::Elem>;
};

template <CoefficientContext C>
using PolyOf = SkewPoly<typename C::Elem>;

template <CoefficientContext C>
PolyOf<C> normalize(const C& ctx, PolyOf<C> f) {
  while (!f.c.empty() && ctx.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

template <CoefficientContext C>
PolyOf<C> poly_from(const C& ctx, std::vector<typename C::Elem> coeffs) {
  return normalize(ctx, PolyOf<C>{std::move(coeffs)});
}

template <CoefficientContext C>
PolyOf<C> constant_poly(const C& ctx, typename C::Elem a) {
  return poly_from(ctx, {std::move(a)});
}

template <CoefficientContext C>
PolyOf<C> skew_add(const C& ctx, const PolyOf<C>& f, const PolyOf<C>& g) {
  std::vector<typename C::Elem> out(std::max(f.c.size(), g.c.size()), ctx.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i];
  for (std::size_t i = 0; i < g.c.size(); ++i) out[i] = ctx.add(out[i], g.c[i]);
  return poly_from(ctx, std::move(out));
}

template <CoefficientContext C>
PolyOf<C> skew_sub(const C& ctx, const PolyOf<C>& f, const PolyOf<C>& g) {
  std::vector<typename C::Elem> out(std::max(f.c.size(), g.c.size()), ctx.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i];
  for (std::size_t i = 0; i < g.c.size(); ++i) out[i] = ctx.sub(out[i], g.c[i]);
  return poly_from(ctx, std::move(out));
}

/// x * (sum c_k x^k) = sum (sigma(c_k) x^{k+1} + delta(c_k) x^k).
template <CoefficientContext C>
PolyOf<C> x_times(const C& ctx, const PolyOf<C>& f) {
  if (f.is_zero()) return f;
  std::vector<typename C::Elem> out(f.c.size() + 1, ctx.zero());
  for (std::size_t k = 0; k < f.c.size(); ++k) {
    out[k + 1] = ctx.add(out[k + 1], ctx.sigma(f.c[k]));
    out[k] = ctx.add(out[k], ctx.delta(f.c[k]));
  }
  return poly_from(ctx, std::move(out));
}

/// x^n * a, computed by n-fold application of the commutation rule.
template <CoefficientContext C>
PolyOf<C> x_pow_times(const C& ctx, int n, const typename C::Elem& a) {
  if (n < 0) throw std::invalid_argument("x_pow_times: n must be >= 0");
  PolyOf<C> f = constant_poly(ctx, a);
  for (int i = 0; i < n; ++i) f = x_times(ctx, f);
  return f;
}

/// Product in R[x;sigma,delta].  Canonical algorithm: build x^i * g
/// iteratively, left-scale by a_i, and collect.
template <CoefficientContext C>
PolyOf<C> skew_mul(const C& ctx, const PolyOf<C>& f, const PolyOf<C>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<typename C::Elem> out(f.c.size() + g.c.size() - 1, ctx.zero());
  PolyOf<C> xig = g;  // x^i * g
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) xig = x_times(ctx, xig);
    if (!ctx.is_zero(f.c[i])) {
      if (out.size() < xig.c.size()) out.resize(xig.c.size(), ctx.zero());
      for (std::size_t k = 0; k < xig.c.size(); ++k)
        out[k] = ctx.add(out[k], ctx.mul(f.c[i], xig.c[k]));
    }
  }
  return poly_from(ctx, std::move(out));
}

/// x^n - 1.
template <CoefficientContext C>
PolyOf<C> x_pow_minus_one(const C& ctx, int n) {
  if (n < 1) throw std::invalid_argument("x_pow_minus_one: n must be >= 1");
  std::vector<typename C::Elem> c(n + 1, ctx.zero());
  c[0] = ctx.neg(ctx.one());
  c[n] = ctx.one();
  return {std::move(c)};
}

template <CoefficientContext C>
struct SkewDivision {
  PolyOf<C> q, r;
};

/// Right division: f = q*g + r with deg r < deg g or r = 0.  Requires the
/// leading coefficient of g to be invertible (always over a field; over
/// R_l a unit is required).  The identity is re-verified by reconstruction
/// before returning.
template <CoefficientContext C>
SkewDivision<C> right_divide(const C& ctx, const PolyOf<C>& f, const PolyOf<C>& g) {
  if (g.is_zero()) throw std::invalid_argument("right_divide: division by zero");
  auto lc_inv = ctx.try_inverse(g.c.back());
  if (!lc_inv)
    throw std::invalid_argument(
        "right_divide: leading coefficient of divisor is not a unit");
  PolyOf<C> rem = f;
  std::vector<typename C::Elem> q(
      f.degree() >= g.degree() ? f.degree() - g.degree() + 1 : 0, ctx.zero());
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    int e = rem.degree() - g.degree();
    // leading term of (c x^e) * g is c*sigma^e(lc(g)) x^{deg f}
    auto se = ctx.sigma_pow(*lc_inv, e);
    auto c = ctx.mul(rem.c.back(), se);
    q[e] = ctx.add(q[e], c);
    PolyOf<C> term{std::vector<typename C::Elem>(e + 1, ctx.zero())};
    term.c[e] = c;
    rem = skew_sub(ctx, rem, skew_mul(ctx, term, g));
    if (rem.degree() >= e + g.degree())
      throw std::runtime_error("right_divide: degree failed to drop");
  }
  SkewDivision<C> out{poly_from(ctx, std::move(q)), std::move(rem)};
  if (!(skew_add(ctx, skew_mul(ctx, out.q, g), out.r) == f))
    throw std::runtime_error("right_divide: reconstruction identity failed");
  return out;
}

/// True iff right_divide(x^n - 1, g) has zero remainder.
template <CoefficientContext C>
bool is_right_divisor(const C& ctx, const PolyOf<C>& g, int n) {
  if (n < 1) throw std::invalid_argument("is_right_divisor: n must be >= 1");
  return right_divide(ctx, x_pow_minus_one(ctx, n), g).r.is_zero();
}

/// Reduction mod x^n - 1: substitute x^{n+j} -> x^j on the highest term,
/// repeatedly (coefficients are unchanged: a x^{n+j} = (a x^j) x^n -> a x^j).
template <CoefficientContext C>
PolyOf<C> reduce_mod_xn_minus_1(const C& ctx, const PolyOf<C>& f, int n) {
  std::vector<typename C::Elem> out(n, ctx.zero());
  for (int i = 0; i < (int)f.c.size(); ++i)
    out[i % n] = ctx.add(out[i % n], f.c[i]);
  return poly_from(ctx, std::move(out));
}

/// Coefficient mirror at window n: returns sum a_{n-i} x^i.
template <CoefficientContext C>
PolyOf<C> reverse_poly(const C& ctx, const PolyOf<C>& a, int n) {
  if (a.degree() > n)
    throw std::invalid_argument("reverse_poly: degree exceeds window");
  std::vector<typename C::Elem> out(n + 1, ctx.zero());
  for (int i = 0; i <= n; ++i)
    if (n - i < (int)a.c.size()) out[i] = a.c[n - i];
  return poly_from(ctx, std::move(out));
}

/// 1 + x + x^2 + ... + x^n.
template <CoefficientContext C>
PolyOf<C> all_one_poly(const C& ctx, int n) {
  if (n < 0) throw std::invalid_argument("all_one_poly: n must be >= 0");
  return {std::vector<typename C::Elem>(n + 1, ctx.one())};
}

/// Result of a (possibly partial) scan for monic right divisors.
struct DivisorScan {
  std::vector<SkewPoly<Felt>> divisors;
  bool complete = false;
  std::uint64_t next_cursor = 0;  // resume point when !complete
  std::uint64_t tested = 0;       // divisions actually performed
};

/// Enumerates every monic degree-d right divisor of x^n - 1 over a field,
/// in lexicographic order of the ascending coefficient tuple (c_0 most
/// significant, elements ordered by packed value).  Deterministic and
/// resumable: cursor = sum c_i * q^{d-1-i}.  Candidates with zero constant
/// term are skipped (a right divisor of x^n - 1 has a unit constant term).
DivisorScan enumerate_right_divisors(const FieldContext& ctx, int n, int d,
                                     std::uint64_t budget,
                                     std::uint64_t start_cursor = 0,
                                     std::size_t max_results = SIZE_MAX);

}  // namespace sdc
