#pragma once

// Test-only oracles, written independently of the library algorithms they
// cross-check.

#include <vector>

#include "sdc/galois.hpp"
#include "sdc/skew.hpp"

namespace sdc::test {

// Second skew-product expander: rewrites monomial products recursively from
// the innermost boundary, x^i b = x^{i-1} sigma(b) x + x^{i-1} delta(b),
// instead of the library's iterative outer application of x*(...).
template <CoefficientContext C>
std::vector<typename C::Elem> oracle_monomial(const C& ctx, int i,
                                              const typename C::Elem& b) {
  // returns ascending dense coefficients of x^i * b
  if (i == 0) return {b};
  auto left = oracle_monomial(ctx, i - 1, ctx.sigma(b));    // x^{i-1} sigma(b)
  auto right = oracle_monomial(ctx, i - 1, ctx.delta(b));   // x^{i-1} delta(b)
  std::vector<typename C::Elem> out(i + 1, ctx.zero());
  for (std::size_t k = 0; k < left.size(); ++k)
    out[k + 1] = ctx.add(out[k + 1], left[k]);
  for (std::size_t k = 0; k < right.size(); ++k)
    out[k] = ctx.add(out[k], right[k]);
  return out;
}

template <CoefficientContext C>
PolyOf<C> oracle_skew_mul(const C& ctx, const PolyOf<C>& f, const PolyOf<C>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<typename C::Elem> out(f.c.size() + g.c.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      auto mono = oracle_monomial(ctx, (int)i, g.c[j]);  // x^i * g_j
      for (std::size_t k = 0; k < mono.size(); ++k)
        out[k + j] = ctx.add(out[k + j], ctx.mul(f.c[i], mono[k]));
    }
  return poly_from(ctx, std::move(out));
}

// Binomial-formula expansion of x^n a, valid when delta and sigma commute:
// sum_k C(n,k) (sigma^{n-k} delta^k)(a) x^{n-k}, binomials reduced mod p.
inline SkewPoly<Felt> binomial_x_pow_times(const FieldContext& ctx, int n, Felt a) {
  const Field& f = ctx.field();
  // Pascal's triangle mod p.
  std::vector<std::vector<int>> ch(n + 1);
  for (int i = 0; i <= n; ++i) {
    ch[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) ch[i][j] = (ch[i - 1][j - 1] + ch[i - 1][j]) % f.p();
  }
  std::vector<Felt> out(n + 1, Felt{});
  for (int k = 0; k <= n; ++k) {
    Felt v = a;
    for (int i = 0; i < k; ++i) v = ctx.delta(v);
    v = ctx.sigma_pow(v, n - k);
    out[n - k] = f.add(out[n - k], f.mul(f.from_int(ch[n][k]), v));
  }
  return poly_from(ctx, std::move(out));
}

}  // namespace sdc::test
