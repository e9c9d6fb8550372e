#include "sdc/skew.hpp"

namespace sdc {

DivisorScan enumerate_right_divisors(const FieldContext& ctx, int n, int d,
                                     std::uint64_t budget,
                                     std::uint64_t start_cursor,
                                     std::size_t max_results) {
  if (d < 1) throw std::invalid_argument("enumerate_right_divisors: d must be >= 1");
  if (n < 1) throw std::invalid_argument("enumerate_right_divisors: n must be >= 1");
  DivisorScan out;
  if (d > n) {  // x^n - 1 has no right divisor of larger degree
    out.complete = true;
    return out;
  }
  const std::uint64_t q = (std::uint64_t)ctx.field().q();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > (1ull << 60) / q)
      throw std::invalid_argument("enumerate_right_divisors: q^d out of range");
    total *= q;
  }
  const std::uint64_t block = total / q;  // cursor span of one c_0 value
  const SkewPoly<Felt> target = x_pow_minus_one(ctx, n);

  std::uint64_t cursor = start_cursor;
  while (cursor < total) {
    if (cursor < block) {  // c_0 = 0 cannot right-divide x^n - 1
      cursor = block;
      continue;
    }
    if (out.tested >= budget || out.divisors.size() >= max_results) {
      out.next_cursor = cursor;
      return out;
    }
    // cursor = sum c_i * q^{d-1-i}: c_0 is the most significant digit.
    std::vector<Felt> c(d + 1);
    std::uint64_t place = block;
    for (int i = 0; i < d; ++i) {
      c[i] = Felt{(std::uint16_t)(cursor / place % q)};
      place /= q;
    }
    c[d] = ctx.one();  // monic
    SkewPoly<Felt> g{std::move(c)};
    ++out.tested;
    if (right_divide(ctx, target, g).r.is_zero()) out.divisors.push_back(g);
    ++cursor;
  }
  out.complete = true;
  out.next_cursor = total;
  return out;
}

}  // namespace sdc
