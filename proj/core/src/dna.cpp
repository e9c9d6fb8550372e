#include "sdc/dna.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {
namespace {

void require_f4(const Field& f) {
  if (f.q() != 4) throw std::invalid_argument("dna: field must be F_4");
}

char base_of(const Field& f4, Felt a) {
  if (f4.is_zero(a)) return 'G';
  if (a == f4.one()) return 'A';
  if (a == f4.t()) return 'C';
  return 'T';  // t^2
}

Felt felt_of(const Field& f4, char b) {
  switch (b) {
    case 'G': return f4.zero();
    case 'A': return f4.one();
    case 'C': return f4.t();
    case 'T': return f4.mul(f4.t(), f4.t());
    default:
      throw std::invalid_argument(std::string("dna: illegal base '") + b + "'");
  }
}

}  // namespace

std::string f4_to_dna(const Field& f4, std::span<const Felt> v) {
  require_f4(f4);
  std::string w;
  w.reserve(v.size());
  for (Felt a : v) w += base_of(f4, a);
  return w;
}

std::vector<Felt> dna_to_f4(const Field& f4, std::string_view word) {
  require_f4(f4);
  std::vector<Felt> v;
  v.reserve(word.size());
  for (char b : word) v.push_back(felt_of(f4, b));
  return v;
}

Felt complement(const Field& f4, Felt a) {
  require_f4(f4);
  return f4.add(a, f4.t());
}

std::vector<Felt> complement(const Field& f4, std::span<const Felt> v) {
  require_f4(f4);
  std::vector<Felt> out(v.begin(), v.end());
  for (Felt& a : out) a = f4.add(a, f4.t());
  return out;
}

std::string complement(std::string_view word) {
  std::string out(word);
  for (char& b : out) {
    switch (b) {
      case 'A': b = 'T'; break;
      case 'T': b = 'A'; break;
      case 'G': b = 'C'; break;
      case 'C': b = 'G'; break;
      default:
        throw std::invalid_argument(std::string("dna: illegal base '") + b + "'");
    }
  }
  return out;
}

SkewPoly<Felt> reverse_complement_poly(const FieldContext& ctx,
                                       const SkewPoly<Felt>& a, int n) {
  const Field& f = ctx.field();
  require_f4(f);
  SkewPoly<Felt> all_t = all_one_poly(ctx, n);
  for (Felt& c : all_t.c) c = f.mul(f.t(), c);
  SkewPoly<Felt> out = skew_add(ctx, reverse_poly(ctx, a, n), all_t);
  // Direct path: mirror the padded coefficients, then add t coordinatewise.
  std::vector<Felt> padded(n + 1, Felt{});
  std::copy(a.c.begin(), a.c.end(), padded.begin());
  std::reverse(padded.begin(), padded.end());
  for (Felt& c : padded) c = f.add(c, f.t());
  if (!(out == poly_from(ctx, std::move(padded))))
    throw std::runtime_error("reverse_complement_poly: identity check failed");
  return out;
}

bool is_palindromic(const SkewPoly<Felt>& g) {
  if (g.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
  int m = g.degree();
  for (int i = 0; i <= m; ++i)
    if (!(g.c[i] == g.c[m - i])) return false;
  return true;
}

bool is_td_palindromic(const FieldContext& ctx, const SkewPoly<Felt>& g) {
  if (g.is_zero()) throw std::invalid_argument("is_td_palindromic: zero polynomial");
  const Field& f = ctx.field();
  int m = g.degree();
  auto coeff = [&](int j) { return j <= m ? g.c[j] : Felt{}; };
  for (int i = 1; i <= m; ++i) {
    Felt rhs = f.sub(ctx.sigma(coeff(m - i)), ctx.delta(coeff(m - i + 1)));
    if (!(g.c[i] == rhs)) return false;
  }
  return true;
}

bool is_reversible(const LinearCode& code) {
  const Field& f = *code.field;
  for (int r = 0; r < code.G.rows(); ++r) {
    for (int hr = 0; hr < code.H.rows(); ++hr) {
      Felt acc{};
      for (int c = 0; c < code.n; ++c)
        acc = f.add(acc, f.mul(code.H(hr, c), code.G(r, code.n - 1 - c)));
      if (acc != Felt{}) return false;
    }
  }
  return true;
}

bool is_complement_closed(const Field& f4, const LinearCode& code) {
  require_f4(f4);
  Felt t = f4.t();
  for (int hr = 0; hr < code.H.rows(); ++hr) {
    Felt acc{};
    for (int c = 0; c < code.n; ++c) acc = f4.add(acc, f4.mul(code.H(hr, c), t));
    if (acc != Felt{}) return false;
  }
  return true;
}

bool is_dna_code(const Field& f4, const LinearCode& code) {
  return is_reversible(code) && is_complement_closed(f4, code);
}

std::vector<std::string> emit_dna_table(const Field& f4, const LinearCode& code,
                                        std::uint64_t max_words) {
  require_f4(f4);
  std::uint64_t words = 1;
  for (int i = 0; i < code.k; ++i) {
    if (words > max_words / 4)
      throw std::invalid_argument("emit_dna_table: q^k exceeds the enumeration budget");
    words *= 4;
  }
  std::vector<std::string> out;
  out.reserve(words);
  std::vector<int> msg(code.k, 0);
  std::vector<Felt> cw(code.n);
  out.push_back(f4_to_dna(f4, cw));  // zero codeword
  for (std::uint64_t idx = 1; idx < words; ++idx) {
    int pos = 0;
    while (true) {
      if (++msg[pos] < 4) break;
      msg[pos] = 0;
      ++pos;
    }
    std::fill(cw.begin(), cw.end(), Felt{});
    for (int i = 0; i < code.k; ++i) {
      if (msg[i] == 0) continue;
      Felt mi{(std::uint16_t)msg[i]};
      for (int j = 0; j < code.n; ++j)
        cw[j] = f4.add(cw[j], f4.mul(mi, code.G(i, j)));
    }
    out.push_back(f4_to_dna(f4, cw));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string dna_set_digest(std::vector<std::string> words) {
  std::sort(words.begin(), words.end());
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto eat = [&](char c) {
    h ^= (unsigned char)c;
    h *= 0x100000001b3ull;
  };
  for (const std::string& w : words) {
    for (char c : w) eat(c);
    eat('\n');
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace sdc
