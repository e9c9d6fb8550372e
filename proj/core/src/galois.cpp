#include "sdc/galois.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdc {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense F_p[x] helpers for modulus validation (ascending coefficients,
// no normalization requirements).
int poly_deg(const std::vector<int>& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod b over F_p, b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = poly_deg(b);
  for (int d = poly_deg(a); d >= db; d = poly_deg(a)) {
    int c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      int& ai = a[d - db + i];
      ai = ((ai - c * b[i]) % p + p) % p;
    }
  }
  return a;
}

bool divides(const std::vector<int>& u, const std::vector<int>& f, int p) {
  return poly_deg(poly_mod(f, u, p)) < 0;
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field: p must be prime");
  if (m_ < 1) throw std::invalid_argument("field: m must be >= 1");
  long long q = 1;
  for (int i = 0; i < m_; ++i) {
    q *= p_;
    if (q > (1 << 16)) throw std::invalid_argument("field: p^m exceeds 2^16");
  }
  q_ = (int)q;
  pw_.resize(m_ + 1);
  pw_[0] = 1;
  for (int i = 1; i <= m_; ++i) pw_[i] = pw_[i - 1] * (std::uint32_t)p_;
  check_modulus();
  // t = residue class of the variable: x for m >= 2, -c0 for m == 1.
  t_ = m_ >= 2 ? Felt{(std::uint16_t)p_}
               : Felt{(std::uint16_t)((p_ - modulus_[0]) % p_)};
  build_tables();
}

void Field::check_modulus() const {
  if ((int)modulus_.size() != m_ + 1)
    throw std::invalid_argument("field: modulus must have degree m");
  if (modulus_[m_] != 1)
    throw std::invalid_argument("field: modulus must be monic");
  for (int c : modulus_)
    if (c < 0 || c >= p_)
      throw std::invalid_argument("field: modulus coefficients must lie in [0, p)");
  // Trial division by every monic polynomial of degree <= m/2.
  for (int d = 1; d <= m_ / 2; ++d) {
    std::vector<int> u(d + 1, 0);
    u[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p_;
    for (long long idx = 0; idx < count; ++idx) {
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        u[i] = (int)(v % p_);
        v /= p_;
      }
      if (divides(u, modulus_, p_))
        throw std::invalid_argument("field: modulus is reducible");
    }
  }
}

Felt Field::mul_raw(Felt a, Felt b) const {
  // Schoolbook product of the digit vectors, reduced by the modulus.
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    int da = (int)(a.packed / pw_[i]) % p_;
    if (da == 0) continue;
    for (int j = 0; j < m_; ++j) {
      int db = (int)(b.packed / pw_[j]) % p_;
      prod[i + j] = (prod[i + j] + da * db) % p_;
    }
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < m_; ++i)
      prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
  }
  std::uint32_t packed = 0;
  for (int i = 0; i < m_; ++i) packed += (std::uint32_t)prod[i] * pw_[i];
  return {(std::uint16_t)packed};
}

void Field::build_tables() {
  antilog_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  Felt cur = one();
  for (int k = 0; k < q_ - 1; ++k) {
    if (k > 0 && cur.packed == 1)
      throw std::invalid_argument(
          "field: t is not primitive under this modulus (order " +
          std::to_string(k) + ", expected " + std::to_string(q_ - 1) + ")");
    antilog_[k] = cur.packed;
    log_[cur.packed] = k;
    cur = mul_raw(cur, t_);
  }
  if (cur.packed != 1)
    throw std::invalid_argument("field: table construction failed to cycle");
  for (int a = 1; a < q_; ++a)
    if (log_[a] < 0 || antilog_[log_[a]] != a)
      throw std::invalid_argument("field: log/antilog tables inconsistent");

  negt_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    std::uint32_t packed = 0;
    for (int i = 0; i < m_; ++i)
      packed += (std::uint32_t)((p_ - (a / pw_[i]) % p_) % p_) * pw_[i];
    negt_[a] = (std::uint16_t)packed;
  }
  if (q_ <= 256) {
    addt_.resize((std::size_t)q_ * q_);
    subt_.resize((std::size_t)q_ * q_);
    mult_.resize((std::size_t)q_ * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        std::uint32_t s = 0;
        for (int i = 0; i < m_; ++i) {
          int da = (a / (int)pw_[i]) % p_, db = (b / (int)pw_[i]) % p_;
          s += (std::uint32_t)((da + db) % p_) * pw_[i];
        }
        addt_[(std::size_t)a * q_ + b] = (std::uint16_t)s;
        mult_[(std::size_t)a * q_ + b] = mul_raw({(std::uint16_t)a}, {(std::uint16_t)b}).packed;
      }
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        subt_[(std::size_t)a * q_ + b] = addt_[(std::size_t)a * q_ + negt_[b]];
  }
}

Felt Field::from_int(int d) const {
  if (d < 0 || d >= p_)
    throw std::invalid_argument("field: prime-subfield literal out of range");
  return {(std::uint16_t)d};
}

Felt Field::from_coeffs(std::span<const int> c) const {
  if ((int)c.size() > m_)
    throw std::invalid_argument("field: too many coefficients");
  std::uint32_t packed = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= p_)
      throw std::invalid_argument("field: coefficient out of range");
    packed += (std::uint32_t)c[i] * pw_[i];
  }
  return {(std::uint16_t)packed};
}

std::vector<int> Field::coeffs(Felt a) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = (int)(a.packed / pw_[i]) % p_;
  return c;
}

Felt Field::add(Felt a, Felt b) const {
  if (p_ == 2) return {(std::uint16_t)(a.packed ^ b.packed)};
  if (!addt_.empty()) return {addt_[(std::size_t)a.packed * q_ + b.packed]};
  std::uint32_t s = 0;
  for (int i = 0; i < m_; ++i) {
    int da = (a.packed / (int)pw_[i]) % p_, db = (b.packed / (int)pw_[i]) % p_;
    s += (std::uint32_t)((da + db) % p_) * pw_[i];
  }
  return {(std::uint16_t)s};
}

Felt Field::neg(Felt a) const { return {negt_[a.packed]}; }

Felt Field::sub(Felt a, Felt b) const {
  if (p_ == 2) return {(std::uint16_t)(a.packed ^ b.packed)};
  if (!subt_.empty()) return {subt_[(std::size_t)a.packed * q_ + b.packed]};
  return add(a, neg(b));
}

Felt Field::mul(Felt a, Felt b) const {
  if (!mult_.empty()) return {mult_[(std::size_t)a.packed * q_ + b.packed]};
  if (a.packed == 0 || b.packed == 0) return {};
  int k = log_[a.packed] + log_[b.packed];
  if (k >= q_ - 1) k -= q_ - 1;
  return {antilog_[k]};
}

Felt Field::inv(Felt a) const {
  if (a.packed == 0) throw std::invalid_argument("field: division by zero");
  int k = log_[a.packed];
  return {antilog_[k == 0 ? 0 : q_ - 1 - k]};
}

Felt Field::div(Felt a, Felt b) const {
  if (b.packed == 0) throw std::invalid_argument("field: division by zero");
  if (a.packed == 0) return {};
  int k = log_[a.packed] - log_[b.packed];
  if (k < 0) k += q_ - 1;
  return {antilog_[k]};
}

Felt Field::pow(Felt a, long long k) const {
  if (a.packed == 0) {
    if (k > 0) return {};
    if (k == 0) return one();
    throw std::invalid_argument("field: zero to a negative power");
  }
  long long e = ((long long)log_[a.packed] * (k % (q_ - 1))) % (q_ - 1);
  if (e < 0) e += q_ - 1;
  return {antilog_[e]};
}

int Field::log(Felt a) const {
  if (a.packed == 0) throw std::invalid_argument("field: log of zero");
  return log_[a.packed];
}

Felt Field::antilog(long long k) const {
  k %= q_ - 1;
  if (k < 0) k += q_ - 1;
  return {antilog_[k]};
}

Felt Field::frobenius(Felt a, int e) const {
  if (a.packed == 0) return {};
  long long pe = 1;
  e = ((e % m_) + m_) % m_;
  for (int i = 0; i < e; ++i) pe = pe * p_ % (q_ - 1);
  return {antilog_[(int)((long long)log_[a.packed] * pe % (q_ - 1))]};
}

std::string Field::modulus_text() const {
  std::string s;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

const std::vector<std::pair<int, std::vector<int>>>& default_moduli() {
  static const std::vector<std::pair<int, std::vector<int>>> table = {
      {4, {1, 1, 1}},        // t^2 + t + 1
      {9, {2, 2, 1}},        // t^2 + 2t + 2
      {16, {1, 1, 0, 0, 1}}, // t^4 + t + 1
      {25, {2, 4, 1}},       // t^2 + 4t + 2
      {49, {3, 6, 1}},       // t^2 + 6t + 3
  };
  return table;
}

Field field_build(int p, int m, std::optional<std::vector<int>> modulus) {
  if (modulus) return Field(p, m, std::move(*modulus));
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  for (const auto& [dq, mod] : default_moduli())
    if (dq == q) return Field(p, m, mod);
  throw std::invalid_argument("field: no default modulus for q=" + std::to_string(q));
}

FrobeniusAut make_frobenius(const Field& f, int e) {
  int m = f.m();
  e = ((e % m) + m) % m;
  return {e, e == 0 ? 1 : m / std::gcd(m, e)};
}

Felt frobenius_apply(const Field& f, FrobeniusAut theta, Felt a) {
  return f.frobenius(a, theta.e);
}

Felt parse_element(const Field& f, std::string_view token) {
  if (token.empty()) throw std::invalid_argument("element: empty token");
  if (token[0] == 't') {
    if (token.size() == 1) return f.t();
    if (token[1] != '^' || token.size() == 2)
      throw std::invalid_argument("element: malformed token '" + std::string(token) + "'");
    long long k = 0;
    for (char ch : token.substr(2)) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("element: malformed exponent in '" + std::string(token) + "'");
      k = k * 10 + (ch - '0');
    }
    return f.antilog(k);
  }
  int d = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("element: malformed token '" + std::string(token) + "'");
    d = d * 10 + (ch - '0');
    if (d >= f.p())
      throw std::invalid_argument("element: literal '" + std::string(token) +
                                  "' is not a prime-subfield digit (p=" +
                                  std::to_string(f.p()) + ")");
  }
  return f.from_int(d);
}

std::string format_element(const Field& f, Felt a) {
  if (f.is_zero(a)) return "0";
  auto c = f.coeffs(a);
  bool prime_subfield = true;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) prime_subfield = false;
  if (prime_subfield) return std::to_string(c[0]);
  if (a == f.t()) return "t";
  return "t^" + std::to_string(f.log(a));
}

Felt FieldContext::sigma_pow(Felt a, int k) const {
  return f_->frobenius(a, theta_.e * k);
}

}  // namespace sdc
