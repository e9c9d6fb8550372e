#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// Element of F_{p^m} in polynomial basis: packed base-p digits, digit i
/// holding the coefficient of t^i.  Plain data; all arithmetic goes
/// through the owning Field.
struct Felt {
  std::uint16_t packed = 0;
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// The automorphism theta(a) = a^(p^e).  order = m / gcd(m, e).
struct FrobeniusAut {
  int e = 1;
  int order = 1;
};

/// A concrete realization of F_{p^m}: a monic irreducible modulus over F_p,
/// primitive element t (the residue class of the variable), and
/// discrete-log tables for the multiplicative group of order q-1.
///
/// Immutable after construction; all operations are const and pure, so a
/// Field can be shared freely across threads.
class Field {
 public:
  /// Validates the modulus (monic, degree m, irreducible) and that t is
  /// primitive under it; builds the log/antilog tables.
  Field(int p, int m, std::vector<int> modulus);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_text() const;

  Felt zero() const { return {}; }
  Felt one() const { return {1}; }
  Felt t() const { return t_; }
  /// Prime-subfield element d*1, d in [0, p).
  Felt from_int(int d) const;
  Felt from_coeffs(std::span<const int> c) const;
  std::vector<int> coeffs(Felt a) const;

  bool is_zero(Felt a) const { return a.packed == 0; }
  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const;
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  Felt div(Felt a, Felt b) const;
  Felt inv(Felt a) const;
  Felt pow(Felt a, long long k) const;

  /// Discrete log base t; throws on zero.
  int log(Felt a) const;
  /// t^k (k reduced mod q-1; negative k allowed).
  Felt antilog(long long k) const;
  /// a^(p^e).
  Felt frobenius(Felt a, int e) const;

 private:
  void check_modulus() const;
  void build_tables();
  Felt mul_raw(Felt a, Felt b) const;  // table-free, used during construction

  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;
  Felt t_;
  std::vector<std::uint16_t> antilog_;  // size q-1
  std::vector<int> log_;                // size q, log_[0] unused
  std::vector<std::uint16_t> addt_, subt_, mult_;  // q*q tables (q <= 256)
  std::vector<std::uint16_t> negt_;
  std::vector<std::uint32_t> pw_;  // p^0..p^m
};

/// Builds F_{p^m}; when modulus is omitted a built-in default is used
/// (available for q in {4, 9, 16, 25, 49}).
Field field_build(int p, int m,
                  std::optional<std::vector<int>> modulus = std::nullopt);

/// Default moduli as (q, ascending coefficient list) pairs.
const std::vector<std::pair<int, std::vector<int>>>& default_moduli();

FrobeniusAut make_frobenius(const Field& f, int e);
Felt frobenius_apply(const Field& f, FrobeniusAut theta, Felt a);

/// Token grammar: "0" | DIGIT+ | "t" | "t^" DIGIT+.  A bare integer d is
/// the prime-subfield element d*1 (d < p required); "t^k" is the k-th
/// power of t.
Felt parse_element(const Field& f, std::string_view token);
/// Inverse of parse_element: "0", a prime-subfield digit, "t", or "t^k".
std::string format_element(const Field& f, Felt a);

/// Coefficient context for skew polynomial arithmetic over a field:
/// sigma = theta (a Frobenius power), delta(a) = alpha*(sigma(a) - a).
class FieldContext {
 public:
  using Elem = Felt;

  FieldContext(const Field& f, FrobeniusAut theta, Felt alpha)
      : f_(&f), theta_(theta), alpha_(alpha) {}

  const Field& field() const { return *f_; }
  FrobeniusAut theta() const { return theta_; }
  Felt alpha() const { return alpha_; }

  Felt zero() const { return {}; }
  Felt one() const { return {1}; }
  bool is_zero(Felt a) const { return a.packed == 0; }
  bool equal(Felt a, Felt b) const { return a == b; }
  Felt add(Felt a, Felt b) const { return f_->add(a, b); }
  Felt sub(Felt a, Felt b) const { return f_->sub(a, b); }
  Felt mul(Felt a, Felt b) const { return f_->mul(a, b); }
  Felt neg(Felt a) const { return f_->neg(a); }
  std::optional<Felt> try_inverse(Felt a) const {
    if (is_zero(a)) return std::nullopt;
    return f_->inv(a);
  }

  Felt sigma(Felt a) const { return f_->frobenius(a, theta_.e); }
  Felt sigma_pow(Felt a, int k) const;
  Felt delta(Felt a) const { return f_->mul(alpha_, f_->sub(sigma(a), a)); }

 private:
  const Field* f_;
  FrobeniusAut theta_;
  Felt alpha_;
};

}  // namespace sdc
