#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sdc/galois.hpp"

namespace sdc {

/// Element of R_l = F_{p^m}[v]/(v^l - v): coefficients of 1, v, ..., v^{l-1}.
struct RlElem {
  std::vector<Felt> v;
  friend auto operator<=>(const RlElem&, const RlElem&) = default;
};

/// The ring R_l over a fixed field.  Commutative; multiplication reduces by
/// v^l = v.  Immutable and pure like Field.
class RlRing {
 public:
  RlRing(const Field& f, int l);

  const Field& field() const { return *f_; }
  int l() const { return l_; }

  RlElem zero() const { return {std::vector<Felt>(l_)}; }
  RlElem one() const;
  RlElem v() const;
  RlElem embed(Felt a) const;

  bool is_zero(const RlElem& a) const;
  RlElem add(const RlElem& a, const RlElem& b) const;
  RlElem sub(const RlElem& a, const RlElem& b) const;
  RlElem neg(const RlElem& a) const;
  RlElem mul(const RlElem& a, const RlElem& b) const;
  RlElem scale(Felt c, const RlElem& a) const;

  /// Inverse when a is a unit; nullopt otherwise (R_l has zero divisors).
  std::optional<RlElem> try_inverse(const RlElem& a) const;

  /// sigma(sum a_i v^i) = sum theta(a_i) v^i.
  RlElem sigma(FrobeniusAut theta, const RlElem& a) const;

 private:
  void check(const RlElem& a) const;
  const Field* f_;
  int l_;
};

/// The orthogonal idempotents gamma_1..gamma_l of R_l, built from
/// varsigma = t^((q-1)/(l-1)).  Requires (l-1) | (q-1).
struct IdempotentSet {
  std::vector<RlElem> gammas;
  Felt varsigma;
  std::vector<int> support;  // first nonzero v-index of each gamma
};

/// Builds and verifies the idempotents: gamma_i*gamma_j = delta_ij*gamma_i
/// and sum gamma_i = 1 are checked before returning.
IdempotentSet idempotent_set(const RlRing& ring);

/// r = sum gamma_i r_i with scalar r_i; returns (r_1, ..., r_l).
std::vector<Felt> crt_decompose(const RlRing& ring, const IdempotentSet& idem,
                                const RlElem& r);
RlElem crt_compose(const RlRing& ring, const IdempotentSet& idem,
                   std::span<const Felt> cs);

/// True iff sigma(gamma_i) = gamma_i for every i.  The R_l code
/// construction requires this and refuses otherwise.
bool sigma_fixes_idempotents(const RlRing& ring, FrobeniusAut theta,
                             const IdempotentSet& idem);

/// Coefficient context for skew polynomial arithmetic over R_l:
/// sigma extends theta coefficientwise, delta(r) = alpha*(sigma(r) - r).
class RingContext {
 public:
  using Elem = RlElem;

  RingContext(const RlRing& ring, FrobeniusAut theta, RlElem alpha)
      : r_(&ring), theta_(theta), alpha_(std::move(alpha)) {}

  const RlRing& ring() const { return *r_; }
  FrobeniusAut theta() const { return theta_; }
  const RlElem& alpha() const { return alpha_; }

  RlElem zero() const { return r_->zero(); }
  RlElem one() const { return r_->one(); }
  bool is_zero(const RlElem& a) const { return r_->is_zero(a); }
  bool equal(const RlElem& a, const RlElem& b) const { return a == b; }
  RlElem add(const RlElem& a, const RlElem& b) const { return r_->add(a, b); }
  RlElem sub(const RlElem& a, const RlElem& b) const { return r_->sub(a, b); }
  RlElem mul(const RlElem& a, const RlElem& b) const { return r_->mul(a, b); }
  RlElem neg(const RlElem& a) const { return r_->neg(a); }
  std::optional<RlElem> try_inverse(const RlElem& a) const {
    return r_->try_inverse(a);
  }

  RlElem sigma(const RlElem& a) const { return r_->sigma(theta_, a); }
  RlElem sigma_pow(const RlElem& a, int k) const {
    return r_->sigma(FrobeniusAut{theta_.e * k, 0}, a);
  }
  RlElem delta(const RlElem& a) const {
    return r_->mul(alpha_, r_->sub(sigma(a), a));
  }

 private:
  const RlRing* r_;
  FrobeniusAut theta_;
  RlElem alpha_;
};

/// Spec ops sigma_apply / delta_apply for both hosts.
inline Felt sigma_apply(const FieldContext& ctx, Felt a) { return ctx.sigma(a); }
inline Felt delta_apply(const FieldContext& ctx, Felt a) { return ctx.delta(a); }
inline RlElem sigma_apply(const RingContext& ctx, const RlElem& a) {
  return ctx.sigma(a);
}
inline RlElem delta_apply(const RingContext& ctx, const RlElem& a) {
  return ctx.delta(a);
}

}  // namespace sdc
