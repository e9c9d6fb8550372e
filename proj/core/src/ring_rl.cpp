#include "sdc/ring_rl.hpp"

#include <stdexcept>

#include "sdc/matrix.hpp"

namespace sdc {

RlRing::RlRing(const Field& f, int l) : f_(&f), l_(l) {
  if (l < 2) throw std::invalid_argument("ring_rl: l must be >= 2");
}

RlElem RlRing::one() const {
  RlElem a{std::vector<Felt>(l_)};
  a.v[0] = f_->one();
  return a;
}

RlElem RlRing::v() const {
  RlElem a{std::vector<Felt>(l_)};
  a.v[1] = f_->one();
  return a;
}

RlElem RlRing::embed(Felt c) const {
  RlElem a{std::vector<Felt>(l_)};
  a.v[0] = c;
  return a;
}

void RlRing::check(const RlElem& a) const {
  if ((int)a.v.size() != l_)
    throw std::invalid_argument("ring_rl: element has wrong length");
}

bool RlRing::is_zero(const RlElem& a) const {
  check(a);
  for (Felt c : a.v)
    if (!f_->is_zero(c)) return false;
  return true;
}

RlElem RlRing::add(const RlElem& a, const RlElem& b) const {
  check(a);
  check(b);
  RlElem r{std::vector<Felt>(l_)};
  for (int i = 0; i < l_; ++i) r.v[i] = f_->add(a.v[i], b.v[i]);
  return r;
}

RlElem RlRing::sub(const RlElem& a, const RlElem& b) const {
  check(a);
  check(b);
  RlElem r{std::vector<Felt>(l_)};
  for (int i = 0; i < l_; ++i) r.v[i] = f_->sub(a.v[i], b.v[i]);
  return r;
}

RlElem RlRing::neg(const RlElem& a) const {
  check(a);
  RlElem r{std::vector<Felt>(l_)};
  for (int i = 0; i < l_; ++i) r.v[i] = f_->neg(a.v[i]);
  return r;
}

RlElem RlRing::mul(const RlElem& a, const RlElem& b) const {
  check(a);
  check(b);
  // Convolve, then fold v^j (j >= l) down via v^l = v, i.e. j -> j-(l-1).
  std::vector<Felt> prod(2 * l_ - 1);
  for (int i = 0; i < l_; ++i) {
    if (f_->is_zero(a.v[i])) continue;
    for (int j = 0; j < l_; ++j)
      prod[i + j] = f_->add(prod[i + j], f_->mul(a.v[i], b.v[j]));
  }
  for (int j = 2 * l_ - 2; j >= l_; --j) {
    if (f_->is_zero(prod[j])) continue;
    prod[j - (l_ - 1)] = f_->add(prod[j - (l_ - 1)], prod[j]);
    prod[j] = Felt{};
  }
  prod.resize(l_);
  return {std::move(prod)};
}

RlElem RlRing::scale(Felt c, const RlElem& a) const {
  check(a);
  RlElem r{std::vector<Felt>(l_)};
  for (int i = 0; i < l_; ++i) r.v[i] = f_->mul(c, a.v[i]);
  return r;
}

std::optional<RlElem> RlRing::try_inverse(const RlElem& a) const {
  check(a);
  // Multiplication-by-a as an l x l matrix over the field; a is a unit iff
  // the matrix is invertible.
  Matrix mat(l_, l_);
  RlElem basis = one();
  for (int j = 0; j < l_; ++j) {
    if (j > 0) basis = mul(basis, v());
    RlElem col = mul(a, basis);
    for (int i = 0; i < l_; ++i) mat(i, j) = col.v[i];
  }
  std::vector<Felt> e0(l_);
  e0[0] = f_->one();
  auto x = solve(*f_, mat, e0);
  if (!x) return std::nullopt;
  RlElem inv{std::move(*x)};
  if (!(mul(a, inv) == one())) return std::nullopt;
  return inv;
}

RlElem RlRing::sigma(FrobeniusAut theta, const RlElem& a) const {
  check(a);
  RlElem r{std::vector<Felt>(l_)};
  for (int i = 0; i < l_; ++i) r.v[i] = f_->frobenius(a.v[i], theta.e);
  return r;
}

IdempotentSet idempotent_set(const RlRing& ring) {
  const Field& f = ring.field();
  int l = ring.l();
  if ((f.q() - 1) % (l - 1) != 0)
    throw std::invalid_argument("idempotent_set: (l-1) must divide q-1");
  Felt varsigma = f.antilog((f.q() - 1) / (l - 1));
  // 1/(l-1) computed in the prime subfield; (l-1) | (q-1) rules out p | (l-1).
  Felt inv_lm1 = f.inv(f.from_int((l - 1) % f.p()));

  std::vector<RlElem> gammas;
  {
    // gamma_1 = 1 - v^{l-1}
    RlElem g = ring.zero();
    g.v[0] = f.one();
    g.v[l - 1] = f.neg(f.one());
    gammas.push_back(std::move(g));
  }
  for (int i = 2; i <= l; ++i) {
    // gamma_i = 1/(l-1) * (sum_{j=1}^{l-2} varsigma^{(i-2)j} v^j + v^{l-1})
    RlElem g = ring.zero();
    for (int j = 1; j <= l - 2; ++j)
      g.v[j] = f.pow(varsigma, (long long)(i - 2) * j);
    g.v[l - 1] = f.one();
    gammas.push_back(ring.scale(inv_lm1, g));
  }

  // Verify orthogonal idempotency and the partition of unity.
  RlElem sum = ring.zero();
  for (int i = 0; i < l; ++i) {
    sum = ring.add(sum, gammas[i]);
    for (int j = 0; j < l; ++j) {
      RlElem prod = ring.mul(gammas[i], gammas[j]);
      const RlElem& expect = i == j ? gammas[i] : ring.zero();
      if (!(prod == expect))
        throw std::runtime_error("idempotent_set: orthogonality check failed");
    }
  }
  if (!(sum == ring.one()))
    throw std::runtime_error("idempotent_set: idempotents do not sum to 1");

  std::vector<int> support(l, -1);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (!f.is_zero(gammas[i].v[j])) {
        support[i] = j;
        break;
      }
  return {std::move(gammas), varsigma, std::move(support)};
}

std::vector<Felt> crt_decompose(const RlRing& ring, const IdempotentSet& idem,
                                const RlElem& r) {
  const Field& f = ring.field();
  int l = ring.l();
  std::vector<Felt> cs(l);
  for (int i = 0; i < l; ++i) {
    RlElem gi_r = ring.mul(idem.gammas[i], r);
    int j = idem.support[i];
    cs[i] = f.div(gi_r.v[j], idem.gammas[i].v[j]);
    if (!(gi_r == ring.scale(cs[i], idem.gammas[i])))
      throw std::runtime_error("crt_decompose: gamma_i*r is not scalar on gamma_i");
  }
  return cs;
}

RlElem crt_compose(const RlRing& ring, const IdempotentSet& idem,
                   std::span<const Felt> cs) {
  if ((int)cs.size() != ring.l())
    throw std::invalid_argument("crt_compose: wrong component count");
  RlElem r = ring.zero();
  for (int i = 0; i < ring.l(); ++i)
    r = ring.add(r, ring.scale(cs[i], idem.gammas[i]));
  return r;
}

bool sigma_fixes_idempotents(const RlRing& ring, FrobeniusAut theta,
                             const IdempotentSet& idem) {
  for (const RlElem& g : idem.gammas)
    if (!(ring.sigma(theta, g) == g)) return false;
  return true;
}

}  // namespace sdc
