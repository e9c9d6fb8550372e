#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdc/matrix.hpp"
#include "sdc/ring_rl.hpp"
#include "sdc/skew.hpp"

namespace sdc {

/// The (theta,delta)-cyclic shift:
/// (sigma(c_{n-1})+delta(c_0), sigma(c_0)+delta(c_1), ..., sigma(c_{n-2})+delta(c_{n-1})).
template <CoefficientContext C>
std::vector<typename C::Elem> tau_shift(const C& ctx,
                                        std::span<const typename C::Elem> c) {
  std::size_t n = c.size();
  std::vector<typename C::Elem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(ctx.add(ctx.sigma(c[(i + n - 1) % n]), ctx.delta(c[i])));
  return out;
}

struct DistanceResult {
  int d = 0;
  bool exact = false;
  std::vector<Felt> witness;  // a minimum-weight codeword when exact
  std::uint64_t nodes = 0;
};

/// An [n,k] linear code over a field: full-rank generator matrix G with the
/// derived parity-check matrix H (G*H^T = 0, rank H = n-k).
struct LinearCode {
  const Field* field = nullptr;
  int n = 0, k = 0;
  Matrix G;
  Matrix H;
  std::optional<DistanceResult> distance;
};

/// Validates rank(G) = rows and derives H.
LinearCode make_linear_code(const Field& f, Matrix g);

/// Standard-echelon parity check for a full-rank generator matrix.
Matrix parity_check(const Field& f, const Matrix& g);

struct DistanceOptions {
  int max_w = std::numeric_limits<int>::max();
  std::uint64_t node_budget = 2'000'000'000;
  /// Cross-check exact results by full codeword enumeration when
  /// q^k <= enum_crosscheck_words (an independent route; a mismatch throws).
  std::uint64_t enum_crosscheck_words = 4096;
};

/// Exact minimum distance by parity-check column-dependency search:
/// for w = 1, 2, ... every independent (w-1)-subset of columns of H is
/// extended by one column; the first dependent w-set certifies d = w (the
/// completed levels below certify d >= w).  Budget exhaustion returns the
/// certified lower bound with exact = false, never a silent wrong answer.
DistanceResult min_distance(const LinearCode& code, DistanceOptions opt = {});

/// Independent oracle: minimum weight over all q^k - 1 nonzero codewords.
/// nullopt when q^k > max_words.
std::optional<DistanceResult> min_weight_by_enumeration(const LinearCode& code,
                                                        std::uint64_t max_words);

enum class Classification { kMds, kAlmostMds, kNeither };

/// MDS iff n+1 = k+d; almost MDS iff n = k+d.  Requires exact d.
Classification classify(const LinearCode& code);
std::string to_string(Classification c);

/// A (theta,delta)-cyclic code over a field, generated by a monic right
/// divisor g of x^n - 1; k = n - deg g.
struct SkewCyclicCode {
  FieldContext ctx;
  SkewPoly<Felt> g;
  int n = 0;
  LinearCode code;
};

/// Rows of G are tau^i of the padded coefficient vector of g, i = 0..k-1.
/// Verifies full rank and that tau(row_{k-1}) stays in the row space.
SkewCyclicCode code_from_generator(const FieldContext& ctx,
                                   const SkewPoly<Felt>& g, int n);

/// A (sigma,delta)-cyclic code over R_l as l component codes of common
/// length n, with the combined generator f = sum gamma_i g_i.
struct RlCode {
  RingContext ctx;
  IdempotentSet idem;
  std::vector<SkewCyclicCode> components;
  SkewPoly<RlElem> f;
  int n = 0;
};

/// Builds the combined code; requires sigma to fix the idempotents, each
/// g_i to right-divide x^n - 1 over the field, and verifies that
/// f right-divides x^n - 1 over R_l and gamma_i*f = gamma_i*g_i.
RlCode rl_code_build(const RingContext& ctx, const IdempotentSet& idem,
                     const std::vector<SkewPoly<Felt>>& gs, int n);

/// An l x l matrix N with N*N^T = beta*I, beta != 0.
struct GrayMatrix {
  Matrix N;
  Felt beta;
};

/// Verifies the orthogonality condition and returns beta.
GrayMatrix gray_matrix_check(const Field& f, const Matrix& n_mat);

/// Componentwise Gray image: each R_l coordinate a_0+a_1 v+...+a_{l-1}v^{l-1}
/// maps to the length-l block (a_0,...,a_{l-1})N; generators are the images
/// of gamma_i * row over all component generator rows.  Rank is verified to
/// equal sum k_i.
LinearCode gray_image(const RlCode& code, const GrayMatrix& gray);

}  // namespace sdc
