#include "sdc/codec.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sdc {

Matrix parity_check(const Field& f, const Matrix& g) {
  return parity_from_generator(f, g);
}

LinearCode make_linear_code(const Field& f, Matrix g) {
  LinearCode code;
  code.field = &f;
  code.n = g.cols();
  code.k = g.rows();
  code.H = parity_from_generator(f, g);  // throws on rank deficiency
  code.G = std::move(g);
  if (!is_zero_matrix(mat_mul(f, code.G, transpose(code.H))))
    throw std::runtime_error("linear_code: G*H^T != 0");
  return code;
}

namespace {

int weight(std::span<const Felt> v) {
  int w = 0;
  for (Felt c : v)
    if (c != Felt{}) ++w;
  return w;
}

// Reduced column with its pivot row, part of the incremental elimination
// state of the dependency search.
struct ReducedCol {
  std::vector<Felt> v;  // scaled so v[pivot] = 1
  int pivot = -1;
};

bool reduce_against(const Field& f, std::vector<Felt>& v,
                    const std::vector<ReducedCol>& basis) {
  for (const ReducedCol& b : basis) {
    Felt c = v[b.pivot];
    if (f.is_zero(c)) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = f.sub(v[i], f.mul(c, b.v[i]));
  }
  for (Felt c : v)
    if (c != Felt{}) return false;
  return true;  // dependent
}

// DFS over increasing column indices: enumerate independent subsets of size
// w-1 and test each extension column for span membership.  Returns the
// dependent w-set through `dep`, or false.  Budget counts column reductions.
bool find_dependent_set(const Field& f, const std::vector<std::vector<Felt>>& cols,
                        int w, std::uint64_t budget, std::uint64_t& nodes,
                        bool& budget_hit, std::vector<int>& dep) {
  int n = (int)cols.size();
  std::vector<ReducedCol> basis;
  std::vector<int> chosen;

  auto dfs = [&](auto&& self, int start) -> bool {
    int depth = (int)chosen.size();
    for (int c = start; c <= n - (w - depth); ++c) {
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      std::vector<Felt> v = cols[c];
      bool dependent = reduce_against(f, v, basis);
      if (dependent) {
        // Levels below w found no smaller dependent set, so this one has
        // size depth+1 == w.
        dep = chosen;
        dep.push_back(c);
        return true;
      }
      if (depth + 1 < w) {
        int pivot = 0;
        while (f.is_zero(v[pivot])) ++pivot;
        Felt s = f.inv(v[pivot]);
        for (Felt& x : v) x = f.mul(x, s);
        basis.push_back({std::move(v), pivot});
        chosen.push_back(c);
        if (self(self, c + 1)) return true;
        chosen.pop_back();
        basis.pop_back();
        if (budget_hit) return false;
      }
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace

DistanceResult min_distance(const LinearCode& code, DistanceOptions opt) {
  const Field& f = *code.field;
  if (code.k <= 0) throw std::invalid_argument("min_distance: zero code");
  DistanceResult res;
  if (code.k == code.n) {
    // H is empty: the whole space, d = 1.
    res.d = 1;
    res.exact = true;
    res.witness.assign(code.n, Felt{});
    res.witness[0] = f.one();
    return res;
  }

  std::vector<std::vector<Felt>> cols(code.n);
  for (int c = 0; c < code.n; ++c) {
    cols[c].resize(code.H.rows());
    for (int r = 0; r < code.H.rows(); ++r) cols[c][r] = code.H(r, c);
  }

  const int singleton_bound = code.n - code.k + 1;
  const int limit = std::min(opt.max_w, singleton_bound);
  for (int w = 1; w <= limit; ++w) {
    bool budget_hit = false;
    std::vector<int> dep;
    if (find_dependent_set(f, cols, w, opt.node_budget, res.nodes, budget_hit, dep)) {
      res.d = w;
      res.exact = true;
      // Solve for the dependency coefficients to exhibit a codeword of
      // weight w.
      Matrix sub(code.H.rows(), w);
      for (int j = 0; j < w; ++j)
        for (int r = 0; r < code.H.rows(); ++r) sub(r, j) = cols[dep[j]][r];
      std::vector<Felt> lambda = kernel_vector(f, sub);
      res.witness.assign(code.n, Felt{});
      for (int j = 0; j < w; ++j) res.witness[dep[j]] = lambda[j];
      if (weight(res.witness) != w)
        throw std::runtime_error("min_distance: witness weight mismatch");
      for (int r = 0; r < code.H.rows(); ++r) {
        Felt acc{};
        for (int c = 0; c < code.n; ++c)
          acc = f.add(acc, f.mul(code.H(r, c), res.witness[c]));
        if (acc != Felt{})
          throw std::runtime_error("min_distance: witness is not a codeword");
      }
      // Independent cross-check on tiny codes.
      auto oracle = min_weight_by_enumeration(code, opt.enum_crosscheck_words);
      if (oracle && oracle->d != res.d)
        throw std::runtime_error("min_distance: column search disagrees with enumeration");
      return res;
    }
    if (budget_hit) {
      res.d = w;  // levels 1..w-1 completed: d >= w
      res.exact = false;
      return res;
    }
  }
  // All levels up to the bound completed without a dependency.
  res.d = limit + 1;
  res.exact = false;
  return res;
}

std::optional<DistanceResult> min_weight_by_enumeration(const LinearCode& code,
                                                        std::uint64_t max_words) {
  const Field& f = *code.field;
  const std::uint64_t q = (std::uint64_t)f.q();
  std::uint64_t words = 1;
  for (int i = 0; i < code.k; ++i) {
    if (words > max_words / q + 1) return std::nullopt;
    words *= q;
    if (words > max_words) return std::nullopt;
  }
  DistanceResult res;
  res.d = code.n + 1;
  std::vector<int> msg(code.k, 0);
  std::vector<Felt> cw(code.n);
  for (std::uint64_t idx = 1; idx < words; ++idx) {
    // odometer over message digits
    int pos = 0;
    while (true) {
      if (++msg[pos] < (int)q) break;
      msg[pos] = 0;
      ++pos;
    }
    std::fill(cw.begin(), cw.end(), Felt{});
    for (int i = 0; i < code.k; ++i) {
      if (msg[i] == 0) continue;
      Felt mi{(std::uint16_t)msg[i]};
      for (int j = 0; j < code.n; ++j)
        cw[j] = f.add(cw[j], f.mul(mi, code.G(i, j)));
    }
    int w = weight(cw);
    if (w > 0 && w < res.d) {
      res.d = w;
      res.witness = cw;
    }
  }
  res.exact = true;
  return res;
}

Classification classify(const LinearCode& code) {
  if (!code.distance || !code.distance->exact)
    throw std::invalid_argument("classify: exact distance required");
  int d = code.distance->d;
  if (code.n + 1 == code.k + d) return Classification::kMds;
  if (code.n == code.k + d) return Classification::kAlmostMds;
  return Classification::kNeither;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kMds: return "mds";
    case Classification::kAlmostMds: return "almost-mds";
    default: return "neither";
  }
}

SkewCyclicCode code_from_generator(const FieldContext& ctx,
                                   const SkewPoly<Felt>& g, int n) {
  const Field& f = ctx.field();
  if (g.is_zero() || !(g.c.back() == f.one()))
    throw std::invalid_argument("code_from_generator: g must be monic");
  if (g.degree() >= n)
    throw std::invalid_argument("code_from_generator: deg g must be < n");
  if (!is_right_divisor(ctx, g, n))
    throw std::invalid_argument("code_from_generator: g does not right-divide x^n-1");
  int k = n - g.degree();
  Matrix gen(k, n);
  std::vector<Felt> row(n, Felt{});
  std::copy(g.c.begin(), g.c.end(), row.begin());
  for (int i = 0; i < k; ++i) {
    if (i > 0) row = tau_shift(ctx, std::span<const Felt>(row));
    for (int j = 0; j < n; ++j) gen(i, j) = row[j];
  }
  SkewCyclicCode out{ctx, g, n, make_linear_code(f, std::move(gen))};
  if (out.code.k != k)
    throw std::runtime_error("code_from_generator: rank anomaly");
  // Closure witness: one more shift stays inside the row space.
  std::vector<Felt> next = tau_shift(ctx, std::span<const Felt>(row));
  Rref r = rref(f, out.code.G);
  if (!in_row_space(f, r, next))
    throw std::runtime_error("code_from_generator: row space is not shift-closed");
  return out;
}

RlCode rl_code_build(const RingContext& ctx, const IdempotentSet& idem,
                     const std::vector<SkewPoly<Felt>>& gs, int n) {
  const RlRing& ring = ctx.ring();
  const Field& f = ring.field();
  int l = ring.l();
  if ((int)gs.size() != l)
    throw std::invalid_argument("rl_code_build: expected one generator per component");
  if (!sigma_fixes_idempotents(ring, ctx.theta(), idem))
    throw std::invalid_argument(
        "rl_code_build: sigma does not fix the idempotents of R_l; "
        "the component decomposition is unavailable");

  // Component derivations: alpha splits as sum gamma_i alpha_i.
  std::vector<Felt> alpha_parts = crt_decompose(ring, idem, ctx.alpha());

  RlCode out{ctx, idem, {}, {}, n};
  std::vector<SkewDivision<FieldContext>> divisions;
  for (int i = 0; i < l; ++i) {
    FieldContext comp_ctx(f, ctx.theta(), alpha_parts[i]);
    if (!is_right_divisor(comp_ctx, gs[i], n))
      throw std::invalid_argument("rl_code_build: component " + std::to_string(i + 1) +
                                  " does not right-divide x^n-1");
    divisions.push_back(right_divide(comp_ctx, x_pow_minus_one(comp_ctx, n), gs[i]));
    out.components.push_back(code_from_generator(comp_ctx, gs[i], n));
  }

  // f = sum gamma_i g_i
  int deg = 0;
  for (const auto& g : gs) deg = std::max(deg, g.degree());
  std::vector<RlElem> fc(deg + 1, ring.zero());
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < (int)gs[i].c.size(); ++j)
      fc[j] = ring.add(fc[j], ring.scale(gs[i].c[j], idem.gammas[i]));
  out.f = poly_from(ctx, SkewPoly<RlElem>{std::move(fc)}.c);

  // gamma_i * f = gamma_i * g_i
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j <= deg; ++j) {
      RlElem lhs = ring.mul(idem.gammas[i], j < (int)out.f.c.size() ? out.f.c[j] : ring.zero());
      Felt gij = j < (int)gs[i].c.size() ? gs[i].c[j] : Felt{};
      if (!(lhs == ring.scale(gij, idem.gammas[i])))
        throw std::runtime_error("rl_code_build: gamma_i*f != gamma_i*g_i");
    }
  }

  // f right-divides x^n - 1 over R_l: the cofactor is sum gamma_i q_i with
  // q_i the field cofactors (sigma fixes the gammas, so they pass x).
  int qdeg = 0;
  for (const auto& dv : divisions) qdeg = std::max(qdeg, dv.q.degree());
  std::vector<RlElem> qc(qdeg + 1, ring.zero());
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < (int)divisions[i].q.c.size(); ++j)
      qc[j] = ring.add(qc[j], ring.scale(divisions[i].q.c[j], idem.gammas[i]));
  SkewPoly<RlElem> cofactor = poly_from(ctx, std::move(qc));
  if (!(skew_mul(ctx, cofactor, out.f) == x_pow_minus_one(ctx, n)))
    throw std::runtime_error("rl_code_build: f does not right-divide x^n-1 over R_l");
  return out;
}

GrayMatrix gray_matrix_check(const Field& f, const Matrix& n_mat) {
  if (n_mat.rows() != n_mat.cols() || n_mat.rows() < 1)
    throw std::invalid_argument("gray_matrix_check: N must be square");
  Matrix prod = mat_mul(f, n_mat, transpose(n_mat));
  Felt beta = prod(0, 0);
  if (f.is_zero(beta))
    throw std::invalid_argument("gray_matrix_check: N*N^T has zero diagonal");
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) {
      Felt expect = i == j ? beta : Felt{};
      if (!(prod(i, j) == expect))
        throw std::invalid_argument("gray_matrix_check: N*N^T is not beta*I");
    }
  if (rank(f, n_mat) != n_mat.rows())
    throw std::invalid_argument("gray_matrix_check: N is singular");
  return {n_mat, beta};
}

LinearCode gray_image(const RlCode& code, const GrayMatrix& gray) {
  const RlRing& ring = code.ctx.ring();
  const Field& f = ring.field();
  int l = ring.l();
  int n = code.n;
  if (gray.N.rows() != l)
    throw std::invalid_argument("gray_image: matrix size does not match l");

  auto phi = [&](const RlElem& r, Felt* out) {
    // (a_0,...,a_{l-1}) N
    for (int j = 0; j < l; ++j) {
      Felt acc{};
      for (int i = 0; i < l; ++i) acc = f.add(acc, f.mul(r.v[i], gray.N(i, j)));
      out[j] = acc;
    }
  };

  int total_k = 0;
  for (const auto& comp : code.components) total_k += comp.code.k;
  Matrix g(total_k, l * n);
  int gr = 0;
  for (int i = 0; i < l; ++i) {
    const Matrix& gi = code.components[i].code.G;
    for (int r = 0; r < gi.rows(); ++r, ++gr) {
      for (int c = 0; c < n; ++c) {
        RlElem coord = ring.scale(gi(r, c), code.idem.gammas[i]);
        std::vector<Felt> block(l);
        phi(coord, block.data());
        for (int j = 0; j < l; ++j) g(gr, c * l + j) = block[j];
      }
    }
  }
  LinearCode out = make_linear_code(f, std::move(g));  // verifies rank = sum k_i

  // Phi-linearity spot check on deterministic random samples.
  std::mt19937 rng(0xC0DE5u);
  std::uniform_int_distribution<int> dist(0, f.q() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    RlElem a = ring.zero(), b = ring.zero();
    for (int i = 0; i < l; ++i) {
      a.v[i] = Felt{(std::uint16_t)dist(rng)};
      b.v[i] = Felt{(std::uint16_t)dist(rng)};
    }
    Felt s{(std::uint16_t)dist(rng)};
    std::vector<Felt> pa(l), pb(l), psum(l), pscale(l);
    phi(a, pa.data());
    phi(b, pb.data());
    phi(ring.add(a, b), psum.data());
    phi(ring.scale(s, a), pscale.data());
    for (int j = 0; j < l; ++j) {
      if (!(psum[j] == f.add(pa[j], pb[j])) || !(pscale[j] == f.mul(s, pa[j])))
        throw std::runtime_error("gray_image: Phi is not linear");
    }
  }
  return out;
}

}  // namespace sdc
