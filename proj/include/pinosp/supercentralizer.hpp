#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pinosp/osp.hpp"

namespace pinosp {

/// How an O element was built: by the projector definition or by one of the
/// two explicit expansions.
enum class Route { projector, first, second };

struct OElement {
  std::vector<Covector> indices;
  Route route = Route::projector;
  Element value;
};

/// A factor f(u_1, ..., u_k) that is skew-symmetric in its arguments.
using SkewFactor = std::function<Element(const std::vector<Covector>&)>;

/// A(f_1 f_2 ... f_m) over all arguments, for factors that are each already
/// skew in their own block: sum over order-preserving splittings of `us` into
/// blocks of the given sizes, with shuffle signs, over the multinomial.
Element antisymmetrized_product(const AlgebraPtr& ctx, const std::vector<Covector>& us,
                                const std::vector<int>& sizes, const std::vector<SkewFactor>& factors);

/// Generators of the supercentralizer of osp(1|2) in A_kappa.
class Supercentralizer {
 public:
  explicit Supercentralizer(AlgebraPtr ctx);

  const AlgebraPtr& context() const { return ctx_; }
  const Osp& osp() const { return *osp_; }
  int dim() const { return ctx_->dim(); }

  /// One-index element sum_s (alpha_s^vee(u) / 2) kappa(s) s gamma_{alpha_s}.
  Element ocal(const Covector& u) const;
  /// Dunkl angular momentum u beta(v) - v beta(u).
  Element M(const Covector& u, const Covector& v) const;
  /// A(gamma_{u_1} ... gamma_{u_n}).
  Element gamma_wedge(const std::vector<Covector>& us) const;

  /// O_{u_1...u_n} = -P_+(A(gamma_{u_1...u_n})) / 2; cached by index tuple.
  /// Throws std::invalid_argument unless 1 <= n <= d.
  Element O(const std::vector<Covector>& us) const;
  /// The explicit expansions in terms of A(gamma), O_u, M_uv (first form) or
  /// A(gamma), O_u, O_uv (second form); Route::projector forwards to O().
  Element O_explicit(const std::vector<Covector>& us, Route form) const;
  OElement build(const std::vector<Covector>& us, Route route) const;

  /// O of the basis covectors x_a for a in A (1-based, any order). Throws on
  /// an empty or out-of-range subset.
  Element O_subset(const std::vector<int>& A) const;
  /// O_{1...d}.
  Element O_top() const;
  /// (d - 2) sum_j O_j^2 + sum_{j<k} O_jk^2; needs an orthonormal basis.
  Element central_omega() const;

  std::size_t cached() const;

 private:
  void check_arity(std::size_t n) const;
  Covector x(int p) const { return basis_covector(dim(), p); }

  AlgebraPtr ctx_;
  std::unique_ptr<Osp> osp_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Element> cache_;
};

}  // namespace pinosp
