#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "csa/algebra.hpp"

namespace csa {

/// Bimodule (l, r, V) of a center-symmetric algebra: per basis element e_i a
/// pair of vdim x vdim matrices l_i, r_i acting on column coordinates of V.
/// Only constructible through `make`, which verifies the axioms.
class Bimodule {
 public:
  /// Throws Refusal if (l, r) fails the bimodule axioms or the base is not
  /// center-symmetric; InputError on shape problems.
  /// `vdim` is only needed when the base has dimension 0 (no matrices to read it from).
  static Bimodule make(Algebra base, std::vector<Mat> l, std::vector<Mat> r,
                       std::optional<std::size_t> vdim = std::nullopt);
  /// (L, R, A): the algebra acting on itself.
  static Bimodule regular(const Algebra& base);
  static Bimodule zero(const Algebra& base, std::size_t vdim);

  [[nodiscard]] const Algebra& base() const { return base_; }
  [[nodiscard]] std::size_t vdim() const { return vdim_; }
  [[nodiscard]] const std::vector<Mat>& l() const { return l_; }
  [[nodiscard]] const std::vector<Mat>& r() const { return r_; }

 private:
  Bimodule(Algebra base, std::size_t vdim, std::vector<Mat> l, std::vector<Mat> r)
      : base_(std::move(base)), vdim_(vdim), l_(std::move(l)), r_(std::move(r)) {}

  Algebra base_;
  std::size_t vdim_ = 0;
  std::vector<Mat> l_;
  std::vector<Mat> r_;
};

/// Items "commuting_actions" ([l_x, r_y] = [l_y, r_x]) and "product_actions"
/// (l_{xy} - l_x l_y = r_x r_y - r_{yx}), with l, r extended linearly.
Report check_bimodule(const Algebra& a, std::span<const Mat> l, std::span<const Mat> r);
inline bool is_bimodule(const Algebra& a, std::span<const Mat> l, std::span<const Mat> r) {
  return check_bimodule(a, l, r).verdict();
}

/// Product on A (+) V, basis (e_1..e_n, v_1..v_m):
/// e_i*e_j = e_i.e_j, e_i*v_a = l_i v_a, v_a*e_i = r_i v_a, v_a*v_b = 0.
/// No validation: this is the candidate whose center-symmetry is equivalent
/// to (l, r) being a bimodule.
Algebra semidirect_candidate(const Algebra& a, std::span<const Mat> l, std::span<const Mat> r,
                             std::optional<std::size_t> vdim = std::nullopt);
inline Algebra semidirect_sum(const Bimodule& b) {
  return semidirect_candidate(b.base(), b.l(), b.r(), b.vdim());
}

/// (r^T, l^T) on the dual space.
Bimodule dual_bimodule(const Bimodule& b);

/// l_i - r_i for each basis element; a representation of the sub-adjacent Lie algebra.
std::vector<Mat> induced_lie_rep(const Bimodule& b);

/// Action of a vector x: sum_m x_m mats[m].
inline Mat action_of(std::span<const Mat> mats, const Vec& x) { return linear_combination(x, mats); }

/// Validates one action list: `count` matrices, each dim x dim.
/// Module dimension read off the action matrices, or `fallback` when there are none.
std::size_t action_dim(std::span<const Mat> l, std::span<const Mat> r, std::optional<std::size_t> fallback);

void require_action_shape(std::span<const Mat> mats, std::size_t count, std::size_t dim,
                          const char* what);

}  // namespace csa
