#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csa/linalg.hpp"
#include "csa/report.hpp"
#include "csa/tensor.hpp"

namespace csa {

CheckResult check_antisymmetry(const T3& bracket);
/// [[x,y],z] + [[y,z],x] + [[z,x],y] == 0 on basis triples.
CheckResult check_jacobi(const T3& bracket);

/// Lie algebra by structure constants. Construction verifies antisymmetry
/// and the Jacobi identity exactly.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws Refusal when the bracket is not a Lie bracket, InputError on shape.
  explicit LieAlgebra(T3 bracket);
  static LieAlgebra abelian(std::size_t n) { return LieAlgebra(T3::cube(n)); }

  [[nodiscard]] std::size_t dim() const { return bracket_.d1(); }
  [[nodiscard]] const T3& constants() const { return bracket_; }
  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const;
  [[nodiscard]] Vec basis_bracket(std::size_t i, std::size_t j) const;
  /// (ad_i)(m, k) = [e_i, e_k]_m
  [[nodiscard]] Mat ad(std::size_t i) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  T3 bracket_ = T3::cube(0);
};

/// Vec-valued bracket from raw structure constants, no Lie check.
Vec bracket_of(const T3& bracket, const Vec& x, const Vec& y);
/// ad matrices of a raw bracket tensor.
std::vector<Mat> ad_matrices(const T3& bracket);

/// rho([e_i, e_j]) == [rho_i, rho_j] for all basis pairs, with rho extended linearly.
CheckResult check_representation(const T3& bracket, std::span<const Mat> rho);
inline CheckResult check_representation(const LieAlgebra& g, std::span<const Mat> rho) {
  return check_representation(g.constants(), rho);
}

}  // namespace csa
