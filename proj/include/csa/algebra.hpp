#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "csa/lie.hpp"
#include "csa/linalg.hpp"
#include "csa/report.hpp"
#include "csa/tensor.hpp"

namespace csa {

/// Finite-dimensional algebra given by structure constants:
/// e_i . e_j = sum_k c(i, j, k) e_k. Immutable.
class Algebra {
 public:
  Algebra() : Algebra(T3::cube(0)) {}
  explicit Algebra(T3 constants, std::string name = {});
  static Algebra zero(std::size_t n) { return Algebra(T3::cube(n)); }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const T3& constants() const { return c_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// e_i . e_j as a coordinate vector.
  [[nodiscard]] const Vec& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }

  /// Structural equality of the structure constants; the name is ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.c_ == b.c_; }

 private:
  std::size_t dim_ = 0;
  T3 c_;
  std::string name_;
  std::vector<Vec> products_;
};

/// The six subgroups of the symmetric group on three letters.
enum class GClass { G1, G2, G3, G4, G5, G6 };

/// A permutation acting on argument triples: sigma(x1, x2, x3) picks
/// (x_pick[0], x_pick[1], x_pick[2]) with pick = sigma^-1, 0-based.
struct SignedPermutation {
  std::array<std::size_t, 3> pick;
  int sign;
};

std::span<const SignedPermutation> permutations(GClass g);
std::string to_string(GClass g);

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
/// (x.y).z - x.(y.z)
Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);
Vec basis_associator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k);

/// sum over sigma in g of sign(sigma) * ass(sigma(e_i, e_j, e_k)) == 0 on every basis triple.
CheckResult check_g_associative(const Algebra& a, GClass g);
inline bool is_g_associative(const Algebra& a, GClass g) { return check_g_associative(a, g).pass; }
inline bool is_associative(const Algebra& a) { return is_g_associative(a, GClass::G1); }
inline bool is_lie_admissible(const Algebra& a) { return is_g_associative(a, GClass::G6); }

/// ass(e_i, e_j, e_k) == ass(e_k, e_j, e_i) on every basis triple. Evaluated
/// directly, not through the G-class machinery.
CheckResult check_center_symmetric(const Algebra& a);
inline bool is_center_symmetric(const Algebra& a) { return check_center_symmetric(a).pass; }

bool is_commutative(const Algebra& a);

/// Raw commutator constants c(i,j,k) - c(j,i,k), for any algebra.
T3 commutator_tensor(const Algebra& a);

/// Sub-adjacent Lie algebra. Throws Refusal (naming a violating triple)
/// unless `a` is center-symmetric.
LieAlgebra sub_adjacent(const Algebra& a);

/// (L_i)(k, j) = c(i, j, k): matrix of y -> e_i . y
Mat left_op(const Algebra& a, std::size_t i);
/// (R_i)(k, j) = c(j, i, k): matrix of y -> y . e_i
Mat right_op(const Algebra& a, std::size_t i);
Mat ad_op(const Algebra& a, std::size_t i);
Mat left_op(const Algebra& a, const Vec& x);
Mat right_op(const Algebra& a, const Vec& x);
std::vector<Mat> left_ops(const Algebra& a);
std::vector<Mat> right_ops(const Algebra& a);

/// [L_x, R_y] == [L_y, R_x] and L_{x.y} - L_x L_y == R_x R_y - R_{y.x} on basis pairs.
Report check_operator_identities(const Algebra& a);
inline bool operator_identities_hold(const Algebra& a) { return check_operator_identities(a).verdict(); }

/// ad_{[x,y]} == [ad_x, ad_y] on basis pairs. Refuses non-center-symmetric input.
CheckResult check_ad_representation(const Algebra& a);

/// Throws Refusal with the violating triple unless `a` is center-symmetric.
void require_center_symmetric(const Algebra& a, const std::string& what);

/// Human-readable rendering of a failed check, 1-based indices.
std::string describe(const Violation& v);

}  // namespace csa
