#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csa/algebra.hpp"
#include "csa/matched.hpp"

namespace csa {

/// Product c on A (e_i.e_j = sum_k c(i,j,k) e_k) and coproduct f, read as
/// alpha(e_k) = sum_{i,j} f(i,j,k) e_i (x) e_j, equivalently the dual product
/// e*_i o e*_j = sum_k f(i,j,k) e*_k.
struct Bialgebra {
  Bialgebra() = default;
  Bialgebra(T3 product, T3 coproduct, std::string name = {});

  [[nodiscard]] std::size_t dim() const { return c.d1(); }

  T3 c = T3::cube(0);
  T3 f = T3::cube(0);
  std::string name;

  friend bool operator==(const Bialgebra& x, const Bialgebra& y) { return x.c == y.c && x.f == y.f; }
};

/// Default cap on the dimension for the O(n^5) cocycle conditions.
inline constexpr std::size_t kDefaultMaxDim = 16;

inline Algebra product_algebra(const Bialgebra& bg) { return Algebra(bg.c); }
/// The algebra (A*, o) with structure constants f on the dual basis.
inline Algebra dual_algebra(const Bialgebra& bg) { return Algebra(bg.f); }

/// (-ad.*)(e_i) on A*: entry (k, j) = -(c(i,k,j) - c(k,i,j)), i.e. -(ad_i)^T.
/// Refuses non-center-symmetric input.
std::vector<Mat> coadjoint_action(const Algebra& a);

/// alpha([e_i, e_j]) == phi(e_i) alpha(e_j) - phi(e_j) alpha(e_i), where
/// phi(x) = kron_sum_action(-ad_x, -ad_x) on A (x) A. Works on any bracket
/// tensor (the Lie check is not required for the identity to be defined).
CheckResult cocycle_check_direct(const T3& bracket, const T3& coproduct);
inline CheckResult cocycle_check_direct(const LieAlgebra& lie, const T3& coproduct) {
  return cocycle_check_direct(lie.constants(), coproduct);
}

enum class CocycleSide { Primal, Dual };

/// The same cocycle condition expanded into structure constants, over all
/// index tuples (i, j, m, l). Primal: coproduct f over the bracket of c.
/// Dual: roles of c and f exchanged.
CheckResult cocycle_check_constants(const T3& c, const T3& f, CocycleSide side);

/// Items: product_center_symmetric, coproduct_center_symmetric,
/// primal_cocycle, dual_cocycle. Throws InputError above max_dim.
Report check_bialgebra(const Bialgebra& bg, std::size_t max_dim = kDefaultMaxDim);
inline bool is_bialgebra(const Bialgebra& bg) { return check_bialgebra(bg).verdict(); }

/// (A, A*, R.^T, L.^T, Ro^T, Lo^T). Refuses unless both products are center-symmetric.
CsMatchedPair standard_cs_matched_pair(const Bialgebra& bg);

struct EquivalenceReport {
  bool manin_triple = false;
  bool lie_matched_pair = false;
  bool cs_matched_pair = false;
  bool bialgebra = false;
  Report manin;
  Report lie;
  Report cs;
  Report bi;

  [[nodiscard]] bool consistent() const {
    return manin_triple == lie_matched_pair && lie_matched_pair == cs_matched_pair &&
           cs_matched_pair == bialgebra;
  }
  [[nodiscard]] bool all_true() const {
    return manin_triple && lie_matched_pair && cs_matched_pair && bialgebra;
  }
};

/// Evaluates the four conditions independently: standard Manin triple,
/// Lie matched pair under coadjoint actions, center-symmetric matched pair,
/// bialgebra. Refuses unless both products are center-symmetric.
EquivalenceReport equivalence_report(const Bialgebra& bg, std::size_t max_dim = kDefaultMaxDim);

}  // namespace csa
