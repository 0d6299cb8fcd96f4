#pragma once

#include <span>
#include <vector>

#include "csa/algebra.hpp"
#include "csa/bimodule.hpp"

namespace csa {

/// Candidate matched pair of Lie algebras: rho acts g on h (one q x q matrix
/// per g-basis element), mu acts h on g (one p x p matrix per h-basis element).
struct LieMatchedPair {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Mat> rho;
  std::vector<Mat> mu;
};

/// Items: rho_representation, mu_representation, and the two compatibility
/// conditions on basis tuples.
Report check_lie_matched_pair(const LieAlgebra& g, const LieAlgebra& h, std::span<const Mat> rho,
                              std::span<const Mat> mu);
inline Report check_lie_matched_pair(const LieMatchedPair& p) {
  return check_lie_matched_pair(p.g, p.h, p.rho, p.mu);
}
inline bool is_lie_matched_pair(const LieMatchedPair& p) { return check_lie_matched_pair(p).verdict(); }

/// Bracket on g (+) h (basis g then h):
/// [x+a, y+b] = [x,y] + mu(a)y - mu(b)x + [a,b] + rho(x)b - rho(y)a. Unvalidated.
T3 lie_bicross_tensor(const LieMatchedPair& p);
/// Validated: refuses invalid pairs, result Jacobi-checked on construction.
LieAlgebra lie_bicross_sum(const LieMatchedPair& p);

/// Candidate matched pair of center-symmetric algebras. la, ra: actions of a
/// on b's space (one m x m matrix per a-basis element); lb, rb: actions of b
/// on a's space (one n x n matrix per b-basis element).
struct CsMatchedPair {
  Algebra a;
  Algebra b;
  std::vector<Mat> la;
  std::vector<Mat> ra;
  std::vector<Mat> lb;
  std::vector<Mat> rb;
};

void require_pair_shape(const CsMatchedPair& p);

/// Both bimodule conditions plus the four mixed associator conditions
/// (x,y,c)=(c,y,x), (x,b,z)=(z,b,x), (x,b,c)=(c,b,x), (a,y,c)=(c,y,a),
/// evaluated by expanding the product on a (+) b from the actions directly.
/// Refuses non-center-symmetric factors.
Report check_cs_matched_pair(const CsMatchedPair& p);
inline bool is_cs_matched_pair(const CsMatchedPair& p) { return check_cs_matched_pair(p).verdict(); }

/// Structure constants of
/// (x+a)*(y+b) = (x.y + lb(a)y + rb(b)x) + (a o b + la(x)b + ra(y)a)
/// on basis (a-basis, b-basis). Unvalidated.
Algebra bicross_candidate(const CsMatchedPair& p);
/// Validated bicrossed product; refuses invalid pairs.
Algebra bicross_product(const CsMatchedPair& p);

/// (G(a), G(b), la - ra, lb - rb). Refuses invalid pairs.
LieMatchedPair induced_lie_matched_pair(const CsMatchedPair& p);

}  // namespace csa
