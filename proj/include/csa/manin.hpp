#pragma once

#include <cstddef>
#include <vector>

#include "csa/algebra.hpp"
#include "csa/bialgebra.hpp"

namespace csa {

struct BilinearForm {
  Mat gram;

  [[nodiscard]] std::size_t dim() const { return gram.rows(); }
  [[nodiscard]] Scalar operator()(const Vec& u, const Vec& v) const;
  [[nodiscard]] bool is_symmetric() const { return gram == gram.transpose(); }
};

/// Span of linearly independent vectors in an ambient space.
class Subspace {
 public:
  /// Throws InputError when the vectors are dependent or of the wrong dimension.
  Subspace(std::size_t ambient, std::vector<Vec> basis);
  /// span(e_offset, ..., e_{offset+count-1})
  static Subspace coordinate(std::size_t ambient, std::size_t offset, std::size_t count);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
  [[nodiscard]] bool contains(const Vec& v) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

struct ManinTriple {
  Algebra total;
  Subspace plus;
  Subspace minus;
  BilinearForm form;
};

/// B(e_i * e_j, e_k) == B(e_i, e_j * e_k) on basis triples.
CheckResult check_invariant(const BilinearForm& form, const Algebra& a);
inline bool is_invariant(const BilinearForm& form, const Algebra& a) {
  return check_invariant(form, a).pass;
}

/// Gram matrix [[0, I_n], [I_n, 0]] of the pairing <x, b*> + <y, a*>.
BilinearForm standard_form(std::size_t n);

/// Total algebra is the bicrossed-product candidate of the standard
/// matched pair, plus = A, minus = A*, form = standard_form(n). The triple is
/// returned unverified; run verify_manin_triple. Refuses unless both
/// products are center-symmetric.
ManinTriple build_standard_manin_triple(const Bialgebra& bg);

/// Items: direct_sum, total_center_symmetric, plus_subalgebra,
/// minus_subalgebra, plus_isotropic, minus_isotropic, form_symmetric,
/// form_nondegenerate, form_invariant. All items are evaluated.
Report verify_manin_triple(const ManinTriple& t);

}  // namespace csa
