#include "csa/manin.hpp"

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

Scalar BilinearForm::operator()(const Vec& u, const Vec& v) const {
  if (u.dim() != dim() || v.dim() != dim()) throw InputError("bilinear form: dimension mismatch");
  Scalar s;
  const Vec gv = gram.apply(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!u[i].is_zero()) s.add_product(u[i], gv[i]);
  }
  return s;
}

Subspace::Subspace(std::size_t ambient, std::vector<Vec> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_) {
    if (v.dim() != ambient_) throw InputError("subspace: basis vector of wrong dimension");
  }
  if (rank(basis_, ambient_) != basis_.size()) {
    throw InputError("subspace: basis vectors are linearly dependent");
  }
}

Subspace Subspace::coordinate(std::size_t ambient, std::size_t offset, std::size_t count) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < count; ++i) basis.push_back(Vec::basis(ambient, offset + i));
  return {ambient, std::move(basis)};
}

bool Subspace::contains(const Vec& v) const { return solve_in_span(basis_, v).has_value(); }

CheckResult check_invariant(const BilinearForm& form, const Algebra& a) {
  const std::size_t n = a.dim();
  if (form.dim() != n || !form.gram.is_square()) throw InputError("invariance: form/algebra dimension mismatch");
  auto sides = [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{form(a.basis_product(i, j), Vec::basis(n, k)),
                     form(Vec::basis(n, i), a.basis_product(j, k))};
  };
  const auto bad = kernels::first_failure(n * n * n, [&](std::size_t t) {
    auto [i, j, k] = kernels::unflatten<3>(t, {n, n, n});
    auto [l, r] = sides(i, j, k);
    return l == r;
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, k] = kernels::unflatten<3>(*bad, {n, n, n});
  auto [l, r] = sides(i, j, k);
  return CheckResult::fail({{i, j, k}, l.str(), r.str()});
}

BilinearForm standard_form(std::size_t n) {
  Mat g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar(1);
    g(n + i, i) = Scalar(1);
  }
  return {std::move(g)};
}

ManinTriple build_standard_manin_triple(const Bialgebra& bg) {
  const std::size_t n = bg.dim();
  return {bicross_candidate(standard_cs_matched_pair(bg)), Subspace::coordinate(2 * n, 0, n),
          Subspace::coordinate(2 * n, n, n), standard_form(n)};
}

namespace {

CheckResult check_closed(const Algebra& total, const Subspace& s) {
  const auto& b = s.basis();
  const std::size_t k = b.size();
  auto product = [&](std::size_t i, std::size_t j) { return multiply(total, b[i], b[j]); };
  const auto bad = kernels::first_failure(k * k, [&](std::size_t t) {
    return s.contains(product(t / k, t % k));
  });
  if (!bad) return CheckResult::ok();
  return CheckResult::fail({{*bad / k, *bad % k}, product(*bad / k, *bad % k).str(), "outside the subspace"});
}

CheckResult check_isotropic(const BilinearForm& form, const Subspace& s) {
  const auto& b = s.basis();
  const std::size_t k = b.size();
  const auto bad = kernels::first_failure(k * k, [&](std::size_t t) {
    return form(b[t / k], b[t % k]).is_zero();
  });
  if (!bad) return CheckResult::ok();
  return CheckResult::fail({{*bad / k, *bad % k}, form(b[*bad / k], b[*bad % k]).str(), "0"});
}

}  // namespace

Report verify_manin_triple(const ManinTriple& t) {
  const std::size_t n = t.total.dim();
  if (t.plus.ambient() != n || t.minus.ambient() != n || t.form.dim() != n || !t.form.gram.is_square()) {
    throw InputError("manin triple: subspaces, form and algebra must share one ambient dimension");
  }
  Report report{"manin triple", {}};

  std::vector<Vec> all = t.plus.basis();
  all.insert(all.end(), t.minus.basis().begin(), t.minus.basis().end());
  const std::size_t r = rank(all, n);
  report.add("direct_sum", "A = A+ (+) A-",
             (all.size() == n && r == n)
                 ? CheckResult::ok()
                 : CheckResult::fail({{}, "dim A+ + dim A- = " + std::to_string(all.size()) +
                                              ", rank = " + std::to_string(r),
                                      "dim A = " + std::to_string(n)}));
  report.add("total_center_symmetric", "(x,y,z) = (z,y,x) in A", check_center_symmetric(t.total));
  report.add("plus_subalgebra", "A+ * A+ in A+", check_closed(t.total, t.plus));
  report.add("minus_subalgebra", "A- * A- in A-", check_closed(t.total, t.minus));
  report.add("plus_isotropic", "B(A+, A+) = 0", check_isotropic(t.form, t.plus));
  report.add("minus_isotropic", "B(A-, A-) = 0", check_isotropic(t.form, t.minus));

  CheckResult symmetric;
  for (std::size_t i = 0; i < n && symmetric.pass; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.form.gram(i, j) != t.form.gram(j, i)) {
        symmetric = CheckResult::fail({{i, j}, t.form.gram(i, j).str(), t.form.gram(j, i).str()});
        break;
      }
    }
  }
  report.add("form_symmetric", "B(x,y) = B(y,x)", symmetric);
  const Scalar det = determinant(t.form.gram);
  report.add("form_nondegenerate", "det B != 0",
             det.is_zero() ? CheckResult::fail({{}, "det = 0", "nonzero"}) : CheckResult::ok());
  report.add("form_invariant", "B(x*y, z) = B(x, y*z)", check_invariant(t.form, t.total));
  return report;
}

}  // namespace csa
