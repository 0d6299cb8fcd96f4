#include "csa/bialgebra.hpp"

#include "csa/error.hpp"
#include "csa/kernels.hpp"
#include "csa/manin.hpp"

namespace csa {

namespace {

void require_cap(std::size_t dim, std::size_t max_dim) {
  if (dim > max_dim) {
    throw InputError("dimension " + std::to_string(dim) + " exceeds the cap of " +
                     std::to_string(max_dim) + " for bialgebra conditions");
  }
}

}  // namespace

Bialgebra::Bialgebra(T3 product, T3 coproduct, std::string label)
    : c(std::move(product)), f(std::move(coproduct)), name(std::move(label)) {
  if (!c.is_cube() || !f.is_cube() || c.d1() != f.d1()) {
    throw InputError("bialgebra: product and coproduct must both be n x n x n with the same n");
  }
}

std::vector<Mat> coadjoint_action(const Algebra& a) {
  require_center_symmetric(a, "coadjoint_action");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(-ad_op(a, i).transpose());
  return out;
}

CheckResult cocycle_check_direct(const T3& bracket, const T3& coproduct) {
  if (!bracket.is_cube() || !coproduct.is_cube() || bracket.d1() != coproduct.d1()) {
    throw InputError("cocycle_check_direct: bracket and coproduct dimensions differ");
  }
  const std::size_t n = bracket.d1();
  // alpha(e_k) in A (x) A, coordinate a*n + b for e_a (x) e_b
  std::vector<Vec> alpha(n, Vec(n * n));
  coproduct.for_each_nonzero([&](std::size_t a, std::size_t b, std::size_t k, const Scalar& v) {
    alpha[k][a * n + b] = v;
  });
  std::vector<Mat> phi;
  for (const Mat& ad : ad_matrices(bracket)) phi.push_back(kron_sum_action(-ad, -ad));

  auto sides = [&](std::size_t i, std::size_t j) {
    Vec lhs(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& b = bracket(i, j, k);
      if (!b.is_zero()) lhs += b * alpha[k];
    }
    Vec rhs = phi[i].apply(alpha[j]) - phi[j].apply(alpha[i]);
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  const auto bad = kernels::first_failure(n * n, [&](std::size_t t) {
    auto [l, r] = sides(t / n, t % n);
    return l == r;
  });
  if (!bad) return CheckResult::ok();
  auto [l, r] = sides(*bad / n, *bad % n);
  return CheckResult::fail({{*bad / n, *bad % n}, l.str(), r.str()});
}

CheckResult cocycle_check_constants(const T3& c, const T3& f, CocycleSide side) {
  if (!c.is_cube() || !f.is_cube() || c.d1() != f.d1()) {
    throw InputError("cocycle_check_constants: tensor dimensions differ");
  }
  const T3& P = side == CocycleSide::Primal ? c : f;
  const T3& Q = side == CocycleSide::Primal ? f : c;
  const std::size_t n = P.d1();
  // skew(a, b, k) = P(a,b,k) - P(b,a,k)
  auto skew = [&](std::size_t a, std::size_t b, std::size_t k) { return P(a, b, k) - P(b, a, k); };
  auto sides = [&](std::size_t i, std::size_t j, std::size_t m, std::size_t l) {
    Scalar lhs;
    Scalar rhs;
    for (std::size_t k = 0; k < n; ++k) {
      lhs.add_product(skew(i, j, k), Q(m, l, k));
      rhs.add_product(Q(k, l, i), skew(j, k, m));
      rhs -= Q(k, l, j) * skew(i, k, m);
      rhs.add_product(Q(m, k, i), skew(j, k, l));
      rhs -= Q(m, k, j) * skew(i, k, l);
    }
    return std::pair{lhs, rhs};
  };
  const std::array<std::size_t, 4> ext{n, n, n, n};
  const auto bad = kernels::first_failure(kernels::tuple_count(ext), [&](std::size_t t) {
    auto [i, j, m, l] = kernels::unflatten<4>(t, ext);
    auto [lhs, rhs] = sides(i, j, m, l);
    return lhs == rhs;
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, m, l] = kernels::unflatten<4>(*bad, ext);
  auto [lhs, rhs] = sides(i, j, m, l);
  return CheckResult::fail({{i, j, m, l}, lhs.str(), rhs.str()});
}

Report check_bialgebra(const Bialgebra& bg, std::size_t max_dim) {
  require_cap(bg.dim(), max_dim);
  const Algebra a = product_algebra(bg);
  const Algebra dual = dual_algebra(bg);
  Report report{"bialgebra", {}};
  report.add("product_center_symmetric", "(x,y,z) = (z,y,x) in A", check_center_symmetric(a));
  report.add("coproduct_center_symmetric", "(x,y,z) = (z,y,x) in A*", check_center_symmetric(dual));
  report.add("primal_cocycle",
             "alpha([x,y]) = phi(x)alpha(y) - phi(y)alpha(x), phi = (-ad)(x)1 + 1(x)(-ad)",
             cocycle_check_direct(commutator_tensor(a), bg.f));
  report.add("dual_cocycle",
             "beta([a,b]) = psi(a)beta(b) - psi(b)beta(a), psi = (-ad)(x)1 + 1(x)(-ad) on A*",
             cocycle_check_direct(commutator_tensor(dual), bg.c));
  return report;
}

CsMatchedPair standard_cs_matched_pair(const Bialgebra& bg) {
  const Algebra a = product_algebra(bg);
  const Algebra b = dual_algebra(bg);
  require_center_symmetric(a, "standard_cs_matched_pair (product)");
  require_center_symmetric(b, "standard_cs_matched_pair (dual product)");
  CsMatchedPair p{a, b, {}, {}, {}, {}};
  p.la = transposes(right_ops(a));
  p.ra = transposes(left_ops(a));
  p.lb = transposes(right_ops(b));
  p.rb = transposes(left_ops(b));
  return p;
}

EquivalenceReport equivalence_report(const Bialgebra& bg, std::size_t max_dim) {
  require_cap(bg.dim(), max_dim);
  const CsMatchedPair pair = standard_cs_matched_pair(bg);  // refuses outside the hypothesis
  EquivalenceReport out;
  out.manin = verify_manin_triple(build_standard_manin_triple(bg));
  out.lie = check_lie_matched_pair(sub_adjacent(pair.a), sub_adjacent(pair.b),
                                   coadjoint_action(pair.a), coadjoint_action(pair.b));
  out.cs = check_cs_matched_pair(pair);
  out.bi = check_bialgebra(bg, max_dim);
  out.manin_triple = out.manin.verdict();
  out.lie_matched_pair = out.lie.verdict();
  out.cs_matched_pair = out.cs.verdict();
  out.bialgebra = out.bi.verdict();
  return out;
}

}  // namespace csa
