#include "csa/algebra.hpp"

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

namespace {

// pick = sigma^-1 written 0-based; sign = signature.
constexpr SignedPermutation kId{{0, 1, 2}, +1};
constexpr SignedPermutation kTau12{{1, 0, 2}, -1};
constexpr SignedPermutation kTau23{{0, 2, 1}, -1};
constexpr SignedPermutation kTau13{{2, 1, 0}, -1};
constexpr SignedPermutation kCycle{{2, 0, 1}, +1};
constexpr SignedPermutation kCycleInv{{1, 2, 0}, +1};

constexpr std::array<SignedPermutation, 1> kG1{kId};
constexpr std::array<SignedPermutation, 2> kG2{kId, kTau12};
constexpr std::array<SignedPermutation, 2> kG3{kId, kTau23};
constexpr std::array<SignedPermutation, 2> kG4{kId, kTau13};
constexpr std::array<SignedPermutation, 3> kG5{kId, kCycle, kCycleInv};
constexpr std::array<SignedPermutation, 6> kG6{kId, kTau12, kTau23, kTau13, kCycle, kCycleInv};

void require_dim(const Algebra& a, const Vec& v) {
  if (v.dim() != a.dim()) {
    throw InputError("vector of dimension " + std::to_string(v.dim()) + " for algebra of dimension " +
                     std::to_string(a.dim()));
  }
}

void require_index(const Algebra& a, std::size_t i) {
  if (i >= a.dim()) {
    throw InputError("basis index " + std::to_string(i + 1) + " out of range [1, " +
                     std::to_string(a.dim()) + "]");
  }
}

}  // namespace

Algebra::Algebra(T3 constants, std::string name)
    : dim_(constants.d1()), c_(std::move(constants)), name_(std::move(name)) {
  if (!c_.is_cube()) throw InputError("algebra structure constants must be n x n x n");
  products_.assign(dim_ * dim_, Vec(dim_));
  c_.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    products_[i * dim_ + j][k] = v;
  });
}

std::span<const SignedPermutation> permutations(GClass g) {
  switch (g) {
    case GClass::G1: return kG1;
    case GClass::G2: return kG2;
    case GClass::G3: return kG3;
    case GClass::G4: return kG4;
    case GClass::G5: return kG5;
    case GClass::G6: return kG6;
  }
  return {};
}

std::string to_string(GClass g) { return "G" + std::to_string(static_cast<int>(g) + 1); }

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  require_dim(a, x);
  require_dim(a, y);
  Vec out(a.dim());
  a.constants().for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (x[i].is_zero() || y[j].is_zero()) return;
    out[k] += x[i] * y[j] * v;
  });
  return out;
}

Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

Vec basis_associator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = a.dim();
  Vec out(n);
  const Vec& ij = a.basis_product(i, j);
  const Vec& jk = a.basis_product(j, k);
  for (std::size_t p = 0; p < n; ++p) {
    if (!ij[p].is_zero()) {
      const Vec& pk = a.basis_product(p, k);
      for (std::size_t m = 0; m < n; ++m) {
        if (!pk[m].is_zero()) out[m].add_product(ij[p], pk[m]);
      }
    }
    if (!jk[p].is_zero()) {
      const Vec& ip = a.basis_product(i, p);
      for (std::size_t m = 0; m < n; ++m) {
        if (!ip[m].is_zero()) out[m] -= jk[p] * ip[m];
      }
    }
  }
  return out;
}

CheckResult check_g_associative(const Algebra& a, GClass g) {
  const std::size_t n = a.dim();
  const auto perms = permutations(g);
  auto signed_sum = [&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<std::size_t, 3> args{i, j, k};
    Vec sum(n);
    for (const auto& s : perms) {
      Vec term = basis_associator(a, args[s.pick[0]], args[s.pick[1]], args[s.pick[2]]);
      if (s.sign < 0) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    return sum;
  };
  const auto bad = kernels::first_failure(n * n * n, [&](std::size_t t) {
    auto [i, j, k] = kernels::unflatten<3>(t, {n, n, n});
    return signed_sum(i, j, k).is_zero();
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, k] = kernels::unflatten<3>(*bad, {n, n, n});
  return CheckResult::fail({{i, j, k}, signed_sum(i, j, k).str(), Vec(n).str()});
}

CheckResult check_center_symmetric(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto bad = kernels::first_failure(n * n * n, [&](std::size_t t) {
    auto [i, j, k] = kernels::unflatten<3>(t, {n, n, n});
    return basis_associator(a, i, j, k) == basis_associator(a, k, j, i);
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, k] = kernels::unflatten<3>(*bad, {n, n, n});
  return CheckResult::fail(
      {{i, j, k}, basis_associator(a, i, j, k).str(), basis_associator(a, k, j, i).str()});
}

bool is_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
    }
  }
  return true;
}

T3 commutator_tensor(const Algebra& a) {
  T3 out = T3::cube(a.dim());
  a.constants().for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    out.add(i, j, k, v);
    out.add(j, i, k, -v);
  });
  return out;
}

std::string describe(const Violation& v) {
  std::string idx = "(";
  for (std::size_t t = 0; t < v.index.size(); ++t) {
    if (t) idx += ", ";
    idx += std::to_string(v.index[t] + 1);
  }
  return "at " + idx + "): lhs = " + v.lhs + ", rhs = " + v.rhs;
}

void require_center_symmetric(const Algebra& a, const std::string& what) {
  auto r = check_center_symmetric(a);
  if (!r) {
    throw Refusal(what + ": algebra is not center-symmetric, ass(x,y,z) != ass(z,y,x) " +
                  describe(*r.violation));
  }
}

LieAlgebra sub_adjacent(const Algebra& a) {
  require_center_symmetric(a, "sub_adjacent");
  return LieAlgebra(commutator_tensor(a));
}

Mat left_op(const Algebra& a, std::size_t i) {
  require_index(a, i);
  const std::size_t n = a.dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec& p = a.basis_product(i, j);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = p[k];
  }
  return m;
}

Mat right_op(const Algebra& a, std::size_t i) {
  require_index(a, i);
  const std::size_t n = a.dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec& p = a.basis_product(j, i);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = p[k];
  }
  return m;
}

Mat ad_op(const Algebra& a, std::size_t i) { return left_op(a, i) - right_op(a, i); }

std::vector<Mat> left_ops(const Algebra& a) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(left_op(a, i));
  return out;
}

std::vector<Mat> right_ops(const Algebra& a) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(right_op(a, i));
  return out;
}

Mat left_op(const Algebra& a, const Vec& x) {
  require_dim(a, x);
  return linear_combination(x, left_ops(a));
}

Mat right_op(const Algebra& a, const Vec& x) {
  require_dim(a, x);
  return linear_combination(x, right_ops(a));
}

Report check_operator_identities(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto L = left_ops(a);
  const auto R = right_ops(a);
  Report report{"operator identities", {}};

  auto commuting = [&](std::size_t i, std::size_t j) {
    return std::pair{mat_commutator(L[i], R[j]), mat_commutator(L[j], R[i])};
  };
  auto product = [&](std::size_t i, std::size_t j) {
    Mat lhs = linear_combination(a.basis_product(i, j), L) - L[i] * L[j];
    Mat rhs = R[i] * R[j] - linear_combination(a.basis_product(j, i), R);
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  auto run = [&](auto&& sides) {
    const auto bad = kernels::first_failure(n * n, [&](std::size_t t) {
      auto [l, r] = sides(t / n, t % n);
      return l == r;
    });
    if (!bad) return CheckResult::ok();
    auto [l, r] = sides(*bad / n, *bad % n);
    return CheckResult::fail({{*bad / n, *bad % n}, l.str(), r.str()});
  };
  report.add("left_right_commutators", "[L_x, R_y] = [L_y, R_x]", run(commuting));
  report.add("product_operators", "L_{xy} - L_x L_y = R_x R_y - R_{yx}", run(product));
  return report;
}

CheckResult check_ad_representation(const Algebra& a) {
  require_center_symmetric(a, "check_ad_representation");
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < a.dim(); ++i) ads.push_back(ad_op(a, i));
  return check_representation(commutator_tensor(a), ads);
}

}  // namespace csa
