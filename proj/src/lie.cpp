#include "csa/lie.hpp"

#include <string>

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

namespace {

std::string index_text(std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ", ";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + ")";
}

void require_cube(const T3& t, const char* what) {
  if (!t.is_cube()) throw InputError(std::string(what) + ": structure constants must be n x n x n");
}

}  // namespace

Vec bracket_of(const T3& bracket, const Vec& x, const Vec& y) {
  const std::size_t n = bracket.d1();
  if (x.dim() != n || y.dim() != n) throw InputError("bracket: dimension mismatch");
  Vec out(n);
  bracket.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (x[i].is_zero() || y[j].is_zero()) return;
    out[k] += x[i] * y[j] * v;
  });
  return out;
}

std::vector<Mat> ad_matrices(const T3& bracket) {
  const std::size_t n = bracket.d1();
  std::vector<Mat> out(n, Mat(n, n));
  bracket.for_each_nonzero([&](std::size_t i, std::size_t k, std::size_t m, const Scalar& v) {
    out[i](m, k) = v;
  });
  return out;
}

CheckResult check_antisymmetry(const T3& bracket) {
  require_cube(bracket, "antisymmetry");
  const std::size_t n = bracket.d1();
  const auto bad = kernels::first_failure(n * n * n, [&](std::size_t t) {
    auto [i, j, k] = kernels::unflatten<3>(t, {n, n, n});
    return bracket(i, j, k) == -bracket(j, i, k);
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, k] = kernels::unflatten<3>(*bad, {n, n, n});
  return CheckResult::fail(
      {{i, j, k}, bracket(i, j, k).str(), (-bracket(j, i, k)).str()});
}

CheckResult check_jacobi(const T3& bracket) {
  require_cube(bracket, "jacobi");
  const std::size_t n = bracket.d1();
  auto e = [n](std::size_t i) { return Vec::basis(n, i); };
  auto jacobiator = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vec xy = bracket_of(bracket, e(i), e(j));
    const Vec yz = bracket_of(bracket, e(j), e(k));
    const Vec zx = bracket_of(bracket, e(k), e(i));
    return bracket_of(bracket, xy, e(k)) + bracket_of(bracket, yz, e(i)) +
           bracket_of(bracket, zx, e(j));
  };
  const auto bad = kernels::first_failure(n * n * n, [&](std::size_t t) {
    auto [i, j, k] = kernels::unflatten<3>(t, {n, n, n});
    return jacobiator(i, j, k).is_zero();
  });
  if (!bad) return CheckResult::ok();
  auto [i, j, k] = kernels::unflatten<3>(*bad, {n, n, n});
  return CheckResult::fail({{i, j, k}, jacobiator(i, j, k).str(), Vec(n).str()});
}

LieAlgebra::LieAlgebra(T3 bracket) : bracket_(std::move(bracket)) {
  require_cube(bracket_, "LieAlgebra");
  if (auto r = check_antisymmetry(bracket_); !r) {
    const auto& v = *r.violation;
    throw Refusal("bracket is not antisymmetric at " +
                  index_text({v.index[0], v.index[1], v.index[2]}) + ": " + v.lhs + " != " + v.rhs);
  }
  if (auto r = check_jacobi(bracket_); !r) {
    const auto& v = *r.violation;
    throw Refusal("Jacobi identity fails at " + index_text({v.index[0], v.index[1], v.index[2]}) +
                  ": " + v.lhs);
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const { return bracket_of(bracket_, x, y); }

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = bracket_(i, j, k);
  return out;
}

Mat LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  if (i >= n) throw InputError("ad: basis index out of range");
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t out = 0; out < n; ++out) m(out, k) = bracket_(i, k, out);
  }
  return m;
}

CheckResult check_representation(const T3& bracket, std::span<const Mat> rho) {
  require_cube(bracket, "representation");
  const std::size_t n = bracket.d1();
  if (rho.size() != n) throw InputError("representation: need one matrix per basis element");
  for (const auto& m : rho) {
    if (!m.is_square() || m.rows() != rho.front().rows()) {
      throw InputError("representation: matrices must be square of one size");
    }
  }
  auto sides = [&](std::size_t i, std::size_t j) {
    Vec br(n);
    for (std::size_t k = 0; k < n; ++k) br[k] = bracket(i, j, k);
    return std::pair{linear_combination(br, rho), mat_commutator(rho[i], rho[j])};
  };
  const auto bad = kernels::first_failure(n * n, [&](std::size_t t) {
    auto [lhs, rhs] = sides(t / n, t % n);
    return lhs == rhs;
  });
  if (!bad) return CheckResult::ok();
  auto [lhs, rhs] = sides(*bad / n, *bad % n);
  return CheckResult::fail({{*bad / n, *bad % n}, lhs.str(), rhs.str()});
}

}  // namespace csa
