#include "csa/bimodule.hpp"

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

void require_action_shape(std::span<const Mat> mats, std::size_t count, std::size_t dim,
                          const char* what) {
  if (mats.size() != count) {
    throw InputError(std::string(what) + ": expected " + std::to_string(count) +
                     " action matrices, got " + std::to_string(mats.size()));
  }
  for (const auto& m : mats) {
    if (m.rows() != dim || m.cols() != dim) {
      throw InputError(std::string(what) + ": action matrices must be " + std::to_string(dim) +
                       "x" + std::to_string(dim));
    }
  }
}

std::size_t action_dim(std::span<const Mat> l, std::span<const Mat> r,
                       std::optional<std::size_t> fallback) {
  if (!l.empty()) return l.front().rows();
  if (!r.empty()) return r.front().rows();
  return fallback.value_or(0);
}

Report check_bimodule(const Algebra& a, std::span<const Mat> l, std::span<const Mat> r) {
  const std::size_t n = a.dim();
  const std::size_t m = action_dim(l, r, std::nullopt);
  require_action_shape(l, n, m, "bimodule l");
  require_action_shape(r, n, m, "bimodule r");
  require_center_symmetric(a, "check_bimodule");

  auto commuting = [&](std::size_t i, std::size_t j) {
    return std::pair{mat_commutator(l[i], r[j]), mat_commutator(l[j], r[i])};
  };
  auto product = [&](std::size_t i, std::size_t j) {
    Mat lhs = action_of(l, a.basis_product(i, j)) - l[i] * l[j];
    Mat rhs = r[i] * r[j] - action_of(r, a.basis_product(j, i));
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  auto run = [&](auto&& sides) {
    const auto bad = kernels::first_failure(n * n, [&](std::size_t t) {
      auto [lhs, rhs] = sides(t / n, t % n);
      return lhs == rhs;
    });
    if (!bad) return CheckResult::ok();
    auto [lhs, rhs] = sides(*bad / n, *bad % n);
    return CheckResult::fail({{*bad / n, *bad % n}, lhs.str(), rhs.str()});
  };

  Report report{"bimodule", {}};
  report.add("commuting_actions", "[l_x, r_y] = [l_y, r_x]", run(commuting));
  report.add("product_actions", "l_{xy} - l_x l_y = r_x r_y - r_{yx}", run(product));
  return report;
}

Bimodule Bimodule::make(Algebra base, std::vector<Mat> l, std::vector<Mat> r,
                        std::optional<std::size_t> vdim) {
  auto report = check_bimodule(base, l, r);
  for (const auto& item : report.items) {
    if (!item.result.pass) {
      throw Refusal("not a bimodule, " + item.tag + " fails " + describe(*item.result.violation));
    }
  }
  const std::size_t m = action_dim(l, r, vdim);
  return Bimodule(std::move(base), m, std::move(l), std::move(r));
}

Bimodule Bimodule::regular(const Algebra& base) { return make(base, left_ops(base), right_ops(base)); }

Bimodule Bimodule::zero(const Algebra& base, std::size_t vdim) {
  std::vector<Mat> z(base.dim(), Mat(vdim, vdim));
  return make(base, z, z, vdim);
}

Algebra semidirect_candidate(const Algebra& a, std::span<const Mat> l, std::span<const Mat> r,
                             std::optional<std::size_t> vdim) {
  const std::size_t n = a.dim();
  const std::size_t m = action_dim(l, r, vdim);
  require_action_shape(l, n, m, "semidirect l");
  require_action_shape(r, n, m, "semidirect r");
  T3 c = T3::cube(n + m);
  a.constants().for_each_nonzero(
      [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c.set(i, j, k, v); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t va = 0; va < m; ++va) {
      for (std::size_t vb = 0; vb < m; ++vb) {
        c.set(i, n + va, n + vb, l[i](vb, va));
        c.set(n + va, i, n + vb, r[i](vb, va));
      }
    }
  }
  return Algebra(std::move(c));
}

Bimodule dual_bimodule(const Bimodule& b) {
  return Bimodule::make(b.base(), transposes(b.r()), transposes(b.l()), b.vdim());
}

std::vector<Mat> induced_lie_rep(const Bimodule& b) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < b.base().dim(); ++i) out.push_back(b.l()[i] - b.r()[i]);
  return out;
}

}  // namespace csa
