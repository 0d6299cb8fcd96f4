#include "csa/matched.hpp"

#include <functional>

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

namespace {

template <std::size_t N>
CheckResult scan_zero(const std::array<std::size_t, N>& extents,
                      const std::function<Vec(const std::array<std::size_t, N>&)>& value) {
  const auto bad = kernels::first_failure(kernels::tuple_count(extents), [&](std::size_t t) {
    return value(kernels::unflatten(t, extents)).is_zero();
  });
  if (!bad) return CheckResult::ok();
  const auto idx = kernels::unflatten(*bad, extents);
  const Vec v = value(idx);
  return CheckResult::fail(
      {std::vector<std::size_t>(idx.begin(), idx.end()), v.str(), Vec(v.dim()).str()});
}

void refuse_if_failed(const Report& report, const std::string& what) {
  for (const auto& item : report.items) {
    if (!item.result.pass) {
      throw Refusal(what + ": " + item.name + " fails, " + item.tag + " " +
                    describe(*item.result.violation));
    }
  }
}

// Element x + a of the direct sum, evaluated straight from the action formulas.
struct SumElement {
  Vec x;
  Vec a;
};

class DirectSum {
 public:
  explicit DirectSum(const CsMatchedPair& p) : p_(p) {}

  [[nodiscard]] SumElement from_a(std::size_t i) const {
    return {Vec::basis(p_.a.dim(), i), Vec(p_.b.dim())};
  }
  [[nodiscard]] SumElement from_b(std::size_t i) const {
    return {Vec(p_.a.dim()), Vec::basis(p_.b.dim(), i)};
  }

  [[nodiscard]] SumElement product(const SumElement& u, const SumElement& v) const {
    Vec x = multiply(p_.a, u.x, v.x) + action_of(p_.lb, u.a).apply(v.x) +
            action_of(p_.rb, v.a).apply(u.x);
    Vec a = multiply(p_.b, u.a, v.a) + action_of(p_.la, u.x).apply(v.a) +
            action_of(p_.ra, v.x).apply(u.a);
    return {std::move(x), std::move(a)};
  }

  [[nodiscard]] Vec associator(const SumElement& u, const SumElement& v, const SumElement& w) const {
    const SumElement left = product(product(u, v), w);
    const SumElement right = product(u, product(v, w));
    return Vec::concat(left.x - right.x, left.a - right.a);
  }

 private:
  const CsMatchedPair& p_;
};

}  // namespace

Report check_lie_matched_pair(const LieAlgebra& g, const LieAlgebra& h, std::span<const Mat> rho,
                              std::span<const Mat> mu) {
  const std::size_t p = g.dim();
  const std::size_t q = h.dim();
  require_action_shape(rho, p, q, "lie matched pair rho");
  require_action_shape(mu, q, p, "lie matched pair mu");
  auto rho_of = [&](const Vec& x) { return action_of(rho, x); };
  auto mu_of = [&](const Vec& a) { return action_of(mu, a); };

  Report report{"lie matched pair", {}};
  report.add("rho_representation", "rho([x,y]) = [rho(x), rho(y)]", check_representation(g, rho));
  report.add("mu_representation", "mu([a,b]) = [mu(a), mu(b)]", check_representation(h, mu));

  report.add("rho_compatibility",
             "rho(x)[a,b] - [rho(x)a,b] - [a,rho(x)b] + rho(mu(a)x)b - rho(mu(b)x)a = 0",
             scan_zero<3>({p, q, q}, [&](const std::array<std::size_t, 3>& t) {
               const Vec x = Vec::basis(p, t[0]);
               const Vec a = Vec::basis(q, t[1]);
               const Vec b = Vec::basis(q, t[2]);
               const Mat rx = rho_of(x);
               return rx.apply(h.bracket(a, b)) - h.bracket(rx.apply(a), b) -
                      h.bracket(a, rx.apply(b)) + rho_of(mu_of(a).apply(x)).apply(b) -
                      rho_of(mu_of(b).apply(x)).apply(a);
             }));
  report.add("mu_compatibility",
             "mu(a)[x,y] - [mu(a)x,y] - [x,mu(a)y] + mu(rho(x)a)y - mu(rho(y)a)x = 0",
             scan_zero<3>({q, p, p}, [&](const std::array<std::size_t, 3>& t) {
               const Vec a = Vec::basis(q, t[0]);
               const Vec x = Vec::basis(p, t[1]);
               const Vec y = Vec::basis(p, t[2]);
               const Mat ma = mu_of(a);
               return ma.apply(g.bracket(x, y)) - g.bracket(ma.apply(x), y) -
                      g.bracket(x, ma.apply(y)) + mu_of(rho_of(x).apply(a)).apply(y) -
                      mu_of(rho_of(y).apply(a)).apply(x);
             }));
  return report;
}

T3 lie_bicross_tensor(const LieMatchedPair& mp) {
  const std::size_t p = mp.g.dim();
  const std::size_t q = mp.h.dim();
  require_action_shape(mp.rho, p, q, "lie bicross rho");
  require_action_shape(mp.mu, q, p, "lie bicross mu");
  T3 t = T3::cube(p + q);
  mp.g.constants().for_each_nonzero(
      [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { t.set(i, j, k, v); });
  mp.h.constants().for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    t.set(p + i, p + j, p + k, v);
  });
  for (std::size_t x = 0; x < p; ++x) {
    for (std::size_t b = 0; b < q; ++b) {
      // [e_x, f_b] = -mu(f_b) e_x + rho(e_x) f_b, and [f_b, e_x] is its negative
      for (std::size_t k = 0; k < p; ++k) {
        t.set(x, p + b, k, -mp.mu[b](k, x));
        t.set(p + b, x, k, mp.mu[b](k, x));
      }
      for (std::size_t c = 0; c < q; ++c) {
        t.set(x, p + b, p + c, mp.rho[x](c, b));
        t.set(p + b, x, p + c, -mp.rho[x](c, b));
      }
    }
  }
  return t;
}

LieAlgebra lie_bicross_sum(const LieMatchedPair& p) {
  refuse_if_failed(check_lie_matched_pair(p), "lie_bicross_sum");
  return LieAlgebra(lie_bicross_tensor(p));
}

void require_pair_shape(const CsMatchedPair& p) {
  const std::size_t n = p.a.dim();
  const std::size_t m = p.b.dim();
  require_action_shape(p.la, n, m, "matched pair la");
  require_action_shape(p.ra, n, m, "matched pair ra");
  require_action_shape(p.lb, m, n, "matched pair lb");
  require_action_shape(p.rb, m, n, "matched pair rb");
}

Report check_cs_matched_pair(const CsMatchedPair& p) {
  require_pair_shape(p);
  require_center_symmetric(p.a, "check_cs_matched_pair (first factor)");
  require_center_symmetric(p.b, "check_cs_matched_pair (second factor)");
  const std::size_t n = p.a.dim();
  const std::size_t m = p.b.dim();

  Report report{"center-symmetric matched pair", {}};
  auto fold = [&](const std::string& prefix, const Report& sub) {
    for (const auto& item : sub.items) report.add(prefix + item.name, item.tag, item.result);
  };
  fold("a_on_b_", check_bimodule(p.a, p.la, p.ra));
  fold("b_on_a_", check_bimodule(p.b, p.lb, p.rb));

  const DirectSum sum(p);
  // kinds: false = basis element of a, true = basis element of b
  auto mixed = [&](std::array<bool, 3> in_b, std::array<std::size_t, 3> ext) {
    auto elem = [&](bool b, std::size_t i) { return b ? sum.from_b(i) : sum.from_a(i); };
    auto sides = [&](std::size_t t) {
      auto idx = kernels::unflatten<3>(t, ext);
      const auto u = elem(in_b[0], idx[0]);
      const auto v = elem(in_b[1], idx[1]);
      const auto w = elem(in_b[2], idx[2]);
      return std::pair{sum.associator(u, v, w), sum.associator(w, v, u)};
    };
    const auto bad = kernels::first_failure(kernels::tuple_count(ext), [&](std::size_t t) {
      auto [l, r] = sides(t);
      return l == r;
    });
    if (!bad) return CheckResult::ok();
    auto idx = kernels::unflatten<3>(*bad, ext);
    auto [l, r] = sides(*bad);
    return CheckResult::fail({{idx[0], idx[1], idx[2]}, l.str(), r.str()});
  };
  report.add("assoc_xyc", "(x,y,c) = (c,y,x)", mixed({false, false, true}, {n, n, m}));
  report.add("assoc_xbz", "(x,b,z) = (z,b,x)", mixed({false, true, false}, {n, m, n}));
  report.add("assoc_xbc", "(x,b,c) = (c,b,x)", mixed({false, true, true}, {n, m, m}));
  report.add("assoc_ayc", "(a,y,c) = (c,y,a)", mixed({true, false, true}, {m, n, m}));
  return report;
}

Algebra bicross_candidate(const CsMatchedPair& p) {
  require_pair_shape(p);
  const std::size_t n = p.a.dim();
  const std::size_t m = p.b.dim();
  T3 t = T3::cube(n + m);
  p.a.constants().for_each_nonzero(
      [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { t.set(i, j, k, v); });
  p.b.constants().for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    t.set(n + i, n + j, n + k, v);
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      // e_i * f_a = rb(f_a) e_i + la(e_i) f_a
      for (std::size_t k = 0; k < n; ++k) t.add(i, n + a, k, p.rb[a](k, i));
      for (std::size_t k = 0; k < m; ++k) t.add(i, n + a, n + k, p.la[i](k, a));
      // f_a * e_i = lb(f_a) e_i + ra(e_i) f_a
      for (std::size_t k = 0; k < n; ++k) t.add(n + a, i, k, p.lb[a](k, i));
      for (std::size_t k = 0; k < m; ++k) t.add(n + a, i, n + k, p.ra[i](k, a));
    }
  }
  return Algebra(std::move(t));
}

Algebra bicross_product(const CsMatchedPair& p) {
  refuse_if_failed(check_cs_matched_pair(p), "bicross_product");
  return bicross_candidate(p);
}

LieMatchedPair induced_lie_matched_pair(const CsMatchedPair& p) {
  refuse_if_failed(check_cs_matched_pair(p), "induced_lie_matched_pair");
  LieMatchedPair out{sub_adjacent(p.a), sub_adjacent(p.b), {}, {}};
  for (std::size_t i = 0; i < p.a.dim(); ++i) out.rho.push_back(p.la[i] - p.ra[i]);
  for (std::size_t i = 0; i < p.b.dim(); ++i) out.mu.push_back(p.lb[i] - p.rb[i]);
  return out;
}

}  // namespace csa
