#include "csa/search.hpp"

#include <algorithm>

#include "csa/error.hpp"
#include "csa/kernels.hpp"

namespace csa {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool passes_filters(const Algebra& a, const SearchFilters& filters) {
  if (filters.noncommutative && is_commutative(a)) return false;
  if (filters.center_symmetric && !is_center_symmetric(a)) return false;
  if (filters.non_associative && is_associative(a)) return false;
  return true;
}

std::vector<Scalar> canonical_coefficients(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> out(coeffs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw InputError("search: coefficient set is empty");
  return out;
}

namespace {

Algebra build(std::size_t n, const std::vector<Scalar>& coeffs, const std::vector<std::size_t>& digits) {
  T3 c = T3::cube(n);
  for (std::size_t e = 0; e < digits.size(); ++e) {
    c.set(e / (n * n), (e / n) % n, e % n, coeffs[digits[e]]);
  }
  return Algebra(std::move(c));
}

// Advances the odometer (last entry fastest); false once it wraps around.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t e = digits.size(); e-- > 0;) {
    if (++digits[e] < base) return true;
    digits[e] = 0;
  }
  return false;
}

std::string grid_size_text(std::size_t base, std::size_t entries) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), base, entries);
  return total.get_str();
}

}  // namespace

std::vector<Algebra> enumerate_structures(const SearchSpec& s) {
  const auto coeffs = canonical_coefficients(s.coeffs);
  const std::size_t n = s.dim;
  const std::size_t entries = n * n * n;
  const std::size_t base = coeffs.size();
  if (!s.limit) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), base, entries);
    if (total > mpz_class(std::to_string(kEnumerationCap))) {
      throw Refusal("search space has " + grid_size_text(base, entries) + " tensors (" +
                    std::to_string(base) + "^" + std::to_string(entries) +
                    "); set a limit or shrink the grid");
    }
  }
  std::vector<Algebra> out;
  if (s.limit && *s.limit == 0) return out;

  constexpr std::size_t kChunk = 4096;
  std::vector<std::size_t> digits(entries, 0);
  bool more = true;
  while (more) {
    std::vector<Algebra> chunk;
    chunk.reserve(kChunk);
    while (more && chunk.size() < kChunk) {
      chunk.push_back(build(n, coeffs, digits));
      more = advance(digits, base);
    }
    const auto keep = kernels::evaluate_all(chunk.size(), [&](std::size_t t) {
      return passes_filters(chunk[t], s.filters);
    });
    for (std::size_t t = 0; t < chunk.size(); ++t) {
      if (!keep[t]) continue;
      out.push_back(std::move(chunk[t]));
      if (s.limit && out.size() >= *s.limit) return out;
    }
  }
  return out;
}

Algebra random_structure(const SearchSpec& s) {
  const auto coeffs = canonical_coefficients(s.coeffs);
  const std::size_t n = s.dim;
  SplitMix64 rng(s.seed);
  std::vector<std::size_t> digits(n * n * n);
  for (auto& d : digits) d = rng.below(coeffs.size());
  return build(n, coeffs, digits);
}

std::vector<BialgebraFixture> derive_bialgebra_fixtures(const std::vector<Algebra>& pool) {
  for (const auto& a : pool) require_center_symmetric(a, "derive_bialgebra_fixtures");
  std::vector<Bialgebra> pairs;
  auto push = [&](const Bialgebra& bg) {
    if (std::find(pairs.begin(), pairs.end(), bg) == pairs.end()) pairs.push_back(bg);
  };
  for (const auto& a : pool) push(Bialgebra(a.constants(), T3::cube(a.dim())));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.dim() == b.dim()) push(Bialgebra(a.constants(), b.constants()));
    }
  }
  std::vector<BialgebraFixture> out;
  out.reserve(pairs.size());
  for (auto& bg : pairs) {
    auto report = equivalence_report(bg);
    out.push_back({std::move(bg), std::move(report)});
  }
  return out;
}

}  // namespace csa
