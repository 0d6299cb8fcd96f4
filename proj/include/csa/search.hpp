#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csa/algebra.hpp"
#include "csa/bialgebra.hpp"

namespace csa {

/// SplitMix64 (Steele, Lea, Flood 2014). The exact recurrence is part of the
/// fixture format, so random fixtures reproduce across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// next() % bound; the modulo bias is irrelevant for tiny bounds.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  std::uint64_t state_;
};

struct SearchFilters {
  bool center_symmetric = false;
  bool non_associative = false;
  bool noncommutative = false;
};

struct SearchSpec {
  std::size_t dim = 0;
  std::vector<Scalar> coeffs{Scalar(-1), Scalar(0), Scalar(1)};
  SearchFilters filters;
  std::uint64_t seed = 0;
  std::optional<std::size_t> limit;
};

/// Largest grid enumerated without an explicit limit.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

bool passes_filters(const Algebra& a, const SearchFilters& filters);

/// Coefficient set sorted ascending with duplicates removed. Throws
/// InputError when empty.
std::vector<Scalar> canonical_coefficients(const std::vector<Scalar>& coeffs);

/// Every tensor over the coefficient grid passing the filters, in
/// lexicographic order of the entries (row-major (i, j, k), coefficients
/// ascending). Stops after `limit` results when set; refuses grids larger
/// than kEnumerationCap without a limit.
std::vector<Algebra> enumerate_structures(const SearchSpec& s);

/// Entries drawn in row-major order, each coeffs[rng.below(|coeffs|)] over
/// the canonical coefficient list, with rng = SplitMix64(seed). Unfiltered.
Algebra random_structure(const SearchSpec& s);

struct BialgebraFixture {
  Bialgebra bialgebra;
  EquivalenceReport report;
};

/// (c, 0) for every pool member plus every ordered pair (c, f) of pool
/// members with equal dimension, deduplicated, each with its equivalence
/// report. Refuses pools containing non-center-symmetric algebras.
std::vector<BialgebraFixture> derive_bialgebra_fixtures(const std::vector<Algebra>& pool);

}  // namespace csa
