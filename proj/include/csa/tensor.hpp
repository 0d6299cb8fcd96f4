#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>

#include "csa/scalar.hpp"

namespace csa {

/// Rank-3 tensor with sparse storage and dense indexed reads. Absent entries
/// read as zero. Iteration over nonzeros is in lexicographic (i, j, k) order.
class T3 {
 public:
  T3() = default;
  T3(std::size_t d1, std::size_t d2, std::size_t d3) : d_{d1, d2, d3} {}
  static T3 cube(std::size_t n) { return {n, n, n}; }

  [[nodiscard]] std::size_t d1() const { return d_[0]; }
  [[nodiscard]] std::size_t d2() const { return d_[1]; }
  [[nodiscard]] std::size_t d3() const { return d_[2]; }
  [[nodiscard]] bool is_cube() const { return d_[0] == d_[1] && d_[1] == d_[2]; }
  [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const;
  /// Stores value (erasing the entry when it is zero). Throws InputError on
  /// out-of-range indices.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  void for_each_nonzero(
      const std::function<void(std::size_t, std::size_t, std::size_t, const Scalar&)>& fn) const;

  friend bool operator==(const T3&, const T3&) = default;

 private:
  [[nodiscard]] std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const;

  std::array<std::size_t, 3> d_{0, 0, 0};
  std::map<std::size_t, Scalar> entries_;
};

}  // namespace csa
