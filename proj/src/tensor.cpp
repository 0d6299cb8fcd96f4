#include "csa/tensor.hpp"

#include <string>

#include "csa/error.hpp"

namespace csa {

namespace {
const Scalar kZero{};
}

std::size_t T3::flat(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= d_[0] || j >= d_[1] || k >= d_[2]) {
    throw InputError("tensor index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(k) + ") out of range");
  }
  return (i * d_[1] + j) * d_[2] + k;
}

const Scalar& T3::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries_.find(flat(i, j, k));
  return it == entries_.end() ? kZero : it->second;
}

void T3::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  const auto key = flat(i, j, k);
  if (value.is_zero()) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

void T3::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (value.is_zero()) return;
  set(i, j, k, (*this)(i, j, k) + value);
}

void T3::for_each_nonzero(
    const std::function<void(std::size_t, std::size_t, std::size_t, const Scalar&)>& fn) const {
  const std::size_t plane = d_[1] * d_[2];
  for (const auto& [key, value] : entries_) {
    fn(key / plane, (key / d_[2]) % d_[1], key % d_[2], value);
  }
}

}  // namespace csa
