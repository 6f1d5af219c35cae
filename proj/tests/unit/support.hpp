#pragma once

// Shared generators for the unit tests. These use std::mt19937_64 so the
// tests do not depend on the library's own RNG.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "projcub/field.hpp"

namespace testing {

inline std::mt19937_64& engine() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double normal() {
  static std::normal_distribution<double> dist;
  return dist(engine());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine());
}

inline projcub::Scalar random_scalar(projcub::Field f) {
  std::vector<double> c(projcub::delta(f));
  for (double& x : c) x = normal();
  return projcub::Scalar(f, std::span<const double>(c));
}

inline projcub::Scalar random_unit_scalar(projcub::Field f) {
  const projcub::Scalar a = random_scalar(f);
  return (1.0 / a.abs()) * a;
}

inline projcub::KVector random_vector(projcub::Field f, std::size_t m) {
  std::vector<double> c(m * projcub::delta(f));
  for (double& x : c) x = normal();
  return projcub::KVector(f, std::move(c));
}

inline projcub::KVector random_unit_vector(projcub::Field f, std::size_t m) {
  const projcub::KVector v = random_vector(f, m);
  return v.scaled(1.0 / v.norm());
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline constexpr projcub::Field kFields[] = {projcub::Field::R, projcub::Field::C,
                                             projcub::Field::H};

}  // namespace testing
