#pragma once

// Certification of projective cubature formulas through the Hilbert
// identity  sum_k rho_k |<x_k, y>|^p = gamma ||y||^p  on sampled directions.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "projcub/cubature.hpp"
#include "projcub/field.hpp"
#include "projcub/kernels/power_sum.hpp"

namespace projcub {

/// Average of |<x, y>|^p over the unit sphere of K^m for a unit y.
double gamma(Field field, std::size_t m, int p);
double log_gamma_constant(Field field, std::size_t m, int p);

/// |sum rho_k |<x_k,y>|^p - gamma ||y||^p| / (gamma ||y||^p). Throws for y = 0.
double residual(const CubatureFormula& f, const KVector& y);

/// Relative residuals for many unit-or-not directions (node-major, stride reals each).
std::vector<double> residuals(const CubatureFormula& f, std::span<const double> directions,
                              kernels::Isa isa = kernels::default_isa());

/// Unit directions of K^m: `count` Gaussian draws from the (seed, index) counter stream.
std::vector<double> random_directions(Field field, std::size_t m, std::size_t count,
                                      std::uint64_t seed);
/// e_i, (e_i +- e_j)/sqrt2 and (e_i +- u e_j)/sqrt2 for each imaginary unit u.
std::vector<double> deterministic_directions(Field field, std::size_t m);

/// 1e-8, scaled by sqrt(n)/100 above 1e4 nodes.
double default_tolerance(std::size_t node_count);

struct VerificationReport {
  double max_rel_residual = 0.0;
  double weight_sum_error = 0.0;
  double max_norm_error = 0.0;
  double min_projective_gap = 1.0;
  /// False when min_projective_gap is only a lower bound.
  bool gap_exact = true;
  std::size_t samples = 0;
  std::size_t directions = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kWeightSumTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kMinProjectiveGap = 1e-9;

VerificationReport check(const CubatureFormula& f, std::size_t samples, std::uint64_t seed,
                         double tol);
inline VerificationReport check(const CubatureFormula& f, std::size_t samples,
                                std::uint64_t seed = 0) {
  return check(f, samples, seed, default_tolerance(f.size()));
}

/// Largest residual over a few random directions; the cheap probe used
/// after each construction step.
double probe_residual(const CubatureFormula& f, std::size_t samples, std::uint64_t seed);

/// u_k = x_k (rho_k / gamma)^{1/p}, giving sum_k |<u_k, y>|^p = ||y||^p.
std::vector<double> embedding_vectors(const CubatureFormula& f);

}  // namespace projcub
