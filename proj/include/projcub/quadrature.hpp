#pragma once

// Gauss and Radau-at-zero rules on [0,1] for the normalized Jacobi weight
// chi(tau) proportional to tau^alpha (1 - tau)^beta.

#include <cstddef>
#include <utility>
#include <vector>

namespace projcub {

enum class QuadratureFlavor { Gauss, RadauAtZero };

struct QuadratureRule {
  double alpha = 0.0;
  double beta = 0.0;
  QuadratureFlavor flavor = QuadratureFlavor::Gauss;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive, summing to 1

  std::size_t size() const noexcept { return nodes.size(); }
  /// Sum of w_k f(tau_k).
  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * f(nodes[k]);
    return s;
  }
};

/// Monic three-term recurrence p_{k+1} = (t - a_k) p_k - b_k p_{k-1} for the
/// shifted Jacobi weight; b_0 is the total mass (1). Throws InvalidArgument.
std::vector<std::pair<double, double>> recurrence_coefficients(double alpha, double beta,
                                                               std::size_t count);

/// K-point Gauss rule, exact through degree 2K-1.
QuadratureRule gauss_rule(double alpha, double beta, std::size_t K);

/// Rule with a fixed node at 0 plus K free nodes, exact through degree 2K.
QuadratureRule radau_zero_rule(double alpha, double beta, std::size_t K);

/// Integral of tau^j against the normalized weight.
double chi_moment(double alpha, double beta, unsigned j);

/// Eigenvalues (ascending) and squared first eigenvector components of the
/// symmetric tridiagonal matrix with the given diagonal and off-diagonal.
/// Throws QuadratureError on non-convergence.
std::pair<std::vector<double>, std::vector<double>> tridiagonal_eigen(
    std::vector<double> diagonal, std::vector<double> off_diagonal);

}  // namespace projcub
