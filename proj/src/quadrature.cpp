#include "projcub/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "projcub/error.hpp"

namespace projcub {

namespace {

constexpr double kEigenTolerance = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kZeroNodeTolerance = 1e-10;

void require_exponents(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidArgument("Jacobi exponents must exceed -1 (alpha=" + std::to_string(alpha) +
                          ", beta=" + std::to_string(beta) + ")");
  }
}

}  // namespace

std::vector<std::pair<double, double>> recurrence_coefficients(double alpha, double beta,
                                                               std::size_t count) {
  require_exponents(alpha, beta);
  if (count == 0) throw InvalidArgument("recurrence needs count >= 1");
  // [-1,1] Jacobi weight (1-x)^a (1+x)^b, with tau = (1+x)/2.
  const double a = beta;
  const double b = alpha;
  const double s = a + b;
  std::vector<std::pair<double, double>> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k = static_cast<double>(i);
    double A;
    double B;
    if (i == 0) {
      A = (b - a) / (s + 2.0);
      B = 1.0;
    } else {
      const double t = 2.0 * k + s;
      A = (b * b - a * a) / (t * (t + 2.0));
      if (i == 1) {
        B = 4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
      } else {
        B = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
      }
      B /= 4.0;
    }
    out[i] = {(1.0 + A) / 2.0, B};
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> tridiagonal_eigen(
    std::vector<double> d, std::vector<double> off) {
  const std::size_t n = d.size();
  if (n == 0) throw InvalidArgument("empty tridiagonal matrix");
  if (off.size() + 1 != n) throw DimensionMismatch("off-diagonal length must be n-1");
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  // First row of the accumulated rotations.
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEigenTolerance * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps) {
        throw QuadratureError("tridiagonal eigensolver did not converge in " +
                              std::to_string(kMaxSweeps) + " sweeps");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const double f = s * e[ii];
        const double bb = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - bb;
        const double zf = z[ii + 1];
        z[ii + 1] = s * z[ii] + c * zf;
        z[ii] = c * z[ii] - s * zf;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  std::vector<double> values(n);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = d[order[i]];
    weights[i] = z[order[i]] * z[order[i]];
  }
  return {std::move(values), std::move(weights)};
}

namespace {

void finalize(QuadratureRule& rule) {
  double total = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    if (!(rule.weights[k] > 0.0)) {
      throw QuadratureError("nonpositive quadrature weight " + std::to_string(rule.weights[k]) +
                            " at node " + std::to_string(rule.nodes[k]));
    }
    if (k > 0 && !(rule.nodes[k] > rule.nodes[k - 1])) {
      throw QuadratureError("quadrature nodes are not strictly increasing");
    }
    total += rule.weights[k];
  }
  for (double& w : rule.weights) w /= total;
}

}  // namespace

QuadratureRule gauss_rule(double alpha, double beta, std::size_t K) {
  if (K == 0) throw InvalidArgument("Gauss rule needs K >= 1");
  const auto rec = recurrence_coefficients(alpha, beta, K);
  std::vector<double> diag(K);
  std::vector<double> off(K - 1);
  for (std::size_t k = 0; k < K; ++k) diag[k] = rec[k].first;
  for (std::size_t k = 1; k < K; ++k) off[k - 1] = std::sqrt(rec[k].second);
  auto [nodes, weights] = tridiagonal_eigen(std::move(diag), std::move(off));
  QuadratureRule rule{alpha, beta, QuadratureFlavor::Gauss, std::move(nodes), std::move(weights)};
  for (double t : rule.nodes) {
    if (!(t > 0.0 && t < 1.0)) throw QuadratureError("Gauss node outside (0,1)");
  }
  finalize(rule);
  return rule;
}

QuadratureRule radau_zero_rule(double alpha, double beta, std::size_t K) {
  if (K == 0) throw InvalidArgument("Radau rule needs K >= 1 free nodes");
  const auto rec = recurrence_coefficients(alpha, beta, K + 1);
  // Solve J_K delta = b_K e_K (Thomas algorithm); the last diagonal entry of the
  // extended matrix becomes delta_{K-1} so that 0 is an eigenvalue.
  std::vector<double> rhs(K, 0.0);
  rhs[K - 1] = rec[K].second;
  std::vector<double> delta(K);
  {
    std::vector<double> cp(K);
    std::vector<double> dp(K);
    double denom = rec[0].first;
    if (denom == 0.0) throw QuadratureError("singular Radau modification");
    cp[0] = K > 1 ? std::sqrt(rec[1].second) / denom : 0.0;
    dp[0] = rhs[0] / denom;
    for (std::size_t i = 1; i < K; ++i) {
      const double lower = std::sqrt(rec[i].second);
      denom = rec[i].first - lower * cp[i - 1];
      if (denom == 0.0) throw QuadratureError("singular Radau modification");
      cp[i] = i + 1 < K ? std::sqrt(rec[i + 1].second) / denom : 0.0;
      dp[i] = (rhs[i] - lower * dp[i - 1]) / denom;
    }
    delta[K - 1] = dp[K - 1];
    for (std::size_t i = K - 1; i-- > 0;) delta[i] = dp[i] - cp[i] * delta[i + 1];
  }
  std::vector<double> diag(K + 1);
  std::vector<double> off(K);
  for (std::size_t k = 0; k < K; ++k) diag[k] = rec[k].first;
  diag[K] = delta[K - 1];
  for (std::size_t k = 1; k <= K; ++k) off[k - 1] = std::sqrt(rec[k].second);
  auto [nodes, weights] = tridiagonal_eigen(std::move(diag), std::move(off));
  if (!(std::fabs(nodes[0]) < kZeroNodeTolerance)) {
    throw QuadratureError("Radau modification did not produce a node at 0 (got " +
                          std::to_string(nodes[0]) + ")");
  }
  nodes[0] = 0.0;
  QuadratureRule rule{alpha, beta, QuadratureFlavor::RadauAtZero, std::move(nodes),
                      std::move(weights)};
  for (std::size_t k = 1; k < rule.size(); ++k) {
    if (!(rule.nodes[k] > 0.0 && rule.nodes[k] < 1.0)) {
      throw QuadratureError("Radau free node outside (0,1)");
    }
  }
  finalize(rule);
  return rule;
}

double chi_moment(double alpha, double beta, unsigned j) {
  require_exponents(alpha, beta);
  if (j == 0) return 1.0;
  const double jj = static_cast<double>(j);
  return std::exp(std::lgamma(alpha + 1.0 + jj) - std::lgamma(alpha + 1.0) +
                  std::lgamma(alpha + beta + 2.0) - std::lgamma(alpha + beta + 2.0 + jj));
}

}  // namespace projcub
