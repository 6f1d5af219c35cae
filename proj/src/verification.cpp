#include "projcub/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projcub/error.hpp"
#include "projcub/proximity.hpp"
#include "projcub/rng.hpp"
#include "projcub/summation.hpp"

namespace projcub {

namespace {

constexpr std::size_t kProbeBatch = 8192;

void require_index(int p) {
  if (p < 2 || p % 2 != 0) {
    throw InvalidArgument("index must be an even integer >= 2, got " + std::to_string(p));
  }
}

}  // namespace

double log_gamma_constant(Field field, std::size_t m, int p) {
  require_index(p);
  if (m == 0) throw InvalidArgument("dimension must be >= 1");
  const double d = delta(field);
  const double dm = d * static_cast<double>(m);
  const double hp = p / 2.0;
  return std::lgamma(d / 2.0 + hp) + std::lgamma(dm / 2.0) - std::lgamma(d / 2.0) -
         std::lgamma(dm / 2.0 + hp);
}

double gamma(Field field, std::size_t m, int p) { return std::exp(log_gamma_constant(field, m, p)); }

std::vector<double> residuals(const CubatureFormula& f, std::span<const double> directions,
                              kernels::Isa isa) {
  const std::size_t D = f.stride();
  if (D == 0 || directions.size() % D != 0) {
    throw DimensionMismatch("direction array does not match the formula dimension");
  }
  const std::size_t count = directions.size() / D;
  const int T = delta(f.field());
  const double g = gamma(f.field(), f.dimension(), f.index());
  const kernels::NodePack pack = kernels::pack_nodes(f);
  std::vector<double> out(count);
  std::vector<double> columns;
  std::vector<double> sums;
  for (std::size_t b0 = 0; b0 < count; b0 += kProbeBatch) {
    const std::size_t nb = std::min(kProbeBatch, count - b0);
    columns.assign(nb * T * D, 0.0);
    sums.assign(nb, 0.0);
    for (std::size_t j = 0; j < nb; ++j) {
      kernels::probe_columns(f.field(), f.dimension(), directions.data() + (b0 + j) * D,
                             columns.data() + j * T * D);
    }
    kernels::PowerSumTask task{&pack, T, static_cast<unsigned>(f.index() / 2), nb,
                               columns.data(), sums.data()};
    kernels::power_sums(task, isa);
    for (std::size_t j = 0; j < nb; ++j) {
      const double* y = directions.data() + (b0 + j) * D;
      double nrm2 = 0.0;
      for (std::size_t r = 0; r < D; ++r) nrm2 += y[r] * y[r];
      if (!(nrm2 > 0.0)) throw InvalidArgument("residual needs a nonzero direction");
      const double target = g * ipow(nrm2, static_cast<unsigned>(f.index() / 2));
      out[b0 + j] = std::fabs(sums[j] - target) / target;
    }
  }
  return out;
}

double residual(const CubatureFormula& f, const KVector& y) {
  if (y.field() != f.field()) throw FieldMismatch("direction field differs from formula field");
  if (y.dimension() != f.dimension()) throw DimensionMismatch("direction dimension differs");
  return residuals(f, y.flat(), kernels::Isa::Scalar).front();
}

std::vector<double> random_directions(Field field, std::size_t m, std::size_t count,
                                      std::uint64_t seed) {
  const std::size_t D = m * delta(field);
  std::vector<double> out(count * D);
  for (std::size_t j = 0; j < count; ++j) {
    CounterRng rng(seed, j);
    double* y = out.data() + j * D;
    double nrm2 = 0.0;
    do {
      nrm2 = 0.0;
      for (std::size_t r = 0; r < D; ++r) {
        y[r] = rng.gaussian();
        nrm2 += y[r] * y[r];
      }
    } while (!(nrm2 > 1e-300));
    const double s = 1.0 / std::sqrt(nrm2);
    for (std::size_t r = 0; r < D; ++r) y[r] *= s;
  }
  return out;
}

std::vector<double> deterministic_directions(Field field, std::size_t m) {
  const int d = delta(field);
  const std::size_t D = m * d;
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<double> out;
  auto push = [&](std::size_t i, std::size_t j, int unit, double sign) {
    const std::size_t base = out.size();
    out.resize(base + D, 0.0);
    if (j == i) {
      out[base + i * d] = 1.0;
      return;
    }
    out[base + i * d] = h;
    out[base + j * d + unit] = sign * h;
  };
  for (std::size_t i = 0; i < m; ++i) push(i, i, 0, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (int u = 0; u < d; ++u) {
        push(i, j, u, 1.0);
        push(i, j, u, -1.0);
      }
    }
  }
  return out;
}

double default_tolerance(std::size_t node_count) {
  constexpr double base = 1e-8;
  if (node_count <= 10000) return base;
  return base * std::sqrt(static_cast<double>(node_count)) / 100.0;
}

VerificationReport check(const CubatureFormula& f, std::size_t samples, std::uint64_t seed,
                         double tol) {
  VerificationReport report;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tol;

  std::vector<double> dirs = random_directions(f.field(), f.dimension(), samples, seed);
  const std::vector<double> fixed = deterministic_directions(f.field(), f.dimension());
  dirs.insert(dirs.end(), fixed.begin(), fixed.end());
  report.directions = dirs.size() / f.stride();
  for (double r : residuals(f, dirs)) {
    report.max_rel_residual = std::max(report.max_rel_residual, std::isnan(r) ? INFINITY : r);
  }

  CompensatedSum wsum;
  for (double w : f.weights()) wsum.add(w);
  report.weight_sum_error = std::fabs(wsum.value() - 1.0);

  for (std::size_t k = 0; k < f.size(); ++k) {
    double nrm2 = 0.0;
    for (double c : f.node(k)) nrm2 += c * c;
    report.max_norm_error = std::max(report.max_norm_error, std::fabs(std::sqrt(nrm2) - 1.0));
  }

  const GapSearchResult gap = min_projective_gap(f.field(), f.dimension(), f.nodes_flat());
  report.min_projective_gap = gap.min_gap;
  report.gap_exact = gap.exact;

  report.pass = report.max_rel_residual <= tol && report.weight_sum_error <= kWeightSumTolerance &&
                report.max_norm_error <= kNormTolerance &&
                report.min_projective_gap >= kMinProjectiveGap;
  return report;
}

double probe_residual(const CubatureFormula& f, std::size_t samples, std::uint64_t seed) {
  double worst = 0.0;
  for (double r : residuals(f, random_directions(f.field(), f.dimension(), samples, seed))) {
    worst = std::max(worst, std::isnan(r) ? INFINITY : r);
  }
  return worst;
}

std::vector<double> embedding_vectors(const CubatureFormula& f) {
  const double g = gamma(f.field(), f.dimension(), f.index());
  std::vector<double> out(f.nodes_flat().begin(), f.nodes_flat().end());
  const std::size_t D = f.stride();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double s = std::pow(f.weight(k) / g, 1.0 / f.index());
    for (std::size_t r = 0; r < D; ++r) out[k * D + r] *= s;
  }
  return out;
}

}  // namespace projcub
