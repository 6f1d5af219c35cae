#include <algorithm>
#include <cstdlib>
#include <new>

#include "projcub/cubature.hpp"
#include "projcub/error.hpp"
#include "projcub/kernels/power_sum.hpp"
#include "projcub/summation.hpp"

namespace projcub::kernels {

void AlignedFree::operator()(double* p) const noexcept { std::free(p); }

AlignedBuffer aligned_doubles(std::size_t count) {
  const std::size_t bytes = std::max<std::size_t>(64, (count * sizeof(double) + 63) / 64 * 64);
  void* p = std::aligned_alloc(64, bytes);
  if (p == nullptr) throw std::bad_alloc();
  std::fill_n(static_cast<double*>(p), bytes / sizeof(double), 0.0);
  return AlignedBuffer(static_cast<double*>(p));
}

NodePack pack_nodes(std::size_t stride, std::span<const double> nodes,
                    std::span<const double> weights) {
  if (stride == 0 || nodes.size() != stride * weights.size()) {
    throw DimensionMismatch("node array does not match weights and stride");
  }
  NodePack pack;
  pack.stride = stride;
  pack.count = weights.size();
  pack.padded = (pack.count + 7) / 8 * 8;
  pack.coords = aligned_doubles(stride * pack.padded);
  pack.weights = aligned_doubles(pack.padded);
  for (std::size_t k = 0; k < pack.count; ++k) {
    const double* x = nodes.data() + k * stride;
    for (std::size_t r = 0; r < stride; ++r) pack.coords[r * pack.padded + k] = x[r];
    pack.weights[k] = weights[k];
  }
  return pack;
}

NodePack pack_nodes(const CubatureFormula& formula) {
  return pack_nodes(formula.stride(), formula.nodes_flat(), formula.weights());
}

void probe_columns(Field field, std::size_t m, const double* y, double* out) noexcept {
  const int d = delta(field);
  const std::size_t stride = m * static_cast<std::size_t>(d);
  double unit[4];
  double prod[4];
  for (std::size_t i = 0; i < m; ++i) {
    for (int r = 0; r < d; ++r) {
      for (int t = 0; t < 4; ++t) unit[t] = t == r ? 1.0 : 0.0;
      raw::conj_mul(field, unit, y + i * d, prod);
      for (int t = 0; t < d; ++t) out[t * stride + i * d + r] = prod[t];
    }
  }
}

void power_sums_scalar(const PowerSumTask& task) {
  const NodePack& np = *task.nodes;
  const std::size_t D = np.stride;
  const int T = task.components;
  for (std::size_t j = 0; j < task.probes; ++j) {
    const double* col = task.columns + j * T * D;
    CompensatedSum sum;
    for (std::size_t k = 0; k < np.count; ++k) {
      double q = 0.0;
      for (int t = 0; t < T; ++t) {
        double c = 0.0;
        for (std::size_t r = 0; r < D; ++r) c += np.coords[r * np.padded + k] * col[t * D + r];
        q += c * c;
      }
      sum.add(np.weights[k] * ipow(q, task.half_index));
    }
    task.out[j] = sum.value();
  }
}

}  // namespace projcub::kernels
