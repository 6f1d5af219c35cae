#pragma once

// Weighted power sums  S(y) = sum_k w_k |<x_k, y>|^p  over a node set, the
// hot loop of verification. Each probe y is given as delta columns in
// R^{delta*m}: component t of <x, y> is dot(x_flat, column_t).

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "projcub/field.hpp"

namespace projcub {

class CubatureFormula;

namespace kernels {

enum class Isa { Scalar, Avx2, Avx512 };

std::string_view isa_name(Isa isa) noexcept;
/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
/// Widest available ISA, unless PROJCUB_SIMD=scalar|avx2|avx512 asks for another.
Isa default_isa();

struct AlignedFree {
  void operator()(double* p) const noexcept;
};
using AlignedBuffer = std::unique_ptr<double[], AlignedFree>;
AlignedBuffer aligned_doubles(std::size_t count);

/// Structure-of-arrays copy of the nodes, padded to a multiple of 8 with
/// zero-weight entries.
struct NodePack {
  std::size_t stride = 0;  // delta * m
  std::size_t count = 0;
  std::size_t padded = 0;
  AlignedBuffer coords;   // coords[r * padded + k]
  AlignedBuffer weights;  // padded
};

NodePack pack_nodes(const CubatureFormula& formula);
NodePack pack_nodes(std::size_t stride, std::span<const double> nodes,
                    std::span<const double> weights);

/// Columns for probe y: out[t * stride + r] = component t of conj(u_r) eta_i
/// over positions (i, r), so that component t of <x, y> = dot(x, out_t).
void probe_columns(Field field, std::size_t m, const double* y, double* out) noexcept;

struct PowerSumTask {
  const NodePack* nodes = nullptr;
  int components = 1;           // delta
  unsigned half_index = 1;      // p / 2
  std::size_t probes = 0;
  const double* columns = nullptr;  // probes * components * stride
  double* out = nullptr;            // probes
};

/// Plain per-node reference loop with compensated summation.
void power_sums_scalar(const PowerSumTask& task);
void power_sums_avx2(const PowerSumTask& task);
void power_sums_avx512(const PowerSumTask& task);

void power_sums(const PowerSumTask& task, Isa isa);
inline void power_sums(const PowerSumTask& task) { power_sums(task, default_isa()); }

}  // namespace kernels
}  // namespace projcub
