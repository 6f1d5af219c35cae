#include <cstdlib>
#include <string>

#include "projcub/error.hpp"
#include "projcub/kernels/power_sum.hpp"

namespace projcub::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Avx512: return "avx512";
  }
  return "?";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
#if defined(PROJCUB_HAVE_X86_KERNELS)
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    case Isa::Avx512: return __builtin_cpu_supports("avx512f");
#else
    case Isa::Avx2:
    case Isa::Avx512: return false;
#endif
  }
  return false;
}

Isa default_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("PROJCUB_SIMD"); env != nullptr && *env != '\0') {
      const std::string want(env);
      for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512}) {
        if (want == isa_name(isa)) {
          if (!isa_available(isa)) {
            throw InvalidArgument("PROJCUB_SIMD=" + want + " is not supported here");
          }
          return isa;
        }
      }
      throw InvalidArgument("PROJCUB_SIMD must be scalar, avx2 or avx512");
    }
    if (isa_available(Isa::Avx512)) return Isa::Avx512;
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    return Isa::Scalar;
  }();
  return chosen;
}

void power_sums(const PowerSumTask& task, Isa isa) {
  if (task.nodes == nullptr || (task.probes > 0 && (task.columns == nullptr || task.out == nullptr))) {
    throw InvalidArgument("incomplete power-sum task");
  }
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel " + std::string(isa_name(isa)) + " is not available");
  }
  switch (isa) {
    case Isa::Scalar: power_sums_scalar(task); return;
#if defined(PROJCUB_HAVE_X86_KERNELS)
    case Isa::Avx2: power_sums_avx2(task); return;
    case Isa::Avx512: power_sums_avx512(task); return;
#else
    default: break;
#endif
  }
  throw InvalidArgument("kernel not compiled in");
}

}  // namespace projcub::kernels
