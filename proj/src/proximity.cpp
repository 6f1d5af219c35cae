#include "projcub/proximity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "projcub/error.hpp"
#include "projcub/rng.hpp"

namespace projcub {

namespace {

constexpr std::size_t kBruteForceLimit = 3000;
constexpr int kProjections = 3;
constexpr std::uint64_t kProjectionSeed = 0x70726f78ULL;

// Each projection t(x) = trace(R P_x), where P_x is the real orthogonal
// projector onto the line {x alpha}. With ||R||_F = 1 it is 1-Lipschitz in
// the Frobenius distance of projectors, and ||P_x - P_y||_F <= 2 sqrt(delta g)
// for gap g.
class Projector {
 public:
  Projector(Field field, std::size_t m) : field_(field), m_(m), D_(m * delta(field)) {
    CounterRng rng(kProjectionSeed, D_);
    for (auto& R : mats_) {
      R.assign(D_ * D_, 0.0);
      double fro = 0.0;
      for (std::size_t i = 0; i < D_; ++i) {
        for (std::size_t j = i; j < D_; ++j) {
          const double v = rng.gaussian();
          R[i * D_ + j] = v;
          R[j * D_ + i] = v;
          fro += i == j ? v * v : 2.0 * v * v;
        }
      }
      const double s = 1.0 / std::sqrt(fro);
      for (double& v : R) v *= s;
    }
  }

  std::array<double, kProjections> features(const double* x) const {
    std::array<double, kProjections> out{};
    std::vector<double> xu(D_);
    double unit[4];
    const int d = delta(field_);
    for (int u = 0; u < d; ++u) {
      for (int t = 0; t < 4; ++t) unit[t] = t == u ? 1.0 : 0.0;
      std::copy(x, x + D_, xu.begin());
      raw::scale_right(field_, m_, xu.data(), unit);
      for (int p = 0; p < kProjections; ++p) {
        const std::vector<double>& R = mats_[p];
        double acc = 0.0;
        for (std::size_t i = 0; i < D_; ++i) {
          double row = 0.0;
          for (std::size_t j = 0; j < D_; ++j) row += R[i * D_ + j] * xu[j];
          acc += xu[i] * row;
        }
        out[p] += acc;
      }
    }
    return out;
  }

 private:
  Field field_;
  std::size_t m_;
  std::size_t D_;
  std::array<std::vector<double>, kProjections> mats_;
};

using Features = std::vector<std::array<double, kProjections>>;

Features all_features(Field field, std::size_t m, std::span<const double> nodes) {
  const std::size_t D = m * delta(field);
  const std::size_t n = nodes.size() / D;
  Projector proj(field, m);
  Features f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = proj.features(nodes.data() + k * D);
  return f;
}

constexpr int kKeyBits = 21;
constexpr std::int64_t kKeyOffset = std::int64_t{1} << (kKeyBits - 1);

std::uint64_t pack_key(const std::array<std::int64_t, kProjections>& c) {
  std::uint64_t key = 0;
  for (int p = 0; p < kProjections; ++p) {
    key = (key << kKeyBits) | static_cast<std::uint64_t>(c[p] + kKeyOffset);
  }
  return key;
}

// Visits candidate pairs whose features all lie within h of each other.
// Returns false if the visit budget ran out.
template <class Visit>
bool for_each_candidate(const Features& f, double h, std::size_t budget, Visit&& visit) {
  const std::size_t n = f.size();
  std::vector<std::array<std::int64_t, kProjections>> cell(n);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int p = 0; p < kProjections; ++p) {
      const double c = std::floor(f[k][p] / h);
      if (!(std::fabs(c) < static_cast<double>(kKeyOffset - 2))) {
        throw InvalidArgument("projective gap search: cell index out of range");
      }
      cell[k][p] = static_cast<std::int64_t>(c);
    }
    keyed[k] = {pack_key(cell[k]), static_cast<std::uint32_t>(k)};
  }
  std::sort(keyed.begin(), keyed.end());
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> range;
  range.reserve(n);
  for (std::size_t a = 0; a < n;) {
    std::size_t b = a;
    while (b < n && keyed[b].first == keyed[a].first) ++b;
    range.emplace(keyed[a].first, std::make_pair(a, b));
    a = b;
  }
  auto near = [&](std::size_t i, std::size_t k) {
    for (int p = 0; p < kProjections; ++p) {
      if (std::fabs(f[i][p] - f[k][p]) > h) return false;
    }
    return true;
  };
  std::size_t examined = 0;
  for (const auto& [key, span] : range) {
    const std::size_t first = keyed[span.first].second;
    const auto& base = cell[first];
    // Half of the 3^3 neighbourhood: offsets lexicographically > 0, plus the cell itself.
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const int code = dx * 9 + dy * 3 + dz;
          if (code < 0) continue;
          std::array<std::int64_t, kProjections> c = {base[0] + dx, base[1] + dy, base[2] + dz};
          const std::uint64_t other = pack_key(c);
          const auto it = code == 0 ? range.find(key) : range.find(other);
          if (it == range.end()) continue;
          for (std::size_t a = span.first; a < span.second; ++a) {
            const std::size_t bstart = code == 0 ? a + 1 : it->second.first;
            for (std::size_t b = bstart; b < it->second.second; ++b) {
              if (++examined > budget) return false;
              const std::size_t i = keyed[a].second;
              const std::size_t k = keyed[b].second;
              if (near(i, k)) visit(std::min(i, k), std::max(i, k));
            }
          }
        }
      }
    }
  }
  return true;
}

double cell_size(Field field, double threshold) {
  return 2.0 * std::sqrt(delta(field) * threshold) * (1.0 + 1e-6);
}

}  // namespace

double projective_gap(Field field, std::size_t m, const double* x, const double* y) noexcept {
  return std::max(0.0, 1.0 - std::sqrt(raw::abs_inner_squared(field, m, x, y)));
}

GapSearchResult min_projective_gap(Field field, std::size_t m, std::span<const double> nodes) {
  const std::size_t D = m * delta(field);
  const std::size_t n = nodes.size() / D;
  GapSearchResult result;
  if (n < 2) return result;
  if (n <= kBruteForceLimit) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        best = std::min(best, projective_gap(field, m, nodes.data() + i * D, nodes.data() + k * D));
      }
    }
    result.min_gap = best;
    result.pairs_examined = n * (n - 1) / 2;
    return result;
  }
  const Features f = all_features(field, m, nodes);
  const std::size_t budget = std::max<std::size_t>(4'000'000, 64 * n);
  static constexpr double kStages[] = {1e-9, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 3e-2, 0.1, 0.3, 1.0};
  double previous = 0.0;
  for (double threshold : kStages) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t examined = 0;
    const bool complete = for_each_candidate(f, cell_size(field, threshold), budget,
                                             [&](std::size_t i, std::size_t k) {
                                               ++examined;
                                               best = std::min(best, projective_gap(
                                                   field, m, nodes.data() + i * D,
                                                   nodes.data() + k * D));
                                             });
    result.pairs_examined += examined;
    if (!complete) {
      result.min_gap = previous;
      result.exact = false;
      return result;
    }
    if (best < threshold) {
      result.min_gap = best;
      return result;
    }
    previous = threshold;
  }
  result.min_gap = previous;
  result.exact = false;
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> close_pairs(Field field, std::size_t m,
                                                             std::span<const double> nodes,
                                                             double threshold) {
  if (!(threshold > 0.0 && threshold < 1e-2)) {
    throw InvalidArgument("close_pairs threshold must lie in (0, 1e-2)");
  }
  const std::size_t D = m * delta(field);
  const std::size_t n = nodes.size() / D;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  auto keep = [&](std::size_t i, std::size_t k) {
    if (projective_gap(field, m, nodes.data() + i * D, nodes.data() + k * D) < threshold) {
      out.emplace_back(i, k);
    }
  };
  if (n <= kBruteForceLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) keep(i, k);
    }
    return out;
  }
  const Features f = all_features(field, m, nodes);
  for_each_candidate(f, cell_size(field, threshold), std::numeric_limits<std::size_t>::max(), keep);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace projcub
