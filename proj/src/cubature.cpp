#include "projcub/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "projcub/error.hpp"
#include "projcub/proximity.hpp"
#include "projcub/verification.hpp"

namespace projcub {

namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kMergeGap = 1e-9;
constexpr std::size_t kDefaultNodeCap = 10'000'000;

void require_index(int p, int min_index) {
  if (p < min_index || p % 2 != 0) {
    throw InvalidArgument("index must be an even integer >= " + std::to_string(min_index) +
                          ", got " + std::to_string(p));
  }
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("node count overflows size_t");
  return r;
}

std::size_t checked_add(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("node count overflows size_t");
  return r;
}

std::string dims(std::size_t m) { return std::to_string(m); }

void probe_or_throw(const CubatureFormula& f, const LiftOptions& options, const char* what) {
  if (options.probe_samples == 0) return;
  const double r = probe_residual(f, options.probe_samples, options.probe_seed);
  const double tol = default_tolerance(f.size());
  if (!(r <= tol)) {
    throw VerificationFailure(std::string(what) + " produced a formula with residual " +
                                  std::to_string(r) + " > " + std::to_string(tol),
                              r);
  }
}

}  // namespace

CubatureFormula::CubatureFormula(Field field, std::size_t m, int index, std::vector<double> nodes,
                                 std::vector<double> weights, std::vector<std::string> trace)
    : field_(field),
      m_(m),
      index_(index),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      trace_(std::move(trace)) {
  if (m_ == 0) throw InvalidArgument("formula dimension must be >= 1");
  require_index(index_, 2);
  if (weights_.empty()) throw InvalidArgument("formula needs at least one node");
  if (nodes_.size() != weights_.size() * stride()) {
    throw DimensionMismatch("node array holds " + std::to_string(nodes_.size()) +
                            " reals, expected " + std::to_string(weights_.size() * stride()));
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("formula weights must be positive and finite");
    }
  }
  for (double c : nodes_) {
    if (!std::isfinite(c)) throw InvalidArgument("formula nodes must be finite");
  }
}

CubatureFormula CubatureFormula::with_history(std::vector<std::string> trace,
                                              std::vector<std::size_t> source_counts) const {
  CubatureFormula out = *this;
  out.trace_ = std::move(trace);
  out.source_counts_ = std::move(source_counts);
  return out;
}

void canonicalize_in_place(Field f, std::size_t m, double* x) {
  const int d = delta(f);
  double nrm2 = 0.0;
  for (std::size_t r = 0; r < m * d; ++r) nrm2 += x[r] * x[r];
  if (!(nrm2 > 0.0)) throw InvalidArgument("cannot canonicalize the zero vector");
  const double limit = kPivotTolerance * std::sqrt(nrm2);
  for (std::size_t i = 0; i < m; ++i) {
    double* xi = x + i * d;
    double a2 = 0.0;
    for (int t = 0; t < d; ++t) a2 += xi[t] * xi[t];
    const double a = std::sqrt(a2);
    if (!(a > limit)) continue;
    bool already = xi[0] > 0.0;
    for (int t = 1; t < d; ++t) already = already && xi[t] == 0.0;
    if (already) return;
    double alpha[4] = {xi[0] / a, 0.0, 0.0, 0.0};
    for (int t = 1; t < d; ++t) alpha[t] = -xi[t] / a;
    raw::scale_right(f, m, x, alpha);
    xi[0] = a;
    for (int t = 1; t < d; ++t) xi[t] = 0.0;
    return;
  }
}

KVector canonicalize(const KVector& x) {
  KVector out = x;
  canonicalize_in_place(x.field(), x.dimension(), out.flat().data());
  return out;
}

CubatureFormula base_singleton(Field field, int p) {
  require_index(p, 2);
  std::vector<double> node(delta(field), 0.0);
  node[0] = 1.0;
  return CubatureFormula(field, 1, p, std::move(node), {1.0})
      .with_history({"singleton"}, {});
}

CubatureFormula base_orthonormal(Field field, std::size_t m) {
  if (m == 0) throw InvalidArgument("dimension must be >= 1");
  const std::size_t d = delta(field);
  std::vector<double> nodes(m * m * d, 0.0);
  for (std::size_t i = 0; i < m; ++i) nodes[i * m * d + i * d] = 1.0;
  std::vector<double> weights(m, 1.0 / static_cast<double>(m));
  return CubatureFormula(field, m, 2, std::move(nodes), std::move(weights))
      .with_history({"orthonormal m=" + dims(m)}, {});
}

CubatureFormula base_polygon(std::size_t s) {
  if (s == 0) throw InvalidArgument("polygon needs s >= 1");
  const std::size_t n = s + 1;
  std::vector<double> nodes(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = static_cast<double>(k) * std::numbers::pi / static_cast<double>(n);
    nodes[2 * k] = std::cos(angle);
    nodes[2 * k + 1] = std::sin(angle);
    canonicalize_in_place(Field::R, 2, nodes.data() + 2 * k);
  }
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  return CubatureFormula(Field::R, 2, static_cast<int>(2 * s), std::move(nodes),
                         std::move(weights))
      .with_history({"polygon s=" + std::to_string(s)}, {});
}

namespace {

std::size_t real_sphere_count(int d, int q);

std::size_t construct_count_impl(Field field, std::size_t m, int p) {
  if (p == 2) return m;
  const std::size_t nu = real_sphere_count(delta(field), 2 * (p / 4));
  std::size_t n = 1;
  for (std::size_t l = 1; l < m; ++l) n = lift_count(p, nu, n);
  return n;
}

std::size_t real_sphere_count(int d, int q) {
  switch (d) {
    case 1: return 1;
    case 2: return static_cast<std::size_t>(q / 2 + 1);
    case 4: {
      const std::size_t direct = construct_count_impl(Field::R, 4, q);
      const std::size_t descended =
          checked_mul(construct_count_impl(Field::C, 2, q), static_cast<std::size_t>(q / 2 + 1));
      return std::min(direct, descended);
    }
    default: throw InvalidArgument("sphere rules exist for delta 1, 2, 4 only");
  }
}

}  // namespace

CubatureFormula real_sphere_rule(int d, int q) {
  require_index(q, 2);
  if (d == 1) return base_singleton(Field::R, q);
  if (d == 2) return base_polygon(static_cast<std::size_t>(q / 2));
  if (d != 4) throw InvalidArgument("sphere rules exist for delta 1, 2, 4 only");

  static std::mutex mu;
  static std::map<int, CubatureFormula> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
  }
  const std::size_t direct = construct_count_impl(Field::R, 4, q);
  const std::size_t descended =
      checked_mul(construct_count_impl(Field::C, 2, q), static_cast<std::size_t>(q / 2 + 1));
  CubatureFormula rule = direct <= descended
                             ? construct(Field::R, 4, q, kDefaultNodeCap)
                             : field_descent(construct(Field::C, 2, q, kDefaultNodeCap));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(q, std::move(rule)).first->second;
}

CubatureFormula unit_sphere_rule(Field field, int p) {
  require_index(p, 4);
  return real_sphere_rule(delta(field), 2 * (p / 4));
}

std::vector<Scalar> sphere_scalars(const CubatureFormula& rule, Field field) {
  if (rule.field() != Field::R || rule.dimension() != static_cast<std::size_t>(delta(field))) {
    throw DimensionMismatch("sphere rule must be a real formula on R^delta");
  }
  std::vector<Scalar> out;
  out.reserve(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) out.emplace_back(field, rule.node(j));
  return out;
}

std::size_t lift_count(int p, std::size_t nu, std::size_t n) {
  require_index(p, 4);
  const std::size_t half = static_cast<std::size_t>(p / 2);
  if (p % 4 == 2) return checked_mul(checked_mul(nu, half + 1), n);
  return checked_mul(nu, checked_add(checked_mul(half, n), 1));
}

LiftPlan plan_lift(const CubatureFormula& source) {
  const int p = source.index();
  require_index(p, 4);
  const Field field = source.field();
  const double d = delta(field);
  const double alpha = d * static_cast<double>(source.dimension()) / 2.0 - 1.0;
  const double beta = d / 2.0 - 1.0;
  LiftPlan plan;
  plan.sphere_rule = unit_sphere_rule(field, p);
  plan.radial_rule = p % 4 == 2 ? gauss_rule(alpha, beta, static_cast<std::size_t>((p + 2) / 4))
                                : radau_zero_rule(alpha, beta, static_cast<std::size_t>(p / 4));
  plan.target_count = lift_count(p, plan.sphere_rule.size(), source.size());
  return plan;
}

CubatureFormula lift(const CubatureFormula& source, const LiftOptions& options) {
  return lift(source, plan_lift(source), options);
}

CubatureFormula lift(const CubatureFormula& source, const LiftPlan& plan,
                     const LiftOptions& options) {
  const Field field = source.field();
  const std::size_t d = delta(field);
  const std::size_t ms = source.dimension();
  const std::size_t m = ms + 1;
  const std::size_t D = m * d;
  const QuadratureRule& radial = plan.radial_rule;
  const CubatureFormula& sphere = plan.sphere_rule;
  if (sphere.field() != Field::R || sphere.dimension() != d) {
    throw DimensionMismatch("lift sphere rule must live on R^delta");
  }
  const bool radau = radial.flavor == QuadratureFlavor::RadauAtZero;
  const std::size_t first_free = radau ? 1 : 0;

  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(plan.target_count * D);
  weights.reserve(plan.target_count);
  std::vector<double> x(D);
  auto emit = [&](double w) {
    canonicalize_in_place(field, m, x.data());
    nodes.insert(nodes.end(), x.begin(), x.end());
    weights.push_back(w);
  };

  for (std::size_t j = 0; j < sphere.size(); ++j) {
    const double* theta = sphere.node(j).data();
    const double mu = sphere.weight(j);
    if (radau) {
      std::fill(x.begin(), x.end(), 0.0);
      std::copy(theta, theta + d, x.begin());
      emit(mu * radial.weights[0]);
    }
    for (std::size_t i = 0; i < source.size(); ++i) {
      const double* w = source.node(i).data();
      const double lambda = source.weight(i);
      for (std::size_t k = first_free; k < radial.size(); ++k) {
        const double tau = radial.nodes[k];
        const double a = std::sqrt(1.0 - tau);
        const double b = std::sqrt(tau);
        const double weight = 0.5 * lambda * mu * radial.weights[k];
        for (double sign : {1.0, -1.0}) {
          for (std::size_t t = 0; t < d; ++t) x[t] = sign * a * theta[t];
          for (std::size_t r = 0; r < ms * d; ++r) x[d + r] = b * w[r];
          emit(weight);
        }
      }
    }
  }
  if (weights.size() != plan.target_count) {
    throw Error("lift produced " + std::to_string(weights.size()) + " nodes, expected " +
                std::to_string(plan.target_count));
  }

  std::vector<std::string> trace = source.trace();
  trace.push_back("lift m=" + dims(ms) + "->" + dims(m) + " nu=" + std::to_string(sphere.size()) +
                  (radau ? " radau K=" : " gauss K=") + std::to_string(radial.size() - first_free));
  std::vector<std::size_t> counts = source.source_counts();
  counts.push_back(source.size());
  CubatureFormula out =
      CubatureFormula(field, m, source.index(), std::move(nodes), std::move(weights))
          .with_history(std::move(trace), std::move(counts));
  if (options.merge_coincident) out = merge_coincident(out);
  probe_or_throw(out, options, "lift");
  return out;
}

std::size_t default_node_cap() {
  if (const char* env = std::getenv("PROJCUB_NODE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InvalidArgument("PROJCUB_NODE_CAP must be a positive integer");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultNodeCap;
}

std::size_t construct_count(Field field, std::size_t m, int p) {
  if (m == 0) throw InvalidArgument("dimension must be >= 1");
  require_index(p, 2);
  return construct_count_impl(field, m, p);
}

CubatureFormula construct(Field field, std::size_t m, int p, std::size_t cap,
                          const LiftOptions& options) {
  if (m == 0) throw InvalidArgument("dimension must be >= 1");
  require_index(p, 2);
  if (p == 2) {
    if (m > cap) throw NodeBudgetExceeded(m, cap);
    return base_orthonormal(field, m);
  }
  CubatureFormula f = base_singleton(field, p);
  for (std::size_t l = 1; l < m; ++l) {
    LiftPlan plan = plan_lift(f);
    if (plan.target_count > cap) throw NodeBudgetExceeded(plan.target_count, cap);
    f = lift(f, plan, options);
  }
  return f;
}

CubatureFormula field_descent(const CubatureFormula& source) {
  const Field field = source.field();
  if (field == Field::R) throw InvalidArgument("field descent needs a formula over C or H");
  const std::size_t d = delta(field);
  const std::size_t m = source.dimension();
  const std::size_t D = m * d;
  const CubatureFormula rule = real_sphere_rule(static_cast<int>(d), source.index());
  std::vector<double> nodes;
  std::vector<double> weights;
  const std::size_t n = checked_mul(source.size(), rule.size());
  nodes.reserve(checked_mul(n, D));
  weights.reserve(n);
  std::vector<double> x(D);
  for (std::size_t k = 0; k < source.size(); ++k) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      std::copy(source.node(k).begin(), source.node(k).end(), x.begin());
      double theta[4] = {0, 0, 0, 0};
      std::copy(rule.node(j).begin(), rule.node(j).end(), theta);
      raw::scale_right(field, m, x.data(), theta);
      canonicalize_in_place(Field::R, D, x.data());
      nodes.insert(nodes.end(), x.begin(), x.end());
      weights.push_back(source.weight(k) * rule.weight(j));
    }
  }
  std::vector<std::string> trace = source.trace();
  trace.push_back("descent " + std::string(field_name(field)) + "->R with " +
                  std::to_string(rule.size()) + "-node sphere rule");
  std::vector<std::size_t> counts = source.source_counts();
  counts.push_back(source.size());
  CubatureFormula out = CubatureFormula(Field::R, D, source.index(), std::move(nodes),
                                        std::move(weights))
                            .with_history(std::move(trace), std::move(counts));
  probe_or_throw(out, LiftOptions{}, "field descent");
  return out;
}

CubatureFormula flatten_to_real(const CubatureFormula& source) {
  std::vector<double> nodes(source.nodes_flat().begin(), source.nodes_flat().end());
  std::vector<double> weights(source.weights().begin(), source.weights().end());
  return CubatureFormula(Field::R, source.stride(), source.index(), std::move(nodes),
                         std::move(weights))
      .with_history(source.trace(), source.source_counts());
}

CubatureFormula merge_coincident(const CubatureFormula& source) {
  const Field field = source.field();
  const std::size_t m = source.dimension();
  const std::size_t D = source.stride();
  const std::size_t n = source.size();
  std::vector<double> canon(source.nodes_flat().begin(), source.nodes_flat().end());
  for (std::size_t k = 0; k < n; ++k) canonicalize_in_place(field, m, canon.data() + k * D);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (const auto& [i, k] : close_pairs(field, m, canon, kMergeGap)) {
    const std::size_t a = find(i);
    const std::size_t b = find(k);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<double> weight_of(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) weight_of[find(k)] += source.weight(k);
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t k = 0; k < n; ++k) {
    if (find(k) != k) continue;
    nodes.insert(nodes.end(), canon.begin() + k * D, canon.begin() + (k + 1) * D);
    weights.push_back(weight_of[k]);
  }
  std::vector<std::string> trace = source.trace();
  trace.push_back("merge removed " + std::to_string(n - weights.size()));
  std::vector<std::size_t> counts = source.source_counts();
  counts.push_back(n);
  return CubatureFormula(field, m, source.index(), std::move(nodes), std::move(weights))
      .with_history(std::move(trace), std::move(counts));
}

CubatureFormula project_to_K(const CubatureFormula& source, Field field) {
  if (source.field() != Field::R) throw FieldMismatch("project_to_K needs a real formula");
  const std::size_t d = delta(field);
  if (source.dimension() % d != 0) {
    throw DimensionMismatch("real dimension " + dims(source.dimension()) +
                            " is not a multiple of " + std::to_string(d));
  }
  std::vector<double> nodes(source.nodes_flat().begin(), source.nodes_flat().end());
  std::vector<double> weights(source.weights().begin(), source.weights().end());
  std::vector<std::string> trace = source.trace();
  trace.push_back("regroup R->" + std::string(field_name(field)));
  const CubatureFormula regrouped =
      CubatureFormula(field, source.dimension() / d, source.index(), std::move(nodes),
                      std::move(weights))
          .with_history(std::move(trace), source.source_counts());
  CubatureFormula out = merge_coincident(regrouped);
  probe_or_throw(out, LiftOptions{}, "projection to K");
  return out;
}

}  // namespace projcub
