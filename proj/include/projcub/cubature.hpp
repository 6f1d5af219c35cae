#pragma once

// Projective cubature formulas on the unit sphere of K^m and their
// construction: base cases, the recursive lift, field descent and
// projection back to K.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "projcub/field.hpp"
#include "projcub/quadrature.hpp"

namespace projcub {

class CubatureFormula {
 public:
  CubatureFormula() = default;
  /// nodes: size() * m * delta reals, node-major. Throws on shape errors,
  /// odd index or nonpositive weights.
  CubatureFormula(Field field, std::size_t m, int index, std::vector<double> nodes,
                  std::vector<double> weights, std::vector<std::string> trace = {});

  Field field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return m_; }
  int index() const noexcept { return index_; }
  std::size_t size() const noexcept { return weights_.size(); }
  /// Reals per node, delta * m.
  std::size_t stride() const noexcept { return m_ * static_cast<std::size_t>(delta(field_)); }

  std::span<const double> node(std::size_t k) const noexcept {
    return {nodes_.data() + k * stride(), stride()};
  }
  KVector node_vector(std::size_t k) const { return KVector(field_, node(k)); }
  double weight(std::size_t k) const noexcept { return weights_[k]; }
  std::span<const double> nodes_flat() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Construction steps, oldest first.
  const std::vector<std::string>& trace() const noexcept { return trace_; }
  /// Node counts of the formulas this one was assembled from.
  const std::vector<std::size_t>& source_counts() const noexcept { return source_counts_; }
  CubatureFormula with_history(std::vector<std::string> trace,
                               std::vector<std::size_t> source_counts) const;

  friend bool operator==(const CubatureFormula&, const CubatureFormula&) = default;

 private:
  Field field_ = Field::R;
  std::size_t m_ = 0;
  int index_ = 2;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<std::string> trace_;
  std::vector<std::size_t> source_counts_;
};

/// x * alpha with |alpha| = 1 such that the first entry above 1e-12 ||x|| is
/// real and positive. Throws InvalidArgument for the zero vector.
KVector canonicalize(const KVector& x);
/// In-place form on m packed entries.
void canonicalize_in_place(Field f, std::size_t m, double* x);

CubatureFormula base_singleton(Field field, int p);
CubatureFormula base_orthonormal(Field field, std::size_t m);
/// s+1 equally spaced lines in R^2; index 2s.
CubatureFormula base_polygon(std::size_t s);

/// Podal real rule of index q on the unit sphere of R^delta, built without
/// sporadic node sets. delta must be 1, 2 or 4.
CubatureFormula real_sphere_rule(int delta, int q);
/// The rule on S(1,K) used by the lift at index p: real_sphere_rule(delta, 2*floor(p/4)).
CubatureFormula unit_sphere_rule(Field field, int p);
/// Nodes of a real rule on R^delta reinterpreted as unit scalars of K.
std::vector<Scalar> sphere_scalars(const CubatureFormula& rule, Field field);

struct LiftPlan {
  CubatureFormula sphere_rule;
  QuadratureRule radial_rule;
  std::size_t target_count = 0;
};

/// Node count of one lift of an n-node formula at index p with nu sphere nodes.
std::size_t lift_count(int p, std::size_t nu, std::size_t n);

LiftPlan plan_lift(const CubatureFormula& source);

struct LiftOptions {
  /// Random directions used to probe the lifted formula; 0 disables the probe.
  std::size_t probe_samples = 16;
  std::uint64_t probe_seed = 0;
  /// Collapse projectively coincident output nodes. Over C and H at p = 0
  /// (mod 4) the nu nodes theta_j + 0 all lie on one projective point.
  bool merge_coincident = false;
};

/// S(m-1, K) -> S(m, K) at the source's index (p >= 4). Throws
/// VerificationFailure if the probe residual exceeds the default tolerance.
CubatureFormula lift(const CubatureFormula& source, const LiftOptions& options = {});
CubatureFormula lift(const CubatureFormula& source, const LiftPlan& plan,
                     const LiftOptions& options = {});

/// Default node cap, or PROJCUB_NODE_CAP from the environment.
std::size_t default_node_cap();

/// Orthonormal basis for p = 2, otherwise m-1 lifts of the singleton.
/// Throws NodeBudgetExceeded before any lift whose output would exceed cap.
CubatureFormula construct(Field field, std::size_t m, int p, std::size_t cap = default_node_cap(),
                          const LiftOptions& options = {});
/// Node count construct() would produce, without building anything.
std::size_t construct_count(Field field, std::size_t m, int p);

/// Real formula on S(delta*m, R): nodes u_k theta_j, weights rho_k mu_j.
CubatureFormula field_descent(const CubatureFormula& source);

/// Canonicalizes every node and sums the weights of nodes whose gap is below
/// 1e-9, keeping the first node of each group.
CubatureFormula merge_coincident(const CubatureFormula& source);

/// The same nodes and weights read as a real formula on R^{delta*m}. This is
/// a change of representation only; the result is generally not a real
/// cubature formula of the same index.
CubatureFormula flatten_to_real(const CubatureFormula& source);

/// Regroups a real formula on S(delta*m, R) into K^m by consecutive
/// coordinates, canonicalizes, and merges projectively coincident nodes.
CubatureFormula project_to_K(const CubatureFormula& source, Field field);

}  // namespace projcub
