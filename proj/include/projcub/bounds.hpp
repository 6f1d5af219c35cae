#pragma once

// Bound bookkeeping for the minimal node count N_K(m, p): dimension
// formulas, the general upper bound, the recursion inequalities, and a
// fact database with a table-row evaluator.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "projcub/field.hpp"

namespace projcub {

using BigInt = boost::multiprecision::cpp_int;

/// dim Phi_K(m, p) as an exact integer.
BigInt dim_phi_exact(Field field, int m, int p);
/// Same, throwing OverflowError when it does not fit in int64.
std::int64_t dim_phi(Field field, int m, int p);
/// dim Phi_K(m, p) - 1.
std::int64_t gub(Field field, int m, int p);

enum class FactKind { Exact, Upper };

struct BoundFact {
  Field field = Field::R;
  int m = 1;
  int p = 2;
  std::int64_t n = 1;
  FactKind kind = FactKind::Upper;
  /// Table id ("e1", "i14") or a derivation such as "RecursionStep(i2)".
  std::string provenance;
};

class FactDatabase {
 public:
  FactDatabase() = default;
  explicit FactDatabase(std::vector<BoundFact> facts);

  /// CSV with header id,field,m,p,n,kind,reference. Throws FormatError.
  static FactDatabase from_csv(std::string_view text);
  /// The embedded input tables.
  static const FactDatabase& embedded();

  const std::vector<BoundFact>& facts() const noexcept { return facts_; }
  const BoundFact* find(std::string_view id) const noexcept;
  /// Reference column of an input fact, empty if unknown.
  std::string reference(std::string_view id) const;
  /// Smallest n among facts at exactly (field, m, p).
  std::optional<BoundFact> best_at(Field field, int m, int p) const;
  /// Smallest n among facts at (field, m, p') with p' >= p (index monotonicity).
  std::optional<BoundFact> best_at_or_above(Field field, int m, int p) const;

 private:
  std::vector<BoundFact> facts_;
  std::map<std::string, std::string, std::less<>> references_;
};

/// Node count of the podal rule on S(1,K) at index p in bound mode:
/// 1 for R, floor(p/4)+1 for C, the best known N_R(4, 2 floor(p/4)) for H.
std::int64_t nu(Field field, int p, const FactDatabase& db);
/// The H case of nu together with the fact it came from.
BoundFact nu_fact(Field field, int p, const FactDatabase& db);

/// One lift: nu(p/2+1)n for p = 2 (mod 4), nu((p/2)n+1) for p = 0 (mod 4).
std::int64_t recursion_bound(int p, std::int64_t n, std::int64_t nu_value);
std::int64_t recursion_bound(Field field, int p, std::int64_t n, const FactDatabase& db);
/// l lifts in closed form.
std::int64_t iterated_bound(int p, std::int64_t n, int l, std::int64_t nu_value);
std::int64_t iterated_bound(Field field, int p, std::int64_t n, int l, const FactDatabase& db);

/// N_K(m, p) <= N_R(delta m, p) from a real fact.
BoundFact koly_left(const BoundFact& real_fact, Field target);
/// N_R(delta m, p) <= N_R(delta, p) N_K(m, p).
BoundFact koly_right(const BoundFact& sphere_fact, const BoundFact& field_fact);
/// N(m, p-2) <= N(m, p); at target index 2 the exact value m is returned.
BoundFact index_reduction(const BoundFact& fact, int target_p);
inline BoundFact index_reduction(const BoundFact& fact) { return index_reduction(fact, fact.p - 2); }
/// N_K(m+1, p) from N_K(m, p).
BoundFact recursion_step(const BoundFact& fact, const FactDatabase& db);
BoundFact gub_fact(Field field, int m, int p);

enum class Rule {
  IndexReduction,
  RecursionStep,
  RecursionFromReal,
  KolyLeft,
  KolyRight,
  IteratedRecursion,
  GUBRule
};
std::string_view rule_name(Rule rule) noexcept;
Rule parse_rule(std::string_view name);

/// A result row: printed values plus the rule and input ids that produce it.
struct TableRow {
  int table = 3;
  std::string id;
  int m = 1;
  int p = 2;
  std::int64_t n = 0;
  std::int64_t gub = 0;
  Rule rule = Rule::RecursionStep;
  std::vector<std::string> inputs;
};

/// Field of result tables 3, 4, 5.
Field table_field(int table);
/// CSV with header table,id,m,p,n,gub,rule,inputs (inputs ';'-separated).
std::vector<TableRow> rows_from_csv(std::string_view text);
const std::vector<TableRow>& embedded_rows();

struct DerivedRow {
  TableRow row;
  /// From derived values of referenced rows.
  std::int64_t n = 0;
  /// From printed values of referenced rows.
  std::int64_t local_n = 0;
  std::int64_t gub = 0;
  std::string chain;
  bool n_matches() const noexcept { return n == row.n; }
  bool gub_matches() const noexcept { return gub == row.gub; }
};

/// Evaluates every row. Input ids: e#/i# facts, r# rows of the same table,
/// r#R / r#C / r#H rows of another table, and the closed forms simp
/// (N(1,p)=1, N(m,2)=m), scocit (N_R(2,p)=p/2+1) and ubc2 (one lift of the
/// singleton over C). Throws FormatError for unknown ids or mislocated inputs.
std::vector<DerivedRow> derive_tables(const FactDatabase& db, const std::vector<TableRow>& rows);

/// Smallest bound reachable from the database by the rules above within
/// index p' <= max(p, 18); the provenance holds the derivation.
BoundFact best_bound(Field field, int m, int p, const FactDatabase& db);

/// Leading constant of dim Phi_K(m, p) growth.
double asymptotic_constant(Field field, int m);
double log_asymptotic_constant(Field field, int m);

}  // namespace projcub
