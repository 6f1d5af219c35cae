#include "projcub/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "embedded_data.hpp"
#include "projcub/error.hpp"

namespace projcub {

namespace {

void require_args(int m, int p) {
  if (m < 1) throw InvalidArgument("dimension must be >= 1, got " + std::to_string(m));
  if (p < 2 || p % 2 != 0) {
    throw InvalidArgument("index must be an even integer >= 2, got " + std::to_string(p));
  }
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("bound arithmetic overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("bound arithmetic overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return r;
}

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

/// Data lines of a CSV with the expected header.
std::vector<std::vector<std::string_view>> csv_rows(std::string_view text,
                                                     std::string_view header) {
  std::vector<std::vector<std::string_view>> rows;
  bool seen_header = false;
  const std::size_t columns = split(header, ',').size();
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != header) throw FormatError("expected CSV header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != columns) {
      throw FormatError("CSV line has " + std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(columns) + ": " + std::string(line));
    }
    for (auto& c : cells) c = trim(c);
    rows.push_back(std::move(cells));
  }
  if (!seen_header) throw FormatError("CSV has no header");
  return rows;
}

std::string location(Field f, int m, int p) {
  return "N_" + std::string(field_name(f)) + "(" + std::to_string(m) + "," + std::to_string(p) + ")";
}

}  // namespace

BigInt dim_phi_exact(Field field, int m, int p) {
  require_args(m, p);
  const int h = p / 2;
  switch (field) {
    case Field::R: return binom(m + p - 1, m - 1);
    case Field::C: {
      const BigInt b = binom(m + h - 1, m - 1);
      return b * b;
    }
    case Field::H: {
      const BigInt num = binom(2 * m + h - 2, 2 * m - 2) * binom(2 * m + h - 1, 2 * m - 2);
      if (num % (2 * m - 1) != 0) {
        throw Error("quaternionic dimension is not an integer at m=" + std::to_string(m) +
                    " p=" + std::to_string(p));
      }
      return num / (2 * m - 1);
    }
  }
  return 0;
}

std::int64_t dim_phi(Field field, int m, int p) { return to_int64(dim_phi_exact(field, m, p)); }

std::int64_t gub(Field field, int m, int p) { return dim_phi(field, m, p) - 1; }

FactDatabase::FactDatabase(std::vector<BoundFact> facts) : facts_(std::move(facts)) {}

FactDatabase FactDatabase::from_csv(std::string_view text) {
  FactDatabase db;
  std::set<std::string, std::less<>> ids;
  for (const auto& c : csv_rows(text, "id,field,m,p,n,kind,reference")) {
    BoundFact f;
    f.provenance = std::string(c[0]);
    if (!ids.insert(f.provenance).second) throw FormatError("duplicate fact id " + f.provenance);
    try {
      f.field = parse_field(c[1]);
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
    f.m = parse_int<int>(c[2], "m");
    f.p = parse_int<int>(c[3], "p");
    f.n = parse_int<std::int64_t>(c[4], "n");
    if (c[5] == "exact") {
      f.kind = FactKind::Exact;
    } else if (c[5] == "upper") {
      f.kind = FactKind::Upper;
    } else {
      throw FormatError("fact kind must be exact or upper, got " + std::string(c[5]));
    }
    if (f.m < 1 || f.p < 2 || f.p % 2 != 0 || f.n < 1) {
      throw FormatError("fact " + f.provenance + " has out-of-range values");
    }
    db.references_.emplace(f.provenance, std::string(c[6]));
    db.facts_.push_back(std::move(f));
  }
  return db;
}

const FactDatabase& FactDatabase::embedded() {
  static const FactDatabase db = from_csv(data::input_facts_csv());
  return db;
}

const BoundFact* FactDatabase::find(std::string_view id) const noexcept {
  for (const auto& f : facts_) {
    if (f.provenance == id) return &f;
  }
  return nullptr;
}

std::string FactDatabase::reference(std::string_view id) const {
  const auto it = references_.find(id);
  return it == references_.end() ? std::string() : it->second;
}

std::optional<BoundFact> FactDatabase::best_at(Field field, int m, int p) const {
  std::optional<BoundFact> best;
  for (const auto& f : facts_) {
    if (f.field == field && f.m == m && f.p == p && (!best || f.n < best->n)) best = f;
  }
  return best;
}

std::optional<BoundFact> FactDatabase::best_at_or_above(Field field, int m, int p) const {
  std::optional<BoundFact> best;
  for (const auto& f : facts_) {
    if (f.field == field && f.m == m && f.p >= p && (!best || f.n < best->n)) best = f;
  }
  if (best && best->p != p) {
    best->kind = FactKind::Upper;
    best->provenance = "IndexReduction(" + best->provenance + ")";
    best->p = p;
  }
  return best;
}

BoundFact nu_fact(Field field, int p, const FactDatabase& db) {
  if (p < 4 || p % 2 != 0) throw InvalidArgument("nu needs an even index >= 4");
  const int q = 2 * (p / 4);
  BoundFact out{Field::R, delta(field), q, 1, FactKind::Exact, "simp"};
  switch (field) {
    case Field::R: return out;
    case Field::C:
      out.n = q / 2 + 1;
      out.provenance = "scocit";
      return out;
    case Field::H: break;
  }
  if (q == 2) {
    out.n = 4;
    return out;
  }
  std::optional<BoundFact> best = db.best_at_or_above(Field::R, 4, q);
  // Descent through C: N_R(4,q) <= (q/2+1) N_C(2,q).
  BoundFact complex{Field::C, 2, q, recursion_bound(q, 1, q / 4 + 1), FactKind::Upper, "ubc2"};
  if (auto c = db.best_at_or_above(Field::C, 2, q); c && c->n < complex.n) complex = *c;
  const std::int64_t descended = mul(q / 2 + 1, complex.n);
  if (!best || descended < best->n) {
    best = BoundFact{Field::R, 4, q, descended, FactKind::Upper,
                     "KolyRight(scocit, " + complex.provenance + ")"};
  }
  return *best;
}

std::int64_t nu(Field field, int p, const FactDatabase& db) { return nu_fact(field, p, db).n; }

std::int64_t recursion_bound(int p, std::int64_t n, std::int64_t nu_value) {
  if (p < 4 || p % 2 != 0) throw InvalidArgument("recursion needs an even index >= 4");
  if (n < 1 || nu_value < 1) throw InvalidArgument("recursion needs positive counts");
  const std::int64_t h = p / 2;
  if (p % 4 == 2) return mul(mul(nu_value, h + 1), n);
  return mul(nu_value, add(mul(h, n), 1));
}

std::int64_t recursion_bound(Field field, int p, std::int64_t n, const FactDatabase& db) {
  return recursion_bound(p, n, nu(field, p, db));
}

std::int64_t iterated_bound(int p, std::int64_t n, int l, std::int64_t nu_value) {
  if (l < 0) throw InvalidArgument("iteration count must be >= 0");
  if (l == 0) return n;
  recursion_bound(p, n, nu_value);  // argument checks
  const std::int64_t h = p / 2;
  if (p % 4 == 2) {
    std::int64_t c = 1;
    for (int i = 0; i < l; ++i) c = mul(c, mul(nu_value, h + 1));
    return mul(c, n);
  }
  // n_l = c^l n + d (c^l - 1) / (c - 1) with c = nu p/2, d = nu.
  const std::int64_t c = mul(nu_value, h);
  std::int64_t cl = 1;
  for (int i = 0; i < l; ++i) cl = mul(cl, c);
  return add(mul(cl, n), mul(nu_value, (cl - 1) / (c - 1)));
}

std::int64_t iterated_bound(Field field, int p, std::int64_t n, int l, const FactDatabase& db) {
  return iterated_bound(p, n, l, nu(field, p, db));
}

BoundFact koly_left(const BoundFact& real_fact, Field target) {
  if (real_fact.field != Field::R) throw FieldMismatch("koly_left needs a real fact");
  const int d = delta(target);
  if (real_fact.m % d != 0) {
    throw DimensionMismatch("real dimension " + std::to_string(real_fact.m) +
                            " is not a multiple of " + std::to_string(d));
  }
  return BoundFact{target, real_fact.m / d, real_fact.p, real_fact.n, FactKind::Upper,
                   "KolyLeft(" + real_fact.provenance + ")"};
}

BoundFact koly_right(const BoundFact& sphere_fact, const BoundFact& field_fact) {
  const int d = delta(field_fact.field);
  if (sphere_fact.field != Field::R || sphere_fact.m != d) {
    throw DimensionMismatch("koly_right needs a real fact on R^" + std::to_string(d));
  }
  if (sphere_fact.p != field_fact.p) throw InvalidArgument("koly_right needs equal indices");
  return BoundFact{Field::R, d * field_fact.m, field_fact.p, mul(sphere_fact.n, field_fact.n),
                   FactKind::Upper,
                   "KolyRight(" + sphere_fact.provenance + ", " + field_fact.provenance + ")"};
}

BoundFact index_reduction(const BoundFact& fact, int target_p) {
  if (target_p < 2 || target_p % 2 != 0 || target_p >= fact.p) {
    throw InvalidArgument("index reduction needs an even target index below " +
                          std::to_string(fact.p));
  }
  if (target_p == 2) {
    return BoundFact{fact.field, fact.m, 2, fact.m, FactKind::Exact, "simp"};
  }
  return BoundFact{fact.field, fact.m, target_p, fact.n, FactKind::Upper,
                   "IndexReduction(" + fact.provenance + ")"};
}

BoundFact recursion_step(const BoundFact& fact, const FactDatabase& db) {
  return BoundFact{fact.field, fact.m + 1, fact.p, recursion_bound(fact.field, fact.p, fact.n, db),
                   FactKind::Upper, "RecursionStep(" + fact.provenance + ")"};
}

BoundFact gub_fact(Field field, int m, int p) {
  return BoundFact{field, m, p, gub(field, m, p), FactKind::Upper, "GUB"};
}

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::IndexReduction: return "IndexReduction";
    case Rule::RecursionStep: return "RecursionStep";
    case Rule::RecursionFromReal: return "RecursionFromReal";
    case Rule::KolyLeft: return "KolyLeft";
    case Rule::KolyRight: return "KolyRight";
    case Rule::IteratedRecursion: return "IteratedRecursion";
    case Rule::GUBRule: return "GUBRule";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (Rule r : {Rule::IndexReduction, Rule::RecursionStep, Rule::RecursionFromReal, Rule::KolyLeft,
                 Rule::KolyRight, Rule::IteratedRecursion, Rule::GUBRule}) {
    if (rule_name(r) == name) return r;
  }
  throw FormatError("unknown rule '" + std::string(name) + "'");
}

Field table_field(int table) {
  switch (table) {
    case 3: return Field::R;
    case 4: return Field::C;
    case 5: return Field::H;
    default: throw InvalidArgument("result tables are 3, 4 and 5");
  }
}

std::vector<TableRow> rows_from_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::set<std::pair<int, std::string>> seen;
  for (const auto& c : csv_rows(text, "table,id,m,p,n,gub,rule,inputs")) {
    TableRow r;
    r.table = parse_int<int>(c[0], "table");
    table_field(r.table);
    r.id = std::string(c[1]);
    if (!seen.emplace(r.table, r.id).second) throw FormatError("duplicate row " + r.id);
    r.m = parse_int<int>(c[2], "m");
    r.p = parse_int<int>(c[3], "p");
    r.n = parse_int<std::int64_t>(c[4], "n");
    r.gub = parse_int<std::int64_t>(c[5], "gub");
    r.rule = parse_rule(c[6]);
    for (auto in : split(c[7], ';')) {
      in = trim(in);
      if (!in.empty()) r.inputs.emplace_back(in);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

const std::vector<TableRow>& embedded_rows() {
  static const std::vector<TableRow> rows = rows_from_csv(data::result_rows_csv());
  return rows;
}

namespace {

class RowEvaluator {
 public:
  RowEvaluator(const FactDatabase& db, const std::vector<TableRow>& rows) : db_(db) {
    for (const auto& r : rows) rows_.emplace(std::make_pair(r.table, r.id), &r);
  }

  /// use_printed: referenced rows contribute their printed n.
  BoundFact evaluate(const TableRow& row, bool use_printed) {
    auto& memo = use_printed ? printed_memo_ : derived_memo_;
    const auto key = std::make_pair(row.table, row.id);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (!in_progress_.insert(key).second) {
      throw FormatError("cyclic reference through row " + row.id);
    }
    BoundFact out = apply(row, use_printed);
    in_progress_.erase(key);
    memo.emplace(key, out);
    return out;
  }

 private:
  BoundFact apply(const TableRow& row, bool use_printed) {
    const Field field = table_field(row.table);
    const int m = row.m;
    const int p = row.p;
    auto need = [&](std::size_t count) {
      if (row.inputs.size() != count) {
        throw FormatError("row " + row.id + ": rule " + std::string(rule_name(row.rule)) +
                          " takes " + std::to_string(count) + " input(s)");
      }
    };
    BoundFact out;
    switch (row.rule) {
      case Rule::IndexReduction: {
        need(1);
        const BoundFact in = resolve(row, row.inputs[0], field, m, -1, use_printed);
        if (in.p <= p) throw FormatError("row " + row.id + ": index reduction input has index <= " + std::to_string(p));
        out = index_reduction(in, p);
        break;
      }
      case Rule::RecursionStep:
        need(1);
        out = recursion_step(resolve(row, row.inputs[0], field, m - 1, p, use_printed), db_);
        break;
      case Rule::RecursionFromReal: {
        need(1);
        const BoundFact real =
            resolve(row, row.inputs[0], Field::R, delta(field) * (m - 1), p, use_printed);
        out = recursion_step(koly_left(real, field), db_);
        break;
      }
      case Rule::KolyLeft:
        need(1);
        out = koly_left(resolve(row, row.inputs[0], Field::R, delta(field) * m, p, use_printed),
                        field);
        break;
      case Rule::KolyRight: {
        need(2);
        if (field != Field::R) throw FormatError("row " + row.id + ": KolyRight yields a real bound");
        // The sphere factor fixes delta; the second input lives over the matching field.
        const BoundFact first = resolve(row, row.inputs[0], Field::R, -1, p, use_printed);
        if (first.m != 2 && first.m != 4) {
          throw FormatError("row " + row.id + ": KolyRight sphere factor must be on R^2 or R^4");
        }
        const Field sub = first.m == 2 ? Field::C : Field::H;
        if (m % first.m != 0) throw FormatError("row " + row.id + ": dimension mismatch in KolyRight");
        const BoundFact second = resolve(row, row.inputs[1], sub, m / first.m, p, use_printed);
        out = koly_right(first, second);
        break;
      }
      case Rule::IteratedRecursion: {
        need(1);
        const BoundFact in = resolve(row, row.inputs[0], field, -1, p, use_printed);
        if (in.m >= m) throw FormatError("row " + row.id + ": iterated recursion needs a smaller m");
        out = BoundFact{field, m, p, iterated_bound(field, p, in.n, m - in.m, db_), FactKind::Upper,
                        "IteratedRecursion(" + in.provenance + ")"};
        break;
      }
      case Rule::GUBRule:
        need(0);
        out = gub_fact(field, m, p);
        break;
    }
    if (out.field != field || out.m != m || out.p != p) {
      throw FormatError("row " + row.id + " evaluates to " + location(out.field, out.m, out.p) +
                        ", expected " + location(field, m, p));
    }
    return out;
  }

  /// Looks up an input id and checks it sits at (field, m, p); -1 leaves a
  /// coordinate free.
  BoundFact resolve(const TableRow& row, const std::string& id, Field field, int m, int p,
                    bool use_printed) {
    BoundFact f = lookup(row, id, field, m, p, use_printed);
    if (f.field != field || (m >= 0 && f.m != m) || (p >= 0 && f.p != p)) {
      throw FormatError("row " + row.id + ": input " + id + " is " + location(f.field, f.m, f.p) +
                        ", expected " + location(field, m < 0 ? f.m : m, p < 0 ? f.p : p));
    }
    return f;
  }

  BoundFact lookup(const TableRow& row, const std::string& id, Field field, int m, int p,
                   bool use_printed) {
    if (id == "simp") {
      if (m == 1) return BoundFact{field, 1, p, 1, FactKind::Exact, "simp"};
      if (p == 2) return BoundFact{field, m, 2, m, FactKind::Exact, "simp"};
      throw FormatError("row " + row.id + ": simp applies to m = 1 or p = 2 only");
    }
    if (id == "scocit") {
      if (p < 0) throw FormatError("row " + row.id + ": scocit needs a fixed index");
      return BoundFact{Field::R, 2, p, p / 2 + 1, FactKind::Exact, "scocit"};
    }
    if (id == "ubc2") {
      if (p < 4) throw FormatError("row " + row.id + ": ubc2 needs index >= 4");
      return BoundFact{Field::C, 2, p, recursion_bound(Field::C, p, 1, db_), FactKind::Upper,
                       "ubc2"};
    }
    if (const BoundFact* f = db_.find(id)) return *f;
    if (id.size() >= 2 && id[0] == 'r') {
      int table = row.table;
      std::string rid = id;
      const char last = id.back();
      if (last == 'R' || last == 'C' || last == 'H') {
        table = last == 'R' ? 3 : last == 'C' ? 4 : 5;
        rid = id.substr(0, id.size() - 1);
      }
      const auto it = rows_.find(std::make_pair(table, rid));
      if (it == rows_.end()) throw FormatError("row " + row.id + ": unknown input " + id);
      const TableRow& ref = *it->second;
      if (use_printed) {
        return BoundFact{table_field(ref.table), ref.m, ref.p, ref.n, FactKind::Upper, id};
      }
      BoundFact f = evaluate(ref, false);
      f.provenance = id;
      return f;
    }
    throw FormatError("row " + row.id + ": unknown input " + id);
  }

  const FactDatabase& db_;
  std::map<std::pair<int, std::string>, const TableRow*> rows_;
  std::map<std::pair<int, std::string>, BoundFact> derived_memo_;
  std::map<std::pair<int, std::string>, BoundFact> printed_memo_;
  std::set<std::pair<int, std::string>> in_progress_;
};

}  // namespace

std::vector<DerivedRow> derive_tables(const FactDatabase& db, const std::vector<TableRow>& rows) {
  RowEvaluator eval(db, rows);
  std::vector<DerivedRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    DerivedRow d;
    d.row = row;
    const BoundFact derived = eval.evaluate(row, false);
    d.n = derived.n;
    d.chain = derived.provenance;
    d.local_n = eval.evaluate(row, true).n;
    d.gub = gub(table_field(row.table), row.m, row.p);
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

class BestBoundSearch {
 public:
  BestBoundSearch(const FactDatabase& db, int max_p) : db_(db), max_p_(max_p) {}

  std::optional<BoundFact> best(Field field, int m, int p) {
    if (m < 1 || p < 2 || p > max_p_) return std::nullopt;
    const auto key = std::make_tuple(field, m, p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!in_progress_.insert(key).second) return std::nullopt;
    std::optional<BoundFact> result = search(field, m, p);
    in_progress_.erase(key);
    memo_.emplace(key, result);
    return result;
  }

 private:
  static void consider(std::optional<BoundFact>& best, std::optional<BoundFact> candidate) {
    if (candidate && (!best || candidate->n < best->n ||
                      (candidate->n == best->n && candidate->kind == FactKind::Exact &&
                       best->kind != FactKind::Exact))) {
      best = std::move(candidate);
    }
  }

  std::optional<BoundFact> search(Field field, int m, int p) {
    std::optional<BoundFact> best;
    if (m == 1) return BoundFact{field, 1, p, 1, FactKind::Exact, "simp"};
    if (p == 2) return BoundFact{field, m, 2, m, FactKind::Exact, "simp"};
    if (field == Field::R && m == 2) return BoundFact{field, 2, p, p / 2 + 1, FactKind::Exact, "scocit"};
    consider(best, db_.best_at(field, m, p));
    if (best && best->kind == FactKind::Exact) return best;
    try {
      consider(best, gub_fact(field, m, p));
    } catch (const OverflowError&) {
    }
    if (auto up = this->best(field, m, p + 2)) consider(best, index_reduction(*up, p));
    if (p >= 4) {
      if (auto down = this->best(field, m - 1, p)) {
        try {
          consider(best, recursion_step(*down, db_));
        } catch (const OverflowError&) {
        }
      }
    }
    if (field != Field::R) {
      if (auto real = this->best(Field::R, delta(field) * m, p)) consider(best, koly_left(*real, field));
    } else {
      for (const Field sub : {Field::C, Field::H}) {
        const int d = delta(sub);
        if (m % d != 0) continue;
        const auto sphere = this->best(Field::R, d, p);
        const auto lifted = this->best(sub, m / d, p);
        if (sphere && lifted) {
          try {
            consider(best, koly_right(*sphere, *lifted));
          } catch (const OverflowError&) {
          }
        }
      }
    }
    return best;
  }

  const FactDatabase& db_;
  int max_p_;
  std::map<std::tuple<Field, int, int>, std::optional<BoundFact>> memo_;
  std::set<std::tuple<Field, int, int>> in_progress_;
};

}  // namespace

BoundFact best_bound(Field field, int m, int p, const FactDatabase& db) {
  require_args(m, p);
  BestBoundSearch search(db, std::max(p, 18));
  if (auto b = search.best(field, m, p)) return *b;
  return gub_fact(field, m, p);
}

double log_asymptotic_constant(Field field, int m) {
  if (m < 1) throw InvalidArgument("dimension must be >= 1");
  const double mm = m;
  switch (field) {
    case Field::R: return std::lgamma(mm);
    case Field::C: return (mm - 1.0) * std::log(4.0) + 2.0 * std::lgamma(mm);
    case Field::H:
      return (mm - 1.0) * std::log(16.0) + std::lgamma(2.0 * mm) + std::lgamma(2.0 * mm - 1.0);
  }
  return 0.0;
}

double asymptotic_constant(Field field, int m) {
  if (m < 1) throw InvalidArgument("dimension must be >= 1");
  // Exact products while they stay small; log-space beyond.
  double r = 1.0;
  switch (field) {
    case Field::R:
      for (int i = 2; i < m; ++i) r *= i;
      return r;
    case Field::C:
      for (int i = 2; i < m; ++i) r *= static_cast<double>(i) * i;
      return r * std::pow(4.0, m - 1);
    case Field::H:
      for (int i = 2; i <= 2 * m - 1; ++i) r *= i;
      for (int i = 2; i <= 2 * m - 2; ++i) r *= i;
      return r * std::pow(16.0, m - 1);
  }
  return r;
}

}  // namespace projcub
