#include "projcub/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "projcub/error.hpp"

namespace projcub {

using nlohmann::json;

std::string formula_to_json(const FormulaDocument& doc) {
  const CubatureFormula& f = doc.formula;
  const std::size_t d = delta(f.field());
  json nodes = json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto x = f.node(k);
    json node = json::array();
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      json entry = json::array();
      for (std::size_t t = 0; t < d; ++t) entry.push_back(x[i * d + t]);
      node.push_back(std::move(entry));
    }
    nodes.push_back(std::move(node));
  }
  json weights(std::vector<double>(f.weights().begin(), f.weights().end()));
  json doc_json = {
      {"schema_version", kSchemaVersion},
      {"field", std::string(field_name(f.field()))},
      {"m", f.dimension()},
      {"index", f.index()},
      {"nodes", std::move(nodes)},
      {"weights", std::move(weights)},
      {"metadata",
       {{"trace", f.trace()}, {"source_counts", f.source_counts()}, {"seed", doc.seed}}},
  };
  return doc_json.dump(1) + "\n";
}

namespace {

const json& member(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

double real_value(const json& v) {
  if (!v.is_number()) throw FormatError("expected a number, got " + v.dump());
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError("non-finite number");
  return x;
}

template <class Int>
Int integer_value(const json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  if (v.is_number_unsigned()) return static_cast<Int>(v.get<std::uint64_t>());
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw FormatError(std::string(what) + " must be nonnegative");
  return static_cast<Int>(x);
}

}  // namespace

FormulaDocument formula_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  const int version = integer_value<int>(member(doc, "schema_version"), "schema_version");
  if (version != kSchemaVersion) {
    throw FormatError("unsupported schema_version " + std::to_string(version));
  }
  const json& field_json = member(doc, "field");
  if (!field_json.is_string()) throw FormatError("field must be a string");
  const std::string field_str = field_json.get<std::string>();
  if (field_str != "R" && field_str != "C" && field_str != "H") {
    throw FormatError("field must be R, C or H");
  }
  const Field field = parse_field(field_str);
  const auto m = integer_value<std::size_t>(member(doc, "m"), "m");
  const int index = integer_value<int>(member(doc, "index"), "index");
  const std::size_t d = delta(field);

  const json& nodes_json = member(doc, "nodes");
  const json& weights_json = member(doc, "weights");
  if (!nodes_json.is_array() || !weights_json.is_array()) {
    throw FormatError("nodes and weights must be arrays");
  }
  if (nodes_json.size() != weights_json.size()) {
    throw FormatError("nodes and weights differ in length");
  }
  std::vector<double> nodes;
  nodes.reserve(nodes_json.size() * m * d);
  for (const json& node : nodes_json) {
    if (!node.is_array() || node.size() != m) {
      throw FormatError("each node must have " + std::to_string(m) + " entries");
    }
    for (const json& entry : node) {
      if (!entry.is_array() || entry.size() != d) {
        throw FormatError("each entry must have " + std::to_string(d) + " coordinates");
      }
      for (const json& c : entry) nodes.push_back(real_value(c));
    }
  }
  std::vector<double> weights;
  weights.reserve(weights_json.size());
  for (const json& w : weights_json) weights.push_back(real_value(w));

  std::vector<std::string> trace;
  std::vector<std::size_t> counts;
  std::uint64_t seed = 0;
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw FormatError("metadata must be an object");
    if (const auto t = it->find("trace"); t != it->end()) {
      if (!t->is_array()) throw FormatError("metadata.trace must be an array");
      for (const json& s : *t) {
        if (!s.is_string()) throw FormatError("metadata.trace entries must be strings");
        trace.push_back(s.get<std::string>());
      }
    }
    if (const auto c = it->find("source_counts"); c != it->end()) {
      if (!c->is_array()) throw FormatError("metadata.source_counts must be an array");
      for (const json& v : *c) counts.push_back(integer_value<std::size_t>(v, "source count"));
    }
    if (const auto s = it->find("seed"); s != it->end()) {
      seed = integer_value<std::uint64_t>(*s, "seed");
    }
  }
  try {
    CubatureFormula f(field, m, index, std::move(nodes), std::move(weights));
    return FormulaDocument{f.with_history(std::move(trace), std::move(counts)), seed};
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent formula: ") + e.what());
  }
}

void save_formula(const std::filesystem::path& path, const FormulaDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << formula_to_json(doc);
  if (!out) throw Error("write to " + path.string() + " failed");
}

FormulaDocument load_formula(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return formula_from_json(buf.str());
}

std::string report_to_json(const VerificationReport& r) {
  const json j = {
      {"pass", r.pass},
      {"max_rel_residual", r.max_rel_residual},
      {"weight_sum_error", r.weight_sum_error},
      {"max_norm_error", r.max_norm_error},
      {"min_projective_gap", r.min_projective_gap},
      {"gap_exact", r.gap_exact},
      {"samples", r.samples},
      {"directions", r.directions},
      {"seed", r.seed},
      {"tolerance", r.tolerance},
  };
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific;
  out << (r.pass ? "PASS" : "FAIL") << "\n"
      << "  max relative residual " << r.max_rel_residual << " (tol " << r.tolerance << ", "
      << r.directions << " directions, seed " << r.seed << ")\n"
      << "  weight sum error      " << r.weight_sum_error << "\n"
      << "  max node norm error   " << r.max_norm_error << "\n"
      << "  min projective gap    " << (r.gap_exact ? "" : ">= ") << r.min_projective_gap << "\n";
  return out.str();
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

TableExport export_table(int which, const FactDatabase& db, const std::vector<TableRow>& rows) {
  TableExport out;
  std::ostringstream csv;
  if (which == 1 || which == 2) {
    const FactKind kind = which == 1 ? FactKind::Exact : FactKind::Upper;
    csv << "id,K,m,p,n,references\n";
    for (const auto& f : db.facts()) {
      if (f.kind != kind) continue;
      csv << f.provenance << ',' << field_name(f.field) << ',' << f.m << ',' << f.p << ',' << f.n
          << ',' << db.reference(f.provenance) << '\n';
    }
    out.csv = csv.str();
    return out;
  }
  table_field(which);
  // Cross-table references need every row present.
  const auto derived = derive_tables(db, rows);
  csv << "id,m,p,n,GUB,references\n";
  for (const auto& d : derived) {
    if (d.row.table != which) continue;
    csv << d.row.id << ',' << d.row.m << ',' << d.row.p << ',' << d.n << ',' << d.gub << ','
        << join(d.row.inputs, ';') << '\n';
    if (!d.n_matches()) {
      out.mismatches.push_back(d.row.id + " n=" + std::to_string(d.n) + " printed " +
                               std::to_string(d.row.n));
    }
    if (!d.gub_matches()) {
      out.mismatches.push_back(d.row.id + " GUB=" + std::to_string(d.gub) + " printed " +
                               std::to_string(d.row.gub));
    }
  }
  out.csv = csv.str();
  return out;
}

}  // namespace projcub
