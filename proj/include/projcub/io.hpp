#pragma once

// Formula documents (JSON), verification reports and table export (CSV).

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "projcub/bounds.hpp"
#include "projcub/cubature.hpp"
#include "projcub/verification.hpp"

namespace projcub {

inline constexpr int kSchemaVersion = 1;

struct FormulaDocument {
  CubatureFormula formula;
  /// Seed of the construction probe.
  std::uint64_t seed = 0;
};

std::string formula_to_json(const FormulaDocument& doc);
/// Throws FormatError on malformed or inconsistent input.
FormulaDocument formula_from_json(const std::string& text);

void save_formula(const std::filesystem::path& path, const FormulaDocument& doc);
FormulaDocument load_formula(const std::filesystem::path& path);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

struct TableExport {
  std::string csv;
  /// Rows whose reproduced n or GUB differs from the printed value.
  std::vector<std::string> mismatches;
};

/// Tables 1 and 2 echo the input facts (id,K,m,p,n,references); tables 3..5
/// list id,m,p,n,GUB,references with reproduced values.
TableExport export_table(int which, const FactDatabase& db, const std::vector<TableRow>& rows);

}  // namespace projcub
