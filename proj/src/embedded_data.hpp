#pragma once

#include <string_view>

namespace projcub::data {

/// Input facts CSV compiled into the library.
std::string_view input_facts_csv() noexcept;
/// Result rows CSV compiled into the library.
std::string_view result_rows_csv() noexcept;

}  // namespace projcub::data
