#pragma once

// Private helpers shared by the CSV and SVG emitters.

#include <filesystem>
#include <string>
#include <string_view>

#include "casimir/factors.hpp"

namespace casimir::report::detail {

struct Column {
    const char* name;
    double (*get)(const factors::CorrectionReport&);
};

const Column* find_column(std::string_view name);

std::string format_sci(double v);

void atomic_write(const std::filesystem::path& destination, const std::string& content);

} // namespace casimir::report::detail
