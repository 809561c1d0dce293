#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mpfv/field.hpp"
#include "mpfv/solver.hpp"

namespace mpfv::io {

/// Shortest-safe round-trip form: 17 significant digits, "nan" / "inf" for non-finite values.
std::string format_double(double x);
double parse_double(std::string_view s);

/// Header "i,j,x_center,y_center,value", one row per cell in storage order.
std::string field_csv(const CellField& u);
CellField parse_field_csv(std::string_view text);
CellField read_field_csv(const std::filesystem::path& path);

std::string report_header();
std::string report_row(const RunResult& r);
std::string report_csv(const RunResult& r);

/// One row per forward-Euler stage.
std::string stage_log_csv(const std::vector<StageRecord>& stages);

/// Canonical text of the experiment configuration and its 64-bit FNV-1a digest.
std::string spec_text(const ExperimentSpec& spec);
std::string digest(std::string_view text);

/// Writes via a temporary sibling and rename, so readers never see a half-written file.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Splits one CSV line on commas. Quoted fields are not understood; the numeric files never quote.
std::vector<std::string_view> split_csv(std::string_view line);

}  // namespace mpfv::io
