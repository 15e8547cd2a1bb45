#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicke/sweep.hpp"

namespace dicke::io {

inline constexpr const char* kCsvHeader = "lambda,eta,energy,phase_index,cw,entropy_bits,flags";

/// Shortest-safe decimal: 17 significant digits, "nan"/"inf" for non-finite.
std::string format_double(double x);
double parse_double(const std::string& text);

void write_csv(std::ostream& os, const std::vector<sweep::GridRecord>& records);
std::vector<sweep::GridRecord> read_csv(std::istream& is);

nlohmann::json to_json(const std::vector<sweep::GridRecord>& records);
std::vector<sweep::GridRecord> from_json(const nlohmann::json& j);
/// Pretty-printed JSON; numbers use the shortest text that round-trips exactly.
std::string dump_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const sweep::SweepSpec& spec);

}  // namespace dicke::io
