#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankmetric/numeric.hpp"

namespace rmc {

using Json = nlohmann::ordered_json;

// Bumped whenever a column set or a key name changes.
inline constexpr int kFormatVersion = 1;

enum class Format { Csv, Json, Text };
Format parse_format(const std::string& s);
const char* format_name(Format f);

// Integers that fit in 64 bits are emitted as numbers, larger ones as strings.
Json big(const rankmetric::BigInt& x);
Json big(const std::vector<rankmetric::BigInt>& v);
Json rat(const rankmetric::Rational& x);

// A single result object.
void emit_record(std::ostream& out, Format f, const std::string& command, const Json& config, const Json& result);

// Rows keyed by the given columns; missing or null cells print empty in CSV.
void emit_table(std::ostream& out, Format f, const std::string& command, const Json& config,
                const std::vector<std::string>& columns, const std::vector<Json>& rows);

}  // namespace rmc
