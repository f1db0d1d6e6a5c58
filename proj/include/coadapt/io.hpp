#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coadapt {

// Shortest decimal form that parses back to exactly the same double.
// Every numeric field written by this project goes through here so that
// reruns and save/load round trips are byte-identical.
std::string format_double(double v);
std::string format_int(std::int64_t v);

// Strict parsers: the whole token must be consumed. `where` names the file
// location for the ParseError message, e.g. "profile.csv line 7".
double parse_double(std::string_view token, const std::string& where);
std::int64_t parse_int(std::string_view token, const std::string& where);

std::vector<std::string_view> split_csv_line(std::string_view line);

// Read a whole text file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coadapt
