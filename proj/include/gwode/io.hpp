#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gwode {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Strict full-string parses; throw std::invalid_argument on failure.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);
unsigned long long parse_uint(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Minimal CSV reader for this project's own files (no quoting or escapes).
CsvTable read_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace gwode
