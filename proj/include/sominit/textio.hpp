#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace sominit {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Strict double parse of a whole field. Throws ParseError (with the given
/// 1-based line number in the message) on junk, partial parses, or
/// non-finite values.
double parse_double_field(std::string_view field, std::size_t line_no);

/// Writes `content` to `path` atomically: temp file in the same directory,
/// then rename. Throws IoError.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// Reads a whole file. Throws IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

} // namespace sominit
