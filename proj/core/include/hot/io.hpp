#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace hot {

/// Whole file as bytes; InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Creates parent directories and truncates any existing file.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// "line L, column C" for a byte offset (1-based, as reported by JSON parsers).
std::string line_column(std::string_view text, std::size_t byte);

}  // namespace hot
