#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace beliefnet::csv {

using Record = std::vector<std::string>;

// RFC 4180 records: quoted fields may hold commas, quotes ("") and newlines.
// Accepts LF or CRLF line ends and skips a UTF-8 byte-order mark.
std::vector<Record> parse(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// Quotes a field only when it needs quoting.
std::string escape(std::string_view field);
std::string join(const Record& fields);

}  // namespace beliefnet::csv
