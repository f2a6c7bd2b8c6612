#pragma once

#include <string>
#include <string_view>

namespace beliefnet {

// 12 significant digits, shortest form ("%.12g").
std::string format_number(double value);
// Fixed decimals, for report tables.
std::string format_fixed(double value, int decimals);
// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace beliefnet
