#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tagalign::utf8 {

// Decodes UTF-8 into code points. Ill-formed bytes decode to negative values
// (one per offending byte sequence) so callers can decide to drop them.
std::vector<char32_t> decode(std::string_view text, bool* had_errors = nullptr);

void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

// Splits into one string per code point; ill-formed bytes become their own
// pieces unchanged.
std::vector<std::string> split_code_points(std::string_view text);

bool is_ascii(std::string_view text);

}  // namespace tagalign::utf8
