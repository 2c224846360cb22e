#pragma once

// Thin wrappers over ICU used by the text-processing code.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace reg::unicode {

struct CodePoint {
  std::int32_t value;  // negative on malformed input
  std::size_t begin;   // byte offset
  std::size_t end;     // byte offset one past the sequence
};

// Decodes the code point starting at byte offset `pos` (pos < text.size()).
CodePoint decode(std::string_view text, std::size_t pos);
// Decodes the code point that ends at byte offset `end` (end > 0).
CodePoint decode_before(std::string_view text, std::size_t end);

bool is_valid_utf8(std::string_view text);

bool is_space(std::int32_t cp);
bool is_upper(std::int32_t cp);
bool is_digit(std::int32_t cp);
// Letters, digits and combining marks: the characters that form tokens.
bool is_word_char(std::int32_t cp);

// Lowercase (root locale) followed by NFC.
std::string fold(std::string_view text);

std::size_t length(std::string_view text);  // in code points

}  // namespace reg::unicode
