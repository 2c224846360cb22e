#include "unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace reg::unicode {

CodePoint decode(std::string_view text, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  auto length = static_cast<std::int32_t>(text.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c;
  U8_NEXT(bytes, i, length, c);
  return {c, pos, static_cast<std::size_t>(i)};
}

CodePoint decode_before(std::string_view text, std::size_t end) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  auto i = static_cast<std::int32_t>(end);
  UChar32 c;
  U8_PREV(bytes, 0, i, c);
  return {c, static_cast<std::size_t>(i), end};
}

bool is_valid_utf8(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    auto cp = decode(text, pos);
    if (cp.value < 0) return false;
    pos = cp.end;
  }
  return true;
}

bool is_space(std::int32_t cp) { return cp >= 0 && u_isUWhiteSpace(cp); }

bool is_upper(std::int32_t cp) { return cp >= 0 && (u_isupper(cp) || u_istitle(cp)); }

bool is_digit(std::int32_t cp) { return cp >= 0 && u_isdigit(cp); }

bool is_word_char(std::int32_t cp) {
  if (cp < 0) return false;
  if (u_isalpha(cp) || u_isdigit(cp)) return true;
  auto mask = U_GET_GC_MASK(cp);
  return (mask & U_GC_M_MASK) != 0;
}

std::string fold(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");

  auto str = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  str.toLower(icu::Locale::getRoot());
  icu::UnicodeString normalized = nfc->normalize(str, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");

  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < text.size(); ++n) pos = decode(text, pos).end;
  return n;
}

}  // namespace reg::unicode
