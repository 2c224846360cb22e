#include <algorithm>
#include <array>

#include "reg/errors.hpp"
#include "reg/textproc.hpp"
#include "unicode.hpp"

namespace reg::text {
namespace {

constexpr std::int32_t kEllipsis = 0x2026;

bool is_terminator(std::int32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == kEllipsis;
}

bool is_closing(std::int32_t cp) {
  constexpr std::array<std::int32_t, 8> closers{'"', '\'', ')', ']', 0x00BB, 0x201D, 0x2019, 0x203A};
  return std::find(closers.begin(), closers.end(), cp) != closers.end();
}

// Characters that may open a sentence besides uppercase letters and digits.
// Spanish inverted marks count as openers.
bool is_opening(std::int32_t cp) {
  constexpr std::array<std::int32_t, 11> openers{'"',    '\'',   '(',    '[',    0x00AB, 0x201C,
                                                 0x2018, 0x201E, 0x2039, 0x00BF, 0x00A1};
  return std::find(openers.begin(), openers.end(), cp) != openers.end();
}

bool is_horizontal_space(std::int32_t cp) { return cp != '\n' && unicode::is_space(cp); }

// If a blank line starts at `pos` (a '\n', optional horizontal space, '\n'),
// returns the offset just past the second newline.
std::optional<std::size_t> blank_line_at(std::string_view text, std::size_t pos) {
  if (text[pos] != '\n') return std::nullopt;
  std::size_t i = pos + 1;
  while (i < text.size()) {
    auto cp = unicode::decode(text, i);
    if (cp.value == '\n') return cp.end;
    if (!is_horizontal_space(cp.value)) return std::nullopt;
    i = cp.end;
  }
  return std::nullopt;
}

// The whitespace-delimited word ending at byte offset `end`, stripped of
// leading opening punctuation and case-folded.
std::string word_before(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0) {
    auto cp = unicode::decode_before(text, begin);
    if (unicode::is_space(cp.value)) break;
    begin = cp.begin;
  }
  while (begin < end) {
    auto cp = unicode::decode(text, begin);
    if (!is_opening(cp.value)) break;
    begin = cp.end;
  }
  return unicode::fold(text.substr(begin, end - begin));
}

void emit(std::string_view text, std::size_t begin, std::size_t end,
          std::vector<std::string>& out) {
  while (begin < end) {
    auto cp = unicode::decode(text, begin);
    if (!unicode::is_space(cp.value)) break;
    begin = cp.end;
  }
  while (end > begin) {
    auto cp = unicode::decode_before(text, end);
    if (!unicode::is_space(cp.value)) break;
    end = cp.begin;
  }
  if (end > begin) out.emplace_back(text.substr(begin, end - begin));
}

}  // namespace

std::vector<std::string> segment_sentences(std::string_view text,
                                           const AbbreviationList& abbreviations) {
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    if (auto after = blank_line_at(text, pos)) {
      emit(text, start, pos, out);
      start = pos = *after;
      continue;
    }

    auto cp = unicode::decode(text, pos);
    if (!is_terminator(cp.value)) {
      pos = cp.end;
      continue;
    }

    const std::size_t run_begin = pos;
    std::size_t end = cp.end;
    while (end < text.size()) {
      auto next = unicode::decode(text, end);
      if (!is_terminator(next.value)) break;
      end = next.end;
    }
    const std::size_t run_end = end;
    while (end < text.size()) {
      auto next = unicode::decode(text, end);
      if (!is_closing(next.value)) break;
      end = next.end;
    }
    pos = end;

    // Needs whitespace, then a sentence opener.
    std::size_t look = end;
    bool saw_space = false;
    while (look < text.size()) {
      auto next = unicode::decode(text, look);
      if (!unicode::is_space(next.value)) break;
      saw_space = true;
      look = next.end;
    }
    if (!saw_space || look >= text.size()) continue;

    auto opener = unicode::decode(text, look).value;
    if (!(unicode::is_upper(opener) || unicode::is_digit(opener) || is_opening(opener))) continue;

    if (text[run_begin] == '.' && run_end == run_begin + 1 && !abbreviations.empty() &&
        abbreviations.contains(word_before(text, run_begin))) {
      continue;
    }

    emit(text, start, end, out);
    start = end;
  }
  emit(text, start, text.size(), out);

  if (out.empty()) throw EmptyDocument();
  return out;
}

}  // namespace reg::text
