#include "reg/textproc.hpp"
#include "unicode.hpp"

namespace reg::text {

std::vector<std::string> tokenize(std::string_view surface) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < surface.size()) {
    auto cp = unicode::decode(surface, pos);
    if (!unicode::is_word_char(cp.value)) {
      pos = cp.end;
      continue;
    }
    const std::size_t begin = pos;
    while (pos < surface.size()) {
      auto next = unicode::decode(surface, pos);
      if (!unicode::is_word_char(next.value)) break;
      pos = next.end;
    }
    tokens.push_back(unicode::fold(surface.substr(begin, pos - begin)));
  }
  return tokens;
}

std::vector<std::string> filter_stopwords(std::vector<std::string> tokens,
                                          const StopList& stoplist) {
  if (stoplist.empty()) return tokens;
  std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

std::size_t count_words(std::string_view text) {
  std::size_t words = 0;
  bool in_word = false;
  for (std::size_t pos = 0; pos < text.size();) {
    auto cp = unicode::decode(text, pos);
    bool space = unicode::is_space(cp.value);
    if (!space && !in_word) ++words;
    in_word = !space;
    pos = cp.end;
  }
  return words;
}

}  // namespace reg::text
