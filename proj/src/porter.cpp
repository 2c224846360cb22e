// Porter (1980) suffix-stripping stemmer for English.
//
// Follows the published algorithm: "abli" -> "able" in step 2 and no "logi"
// rule. Words of one or two letters are returned unchanged. Tokens that are
// not pure a-z are passed through.

#include <algorithm>
#include <string>
#include <vector>

#include "reg/textproc.hpp"

namespace reg::text {
namespace {

class PorterWord {
 public:
  explicit PorterWord(std::string_view w) : b_(w) {}

  std::string take() && { return std::move(b_); }
  std::size_t size() const { return b_.size(); }

  bool consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && consonant(len - 1);
  }

  // *o: stem ends consonant-vowel-consonant, final consonant not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
    char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const { return b_.ends_with(suffix); }
  std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }

  void replace(std::string_view suffix, std::string_view with) {
    b_.resize(stem_len(suffix));
    b_ += with;
  }

  char at(std::size_t i) const { return b_[i]; }
  char back() const { return b_.back(); }
  void pop() { b_.pop_back(); }
  void push(char c) { b_.push_back(c); }

 private:
  std::string b_;
};

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the first rule whose suffix matches, when the stem before it has
// measure > min_measure. Returns whether any suffix matched.
bool apply_first(PorterWord& w, std::initializer_list<Rule> rules, int min_measure) {
  for (const auto& r : rules) {
    if (!w.ends(r.suffix)) continue;
    if (w.measure(w.stem_len(r.suffix)) > min_measure) w.replace(r.suffix, r.replacement);
    return true;
  }
  return false;
}

void step1a(PorterWord& w) {
  if (w.ends("sses")) w.replace("sses", "ss");
  else if (w.ends("ies")) w.replace("ies", "i");
  else if (w.ends("ss")) return;
  else if (w.ends("s")) w.pop();
}

void step1b(PorterWord& w) {
  if (w.ends("eed")) {
    if (w.measure(w.stem_len("eed")) > 0) w.replace("eed", "ee");
    return;
  }
  std::string_view suffix;
  if (w.ends("ed")) suffix = "ed";
  else if (w.ends("ing")) suffix = "ing";
  else return;
  if (!w.has_vowel(w.stem_len(suffix))) return;
  w.replace(suffix, "");

  if (w.ends("at") || w.ends("bl") || w.ends("iz")) {
    w.push('e');
  } else if (w.double_consonant(w.size())) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop();
  } else if (w.measure(w.size()) == 1 && w.cvc(w.size())) {
    w.push('e');
  }
}

void step1c(PorterWord& w) {
  if (w.ends("y") && w.has_vowel(w.stem_len("y"))) w.replace("y", "i");
}

void step2(PorterWord& w) {
  apply_first(w,
              {{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
               {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
               {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
               {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
               {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"}},
              0);
}

void step3(PorterWord& w) {
  apply_first(w,
              {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
               {"ical", "ic"}, {"ful", ""}, {"ness", ""}},
              0);
}

void step4(PorterWord& w) {
  static constexpr std::string_view kSuffixes[] = {
      "al",  "ance", "ence", "er", "ic",  "able", "ible", "ant", "ement", "ment",
      "ent", "ion",  "ou",   "ism", "ate", "iti", "ous",  "ive", "ize"};
  for (auto suffix : kSuffixes) {
    if (!w.ends(suffix)) continue;
    std::size_t len = w.stem_len(suffix);
    bool st = suffix != "ion" || (len > 0 && (w.at(len - 1) == 's' || w.at(len - 1) == 't'));
    if (st && w.measure(len) > 1) w.replace(suffix, "");
    return;
  }
}

void step5(PorterWord& w) {
  if (w.ends("e")) {
    int m = w.measure(w.stem_len("e"));
    if (m > 1 || (m == 1 && !w.cvc(w.stem_len("e")))) w.pop();
  }
  if (w.measure(w.size()) > 1 && w.double_consonant(w.size()) && w.back() == 'l') w.pop();
}

}  // namespace

std::string porter_stem(std::string_view token) {
  if (token.size() <= 2) return std::string(token);
  if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::string(token);
  }
  PorterWord w(token);
  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5(w);
  return std::move(w).take();
}

}  // namespace reg::text
