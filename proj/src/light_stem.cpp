// Conservative suffix stripping for languages without a full stemmer.
//
// One suffix is removed per token, longest match first, and only when at
// least kMinStem code points remain. Diacritics are kept as-is.

#include <algorithm>
#include <string>
#include <vector>

#include "reg/textproc.hpp"
#include "unicode.hpp"

namespace reg::text {
namespace {

constexpr std::size_t kMinStem = 3;

struct Suffix {
  std::string_view text;
  std::string_view replacement;
};

// Tables are ordered longest suffix first.
const std::vector<Suffix>& french_suffixes() {
  static const std::vector<Suffix> table = {
      {"issements", ""}, {"issement", ""}, {"atrices", ""}, {"ements", ""}, {"ations", ""},
      {"ateurs", ""},    {"atrice", ""},   {"ement", ""},   {"ation", ""},  {"ateur", ""},
      {"ismes", ""},     {"istes", ""},    {"ables", ""},   {"ibles", ""},  {"euses", ""},
      {"isme", ""},      {"iste", ""},     {"able", ""},    {"ible", ""},   {"euse", ""},
      {"ités", ""},      {"ives", ""},     {"aux", "al"},   {"eux", ""},    {"ité", ""},
      {"ive", ""},       {"ifs", ""},      {"ées", ""},     {"if", ""},     {"ée", ""},
      {"és", ""},        {"es", ""},       {"é", ""},       {"e", ""},      {"s", ""},
      {"x", ""},
  };
  return table;
}

const std::vector<Suffix>& spanish_suffixes() {
  static const std::vector<Suffix> table = {
      {"amientos", ""}, {"imientos", ""}, {"aciones", ""}, {"amiento", ""}, {"imiento", ""},
      {"adoras", ""},   {"adores", ""},   {"idades", ""},  {"ancias", ""},  {"encias", ""},
      {"ación", ""},    {"adora", ""},    {"ancia", ""},   {"encia", ""},   {"ismos", ""},
      {"istas", ""},    {"ables", ""},    {"ibles", ""},   {"mente", ""},   {"ador", ""},
      {"idad", ""},     {"ismo", ""},     {"ista", ""},    {"able", ""},    {"ible", ""},
      {"osos", ""},     {"osas", ""},     {"ivos", ""},    {"ivas", ""},    {"oso", ""},
      {"osa", ""},      {"ivo", ""},      {"iva", ""},     {"es", ""},      {"os", ""},
      {"as", ""},       {"s", ""},        {"o", ""},       {"a", ""},       {"e", ""},
  };
  return table;
}

// Plural and possessive "s" stripping for English.
const std::vector<Suffix>& english_suffixes() {
  static const std::vector<Suffix> table = {{"sses", "ss"}, {"ies", "y"}, {"ss", "ss"}, {"s", ""}};
  return table;
}

const std::vector<Suffix>* table_for(std::string_view language) {
  if (language == "fr") return &french_suffixes();
  if (language == "es") return &spanish_suffixes();
  if (language == "en") return &english_suffixes();
  return nullptr;
}

}  // namespace

std::string light_stem(std::string_view token, std::string_view language) {
  const auto* table = table_for(language);
  if (table == nullptr) return std::string(token);
  for (const auto& s : *table) {
    if (!token.ends_with(s.text)) continue;
    auto stem = token.substr(0, token.size() - s.text.size());
    if (unicode::length(stem) + unicode::length(s.replacement) < kMinStem) return std::string(token);
    return std::string(stem) + std::string(s.replacement);
  }
  return std::string(token);
}

std::string stem(std::string_view token, std::string_view language, Stemmer stemmer) {
  switch (stemmer) {
    case Stemmer::Porter:
      return porter_stem(token);
    case Stemmer::Light:
      return light_stem(token, language);
    case Stemmer::None:
      break;
  }
  return std::string(token);
}

}  // namespace reg::text
