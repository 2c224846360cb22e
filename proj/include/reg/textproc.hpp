#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reg::text {

struct RawDocument {
  std::string text;      // UTF-8
  std::string language;  // e.g. "en", "fr", "es"; open-ended
};

struct Sentence {
  std::size_t index = 0;
  std::string surface;              // verbatim slice of the input text
  std::vector<std::string> tokens;  // filtered and stemmed terms
};

struct Document {
  std::string language;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
};

// A set of lowercase, whitespace-free word forms. Used both for stopword
// lists and for sentence-segmentation abbreviation lists.
class TermSet {
 public:
  TermSet() = default;
  TermSet(std::vector<std::string> terms, std::string source);

  // One entry per line; '#' starts a comment line; surrounding whitespace trimmed.
  static TermSet parse(std::string_view contents, std::string source);
  static TermSet load(const std::string& path);

  bool contains(std::string_view term) const { return terms_.contains(term); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::string& source() const { return source_; }
  const std::set<std::string, std::less<>>& terms() const { return terms_; }

 private:
  std::set<std::string, std::less<>> terms_;
  std::string source_ = "none";
};

using StopList = TermSet;
using AbbreviationList = TermSet;

// Built-in resources ship for fr, en and es.
std::optional<StopList> builtin_stoplist(std::string_view language);
std::optional<AbbreviationList> builtin_abbreviations(std::string_view language);
std::vector<std::string> builtin_languages();

// Resolves "none", a built-in language name, or a file path.
StopList resolve_stoplist(std::string_view spec);

enum class Stemmer { Porter, Light, None };

Stemmer parse_stemmer(std::string_view name);
std::string_view to_string(Stemmer s);
// porter for en, light for fr/es, none for anything else.
Stemmer default_stemmer(std::string_view language);

struct TextConfig {
  std::string language = "en";
  StopList stoplist;
  AbbreviationList abbreviations;
  Stemmer stemmer = Stemmer::Porter;

  // Built-in resources for the language. Throws ResourceError when no
  // built-in stoplist exists; callers then supply one explicitly.
  static TextConfig for_language(std::string_view language);
};

// Splits raw text into verbatim sentence surfaces.
//
// A boundary follows a run of terminators ('.', '!', '?', U+2026) plus any
// closing quotes/brackets, when the next non-space character is uppercase, a
// digit, or an opening quote/bracket. A '.' does not split when the word
// before it is in `abbreviations`. A blank line always splits. Text after
// the last terminator forms the final sentence.
//
// Throws EmptyDocument when the text is blank.
std::vector<std::string> segment_sentences(std::string_view text,
                                           const AbbreviationList& abbreviations = {});

// Maximal runs of letters and digits, NFC-normalized and lowercased.
// Apostrophes separate tokens like any other punctuation.
std::vector<std::string> tokenize(std::string_view surface);

std::vector<std::string> filter_stopwords(std::vector<std::string> tokens,
                                          const StopList& stoplist);

std::string porter_stem(std::string_view token);
std::string light_stem(std::string_view token, std::string_view language);
std::string stem(std::string_view token, std::string_view language, Stemmer stemmer);

// segment -> tokenize -> filter -> stem for every sentence.
Document process(const RawDocument& raw, const TextConfig& config);

class Vocabulary {
 public:
  // Returns the id of `term`, assigning the next free id on first sight.
  std::size_t add(std::string_view term);
  std::optional<std::size_t> find(std::string_view term) const;

  const std::string& term(std::size_t id) const { return terms_.at(id); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
  std::map<std::string, std::size_t, std::less<>> ids_;
};

Vocabulary build_vocabulary(std::span<const Sentence> sentences);

// Dense P x N matrix of raw term frequencies.
class TermMatrix {
 public:
  TermMatrix() = default;
  TermMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  TermMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const TermMatrix&, const TermMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Throws UnknownTerm when a token is missing from `vocab`.
TermMatrix build_term_matrix(std::span<const Sentence> sentences, const Vocabulary& vocab);

// Number of whitespace-delimited words.
std::size_t count_words(std::string_view text);

}  // namespace reg::text
