#include "reg/textproc.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "builtin_resources.hpp"
#include "reg/errors.hpp"
#include "unicode.hpp"

namespace reg::text {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && unicode::is_space(unicode::decode(s, 0).value)) {
    s.remove_prefix(unicode::decode(s, 0).end);
  }
  while (!s.empty()) {
    auto cp = unicode::decode_before(s, s.size());
    if (!unicode::is_space(cp.value)) break;
    s.remove_suffix(s.size() - cp.begin);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TermSet::TermSet(std::vector<std::string> terms, std::string source) : source_(std::move(source)) {
  for (auto& t : terms) {
    std::string folded = unicode::fold(t);
    for (std::size_t pos = 0; pos < folded.size();) {
      auto cp = unicode::decode(folded, pos);
      if (unicode::is_space(cp.value)) {
        throw ResourceError(source_ + ": entry contains whitespace: '" + t + "'");
      }
      pos = cp.end;
    }
    if (!folded.empty()) terms_.insert(std::move(folded));
  }
}

TermSet TermSet::parse(std::string_view contents, std::string source) {
  if (!unicode::is_valid_utf8(contents)) throw ResourceError(source + ": not valid UTF-8");
  std::vector<std::string> terms;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    auto line = trim(contents.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') terms.emplace_back(line);
    pos = nl + 1;
  }
  return TermSet(std::move(terms), std::move(source));
}

TermSet TermSet::load(const std::string& path) { return parse(read_file(path), path); }

std::optional<StopList> builtin_stoplist(std::string_view language) {
  auto contents = resources::stoplist(language);
  if (!contents) return std::nullopt;
  return TermSet::parse(*contents, "builtin:" + std::string(language));
}

std::optional<AbbreviationList> builtin_abbreviations(std::string_view language) {
  auto contents = resources::abbreviations(language);
  if (!contents) return std::nullopt;
  return TermSet::parse(*contents, "builtin:" + std::string(language));
}

std::vector<std::string> builtin_languages() { return {"en", "es", "fr"}; }

StopList resolve_stoplist(std::string_view spec) {
  if (spec == "none") return StopList{};
  if (auto builtin = builtin_stoplist(spec)) return *builtin;
  std::string path(spec);
  if (!std::filesystem::is_regular_file(path)) {
    throw ResourceError("stoplist is neither 'none', a built-in language, nor a file: " + path);
  }
  return TermSet::load(path);
}

Stemmer parse_stemmer(std::string_view name) {
  if (name == "porter") return Stemmer::Porter;
  if (name == "light") return Stemmer::Light;
  if (name == "none") return Stemmer::None;
  throw Error("unknown stemmer: " + std::string(name));
}

std::string_view to_string(Stemmer s) {
  switch (s) {
    case Stemmer::Porter: return "porter";
    case Stemmer::Light: return "light";
    case Stemmer::None: return "none";
  }
  return "none";
}

Stemmer default_stemmer(std::string_view language) {
  if (language == "en") return Stemmer::Porter;
  if (language == "fr" || language == "es") return Stemmer::Light;
  return Stemmer::None;
}

TextConfig TextConfig::for_language(std::string_view language) {
  auto stoplist = builtin_stoplist(language);
  if (!stoplist) {
    throw ResourceError("no built-in stoplist for language '" + std::string(language) +
                        "'; pass one explicitly (or 'none')");
  }
  TextConfig cfg;
  cfg.language = std::string(language);
  cfg.stoplist = std::move(*stoplist);
  cfg.abbreviations = builtin_abbreviations(language).value_or(AbbreviationList{});
  cfg.stemmer = default_stemmer(language);
  return cfg;
}

Document process(const RawDocument& raw, const TextConfig& config) {
  if (!unicode::is_valid_utf8(raw.text)) throw Error("input is not valid UTF-8");

  Document doc;
  doc.language = raw.language;
  auto surfaces = segment_sentences(raw.text, config.abbreviations);
  doc.sentences.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    Sentence s;
    s.index = i;
    s.tokens = filter_stopwords(tokenize(surfaces[i]), config.stoplist);
    for (auto& t : s.tokens) t = stem(t, config.language, config.stemmer);
    s.surface = std::move(surfaces[i]);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

std::size_t Vocabulary::add(std::string_view term) {
  if (auto it = ids_.find(term); it != ids_.end()) return it->second;
  std::size_t id = terms_.size();
  terms_.emplace_back(term);
  ids_.emplace(terms_.back(), id);
  return id;
}

std::optional<std::size_t> Vocabulary::find(std::string_view term) const {
  if (auto it = ids_.find(term); it != ids_.end()) return it->second;
  return std::nullopt;
}

Vocabulary build_vocabulary(std::span<const Sentence> sentences) {
  Vocabulary vocab;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) vocab.add(t);
  }
  return vocab;
}

TermMatrix::TermMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("term matrix data size mismatch");
}

TermMatrix build_term_matrix(std::span<const Sentence> sentences, const Vocabulary& vocab) {
  TermMatrix s(sentences.size(), vocab.size());
  for (std::size_t row = 0; row < sentences.size(); ++row) {
    for (const auto& t : sentences[row].tokens) {
      auto id = vocab.find(t);
      if (!id) throw UnknownTerm(t);
      ++s(row, *id);
    }
  }
  return s;
}

}  // namespace reg::text
