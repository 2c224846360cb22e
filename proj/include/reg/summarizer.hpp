#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reg/graph.hpp"
#include "reg/textproc.hpp"

namespace reg {

struct SentenceCount {
  std::size_t k = 1;
};
struct WordRatio {
  double ratio = 0.25;  // in (0, 1]
};
struct WordCap {
  std::size_t max_words = 100;
};

struct SummarySpec {
  std::variant<SentenceCount, WordRatio, WordCap> target = SentenceCount{};
  std::optional<std::size_t> m_override;  // greedy visit budget; P when unset

  void validate() const;
};

struct Summary {
  std::vector<std::size_t> selected;  // ascending sentence indices
  std::vector<std::string> surfaces;  // parallel to `selected`
  std::string text;
  graph::SentenceScores scores;
  std::vector<std::string> warnings;
  bool overflow = false;  // a single selected sentence exceeds the word cap
};

inline constexpr std::string_view kWarnAllStopwords = "all-stopwords";
inline constexpr std::string_view kWarnOverflow = "word-cap-overflow";

struct PipelineOptions {
  text::TextConfig text;
  graph::SimilarityConfig similarity;
  unsigned threads = 1;
};

// Full pipeline: process -> adjacency -> greedy visit -> selection -> render.
Summary summarize(const text::RawDocument& raw, const PipelineOptions& options,
                  const SummarySpec& spec);

// Same, on an already processed document.
Summary summarize(const text::Document& doc, const PipelineOptions& options,
                  const SummarySpec& spec);

// Verbatim surfaces of `selected` joined by single spaces. Throws
// IndexOutOfRange on a bad index.
std::string render_summary(const text::Document& doc, const std::vector<std::size_t>& selected);

// Applies `spec`'s target to an existing ranking (scores.visit_order), as
// summarize() does after the greedy visit. Baselines reuse it.
Summary extract(const text::Document& doc, const graph::SentenceScores& scores,
                const SummarySpec& spec);

// Builds a Summary over `doc` from scores and an ascending selection.
Summary make_summary(const text::Document& doc, std::vector<std::size_t> selected,
                     graph::SentenceScores scores);

// Drops the lowest-visit-rank sentences until the text has at most
// `max_words` words. The top-ranked sentence always survives; when it alone
// exceeds the cap, `overflow` is set.
Summary truncate_to_words(const Summary& summary, std::size_t max_words);

// {"selected": [...], "text": "...", "weights": [...], "warnings": [...]}
std::string to_json(const Summary& summary);

}  // namespace reg
