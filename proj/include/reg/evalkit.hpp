#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reg/summarizer.hpp"
#include "reg/textproc.hpp"

namespace reg::eval {

using Tokens = std::vector<std::string>;

// Multiset of grams of one order, with positive counts.
struct NGramMultiset {
  std::size_t n = 0;
  std::map<std::vector<std::string>, std::size_t> counts;

  std::size_t total() const;
};

// Contiguous n-grams.
NGramMultiset ngrams(const Tokens& tokens, std::size_t n);
// Ordered pairs (t_i, t_j) with i < j <= i + max_skip + 1.
NGramMultiset skip_bigrams(const Tokens& tokens, std::size_t max_skip);

// Sum over grams of min(count in a, count in b).
std::size_t clipped_matches(const NGramMultiset& a, const NGramMultiset& b);

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;

  static RougeScore from(double recall, double precision);
};

// Pooled multi-reference ROUGE-N. With `jackknife`, the score is the mean
// over the leave-one-out reference subsets (for two or more references).
// Throws EmptyReference when no reference holds an n-gram.
RougeScore rouge_n(const Tokens& candidate, std::span<const Tokens> references, std::size_t n,
                   bool jackknife = false);

// Skip-bigrams with at most `max_skip` interleaving tokens, plus unigrams.
RougeScore rouge_su(const Tokens& candidate, std::span<const Tokens> references,
                    std::size_t max_skip, bool jackknife = false);

// A ROUGE variant by name: "rougeN" (N >= 1) or "suK" (K >= 0).
struct Metric {
  enum class Kind { RougeN, RougeSU };
  Kind kind = Kind::RougeN;
  std::size_t param = 2;

  static Metric parse(std::string_view name);
  std::string name() const;
};

std::vector<Metric> parse_metrics(std::string_view list);  // comma separated

struct RougeOptions {
  bool stem = false;
  bool remove_stopwords = false;
  bool jackknife = false;
  std::string language = "en";
  text::StopList stoplist;  // used when remove_stopwords
};

// Tokenization shared with the summarizer, plus the optional filters.
Tokens rouge_tokens(std::string_view text, const RougeOptions& options);

RougeScore score(const Metric& metric, std::string_view candidate,
                 std::span<const std::string> references, const RougeOptions& options);

// k distinct sentences drawn uniformly without replacement (k clamped to P).
Summary baseline_random(const text::Document& doc, std::size_t k, std::uint64_t seed);
Summary baseline_lead(const text::Document& doc, std::size_t k);

// Rankings behind the baselines, for use with reg::extract.
graph::SentenceScores random_ranking(std::size_t sentences, std::uint64_t seed);
graph::SentenceScores lead_ranking(std::size_t sentences);

struct SystemConfig {
  enum class Kind { Reg, Random, Lead };
  std::string name;
  Kind kind = Kind::Reg;
  std::uint64_t seed = 1;
  std::size_t runs = 1;  // random only: scores are averaged over seeds seed..seed+runs-1

  static SystemConfig parse(std::string_view name, std::uint64_t seed, std::size_t runs = 1);
};

struct ScoreRow {
  std::string document;
  std::string system;
  RougeScore rouge2;
  RougeScore su4;
  bool failed = false;  // the system or document could not be scored
  std::vector<std::string> warnings;
};

inline constexpr std::string_view kWarnEmptyCandidate = "empty-candidate";
inline constexpr std::string_view kMacroDocument = "(macro)";

// Summarizes `doc` with every system under the shared spec and scores each
// summary with ROUGE-2 and ROUGE-SU4. A failing system yields a zero row
// carrying the error as a warning.
std::vector<ScoreRow> compare_systems(const std::string& document_name, const text::Document& doc,
                                      std::span<const std::string> references,
                                      std::span<const SystemConfig> systems, const SummarySpec& spec,
                                      const PipelineOptions& options,
                                      const RougeOptions& rouge = {});

struct ScoreTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ScoreRow> rows;

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
  void write_text(std::ostream& out) const;
  static ScoreTable read_csv(std::istream& in);
};

// Unweighted mean per system over rows without a failure, in first-seen system order.
std::vector<ScoreRow> macro_average(std::span<const ScoreRow> rows);

// corpus/<doc>.txt paired with refs/<doc>/<judge>.txt.
struct CorpusDocument {
  std::string name;
  std::string text;
  std::vector<std::string> references;  // in judge-file name order
  std::optional<std::string> error;     // layout problem for this document
};

std::vector<CorpusDocument> load_corpus(const std::filesystem::path& corpus_dir,
                                        const std::filesystem::path& refs_dir);

// Scores every document (up to `jobs` in parallel) and appends macro rows.
// Rows are ordered by document name, then system order.
ScoreTable compare_corpus(std::span<const CorpusDocument> corpus,
                          std::span<const SystemConfig> systems, const SummarySpec& spec,
                          const PipelineOptions& options, const RougeOptions& rouge = {},
                          unsigned jobs = 1);

}  // namespace reg::eval
