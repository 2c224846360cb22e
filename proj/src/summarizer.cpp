#include "reg/summarizer.hpp"

#include <algorithm>
#include <json.hpp>

#include "reg/errors.hpp"

namespace reg {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::size_t> sorted_prefix(const std::vector<std::size_t>& order, std::size_t n) {
  std::vector<std::size_t> out(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest visit-order prefix whose surfaces reach `ratio` of the document's words.
std::vector<std::size_t> select_by_ratio(const text::Document& doc,
                                         const graph::SentenceScores& scores, double ratio) {
  std::size_t total = 0;
  for (const auto& s : doc.sentences) total += text::count_words(s.surface);
  const double goal = ratio * static_cast<double>(total);

  std::size_t words = 0;
  std::size_t n = 0;
  while (n < scores.visit_order.size()) {
    words += text::count_words(doc.sentences[scores.visit_order[n]].surface);
    ++n;
    if (static_cast<double>(words) >= goal) break;
  }
  return sorted_prefix(scores.visit_order, std::max<std::size_t>(n, 1));
}

}  // namespace

void SummarySpec::validate() const {
  std::visit(overloaded{
                 [](const SentenceCount& t) {
                   if (t.k < 1) throw Error("sentence count must be at least 1");
                 },
                 [](const WordRatio& t) {
                   if (!(t.ratio > 0.0 && t.ratio <= 1.0)) throw Error("word ratio must lie in (0, 1]");
                 },
                 [](const WordCap& t) {
                   if (t.max_words < 1) throw Error("word cap must be at least 1");
                 },
             },
             target);
  if (m_override && *m_override < 1) throw Error("greedy visit budget m must be at least 1");
}

std::string render_summary(const text::Document& doc, const std::vector<std::size_t>& selected) {
  std::string out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i] >= doc.size()) {
      throw IndexOutOfRange("sentence index " + std::to_string(selected[i]) + " out of range for " +
                            std::to_string(doc.size()) + " sentences");
    }
    if (i > 0) out += ' ';
    out += doc.sentences[selected[i]].surface;
  }
  return out;
}

Summary make_summary(const text::Document& doc, std::vector<std::size_t> selected,
                     graph::SentenceScores scores) {
  Summary summary;
  summary.text = render_summary(doc, selected);
  for (auto idx : selected) summary.surfaces.push_back(doc.sentences[idx].surface);
  summary.selected = std::move(selected);
  summary.scores = std::move(scores);
  return summary;
}

Summary summarize(const text::RawDocument& raw, const PipelineOptions& options,
                  const SummarySpec& spec) {
  return summarize(text::process(raw, options.text), options, spec);
}

Summary summarize(const text::Document& doc, const PipelineOptions& options,
                  const SummarySpec& spec) {
  spec.validate();
  if (doc.size() == 0) throw EmptyDocument();

  auto vocab = text::build_vocabulary(doc.sentences);
  auto matrix = text::build_term_matrix(doc.sentences, vocab);
  auto adjacency = graph::build_adjacency(matrix, options.similarity, options.threads);
  auto scores = graph::greedy_visit(adjacency, {spec.m_override.value_or(doc.size())});

  Summary summary = extract(doc, scores, spec);

  // With an empty vocabulary the graph has no edges and the walk visits
  // sentences in index order, which is the lead fallback.
  if (vocab.size() == 0) summary.warnings.emplace_back(kWarnAllStopwords);
  return summary;
}

Summary extract(const text::Document& doc, const graph::SentenceScores& scores,
                const SummarySpec& spec) {
  spec.validate();
  return std::visit(
      overloaded{
          [&](const SentenceCount& t) {
            return make_summary(doc, graph::top_sentences(scores, t.k), scores);
          },
          [&](const WordRatio& t) {
            return make_summary(doc, select_by_ratio(doc, scores, t.ratio), scores);
          },
          [&](const WordCap& t) {
            auto all = sorted_prefix(scores.visit_order, scores.visit_order.size());
            return truncate_to_words(make_summary(doc, std::move(all), scores), t.max_words);
          },
      },
      spec.target);
}

Summary truncate_to_words(const Summary& summary, std::size_t max_words) {
  if (max_words < 1) throw Error("word cap must be at least 1");

  const auto& order = summary.scores.visit_order;
  auto rank_of = [&](std::size_t idx) {
    auto it = std::find(order.begin(), order.end(), idx);
    return static_cast<std::size_t>(it - order.begin());
  };

  // Positions into summary.selected, best visit rank first.
  std::vector<std::size_t> by_rank(summary.selected.size());
  for (std::size_t i = 0; i < by_rank.size(); ++i) by_rank[i] = i;
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) {
    return rank_of(summary.selected[a]) < rank_of(summary.selected[b]);
  });

  std::vector<std::size_t> words(summary.selected.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i] = text::count_words(summary.surfaces[i]);
    total += words[i];
  }

  std::size_t kept = by_rank.size();
  while (kept > 1 && total > max_words) total -= words[by_rank[--kept]];

  std::vector<std::size_t> keep(by_rank.begin(), by_rank.begin() + static_cast<std::ptrdiff_t>(kept));
  std::sort(keep.begin(), keep.end());

  Summary out;
  out.scores = summary.scores;
  out.warnings = summary.warnings;
  for (auto pos : keep) {
    out.selected.push_back(summary.selected[pos]);
    out.surfaces.push_back(summary.surfaces[pos]);
    if (!out.text.empty()) out.text += ' ';
    out.text += summary.surfaces[pos];
  }
  out.overflow = kept == 1 && total > max_words;
  if (out.overflow) out.warnings.emplace_back(kWarnOverflow);
  return out;
}

std::string to_json(const Summary& summary) {
  nlohmann::ordered_json j;
  j["selected"] = summary.selected;
  j["text"] = summary.text;
  j["weights"] = summary.scores.weight;
  j["warnings"] = summary.warnings;
  return j.dump();
}

}  // namespace reg
