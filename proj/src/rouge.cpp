#include <algorithm>
#include <cctype>
#include <charconv>

#include "reg/errors.hpp"
#include "reg/evalkit.hpp"

namespace reg::eval {
namespace {

// Gram multisets of one text; ROUGE-SU uses two (skip-bigrams and unigrams).
using Bags = std::vector<NGramMultiset>;

std::size_t total(const Bags& bags) {
  std::size_t n = 0;
  for (const auto& b : bags) n += b.total();
  return n;
}

RougeScore pooled(const Bags& candidate, std::span<const Bags> references) {
  std::size_t matched = 0;
  std::size_t ref_total = 0;
  for (const auto& ref : references) {
    for (std::size_t i = 0; i < ref.size(); ++i) matched += clipped_matches(candidate[i], ref[i]);
    ref_total += total(ref);
  }
  if (ref_total == 0) throw EmptyReference();
  const std::size_t cand_total = total(candidate) * references.size();
  double recall = static_cast<double>(matched) / static_cast<double>(ref_total);
  double precision = cand_total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(cand_total);
  return RougeScore::from(recall, precision);
}

RougeScore aggregate(const Bags& candidate, const std::vector<Bags>& references, bool jackknife) {
  if (references.empty()) throw EmptyReference();
  if (!jackknife || references.size() < 2) return pooled(candidate, references);

  double recall = 0.0, precision = 0.0;
  std::size_t subsets = 0;
  for (std::size_t skip = 0; skip < references.size(); ++skip) {
    std::vector<Bags> subset;
    for (std::size_t i = 0; i < references.size(); ++i) {
      if (i != skip) subset.push_back(references[i]);
    }
    if (std::all_of(subset.begin(), subset.end(), [](const Bags& b) { return total(b) == 0; })) continue;
    auto s = pooled(candidate, subset);
    recall += s.recall;
    precision += s.precision;
    ++subsets;
  }
  if (subsets == 0) throw EmptyReference();
  return RougeScore::from(recall / static_cast<double>(subsets), precision / static_cast<double>(subsets));
}

template <class MakeBags>
RougeScore run(const Tokens& candidate, std::span<const Tokens> references, bool jackknife,
               MakeBags make) {
  std::vector<Bags> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(make(r));
  return aggregate(make(candidate), refs, jackknife);
}

std::optional<std::size_t> parse_suffix(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::size_t NGramMultiset::total() const {
  std::size_t n = 0;
  for (const auto& [gram, count] : counts) n += count;
  return n;
}

NGramMultiset ngrams(const Tokens& tokens, std::size_t n) {
  if (n == 0) throw Error("gram order must be at least 1");
  NGramMultiset out{n, {}};
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out.counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                          tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

NGramMultiset skip_bigrams(const Tokens& tokens, std::size_t max_skip) {
  NGramMultiset out{2, {}};
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::size_t last = std::min(tokens.size() - 1, i + max_skip + 1);
    for (std::size_t j = i + 1; j <= last; ++j) ++out.counts[{tokens[i], tokens[j]}];
  }
  return out;
}

std::size_t clipped_matches(const NGramMultiset& a, const NGramMultiset& b) {
  std::size_t matched = 0;
  const auto& small = a.counts.size() <= b.counts.size() ? a.counts : b.counts;
  const auto& large = a.counts.size() <= b.counts.size() ? b.counts : a.counts;
  for (const auto& [gram, count] : small) {
    if (auto it = large.find(gram); it != large.end()) matched += std::min(count, it->second);
  }
  return matched;
}

RougeScore RougeScore::from(double recall, double precision) {
  RougeScore s{recall, precision, 0.0};
  if (recall + precision > 0.0) s.f1 = 2.0 * precision * recall / (precision + recall);
  return s;
}

RougeScore rouge_n(const Tokens& candidate, std::span<const Tokens> references, std::size_t n,
                   bool jackknife) {
  if (n == 0) throw Error("gram order must be at least 1");
  return run(candidate, references, jackknife, [n](const Tokens& t) { return Bags{ngrams(t, n)}; });
}

RougeScore rouge_su(const Tokens& candidate, std::span<const Tokens> references,
                    std::size_t max_skip, bool jackknife) {
  return run(candidate, references, jackknife, [max_skip](const Tokens& t) {
    return Bags{skip_bigrams(t, max_skip), ngrams(t, 1)};
  });
}

Metric Metric::parse(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (c != '-' && c != '_') lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  std::string_view s = lower;
  if (s.starts_with("rouge")) s.remove_prefix(5);
  if (s.starts_with("su")) {
    if (auto k = parse_suffix(s.substr(2))) return {Kind::RougeSU, *k};
  } else if (auto n = parse_suffix(s); n && *n >= 1) {
    return {Kind::RougeN, *n};
  }
  throw Error("unknown metric: " + std::string(name));
}

std::string Metric::name() const {
  return (kind == Kind::RougeN ? "rouge" : "su") + std::to_string(param);
}

std::vector<Metric> parse_metrics(std::string_view list) {
  std::vector<Metric> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    if (!item.empty()) out.push_back(Metric::parse(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error("no metric requested");
  return out;
}

Tokens rouge_tokens(std::string_view text, const RougeOptions& options) {
  auto tokens = text::tokenize(text);
  if (options.remove_stopwords) tokens = text::filter_stopwords(std::move(tokens), options.stoplist);
  if (options.stem) {
    for (auto& t : tokens) {
      t = text::stem(t, options.language, text::default_stemmer(options.language));
    }
  }
  return tokens;
}

RougeScore score(const Metric& metric, std::string_view candidate,
                 std::span<const std::string> references, const RougeOptions& options) {
  auto cand = rouge_tokens(candidate, options);
  std::vector<Tokens> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(rouge_tokens(r, options));
  if (metric.kind == Metric::Kind::RougeN) return rouge_n(cand, refs, metric.param, options.jackknife);
  return rouge_su(cand, refs, metric.param, options.jackknife);
}

}  // namespace reg::eval
