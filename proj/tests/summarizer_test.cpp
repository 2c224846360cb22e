#include <gtest/gtest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "reg/errors.hpp"
#include "reg/summarizer.hpp"
#include "support/fixtures.hpp"

using namespace reg;
using Indices = std::vector<std::size_t>;

namespace {

PipelineOptions english() { return {text::TextConfig::for_language("en"), {}, 1}; }

SummarySpec sentences(std::size_t k) { return {SentenceCount{k}, std::nullopt}; }

// Theme {0, 2, 4}, pairwise-disjoint noise {1, 3, 5}.
const std::string kSixSentences =
    "Solar panels convert sunlight into electricity efficiently. "
    "Bakers knead dough before dawn. "
    "Modern solar panels convert sunlight into cheap electricity. "
    "Penguins swim through icy water. "
    "Solar panels turn sunlight into electricity. "
    "Violins require careful tuning.";

std::string ten_words(const std::string& tag) {
  std::string s = tag;
  for (int i = 1; i < 10; ++i) s += " w" + std::to_string(i);
  return s + ".";
}

// Duplicates every whitespace-delimited word in place: "a b." -> "a a b. b."
std::string double_words(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(' ', pos);
    auto word = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    // Keep terminators on the second copy so segmentation is unchanged.
    auto core = word;
    while (!core.empty() && core.back() == '.') core.pop_back();
    if (!out.empty()) out += ' ';
    std::string lower = core;
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out += core + " " + lower + word.substr(core.size());
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST(Render, Examples) {
  auto doc = text::process({"First one. Second one. Third one.", "en"}, text::TextConfig::for_language("en"));
  EXPECT_EQ(render_summary(doc, {0}), "First one.");
  EXPECT_EQ(render_summary(doc, {}), "");
  EXPECT_EQ(render_summary(doc, {0, 2}), "First one. Third one.");
  EXPECT_THROW(render_summary(doc, {3}), IndexOutOfRange);
}

TEST(Summarize, SingleSentenceIsIdentity) {
  const std::string text = "Just one sentence about graphs here.";
  for (auto spec : {sentences(1), sentences(4), SummarySpec{WordRatio{0.1}, {}},
                    SummarySpec{WordCap{2}, {}}}) {
    auto s = summarize(text::RawDocument{text, "en"}, english(), spec);
    EXPECT_EQ(s.text, text);
    EXPECT_EQ(s.selected, (Indices{0}));
  }
}

TEST(Summarize, PlantedThemeWins) {
  auto s = summarize(text::RawDocument{kSixSentences, "en"}, english(), sentences(3));
  EXPECT_EQ(s.selected, (Indices{0, 2, 4}));
  EXPECT_EQ(s.surfaces.front(), "Solar panels convert sunlight into electricity efficiently.");
  EXPECT_TRUE(s.warnings.empty());
}

TEST(Summarize, DoubledDocumentKeepsSurfaceSet) {
  auto base = summarize(text::RawDocument{kSixSentences, "en"}, english(), sentences(3));
  auto doubled = summarize(text::RawDocument{kSixSentences + " " + kSixSentences, "en"}, english(),
                           sentences(6));
  EXPECT_EQ(std::set<std::string>(doubled.surfaces.begin(), doubled.surfaces.end()),
            std::set<std::string>(base.surfaces.begin(), base.surfaces.end()));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto doc = fixture::planted_doc(seed, 5, 6);
    for (std::size_t k = 1; k <= 5; ++k) {
      auto one = summarize(text::RawDocument{doc.text, "en"}, english(), sentences(k));
      auto two = summarize(text::RawDocument{doc.text + " " + doc.text, "en"}, english(),
                           sentences(2 * k));
      ASSERT_EQ(std::set<std::string>(two.surfaces.begin(), two.surfaces.end()),
                std::set<std::string>(one.surfaces.begin(), one.surfaces.end()))
          << "seed " << seed << " k " << k;
    }
  }
}

TEST(Summarize, InPlaceWordDuplicationKeepsSelection) {
  EXPECT_EQ(double_words("Ab cd. Ef."), "Ab ab cd cd. Ef ef.");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto doc = fixture::planted_doc(seed);
    auto a = summarize(text::RawDocument{doc.text, "en"}, english(), sentences(5));
    auto b = summarize(text::RawDocument{double_words(doc.text), "en"}, english(), sentences(5));
    ASSERT_EQ(a.selected, b.selected) << seed;
    ASSERT_EQ(a.scores.visit_order, b.scores.visit_order) << seed;
    ASSERT_EQ(a.scores.weight, b.scores.weight) << seed;
  }
}

TEST(Summarize, DeterministicAndThreadIndependent) {
  auto doc = fixture::planted_doc(99, 5, 30);
  auto opts = english();
  auto a = summarize(text::RawDocument{doc.text, "en"}, opts, sentences(4));
  opts.threads = 4;
  auto b = summarize(text::RawDocument{doc.text, "en"}, opts, sentences(4));
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Summarize, WordRatioPicksSmallestPrefix) {
  // Words per sentence: 4, 2, 6, 7; total 19.
  const std::string text =
      "Graphs rank sentences well. Noise here. Graphs rank sentences well and fast. "
      "Completely unrelated words about kittens sleeping happily.";
  auto full = summarize(text::RawDocument{text, "en"}, english(), sentences(4));
  ASSERT_EQ(full.scores.visit_order.front(), 0u);
  ASSERT_EQ(full.scores.visit_order[1], 2u);

  auto quarter = summarize(text::RawDocument{text, "en"}, english(), {WordRatio{0.2}, {}});
  EXPECT_EQ(quarter.selected, (Indices{0}));  // 4 >= 3.8
  auto more = summarize(text::RawDocument{text, "en"}, english(), {WordRatio{0.25}, {}});
  EXPECT_EQ(more.selected, (Indices{0, 2}));  // 4 < 4.75 <= 10
  auto all = summarize(text::RawDocument{text, "en"}, english(), {WordRatio{1.0}, {}});
  EXPECT_EQ(all.selected, (Indices{0, 1, 2, 3}));
}

TEST(Summarize, WordCapRespectsBudget) {
  auto doc = text::process({kSixSentences, "en"}, text::TextConfig::for_language("en"));
  for (std::size_t cap : {13u, 14u, 21u, 40u}) {
    auto s = summarize(doc, english(), {WordCap{cap}, {}});
    EXPECT_LE(text::count_words(s.text), cap);
    EXPECT_FALSE(s.overflow);
    // The selection is the longest visit-order prefix that fits.
    std::size_t words = 0, n = 0;
    const auto& order = s.scores.visit_order;
    while (n < order.size() && words + text::count_words(doc.sentences[order[n]].surface) <= cap) {
      words += text::count_words(doc.sentences[order[n]].surface);
      ++n;
    }
    Indices prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(prefix.begin(), prefix.end());
    EXPECT_EQ(s.selected, prefix) << cap;
  }
  auto tiny = summarize(text::RawDocument{kSixSentences, "en"}, english(), {WordCap{1}, {}});
  EXPECT_TRUE(tiny.overflow);
  EXPECT_EQ(tiny.selected.size(), 1u);
  EXPECT_EQ(tiny.warnings, (std::vector<std::string>{std::string(kWarnOverflow)}));
}

TEST(Summarize, MOverrideLimitsRanking) {
  SummarySpec spec = sentences(5);
  spec.m_override = 2;
  auto s = summarize(text::RawDocument{kSixSentences, "en"}, english(), spec);
  EXPECT_EQ(s.scores.visit_order.size(), 2u);
  EXPECT_EQ(s.selected.size(), 2u);
}

TEST(Summarize, AllStopwordsFallsBackToLead) {
  auto s = summarize(text::RawDocument{"It is what it is. And so it was. Then it was not.", "en"},
                     english(), sentences(2));
  EXPECT_EQ(s.selected, (Indices{0, 1}));
  EXPECT_EQ(s.warnings, (std::vector<std::string>{std::string(kWarnAllStopwords)}));
  for (double w : s.scores.weight) EXPECT_EQ(w, 0.0);
}

TEST(Summarize, EmptyDocumentPropagates) {
  EXPECT_THROW(summarize(text::RawDocument{"   ", "en"}, english(), sentences(1)), EmptyDocument);
}

TEST(Summarize, InvalidSpecsThrow) {
  const text::RawDocument raw{kSixSentences, "en"};
  EXPECT_THROW(summarize(raw, english(), sentences(0)), Error);
  EXPECT_THROW(summarize(raw, english(), {WordRatio{0.0}, {}}), Error);
  EXPECT_THROW(summarize(raw, english(), {WordRatio{1.5}, {}}), Error);
  EXPECT_THROW(summarize(raw, english(), {WordCap{0}, {}}), Error);
  EXPECT_THROW(summarize(raw, english(), {SentenceCount{1}, 0}), Error);
}

TEST(Summarize, JsonShape) {
  auto s = summarize(text::RawDocument{kSixSentences, "en"}, english(), sentences(2));
  auto j = nlohmann::json::parse(to_json(s));
  EXPECT_EQ(j["selected"].get<Indices>(), s.selected);
  EXPECT_EQ(j["text"], s.text);
  EXPECT_EQ(j["weights"].size(), 6u);
  EXPECT_TRUE(j["warnings"].is_array());
  EXPECT_EQ(j.size(), 4u);
}

TEST(Truncate, UnderCapUnchanged) {
  auto doc = text::process({ten_words("Alpha"), "en"}, text::TextConfig::for_language("en"));
  auto s = make_summary(doc, {0}, {{0}, {1.0}});
  auto t = truncate_to_words(s, 100);
  EXPECT_EQ(t.text, s.text);
  EXPECT_EQ(t.selected, s.selected);
  EXPECT_FALSE(t.overflow);
}

TEST(Truncate, DropsLowestVisitRank) {
  auto doc = text::process({ten_words("Alpha") + " " + ten_words("Beta") + " " + ten_words("Gamma"), "en"},
                           text::TextConfig::for_language("en"));
  ASSERT_EQ(doc.size(), 3u);
  auto s = make_summary(doc, {0, 1, 2}, {{2, 0, 1}, {0.5, 0.2, 0.9}});
  auto t = truncate_to_words(s, 25);
  EXPECT_EQ(t.selected, (Indices{0, 2}));
  EXPECT_EQ(text::count_words(t.text), 20u);
  EXPECT_EQ(t.text, ten_words("Alpha") + " " + ten_words("Gamma"));
  EXPECT_FALSE(t.overflow);
}

TEST(Truncate, SingleLongSentenceOverflows) {
  std::string thirty = "Start";
  for (int i = 1; i < 30; ++i) thirty += " w";
  thirty += ".";
  auto doc = text::process({thirty, "en"}, text::TextConfig::for_language("en"));
  auto t = truncate_to_words(make_summary(doc, {0}, {{0}, {0.0}}), 10);
  EXPECT_EQ(t.text, thirty);
  EXPECT_TRUE(t.overflow);
  EXPECT_THROW(truncate_to_words(t, 0), Error);
}

TEST(Extract, NestedBudgetsOnPlantedDocs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto raw = fixture::planted_doc(seed);
    auto doc = text::process({raw.text, "en"}, text::TextConfig::for_language("en"));
    auto full = summarize(doc, english(), sentences(doc.size()));
    for (std::size_t k = 1; k < doc.size(); ++k) {
      auto a = extract(doc, full.scores, sentences(k)).selected;
      auto b = extract(doc, full.scores, sentences(k + 1)).selected;
      ASSERT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}
