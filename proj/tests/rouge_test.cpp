#include <gtest/gtest.h>

#include <random>

#include "reg/errors.hpp"
#include "reg/evalkit.hpp"
#include "support/oracles.hpp"

using namespace reg::eval;

namespace {

Tokens toks(std::string_view s) { return reg::text::tokenize(s); }

std::vector<Tokens> one(const Tokens& t) { return {t}; }

Tokens random_tokens(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet) {
  Tokens t(rng() % (max_len + 1));
  for (auto& x : t) x = std::string(1, static_cast<char>('a' + rng() % alphabet));
  return t;
}

void expect_same(const RougeScore& got, const oracle::Prf& want) {
  EXPECT_NEAR(got.recall, want.recall, 1e-12);
  EXPECT_NEAR(got.precision, want.precision, 1e-12);
  EXPECT_NEAR(got.f1, want.f1, 1e-12);
}

}  // namespace

TEST(Grams, Counting) {
  auto g = ngrams(toks("a b a b"), 2);
  EXPECT_EQ(g.total(), 3u);
  EXPECT_EQ((g.counts.at({"a", "b"})), 2u);
  EXPECT_EQ(ngrams(toks("a"), 2).total(), 0u);
  auto s = skip_bigrams(toks("a b c"), 0);
  EXPECT_EQ(s.total(), 2u);
  EXPECT_EQ(skip_bigrams(toks("a b c"), 1).total(), 3u);
  EXPECT_EQ(clipped_matches(ngrams(toks("a a a"), 1), ngrams(toks("a a"), 1)), 2u);
}

TEST(RougeN, HandCases) {
  auto same = rouge_n(toks("the cat sat"), one(toks("the cat sat")), 2);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.f1, 1.0);

  auto disjoint = rouge_n(toks("dogs bark loud"), one(toks("the cat sat")), 2);
  EXPECT_EQ(disjoint.recall, 0.0);
  EXPECT_EQ(disjoint.precision, 0.0);
  EXPECT_EQ(disjoint.f1, 0.0);

  auto half = rouge_n(toks("the cat sat"), one(toks("the cat ran")), 2);
  EXPECT_EQ(half.recall, 0.5);
  EXPECT_EQ(half.precision, 0.5);
  EXPECT_EQ(half.f1, 0.5);
}

TEST(RougeN, ClippingAndPooling) {
  // Candidate repeats a bigram the reference holds once.
  auto clipped = rouge_n(toks("a b a b"), one(toks("a b c")), 2);
  EXPECT_DOUBLE_EQ(clipped.recall, 1.0 / 2.0);
  EXPECT_DOUBLE_EQ(clipped.precision, 1.0 / 3.0);

  // Two references are pooled: matches and totals add up.
  std::vector<Tokens> refs = {toks("a b c"), toks("a b d e")};
  auto pooled = rouge_n(toks("a b c"), refs, 2);
  EXPECT_DOUBLE_EQ(pooled.recall, 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(pooled.precision, 3.0 / 4.0);
}

TEST(RougeN, EmptyCandidateScoresZero) {
  auto s = rouge_n({}, one(toks("a b c")), 2);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(RougeN, EmptyReferenceThrows) {
  EXPECT_THROW(rouge_n(toks("a b"), one(toks("a")), 2), reg::EmptyReference);
  EXPECT_THROW(rouge_n(toks("a b"), {}, 2), reg::EmptyReference);
  std::vector<Tokens> refs = {{}, toks("a b")};
  EXPECT_NO_THROW(rouge_n(toks("a b"), refs, 2));
}

TEST(RougeSU, HandCases) {
  auto same = rouge_su(toks("a b"), one(toks("a b")), 4);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.precision, 1.0);

  // Skip-bigrams {ab, ac, bc} vs {ac, ab, cb}: two shared; unigrams all shared.
  auto swapped = rouge_su(toks("a b c"), one(toks("a c b")), 4);
  EXPECT_DOUBLE_EQ(swapped.recall, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(swapped.precision, 5.0 / 6.0);
  expect_same(swapped, oracle::rouge_su(toks("a b c"), one(toks("a c b")), 4));

  // The skip distance limits which pairs count.
  auto gap = rouge_su(toks("a x x x x x b"), one(toks("a b")), 4);
  EXPECT_DOUBLE_EQ(gap.recall, 2.0 / 3.0);
}

TEST(Rouge, RangesAndSymmetryProperty) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_tokens(rng, 20, 5), b = random_tokens(rng, 20, 5);
    if (a.size() < 2 || b.size() < 2) continue;
    auto ab = rouge_n(a, one(b), 2), ba = rouge_n(b, one(a), 2);
    EXPECT_EQ(ab.recall, ba.precision);
    EXPECT_EQ(ab.precision, ba.recall);
    for (double v : {ab.recall, ab.precision, ab.f1}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    auto self = rouge_su(a, one(a), 4);
    EXPECT_EQ(self.recall, 1.0);
    EXPECT_EQ(self.f1, 1.0);
  }
}

TEST(Rouge, MatchesEnumerationOracleProperty) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    auto cand = random_tokens(rng, 30, 4);
    std::vector<Tokens> refs(1 + rng() % 3);
    for (auto& r : refs) r = random_tokens(rng, 30, 4);
    std::size_t n = 1 + rng() % 3;
    bool any = false;
    for (const auto& r : refs) any = any || r.size() >= n;
    if (any) expect_same(rouge_n(cand, refs, n), oracle::rouge_n(cand, refs, n));
    std::size_t skip = rng() % 6;
    bool any_su = false;
    for (const auto& r : refs) any_su = any_su || !r.empty();
    if (any_su) expect_same(rouge_su(cand, refs, skip), oracle::rouge_su(cand, refs, skip));
  }
}

TEST(Rouge, JackknifeAveragesLeaveOneOut) {
  std::vector<Tokens> refs = {toks("a b c"), toks("a b d"), toks("x y z")};
  auto single = rouge_n(toks("a b c"), one(refs[0]), 2);
  EXPECT_EQ(rouge_n(toks("a b c"), one(refs[0]), 2, true).recall, single.recall);

  auto jk = rouge_n(toks("a b c"), refs, 2, true);
  // Subsets {1,2}: 1/4, {0,2}: 2/4, {0,1}: 3/4.
  EXPECT_DOUBLE_EQ(jk.recall, (0.25 + 0.5 + 0.75) / 3.0);
  auto p1 = oracle::rouge_n(toks("a b c"), {refs[1], refs[2]}, 2);
  auto p2 = oracle::rouge_n(toks("a b c"), {refs[0], refs[2]}, 2);
  auto p3 = oracle::rouge_n(toks("a b c"), {refs[0], refs[1]}, 2);
  EXPECT_NEAR(jk.precision, (p1.precision + p2.precision + p3.precision) / 3.0, 1e-15);
}

TEST(Metric, Parsing) {
  EXPECT_EQ(Metric::parse("rouge2").param, 2u);
  EXPECT_EQ(Metric::parse("ROUGE-1").kind, Metric::Kind::RougeN);
  EXPECT_EQ(Metric::parse("su4").kind, Metric::Kind::RougeSU);
  EXPECT_EQ(Metric::parse("rouge-su4").param, 4u);
  EXPECT_EQ(Metric::parse("su4").name(), "su4");
  EXPECT_EQ(Metric::parse("rouge_2").name(), "rouge2");
  EXPECT_THROW(Metric::parse("bleu"), reg::Error);
  EXPECT_THROW(Metric::parse("rouge0"), reg::Error);
  EXPECT_EQ(parse_metrics("rouge2,su4").size(), 2u);
}

TEST(Score, TextLevelOptions) {
  std::vector<std::string> refs = {"The cats were running."};
  RougeOptions plain;
  EXPECT_EQ(score(Metric::parse("rouge1"), "the cat runs", refs, plain).recall, 1.0 / 4.0);
  RougeOptions stemmed;
  stemmed.stem = true;
  EXPECT_EQ(score(Metric::parse("rouge1"), "the cat runs", refs, stemmed).recall, 3.0 / 4.0);
  RougeOptions filtered = stemmed;
  filtered.remove_stopwords = true;
  filtered.stoplist = reg::text::builtin_stoplist("en").value();
  EXPECT_EQ(score(Metric::parse("rouge1"), "the cat runs", refs, filtered).recall, 1.0);
  EXPECT_EQ(rouge_tokens("The cats", filtered), (Tokens{"cat"}));
}
