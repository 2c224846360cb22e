#pragma once

// Synthetic documents shared by the test suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixture {

// Deterministic pseudo-words that no stoplist contains: base-12 digits of
// `id` spelled as consonant-vowel syllables, prefixed so ids never collide.
inline std::string pseudo_word(std::size_t id) {
  static const char* syllables[] = {"ka", "lo", "mu", "ni", "po", "ra",
                                    "su", "ta", "vo", "zu", "bi", "do"};
  std::string w = "gro";
  do {
    w += syllables[id % 12];
    id /= 12;
  } while (id > 0);
  return w + "nt";
}

inline std::string sentence_of(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string w = words[i];
    if (i == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    if (i > 0) s += ' ';
    s += w;
  }
  return s + ".";
}

struct PlantedDoc {
  std::string text;
  std::vector<std::string> sentences;       // in document order
  std::vector<std::size_t> cluster;         // ascending indices of theme sentences
  std::string reference;                    // theme sentences joined in document order
};

// `cluster_size` paraphrases built from 7 of 8 shared core words plus 2
// private words (pairwise overlap >= 6 of 9 words), and `noise` sentences of 8
// words each with vocabularies disjoint from everything else. Sentence order
// is a seeded shuffle.
inline PlantedDoc planted_doc(std::uint64_t seed, std::size_t cluster_size = 5, std::size_t noise = 10) {
  std::mt19937_64 rng(seed);
  std::size_t next_word = seed * 1000;
  auto fresh = [&] { return pseudo_word(next_word++); };

  std::vector<std::string> core;
  for (int i = 0; i < 8; ++i) core.push_back(fresh());

  struct Item {
    std::string text;
    bool theme;
  };
  std::vector<Item> items;
  for (std::size_t c = 0; c < cluster_size; ++c) {
    std::vector<std::string> words = core;
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(c % core.size()));
    words.push_back(fresh());
    words.push_back(fresh());
    std::shuffle(words.begin(), words.end(), rng);
    items.push_back({sentence_of(words), true});
  }
  for (std::size_t n = 0; n < noise; ++n) {
    std::vector<std::string> words;
    for (int i = 0; i < 8; ++i) words.push_back(fresh());
    items.push_back({sentence_of(words), false});
  }
  std::shuffle(items.begin(), items.end(), rng);

  PlantedDoc doc;
  for (std::size_t i = 0; i < items.size(); ++i) {
    doc.sentences.push_back(items[i].text);
    if (!doc.text.empty()) doc.text += ' ';
    doc.text += items[i].text;
    if (items[i].theme) {
      doc.cluster.push_back(i);
      if (!doc.reference.empty()) doc.reference += ' ';
      doc.reference += items[i].text;
    }
  }
  return doc;
}

}  // namespace fixture
