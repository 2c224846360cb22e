#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "reg/textproc.hpp"

namespace reg::graph {

// Symmetric P x P sentence-similarity matrix with zero diagonal and entries in [0, 1].
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t size) : size_(size), w_(size * size, 0.0) {}

  // Validates the invariants; throws reg::Error on violation.
  static AdjacencyMatrix from_dense(std::size_t size, std::vector<double> weights);

  std::size_t size() const { return size_; }
  double operator()(std::size_t i, std::size_t j) const { return w_[i * size_ + j]; }

  // Sets w[i][j] and w[j][i].
  void set(std::size_t i, std::size_t j, double value) {
    w_[i * size_ + j] = value;
    w_[j * size_ + i] = value;
  }

  std::span<const double> row(std::size_t i) const { return {w_.data() + i * size_, size_}; }

  // Sum of row i, accumulated in column order.
  double degree(std::size_t i) const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<double> w_;
};

enum class Measure { Cosine, Overlap };

Measure parse_measure(std::string_view name);
std::string_view to_string(Measure m);

struct SimilarityConfig {
  Measure measure = Measure::Cosine;
  bool binary_weights = false;  // presence/absence instead of raw TF
  double edge_threshold = 0.0;  // similarities below this become 0; in [0, 1)

  void validate() const;
};

struct GreedyParams {
  std::size_t m = 1;  // vertices to visit; clamped to P
};

struct SentenceScores {
  std::vector<std::size_t> visit_order;
  std::vector<double> weight;  // one per sentence, 0 when unvisited
};

// Cosine or support-overlap similarity of two term-frequency rows.
// Throws DimensionMismatch when the rows differ in length.
double sentence_similarity(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           const SimilarityConfig& cfg);

// `threads` > 1 splits rows across workers; results are identical to the
// sequential computation.
AdjacencyMatrix build_adjacency(const text::TermMatrix& s, const SimilarityConfig& cfg,
                                unsigned threads = 1);

// Greedy walk over min(m, P) vertices:
//  - start at the vertex of maximum degree, weight = degree / max(P - 1, 1);
//  - step to the unvisited neighbour with the heaviest edge, weight = that edge;
//  - when every edge to unvisited vertices is 0, restart at the unvisited
//    vertex of maximum degree, weighted as a start vertex.
// Ties go to the smallest index.
SentenceScores greedy_visit(const AdjacencyMatrix& w, GreedyParams params);

// First min(k, |visit_order|) visited vertices, sorted by sentence index.
std::vector<std::size_t> top_sentences(const SentenceScores& scores, std::size_t k);

// One row per vertex, comma separated, fixed-point with 6 decimals.
void write_adjacency_csv(std::ostream& out, const AdjacencyMatrix& w);

}  // namespace reg::graph
