#include "reg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "reg/errors.hpp"

namespace reg::graph {
namespace {

// Row divided by the gcd of its entries, so that integer multiples of a row
// produce bit-identical cosines.
std::vector<std::uint64_t> reduced(std::span<const std::uint32_t> row, bool binary) {
  std::vector<std::uint64_t> out(row.size());
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = binary ? (row[i] > 0 ? 1 : 0) : row[i];
    g = std::gcd(g, out[i]);
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

double cosine(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, bool binary) {
  auto ra = reduced(a, binary);
  auto rb = reduced(b, binary);
  std::uint64_t dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    dot += ra[i] * rb[i];
    na += ra[i] * ra[i];
    nb += rb[i] * rb[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  double value = static_cast<double>(dot) /
                 std::sqrt(static_cast<double>(na) * static_cast<double>(nb));
  return std::clamp(value, 0.0, 1.0);
}

double overlap(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t sa = 0, sb = 0, both = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i] > 0;
    sb += b[i] > 0;
    both += a[i] > 0 && b[i] > 0;
  }
  if (sa == 0 || sb == 0) return 0.0;
  return static_cast<double>(both) / static_cast<double>(std::min(sa, sb));
}

// Unvisited vertex of maximum degree; smallest index on ties.
std::size_t densest_unvisited(const std::vector<double>& degree, const std::vector<bool>& visited) {
  std::size_t best = degree.size();
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (visited[v]) continue;
    if (best == degree.size() || degree[v] > degree[best]) best = v;
  }
  return best;
}

}  // namespace

AdjacencyMatrix AdjacencyMatrix::from_dense(std::size_t size, std::vector<double> weights) {
  if (weights.size() != size * size) throw DimensionMismatch("adjacency data is not size x size");
  AdjacencyMatrix m;
  m.size_ = size;
  m.w_ = std::move(weights);
  for (std::size_t i = 0; i < size; ++i) {
    if (m(i, i) != 0.0) throw Error("adjacency diagonal must be zero");
    for (std::size_t j = 0; j < size; ++j) {
      double v = m(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw Error("adjacency entries must lie in [0, 1]");
      if (v != m(j, i)) throw Error("adjacency matrix must be symmetric");
    }
  }
  return m;
}

double AdjacencyMatrix::degree(std::size_t i) const {
  double sum = 0.0;
  for (double v : row(i)) sum += v;
  return sum;
}

Measure parse_measure(std::string_view name) {
  if (name == "cosine") return Measure::Cosine;
  if (name == "overlap") return Measure::Overlap;
  throw Error("unknown similarity measure: " + std::string(name));
}

std::string_view to_string(Measure m) { return m == Measure::Cosine ? "cosine" : "overlap"; }

void SimilarityConfig::validate() const {
  if (!(edge_threshold >= 0.0 && edge_threshold < 1.0)) {
    throw Error("edge threshold must lie in [0, 1)");
  }
}

double sentence_similarity(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           const SimilarityConfig& cfg) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("similarity of vectors with lengths " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
  switch (cfg.measure) {
    case Measure::Cosine:
      return cosine(a, b, cfg.binary_weights);
    case Measure::Overlap:
      return overlap(a, b);
  }
  return 0.0;
}

AdjacencyMatrix build_adjacency(const text::TermMatrix& s, const SimilarityConfig& cfg,
                                unsigned threads) {
  cfg.validate();
  const std::size_t p = s.rows();
  AdjacencyMatrix w(p);

  // Row i owns the entries (i, j > i); rows are dealt round-robin to workers.
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < p; i += stride) {
      for (std::size_t j = i + 1; j < p; ++j) {
        double v = sentence_similarity(s.row(i), s.row(j), cfg);
        if (v < cfg.edge_threshold) v = 0.0;
        w.set(i, j, v);
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(p, 1))));
  if (threads == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(fill_rows, t, threads);
  }
  return w;
}

SentenceScores greedy_visit(const AdjacencyMatrix& w, GreedyParams params) {
  const std::size_t p = w.size();
  if (params.m == 0) throw Error("greedy visit budget m must be at least 1");
  const std::size_t budget = std::min(params.m, p);
  const double norm = static_cast<double>(std::max<std::size_t>(p, 2) - 1);

  std::vector<double> degree(p);
  for (std::size_t v = 0; v < p; ++v) degree[v] = w.degree(v);

  SentenceScores scores;
  scores.weight.assign(p, 0.0);
  scores.visit_order.reserve(budget);
  std::vector<bool> visited(p, false);

  auto visit = [&](std::size_t v, double weight) {
    visited[v] = true;
    scores.weight[v] = weight;
    scores.visit_order.push_back(v);
  };

  while (scores.visit_order.size() < budget) {
    std::size_t next = p;
    if (!scores.visit_order.empty()) {
      const std::size_t current = scores.visit_order.back();
      double best = 0.0;
      for (std::size_t u = 0; u < p; ++u) {
        if (!visited[u] && w(current, u) > best) {
          best = w(current, u);
          next = u;
        }
      }
      if (next != p) {
        visit(next, best);
        continue;
      }
    }
    next = densest_unvisited(degree, visited);
    visit(next, degree[next] / norm);
  }
  return scores;
}

std::vector<std::size_t> top_sentences(const SentenceScores& scores, std::size_t k) {
  if (k == 0) throw Error("summary size k must be at least 1");
  std::size_t n = std::min(k, scores.visit_order.size());
  std::vector<std::size_t> out(scores.visit_order.begin(), scores.visit_order.begin() + n);
  std::sort(out.begin(), out.end());
  return out;
}

void write_adjacency_csv(std::ostream& out, const AdjacencyMatrix& w) {
  char buf[32];
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.6f", w(i, j));
      if (j > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace reg::graph
