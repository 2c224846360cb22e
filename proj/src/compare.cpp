#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "reg/errors.hpp"
#include "reg/evalkit.hpp"

namespace reg::eval {
namespace {

// Uniform integer in [0, bound) by rejection, so results depend only on the
// mt19937_64 output sequence.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Scored {
  RougeScore rouge2;
  RougeScore su4;
  bool empty_candidate = false;
};

Scored score_summary(const Summary& summary, std::span<const std::string> references,
                     const RougeOptions& rouge) {
  Scored s;
  s.empty_candidate = rouge_tokens(summary.text, rouge).empty();
  s.rouge2 = score({Metric::Kind::RougeN, 2}, summary.text, references, rouge);
  s.su4 = score({Metric::Kind::RougeSU, 4}, summary.text, references, rouge);
  return s;
}

void add_warning(std::vector<std::string>& warnings, std::string_view w) {
  if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.emplace_back(w);
}

RougeScore mean(std::span<const RougeScore> scores) {
  RougeScore m;
  if (scores.empty()) return m;
  for (const auto& s : scores) {
    m.recall += s.recall;
    m.precision += s.precision;
    m.f1 += s.f1;
  }
  const auto n = static_cast<double>(scores.size());
  m.recall /= n;
  m.precision /= n;
  m.f1 /= n;
  return m;
}

ScoreRow run_system(const std::string& document_name, const text::Document& doc,
                    std::span<const std::string> references, const SystemConfig& system,
                    const SummarySpec& spec, const PipelineOptions& options,
                    const RougeOptions& rouge) {
  ScoreRow row;
  row.document = document_name;
  row.system = system.name;
  try {
    std::vector<Summary> summaries;
    switch (system.kind) {
      case SystemConfig::Kind::Reg:
        summaries.push_back(summarize(doc, options, spec));
        break;
      case SystemConfig::Kind::Lead:
        summaries.push_back(extract(doc, lead_ranking(doc.size()), spec));
        break;
      case SystemConfig::Kind::Random:
        for (std::size_t r = 0; r < std::max<std::size_t>(system.runs, 1); ++r) {
          summaries.push_back(extract(doc, random_ranking(doc.size(), system.seed + r), spec));
        }
        break;
    }

    std::vector<RougeScore> r2, su4;
    for (const auto& summary : summaries) {
      auto s = score_summary(summary, references, rouge);
      r2.push_back(s.rouge2);
      su4.push_back(s.su4);
      if (s.empty_candidate) add_warning(row.warnings, kWarnEmptyCandidate);
      for (const auto& w : summary.warnings) add_warning(row.warnings, w);
    }
    // A single run keeps f1 = 2pr/(p+r); several runs report component means.
    row.rouge2 = summaries.size() == 1 ? r2.front() : mean(r2);
    row.su4 = summaries.size() == 1 ? su4.front() : mean(su4);
  } catch (const std::exception& e) {
    row.rouge2 = {};
    row.su4 = {};
    row.failed = true;
    row.warnings.push_back(std::string("error: ") + e.what());
  }
  return row;
}

}  // namespace

graph::SentenceScores random_ranking(std::size_t sentences, std::uint64_t seed) {
  graph::SentenceScores scores;
  scores.visit_order.resize(sentences);
  for (std::size_t i = 0; i < sentences; ++i) scores.visit_order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i + 1 < sentences; ++i) {
    auto j = i + static_cast<std::size_t>(uniform_below(rng, sentences - i));
    std::swap(scores.visit_order[i], scores.visit_order[j]);
  }
  scores.weight.assign(sentences, 0.0);
  return scores;
}

graph::SentenceScores lead_ranking(std::size_t sentences) {
  graph::SentenceScores scores;
  scores.visit_order.resize(sentences);
  for (std::size_t i = 0; i < sentences; ++i) scores.visit_order[i] = i;
  scores.weight.assign(sentences, 0.0);
  return scores;
}

Summary baseline_random(const text::Document& doc, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw Error("summary size k must be at least 1");
  return extract(doc, random_ranking(doc.size(), seed), {SentenceCount{k}, std::nullopt});
}

Summary baseline_lead(const text::Document& doc, std::size_t k) {
  if (k < 1) throw Error("summary size k must be at least 1");
  return extract(doc, lead_ranking(doc.size()), {SentenceCount{k}, std::nullopt});
}

SystemConfig SystemConfig::parse(std::string_view name, std::uint64_t seed, std::size_t runs) {
  SystemConfig cfg;
  cfg.name = std::string(name);
  cfg.seed = seed;
  cfg.runs = runs;
  if (name == "reg") cfg.kind = Kind::Reg;
  else if (name == "random") cfg.kind = Kind::Random;
  else if (name == "lead") cfg.kind = Kind::Lead;
  else throw Error("unknown system: " + std::string(name) + " (expected reg, random or lead)");
  return cfg;
}

std::vector<ScoreRow> compare_systems(const std::string& document_name, const text::Document& doc,
                                      std::span<const std::string> references,
                                      std::span<const SystemConfig> systems, const SummarySpec& spec,
                                      const PipelineOptions& options, const RougeOptions& rouge) {
  if (systems.empty()) throw Error("no system to compare");
  if (references.empty()) throw Error("no reference summary");
  std::vector<ScoreRow> rows;
  rows.reserve(systems.size());
  for (const auto& system : systems) {
    rows.push_back(run_system(document_name, doc, references, system, spec, options, rouge));
  }
  return rows;
}

std::vector<ScoreRow> macro_average(std::span<const ScoreRow> rows) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<RougeScore>, std::vector<RougeScore>>> by_system;
  for (const auto& row : rows) {
    if (row.failed || row.document == kMacroDocument) continue;
    if (!by_system.contains(row.system)) order.push_back(row.system);
    auto& [r2, su4] = by_system[row.system];
    r2.push_back(row.rouge2);
    su4.push_back(row.su4);
  }
  std::vector<ScoreRow> out;
  for (const auto& system : order) {
    const auto& [r2, su4] = by_system[system];
    ScoreRow row;
    row.document = std::string(kMacroDocument);
    row.system = system;
    row.rouge2 = mean(r2);
    row.su4 = mean(su4);
    row.warnings.push_back("documents=" + std::to_string(r2.size()));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<CorpusDocument> load_corpus(const std::filesystem::path& corpus_dir,
                                        const std::filesystem::path& refs_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus_dir)) throw ResourceError("corpus directory not found: " + corpus_dir.string());
  if (!fs::is_directory(refs_dir)) throw ResourceError("references directory not found: " + refs_dir.string());

  std::map<std::string, CorpusDocument> docs;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    CorpusDocument doc;
    doc.name = entry.path().stem().string();
    try {
      doc.text = read_text(entry.path());
    } catch (const ResourceError& e) {
      doc.error = e.what();
    }
    docs.emplace(doc.name, std::move(doc));
  }

  std::set<std::string> ref_dirs;
  for (const auto& entry : fs::directory_iterator(refs_dir)) {
    if (entry.is_directory()) ref_dirs.insert(entry.path().filename().string());
  }

  for (auto& [name, doc] : docs) {
    if (doc.error) continue;
    if (!ref_dirs.contains(name)) {
      doc.error = "missing reference directory " + (refs_dir / name).string();
      continue;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(refs_dir / name)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      doc.error = "no <judge>.txt reference in " + (refs_dir / name).string();
      continue;
    }
    try {
      for (const auto& f : files) doc.references.push_back(read_text(f));
    } catch (const ResourceError& e) {
      doc.error = e.what();
      doc.references.clear();
    }
  }

  for (const auto& name : ref_dirs) {
    if (docs.contains(name)) continue;
    CorpusDocument orphan;
    orphan.name = name;
    orphan.error = "reference directory has no matching " + (corpus_dir / (name + ".txt")).string();
    docs.emplace(name, std::move(orphan));
  }

  std::vector<CorpusDocument> out;
  for (auto& [name, doc] : docs) out.push_back(std::move(doc));
  return out;
}

ScoreTable compare_corpus(std::span<const CorpusDocument> corpus,
                          std::span<const SystemConfig> systems, const SummarySpec& spec,
                          const PipelineOptions& options, const RougeOptions& rouge,
                          unsigned jobs) {
  std::vector<const CorpusDocument*> ordered;
  for (const auto& d : corpus) ordered.push_back(&d);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->name < b->name; });

  std::vector<std::vector<ScoreRow>> per_doc(ordered.size());
  auto score_doc = [&](std::size_t i) {
    const auto& d = *ordered[i];
    auto failure = [&](const std::string& message) {
      ScoreRow row;
      row.document = d.name;
      row.system = "-";
      row.failed = true;
      row.warnings.push_back("error: " + message);
      per_doc[i] = {std::move(row)};
    };
    if (d.error) return failure(*d.error);
    try {
      auto doc = text::process({d.text, options.text.language}, options.text);
      per_doc[i] = compare_systems(d.name, doc, d.references, systems, spec, options, rouge);
    } catch (const std::exception& e) {
      failure(e.what());
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(ordered.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ordered.size(); ++i) score_doc(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < ordered.size(); i = next++) score_doc(i);
      });
    }
  }

  ScoreTable table;
  for (auto& rows : per_doc) {
    for (auto& row : rows) table.rows.push_back(std::move(row));
  }
  for (auto& row : macro_average(table.rows)) table.rows.push_back(std::move(row));
  return table;
}

}  // namespace reg::eval
