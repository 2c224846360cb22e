#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "reg/errors.hpp"
#include "reg/evalkit.hpp"
#include "reg/graph.hpp"
#include "reg/summarizer.hpp"
#include "reg/textproc.hpp"

namespace reg::cli {
namespace {

using nlohmann::ordered_json;

// Raw flag values shared by summarize and compare.
struct PipelineFlags {
  std::string lang = "en";
  std::string stoplist;  // empty: built-in for lang
  std::string stemmer;   // empty: default for lang
  std::string similarity = "cosine";
  bool binary_weights = false;
  double edge_threshold = 0.0;
  std::optional<std::size_t> sentences;
  std::optional<double> ratio;
  std::optional<std::size_t> max_words;
  std::optional<std::size_t> m;
  std::uint64_t seed = 1;
  std::string format = "text";
  unsigned jobs = 1;
};

struct RougeFlags {
  bool stem = false;
  bool stopwords = false;
  bool jackknife = false;
};

struct Resolved {
  PipelineOptions options;
  SummarySpec spec;
  std::string target;  // for echoing
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ResourceError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string format_double(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void add_pipeline_flags(CLI::App& cmd, PipelineFlags& f) {
  cmd.add_option("--lang", f.lang, "Language tag (built-in resources: en, fr, es)")->capture_default_str();
  cmd.add_option("--stoplist", f.stoplist, "Stoplist: 'none', a built-in language, or a file path");
  cmd.add_option("--stemmer", f.stemmer, "porter, light or none (default depends on --lang)")
      ->check(CLI::IsMember({"porter", "light", "none"}));
  cmd.add_option("--similarity", f.similarity, "Sentence similarity measure")
      ->check(CLI::IsMember({"cosine", "overlap"}))
      ->capture_default_str();
  cmd.add_flag("--binary-weights", f.binary_weights, "Use term presence instead of frequency");
  cmd.add_option("--edge-threshold", f.edge_threshold, "Drop edges weaker than this")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  auto* sentences = cmd.add_option("--sentences", f.sentences, "Summary length in sentences")
                        ->check(CLI::PositiveNumber);
  auto* ratio = cmd.add_option("--ratio", f.ratio, "Summary length as a fraction of document words")
                    ->check(CLI::Range(0.0, 1.0));
  auto* words = cmd.add_option("--max-words", f.max_words, "Word cap on the summary")
                    ->check(CLI::PositiveNumber);
  sentences->excludes(ratio)->excludes(words);
  ratio->excludes(words);
  cmd.add_option("--m", f.m, "Greedy visit budget (default: every sentence)")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", f.seed, "Seed for randomized baselines")->capture_default_str();
  cmd.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

void add_rouge_flags(CLI::App& cmd, RougeFlags& f) {
  cmd.add_flag("--rouge-stem", f.stem, "Stem tokens before ROUGE scoring");
  cmd.add_flag("--rouge-stopwords", f.stopwords, "Remove stopwords before ROUGE scoring");
  cmd.add_flag("--jackknife", f.jackknife, "Average over leave-one-out reference subsets");
}

text::TextConfig resolve_text(const PipelineFlags& f) {
  text::TextConfig cfg;
  cfg.language = f.lang;
  if (f.stoplist.empty()) {
    auto builtin = text::builtin_stoplist(f.lang);
    if (!builtin) {
      throw ResourceError("no built-in stoplist for language '" + f.lang +
                          "'; pass --stoplist PATH or --stoplist none");
    }
    cfg.stoplist = std::move(*builtin);
  } else {
    cfg.stoplist = text::resolve_stoplist(f.stoplist);
  }
  cfg.abbreviations = text::builtin_abbreviations(f.lang).value_or(text::AbbreviationList{});
  cfg.stemmer = f.stemmer.empty() ? text::default_stemmer(f.lang) : text::parse_stemmer(f.stemmer);
  return cfg;
}

Resolved resolve(const PipelineFlags& f, std::size_t default_sentences) {
  Resolved r;
  r.options.text = resolve_text(f);
  r.options.similarity.measure = graph::parse_measure(f.similarity);
  r.options.similarity.binary_weights = f.binary_weights;
  r.options.similarity.edge_threshold = f.edge_threshold;
  r.options.similarity.validate();
  r.options.threads = f.jobs;

  if (f.ratio) {
    r.spec.target = WordRatio{*f.ratio};
    r.target = "ratio=" + format_double(*f.ratio);
  } else if (f.max_words) {
    r.spec.target = WordCap{*f.max_words};
    r.target = "max_words=" + std::to_string(*f.max_words);
  } else {
    std::size_t k = f.sentences.value_or(default_sentences);
    r.spec.target = SentenceCount{k};
    r.target = "sentences=" + std::to_string(k);
  }
  r.spec.m_override = f.m;
  r.spec.validate();
  return r;
}

ordered_json config_json(const PipelineFlags& f, const Resolved& r) {
  ordered_json j;
  j["language"] = r.options.text.language;
  j["stoplist"] = r.options.text.stoplist.source();
  j["stemmer"] = std::string(text::to_string(r.options.text.stemmer));
  j["similarity"] = std::string(graph::to_string(r.options.similarity.measure));
  j["binary_weights"] = r.options.similarity.binary_weights;
  j["edge_threshold"] = r.options.similarity.edge_threshold;
  j["target"] = r.target;
  j["m"] = r.spec.m_override ? ordered_json(*r.spec.m_override) : ordered_json("P");
  j["seed"] = f.seed;
  return j;
}

eval::RougeOptions resolve_rouge(const RougeFlags& f, const std::string& lang) {
  eval::RougeOptions o;
  o.stem = f.stem;
  o.remove_stopwords = f.stopwords;
  o.jackknife = f.jackknife;
  o.language = lang;
  if (f.stopwords) {
    auto builtin = text::builtin_stoplist(lang);
    if (!builtin) throw ResourceError("--rouge-stopwords needs a built-in stoplist for '" + lang + "'");
    o.stoplist = std::move(*builtin);
  }
  return o;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_summarize(const std::string& input, const std::string& dump_graph, const PipelineFlags& f,
                  std::istream& in, std::ostream& out, std::ostream& err) {
  Resolved r = resolve(f, 3);
  text::RawDocument raw{read_input(input, in), f.lang};
  auto doc = text::process(raw, r.options.text);

  if (!dump_graph.empty()) {
    auto vocab = text::build_vocabulary(doc.sentences);
    auto adjacency = graph::build_adjacency(text::build_term_matrix(doc.sentences, vocab),
                                            r.options.similarity, r.options.threads);
    std::ofstream file(dump_graph);
    if (!file) throw ResourceError("cannot write " + dump_graph);
    graph::write_adjacency_csv(file, adjacency);
  }

  auto summary = summarize(doc, r.options, r.spec);
  for (const auto& w : summary.warnings) err << "warning: " << w << '\n';

  if (f.format == "json") {
    auto j = ordered_json::parse(to_json(summary));
    j["config"] = config_json(f, r);
    out << j.dump(2) << '\n';
  } else if (f.format == "csv") {
    std::vector<std::size_t> rank(doc.size(), 0);
    for (std::size_t i = 0; i < summary.scores.visit_order.size(); ++i) {
      rank[summary.scores.visit_order[i]] = i + 1;
    }
    char buf[32];
    out << "sentence,visit_rank,weight,selected,surface\n";
    for (std::size_t i = 0; i < doc.size(); ++i) {
      bool selected = std::binary_search(summary.selected.begin(), summary.selected.end(), i);
      std::snprintf(buf, sizeof buf, "%.6f", summary.scores.weight[i]);
      out << i << ',' << rank[i] << ',' << buf << ',' << (selected ? 1 : 0) << ','
          << csv_field(doc.sentences[i].surface) << '\n';
    }
  } else {
    out << summary.text << '\n';
  }
  return kOk;
}

int cmd_eval(const std::string& candidate_path, const std::vector<std::string>& ref_paths,
             const std::string& metrics, const std::string& lang, const std::string& format,
             const RougeFlags& rf, std::istream& in, std::ostream& out) {
  auto metric_list = eval::parse_metrics(metrics);
  auto rouge = resolve_rouge(rf, lang);
  std::string candidate = read_input(candidate_path, in);
  std::vector<std::string> refs;
  for (const auto& p : ref_paths) refs.push_back(read_input(p, in));

  std::vector<std::pair<std::string, eval::RougeScore>> rows;
  for (const auto& m : metric_list) rows.emplace_back(m.name(), eval::score(m, candidate, refs, rouge));

  char buf[96];
  if (format == "json") {
    ordered_json j;
    j["candidate"] = candidate_path;
    j["references"] = ref_paths;
    ordered_json scores = ordered_json::array();
    for (const auto& [name, s] : rows) {
      scores.push_back({{"metric", name}, {"recall", s.recall}, {"precision", s.precision}, {"f1", s.f1}});
    }
    j["scores"] = scores;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "metric,recall,precision,f1\n";
    for (const auto& [name, s] : rows) {
      std::snprintf(buf, sizeof buf, ",%.4f,%.4f,%.4f", s.recall, s.precision, s.f1);
      out << name << buf << '\n';
    }
  } else {
    out << "metric    recall    precision f1\n";
    for (const auto& [name, s] : rows) {
      std::snprintf(buf, sizeof buf, "%-9s %-9.4f %-9.4f %.4f", name.c_str(), s.recall, s.precision, s.f1);
      out << buf << '\n';
    }
  }
  return kOk;
}

int cmd_compare(const std::string& corpus_dir, const std::string& refs_dir,
                const std::string& systems_list, std::size_t random_runs, const PipelineFlags& f,
                const RougeFlags& rf, std::ostream& out, std::ostream& err) {
  Resolved r = resolve(f, 3);
  auto rouge = resolve_rouge(rf, f.lang);

  std::vector<eval::SystemConfig> systems;
  std::stringstream names(systems_list);
  for (std::string name; std::getline(names, name, ',');) {
    if (!name.empty()) systems.push_back(eval::SystemConfig::parse(name, f.seed, random_runs));
  }
  if (systems.empty()) throw Error("no system given to --systems");

  auto corpus = eval::load_corpus(corpus_dir, refs_dir);
  // Parallelism is across documents; each document runs single-threaded.
  PipelineOptions per_doc = r.options;
  per_doc.threads = 1;
  auto table = eval::compare_corpus(corpus, systems, r.spec, per_doc, rouge, f.jobs);

  std::size_t scored = 0, failed = 0;
  std::set<std::string> seen;
  for (const auto& row : table.rows) {
    if (row.document == eval::kMacroDocument) continue;
    if (row.failed) {
      err << "warning: " << row.document << " (" << row.system << "): "
          << (row.warnings.empty() ? "failed" : row.warnings.front()) << '\n';
    }
    if (!row.failed && seen.insert(row.document).second) ++scored;
    if (row.failed && row.system == "-") ++failed;
  }

  auto cfg = config_json(f, r);
  table.metadata = {{"seed", std::to_string(f.seed)},
                    {"systems", systems_list},
                    {"random_runs", std::to_string(random_runs)},
                    {"language", cfg["language"].get<std::string>()},
                    {"stoplist", cfg["stoplist"].get<std::string>()},
                    {"stemmer", cfg["stemmer"].get<std::string>()},
                    {"similarity", cfg["similarity"].get<std::string>()},
                    {"binary_weights", f.binary_weights ? "true" : "false"},
                    {"edge_threshold", format_double(f.edge_threshold)},
                    {"target", r.target},
                    {"m", f.m ? std::to_string(*f.m) : "P"},
                    {"rouge", std::string(rf.stem ? "stem " : "") + (rf.stopwords ? "stopwords " : "") +
                                  (rf.jackknife ? "jackknife" : "pooled")},
                    {"documents", std::to_string(scored)}};

  if (f.format == "json") table.write_json(out);
  else if (f.format == "csv") table.write_csv(out);
  else table.write_text(out);

  if (scored == 0) {
    err << "error: no document could be scored\n";
    return kInputError;
  }
  return kOk;
}

int cmd_resources(const std::string& lang, const std::string& kind, std::ostream& out) {
  if (lang.empty()) {
    for (const auto& l : text::builtin_languages()) out << l << '\n';
    return kOk;
  }
  auto set = kind == "abbreviations" ? text::builtin_abbreviations(lang) : text::builtin_stoplist(lang);
  if (!set) throw ResourceError("no built-in " + kind + " for language '" + lang + "'");
  for (const auto& t : set->terms()) out << t << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graph-based extractive summarizer with ROUGE evaluation", "reg"};
  app.set_config("--config", "", "Read option defaults from a TOML/INI file");
  app.require_subcommand(1);

  PipelineFlags sum_flags;
  std::string input, dump_graph;
  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize a document (file or stdin)");
  summarize_cmd->add_option("input", input, "Input file ('-' or omitted: stdin)");
  summarize_cmd->add_option("--dump-graph", dump_graph, "Write the adjacency matrix as CSV");
  add_pipeline_flags(*summarize_cmd, sum_flags);

  std::string candidate, metrics = "rouge2,su4", eval_lang = "en", eval_format = "text";
  std::vector<std::string> refs;
  RougeFlags eval_rouge;
  auto* eval_cmd = app.add_subcommand("eval", "Score a candidate summary against references");
  eval_cmd->add_option("candidate", candidate, "Candidate summary file")->required();
  eval_cmd->add_option("--ref", refs, "Reference summary file (repeatable)")->required();
  eval_cmd->add_option("--metrics", metrics, "Comma-separated metrics (rougeN, suK)")->capture_default_str();
  eval_cmd->add_option("--lang", eval_lang, "Language for --rouge-stem/--rouge-stopwords")->capture_default_str();
  eval_cmd->add_option("--format", eval_format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  add_rouge_flags(*eval_cmd, eval_rouge);

  PipelineFlags cmp_flags;
  RougeFlags cmp_rouge;
  std::string corpus_dir, refs_dir, systems = "reg,random,lead";
  std::size_t random_runs = 1;
  auto* compare_cmd = app.add_subcommand("compare", "Compare systems over a corpus with ROUGE-2/SU4");
  compare_cmd->add_option("corpus", corpus_dir, "Directory of <doc>.txt files")->required();
  compare_cmd->add_option("refs", refs_dir, "Directory of <doc>/<judge>.txt references")->required();
  compare_cmd->add_option("--systems", systems, "Comma-separated systems: reg, random, lead")
      ->capture_default_str();
  compare_cmd->add_option("--random-runs", random_runs, "Average the random baseline over this many seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_pipeline_flags(*compare_cmd, cmp_flags);
  add_rouge_flags(*compare_cmd, cmp_rouge);

  std::string res_lang, res_kind = "stoplist";
  auto* resources_cmd = app.add_subcommand("resources", "List built-in languages or print a resource");
  resources_cmd->add_option("--lang", res_lang, "Language whose resource to print");
  resources_cmd->add_option("--kind", res_kind, "stoplist or abbreviations")
      ->check(CLI::IsMember({"stoplist", "abbreviations"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (summarize_cmd->parsed()) return cmd_summarize(input, dump_graph, sum_flags, in, out, err);
    if (eval_cmd->parsed()) return cmd_eval(candidate, refs, metrics, eval_lang, eval_format, eval_rouge, in, out);
    if (compare_cmd->parsed()) {
      return cmd_compare(corpus_dir, refs_dir, systems, random_runs, cmp_flags, cmp_rouge, out, err);
    }
    if (resources_cmd->parsed()) return cmd_resources(res_lang, res_kind, out);
  } catch (const EmptyReference& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluationImpossible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace reg::cli
