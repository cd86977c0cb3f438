// Command-line front end: synthesize/ingest corpora, train and persist
// models, run cross-validated evaluations, emit report and ROC data.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "textclf/corpus.hpp"
#include "textclf/cross_validate.hpp"
#include "textclf/error.hpp"
#include "textclf/folds.hpp"
#include "textclf/models.hpp"
#include "textclf/report.hpp"
#include "textclf/synth.hpp"
#include "textclf/vectorize.hpp"
#include "textclf/vocabulary.hpp"

namespace {

using namespace textclf;

std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

Corpus load_corpus(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return load_csv(path);
  }
  return load_jsonl(path);
}

struct HyperFlags {
  Hyperparams hp;
  long long max_iters = -1;  // applies to the selected/iterative trainers

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", hp.nb_alpha, "Naive Bayes smoothing")
        ->capture_default_str();
    cmd->add_option("--lambda", hp.lr_lambda, "Logistic L2 strength")
        ->capture_default_str();
    cmd->add_option("--threshold", hp.lr_threshold,
                    "Logistic decision threshold")
        ->capture_default_str();
    cmd->add_option("--svm-c", hp.svm_c, "SVM hinge weight C")
        ->capture_default_str();
    cmd->add_option("--ridge-lambda", hp.ridge_lambda, "Ridge L2 strength")
        ->capture_default_str();
    cmd->add_option("--max-iters", max_iters,
                    "Iteration cap for logreg/svm/ridge (-1 keeps defaults)")
        ->capture_default_str();
    cmd->add_option("--tree-depth", hp.tree_max_depth, "Tree depth limit")
        ->capture_default_str();
    cmd->add_option("--tree-min-node", hp.tree_min_node,
                    "Minimum records to split a tree node")
        ->capture_default_str();
    cmd->add_option("--tree-feature-cap", hp.tree_feature_cap,
                    "Highest-variance features scanned per node")
        ->capture_default_str();
    cmd->add_flag("--tree-exact-scan", hp.tree_exact_scan,
                  "Scan every feature at every tree node");
  }

  Hyperparams resolve(std::uint64_t seed) const {
    Hyperparams out = hp;
    out.seed = seed;
    if (max_iters >= 0) {
      out.lr_max_iters = static_cast<std::uint32_t>(max_iters);
      out.svm_max_iters = static_cast<std::uint32_t>(max_iters);
      out.ridge_max_iters = static_cast<std::uint32_t>(max_iters);
    }
    return out;
  }
};

struct ModelListEntry {
  ModelKind kind;
  bool has_mode = false;
  NgramRange ngrams;
};

ModelListEntry parse_model_entry(const std::string& entry) {
  ModelListEntry out;
  const std::size_t colon = entry.find(':');
  if (colon == std::string::npos) {
    out.kind = parse_model_kind(entry);
  } else {
    out.kind = parse_model_kind(entry.substr(0, colon));
    out.ngrams = parse_ngram_mode(entry.substr(colon + 1));
    out.has_mode = true;
  }
  return out;
}

int run_synth(const std::string& preset, const std::string& spec_path,
              const std::string& output, bool seed_given, std::uint64_t seed) {
  SynthSpec spec;
  if (!preset.empty()) {
    spec = synth_preset(preset);
  } else if (!spec_path.empty()) {
    spec = load_synth_spec(spec_path);
  } else {
    throw Error("synth needs --preset or --spec");
  }
  if (seed_given) spec.seed = seed;
  spec.validate();

  const Corpus corpus = synthesize(spec);
  save_jsonl(corpus, output);

  const BayesAccuracy bayes = bayes_accuracy(spec);
  std::cout << synth_spec_to_string(spec);
  std::cout << "documents = " << corpus.size() << " (depressed "
            << corpus.count(Label::depressed) << ", control "
            << corpus.count(Label::control) << ")\n";
  std::cout << "bayes_accuracy = " << format_double(bayes.value)
            << (bayes.exact ? "" : " (monte carlo estimate)") << '\n';
  std::cout << "wrote " << output << '\n';
  return 0;
}

int run_train(const std::string& input, const std::string& output,
              const std::string& model_name, const std::string& ngram_mode,
              std::uint64_t seed, const HyperFlags& flags) {
  const ModelKind kind = parse_model_kind(model_name);
  const NgramRange range = parse_ngram_mode(ngram_mode);
  const Corpus corpus = load_corpus(input);
  const TokenRule rule;

  const Vocabulary vocab = build_vocabulary(corpus, rule, range);
  const std::vector<SparseVector> x = vectorize_corpus(corpus, vocab, rule);
  std::vector<Label> y(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) y[i] = corpus[i].label;

  const AnyModel model = train_model(kind, x, y, flags.resolve(seed));
  save_model(model, output);
  save_vocabulary(vocab, output + ".vocab");

  std::uint32_t iterations = 0;
  double objective = 0.0;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, LogisticModel> ||
                      std::is_same_v<M, SvmModel> ||
                      std::is_same_v<M, RidgeModel>) {
          iterations = m.iterations;
          objective = m.objective;
        }
      },
      model.value());
  std::cout << "model = " << model_kind_name(kind) << '\n';
  std::cout << "dimension = " << vocab.dimension() << '\n';
  std::cout << "iterations = " << iterations << '\n';
  std::cout << "objective = " << format_double(objective) << '\n';
  std::cout << "converged = " << (model.converged() ? "true" : "false") << '\n';
  std::cout << "wrote " << output << " and " << output << ".vocab\n";
  return 0;
}

int run_eval(const std::string& input, const std::string& output_dir,
             const std::vector<std::string>& model_entries,
             const std::string& default_mode, int folds, std::uint64_t seed,
             bool unstratified, bool leakage, const HyperFlags& flags) {
  const Corpus corpus = load_corpus(input);
  const NgramRange default_range = parse_ngram_mode(default_mode);

  std::vector<ReportRow> rows;
  for (const std::string& entry : model_entries) {
    const ModelListEntry parsed = parse_model_entry(entry);
    EvalSpec spec;
    spec.kind = parsed.kind;
    spec.ngrams = parsed.has_mode ? parsed.ngrams : default_range;
    spec.folds = folds;
    spec.seed = seed;
    spec.hp = flags.resolve(seed);
    spec.stratified = !unstratified;
    spec.vocab_leakage = leakage;

    const CvResult result = cross_validate(corpus, spec);
    rows.push_back(result.row);
    const std::string roc_path =
        output_dir + "/roc_" + row_slug(spec.kind, spec.ngrams) + ".csv";
    write_roc_csv(result.roc, result.auc, roc_path);
    std::cout << result.row.classifier
              << ": accuracy=" << format_double(result.row.accuracy)
              << " auc=" << format_double(result.auc.trapezoid) << '\n';
  }
  write_report_tsv(rows, output_dir + "/report.tsv");
  write_report_full_tsv(rows, output_dir + "/report_full.tsv");
  std::cout << "wrote " << output_dir << "/report.tsv" << '\n';
  return 0;
}

void write_csv_field(std::ofstream& out, const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

int run_score(const std::string& model_path, const std::string& vocab_path,
              const std::string& input, const std::string& output) {
  const AnyModel model = load_model(model_path);
  const std::string resolved_vocab =
      vocab_path.empty() ? model_path + ".vocab" : vocab_path;
  const Vocabulary vocab = load_vocabulary(resolved_vocab);
  if (vocab.dimension() != model.dimension()) {
    throw Error("model dimension " + std::to_string(model.dimension()) +
                " does not match vocabulary dimension " +
                std::to_string(vocab.dimension()));
  }
  const Corpus corpus = load_corpus(input);
  const TokenRule rule;

  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write \"" + output + "\"");
  out << "id,score,class\n";
  for (const Document& doc : corpus.documents()) {
    const SparseVector x = vectorize(doc, vocab, rule);
    write_csv_field(out, doc.id);
    out << ',' << format_double(model.score(x)) << ','
        << label_name(model.classify(x)) << '\n';
  }
  if (!out) throw Error("write failed for \"" + output + "\"");
  std::cout << "wrote " << output << '\n';
  return 0;
}

int run_freq(const std::string& input, const std::string& output,
             const std::string& ngram_mode, std::size_t top_n) {
  const Corpus corpus = load_corpus(input);
  const TokenRule rule;
  const Vocabulary vocab =
      build_vocabulary(corpus, rule, parse_ngram_mode(ngram_mode));
  if (vocab.dimension() == 0) {
    throw Error("corpus produced an empty vocabulary");
  }
  const auto rows = class_frequency_report(corpus, vocab, rule);
  write_frequency_report(rows, top_n, output);
  std::cout << "wrote " << output << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"textclf: bag-of-words binary text classification toolkit"};
  app.require_subcommand(1);

  const auto ngram_values = CLI::IsMember({"1", "1-2", "2"});
  const auto model_values =
      CLI::IsMember({"nb", "logreg", "svm", "ridge", "tree"});
  const auto entry_validator =
      CLI::Validator(
          [](std::string& entry) -> std::string {
            try {
              parse_model_entry(entry);
              return {};
            } catch (const std::exception& e) {
              return std::string(e.what());
            }
          },
          "MODEL[:NGRAMS]", "model entry");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->set_config("--config");
  std::string synth_preset_name, synth_spec_path, synth_output;
  std::uint64_t synth_seed = 42;
  synth->add_option("--preset", synth_preset_name,
                    "Built-in spec: separable, clpsych-shape, bayes085, "
                    "indistinct");
  synth->add_option("--spec", synth_spec_path, "SynthSpec key=value file");
  synth->add_option("--output", synth_output, "JSONL corpus to write")
      ->required();
  auto* synth_seed_opt =
      synth->add_option("--seed", synth_seed, "Generator seed (overrides spec)")
          ->capture_default_str();

  // train
  auto* train = app.add_subcommand("train", "Train and persist one model");
  train->set_config("--config");
  std::string train_input, train_output, train_model_name = "nb",
              train_ngrams = "1";
  std::uint64_t train_seed = 0;
  HyperFlags train_hp;
  train->add_option("--input", train_input, "Corpus (.jsonl or .csv)")
      ->required();
  train->add_option("--output", train_output,
                    "Model file to write (vocabulary goes to <output>.vocab)")
      ->required();
  train->add_option("--model", train_model_name, "nb, logreg, svm, ridge, tree")
      ->check(model_values)
      ->capture_default_str();
  train->add_option("--ngrams", train_ngrams, "1, 1-2, or 2")
      ->check(ngram_values)
      ->capture_default_str();
  train->add_option("--seed", train_seed, "Training seed")
      ->capture_default_str();
  train_hp.add_to(train);

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Cross-validated evaluation with report and ROC output");
  eval->set_config("--config");
  std::string eval_input, eval_output_dir = ".", eval_ngrams = "1";
  std::vector<std::string> eval_models = {"nb", "logreg", "svm", "ridge",
                                          "tree"};
  int eval_folds = 6;
  std::uint64_t eval_seed = 0;
  bool eval_unstratified = false, eval_leakage = false;
  HyperFlags eval_hp;
  eval->add_option("--input", eval_input, "Corpus (.jsonl or .csv)")
      ->required();
  eval->add_option("--output", eval_output_dir,
                   "Directory for report.tsv, report_full.tsv, roc_*.csv")
      ->capture_default_str();
  eval->add_option("--models", eval_models,
                   "Comma-separated entries kind[:ngrams]")
      ->delimiter(',')
      ->check(entry_validator)
      ->capture_default_str();
  eval->add_option("--ngrams", eval_ngrams,
                   "Default n-gram mode for entries without one")
      ->check(ngram_values)
      ->capture_default_str();
  eval->add_option("--folds", eval_folds, "Cross-validation folds")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  eval->add_option("--seed", eval_seed, "Folding and training seed")
      ->capture_default_str();
  eval->add_flag("--unstratified", eval_unstratified,
                 "Plain shuffled folds instead of stratified");
  eval->add_flag("--leakage", eval_leakage,
                 "Build one vocabulary on the full corpus (test leakage)");
  eval_hp.add_to(eval);

  // score
  auto* score = app.add_subcommand("score", "Score a corpus with a saved model");
  score->set_config("--config");
  std::string score_model, score_vocab, score_input, score_output;
  score->add_option("--model", score_model, "Model file")->required();
  score->add_option("--vocab", score_vocab,
                    "Vocabulary file (default <model>.vocab)");
  score->add_option("--input", score_input, "Corpus (.jsonl or .csv)")
      ->required();
  score->add_option("--output", score_output, "CSV of id,score,class")
      ->required();

  // freq
  auto* freq = app.add_subcommand(
      "freq", "Per-class n-gram frequency report, sorted by class ratio");
  freq->set_config("--config");
  std::string freq_input, freq_output, freq_ngrams = "1";
  std::size_t freq_top = 50;
  freq->add_option("--input", freq_input, "Corpus (.jsonl or .csv)")
      ->required();
  freq->add_option("--output", freq_output, "TSV report to write")->required();
  freq->add_option("--ngrams", freq_ngrams, "1, 1-2, or 2")
      ->check(ngram_values)
      ->capture_default_str();
  freq->add_option("--top", freq_top, "Rows to keep")->capture_default_str();

  int rc = 0;
  synth->callback([&] {
    rc = run_synth(synth_preset_name, synth_spec_path, synth_output,
                   synth_seed_opt->count() > 0, synth_seed);
  });
  train->callback([&] {
    rc = run_train(train_input, train_output, train_model_name, train_ngrams,
                   train_seed, train_hp);
  });
  eval->callback([&] {
    rc = run_eval(eval_input, eval_output_dir, eval_models, eval_ngrams,
                  eval_folds, eval_seed, eval_unstratified, eval_leakage,
                  eval_hp);
  });
  score->callback([&] {
    rc = run_score(score_model, score_vocab, score_input, score_output);
  });
  freq->callback(
      [&] { rc = run_freq(freq_input, freq_output, freq_ngrams, freq_top); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const textclf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
