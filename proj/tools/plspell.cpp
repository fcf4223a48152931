// Copyright 2026 The plspell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// plspell command-line interface: correct tokens, train models, evaluate
// corpora, inspect diacritic variants, generate fixtures. Standard output
// carries only data; diagnostics go to standard error. Exit codes: 0 on
// success, 1 on usage errors, 2 on data or resource errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plspell/corpus.hpp"
#include "plspell/diacritics.hpp"
#include "plspell/error.hpp"
#include "plspell/fixtures.hpp"
#include "plspell/metrics.hpp"
#include "plspell/neural/train.hpp"
#include "plspell/pipeline.hpp"
#include "plspell/unicode.hpp"

namespace {

using namespace plspell;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string format_score(double score) {
  char buf[32];
  if (score == std::floor(score) && std::abs(score) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.1f", score);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", score);
  }
  return buf;
}

struct SplitFlags {
  std::string corpus_path;
  bool dedup = true;
  std::vector<double> fractions{0.70, 0.05, 0.25};
  std::uint64_t split_seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_path, "corpus TSV (error<TAB>correction)")
        ->required();
    cmd->add_flag("--dedup,!--no-dedup", dedup,
                  "deduplicate (error, correction) pairs (default on)");
    cmd->add_option("--fractions", fractions,
                    "train,dev,test fractions (must sum to 1)")
        ->expected(3)
        ->delimiter(',');
    cmd->add_option("--split-seed", split_seed, "seed for the split assignment");
  }

  ErrorCorpus load() const {
    ErrorCorpus corpus = ErrorCorpus::load_file(corpus_path, dedup);
    corpus.assign_splits(fractions[0], fractions[1], fractions[2], split_seed);
    return corpus;
  }
};

struct ResourceFlags {
  CorrectorSpec spec;
  std::string lstm1_model, lstm2_model, lstm_hook_model;

  void attach(CLI::App* cmd, bool with_method_models) {
    cmd->add_option("--lexicon", spec.lexicon_path, "word list, one form per line");
    cmd->add_option("--embeddings", spec.embeddings_path,
                    "word2vec-style text vectors");
    cmd->add_option("--model", spec.model_path, "trained model file");
    cmd->add_option("--external-layers", spec.external_path,
                    "per-token external layer stacks (hook models)");
    cmd->add_option("--max-edit", spec.max_edit,
                    "candidate search radius (edit distance)");
    cmd->add_option("--edit-weight", spec.edit_weight,
                    "weight of edit distance in the combined score");
    cmd->add_flag("--skip-known", spec.skip_known,
                  "return tokens found in the lexicon unchanged");
    cmd->add_option("--max-decode-extra", spec.max_decode_extra,
                    "decode budget beyond the input length");
    if (with_method_models) {
      cmd->add_option("--lstm1-model", lstm1_model, "model file for lstm1 rows");
      cmd->add_option("--lstm2-model", lstm2_model, "model file for lstm2 rows");
      cmd->add_option("--lstm-hook-model", lstm_hook_model,
                      "model file for lstm-hook rows");
    }
  }

  CorrectorSpec for_method(Method m) const {
    CorrectorSpec s = spec;
    s.method = m;
    if (m == Method::lstm1 && !lstm1_model.empty()) s.model_path = lstm1_model;
    if (m == Method::lstm2 && !lstm2_model.empty()) s.model_path = lstm2_model;
    if (m == Method::lstm_hook && !lstm_hook_model.empty()) {
      s.model_path = lstm_hook_model;
    }
    return s;
  }
};

int run_correct(const ResourceFlags& res, const std::string& method_name,
                const std::string& token, std::size_t top_k) {
  CorrectorSpec spec = res.for_method(parse_method(method_name));
  const Corrector corrector = Corrector::load(spec);

  const auto print_candidates = [&](const std::string& t, bool prefix) {
    auto candidates = corrector.correct(t);
    if (candidates.size() > top_k) candidates.resize(top_k);
    for (const auto& c : candidates) {
      if (prefix) {
        std::cout << t << '\t' << c.form << '\t' << format_score(c.combined)
                  << '\n';
      } else {
        std::cout << c.form << ' ' << format_score(c.combined) << '\n';
      }
    }
  };

  if (!token.empty()) {
    print_candidates(token, false);
  } else {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      print_candidates(line, true);
    }
  }
  return kExitOk;
}

int run_evaluate(const ResourceFlags& res, const SplitFlags& split,
                 const std::vector<std::string>& method_names,
                 const std::string& format, const std::string& pred_log,
                 std::size_t jobs) {
  const ErrorCorpus corpus = split.load();

  std::vector<EvalReport> reports;
  for (const auto& name : method_names) {
    const Method method = parse_method(name);
    const Corrector corrector = Corrector::load(res.for_method(method));
    Evaluation eval = evaluate(corrector, corpus, jobs);
    if (!pred_log.empty()) {
      const std::string path = method_names.size() == 1
                                   ? pred_log
                                   : pred_log + "." + to_string(method);
      write_prediction_log(path, eval.cases);
    }
    reports.push_back(std::move(eval.report));
  }

  std::cout << (format == "tsv" ? render_tsv(reports) : render_table(reports));
  return kExitOk;
}

struct TrainFlags {
  std::string method_name = "lstm1";
  std::string model_out;
  std::string loss_out;
  neural::TrainConfig cfg;
  std::string external_path;
  std::size_t hook_dim = 0;
  std::size_t hook_layers = 3;

  void attach(CLI::App* cmd) {
    cmd->add_option("--method", method_name, "lstm1, lstm2 or lstm-hook");
    cmd->add_option("--model-out", model_out, "output model file")->required();
    cmd->add_option("--loss-out", loss_out, "per-epoch loss history TSV");
    cmd->add_option("--epochs", cfg.epochs, "training epochs (default 35)");
    cmd->add_option("--lr", cfg.learning_rate, "Adam learning rate");
    cmd->add_option("--beta1", cfg.beta1, "Adam beta1");
    cmd->add_option("--beta2", cfg.beta2, "Adam beta2");
    cmd->add_option("--epsilon", cfg.epsilon, "Adam epsilon");
    cmd->add_option("--batch", cfg.batch_size, "batch size");
    cmd->add_option("--seed", cfg.seed, "init and shuffle seed");
    cmd->add_option("--hidden", cfg.hidden_dim, "LSTM hidden size");
    cmd->add_option("--embedding-dim", cfg.embedding_dim,
                    "character embedding size");
    cmd->add_option("--max-decode-extra", cfg.max_decode_extra,
                    "decode budget beyond the input length");
    cmd->add_option("--external-layers", external_path,
                    "per-token external layer stacks (lstm-hook)");
    cmd->add_option("--hook-dim", hook_dim, "external layer dimension");
    cmd->add_option("--hook-layers", hook_layers,
                    "external layer count (default 3)");
  }
};

int run_train(const TrainFlags& flags, const SplitFlags& split) {
  const Method method = parse_method(flags.method_name);
  if (method != Method::lstm1 && method != Method::lstm2 &&
      method != Method::lstm_hook) {
    throw ConfigError("train supports lstm1, lstm2 and lstm-hook only");
  }

  const ErrorCorpus corpus = split.load();
  const std::vector<ErrorCase> train_cases = corpus.subset(Split::train);
  if (train_cases.empty()) throw ConfigError("train split is empty");

  neural::ModelConfig mcfg;
  mcfg.embedding_dim = flags.cfg.embedding_dim;
  mcfg.hidden_dim = flags.cfg.hidden_dim;
  mcfg.direction = method == Method::lstm1 ? neural::Direction::uni
                                           : neural::Direction::bi;

  std::optional<neural::ExternalLayerStore> external;
  if (method == Method::lstm_hook) {
    if (flags.external_path.empty()) {
      throw ConfigError("method lstm-hook requires --external-layers");
    }
    if (flags.hook_dim == 0) {
      throw ConfigError("method lstm-hook requires --hook-dim");
    }
    external = neural::ExternalLayerStore::load_file(
        flags.external_path, flags.hook_dim, flags.hook_layers);
    mcfg.hook = neural::HookConfig{flags.hook_layers, flags.hook_dim};
  }

  // Character vocabulary comes from the training split only.
  std::vector<std::u32string> texts;
  for (const auto& c : train_cases) {
    texts.push_back(uni::to_nfc_code_points(c.error));
    texts.push_back(uni::to_nfc_code_points(c.correction));
  }

  neural::Seq2SeqModel model(neural::CharVocab::build(texts), mcfg,
                             flags.cfg.seed);
  const neural::TrainResult result = neural::train(
      model, train_cases, flags.cfg, external ? &*external : nullptr);
  if (result.missing_external > 0) {
    std::cerr << "warning: " << result.missing_external
              << " training tokens had no external layer stack (zeros used)\n";
  }

  model.save(flags.model_out);

  if (!flags.loss_out.empty()) {
    std::ofstream out(flags.loss_out, std::ios::binary);
    if (!out) throw LoadError("cannot write loss history: " + flags.loss_out);
    out << "epoch\tloss\n";
    char buf[32];
    for (std::size_t e = 0; e < result.loss_history.size(); ++e) {
      std::snprintf(buf, sizeof(buf), "%.6f", result.loss_history[e]);
      out << (e + 1) << '\t' << buf << '\n';
    }
  }

  const std::vector<double> weights = model.hook_layer_weights();
  if (!weights.empty()) {
    std::cout << "layer_weights";
    char buf[32];
    for (double w : weights) {
      std::snprintf(buf, sizeof(buf), "%.6f", w);
      std::cout << '\t' << buf;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int run_swap_variants(const std::string& token, std::uint64_t limit) {
  const auto& table = DiacriticTable::polish();
  const std::u32string points = uni::to_nfc_code_points(token);
  const std::uint64_t count = variant_count(points, table);
  std::cout << count << '\n';
  if (count <= limit) {
    VariantEnumerator en(points, table);
    std::u32string variant;
    while (en.next(variant)) {
      std::cout << uni::encode_utf8(variant) << '\n';
    }
  }
  return kExitOk;
}

struct FixtureFlags {
  std::string lexicon_path;
  std::string lexicon_out;
  std::size_t sample_words = 0;
  std::string corpus_out;
  std::string mode_name = "mixed";
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::string embeddings_out;
  std::size_t embedding_dim = 16;
  std::string external_out;
  std::size_t hook_dim = 8;
  std::size_t hook_layers = 3;

  void attach(CLI::App* cmd) {
    cmd->add_option("--lexicon", lexicon_path, "existing word list to draw from");
    cmd->add_option("--sample-words", sample_words,
                    "generate a synthetic word list of this size instead");
    cmd->add_option("--lexicon-out", lexicon_out,
                    "where to write the synthetic word list");
    cmd->add_option("--out", corpus_out, "output corpus TSV")->required();
    cmd->add_option("--mode", mode_name, "strip, keyboard or mixed");
    cmd->add_option("--count", count, "number of cases to generate");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--embeddings-out", embeddings_out,
                    "also write an embedding fixture here");
    cmd->add_option("--embedding-dim", embedding_dim,
                    "embedding fixture dimension");
    cmd->add_option("--external-out", external_out,
                    "also write an external layer fixture here");
    cmd->add_option("--hook-dim", hook_dim, "external layer dimension");
    cmd->add_option("--hook-layers", hook_layers, "external layer count");
  }
};

int run_gen_fixtures(const FixtureFlags& flags) {
  Lexicon lex;
  if (flags.sample_words > 0) {
    const auto words =
        fixtures::sample_word_list(flags.sample_words, flags.seed);
    lex = Lexicon::from_words(words);
    if (!flags.lexicon_out.empty()) {
      std::ofstream out(flags.lexicon_out, std::ios::binary);
      if (!out) throw LoadError("cannot write word list: " + flags.lexicon_out);
      for (const auto& w : lex.entries()) out << w << '\n';
    }
  } else if (!flags.lexicon_path.empty()) {
    lex = Lexicon::load_file(flags.lexicon_path);
  } else {
    throw ConfigError("gen-fixtures needs --lexicon or --sample-words");
  }

  const auto cases = fixtures::make_cases(
      lex, fixtures::parse_mode(flags.mode_name), flags.count, flags.seed);
  write_corpus(flags.corpus_out, cases);
  std::cerr << "wrote " << cases.size() << " cases to " << flags.corpus_out
            << "\n";

  if (!flags.embeddings_out.empty()) {
    fixtures::write_embedding_fixture(flags.embeddings_out, lex, cases,
                                      flags.embedding_dim, flags.seed + 1);
  }
  if (!flags.external_out.empty()) {
    fixtures::write_external_layer_fixture(flags.external_out, cases,
                                           flags.hook_dim, flags.hook_layers,
                                           flags.seed + 2);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plspell: isolated correction of non-word spelling errors"};
  app.require_subcommand(1);

  // correct
  auto* correct_cmd =
      app.add_subcommand("correct", "correct a token (or stdin, one per line)");
  correct_cmd->set_config("--config");
  ResourceFlags correct_res;
  std::string correct_method;
  std::string correct_token;
  std::size_t top_k = 5;
  correct_cmd->add_option("--method", correct_method,
                          "edit, diacritic, vector, lstm1, lstm2 or lstm-hook")
      ->required();
  correct_res.attach(correct_cmd, false);
  correct_cmd->add_option("-k,--top-k", top_k, "candidates to print (default 5)");
  correct_cmd->add_option("token", correct_token, "token to correct");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "evaluate methods on a corpus");
  eval_cmd->set_config("--config");
  ResourceFlags eval_res;
  SplitFlags eval_split;
  std::vector<std::string> eval_methods;
  std::string eval_format = "table";
  std::string pred_log;
  std::size_t jobs = 1;
  eval_cmd->add_option("--method", eval_methods, "methods to evaluate")
      ->required()
      ->delimiter(',');
  eval_res.attach(eval_cmd, true);
  eval_split.attach(eval_cmd);
  eval_cmd->add_option("--format", eval_format, "table or tsv")
      ->check(CLI::IsMember({"table", "tsv"}));
  eval_cmd->add_option("--pred-log", pred_log, "per-case prediction log TSV");
  eval_cmd->add_option("--jobs", jobs, "worker threads (default 1)");

  // train
  auto* train_cmd = app.add_subcommand("train", "train a neural corrector");
  train_cmd->set_config("--config");
  TrainFlags train_flags;
  SplitFlags train_split;
  train_flags.attach(train_cmd);
  train_split.attach(train_cmd);

  // swap-variants
  auto* swap_cmd =
      app.add_subcommand("swap-variants", "list diacritic variants of a token");
  std::string swap_token;
  std::uint64_t swap_limit = 1000;
  swap_cmd->add_option("token", swap_token, "token to expand")->required();
  swap_cmd->add_option("--limit", swap_limit,
                       "print variants only when count <= limit");

  // gen-fixtures
  auto* gen_cmd =
      app.add_subcommand("gen-fixtures", "generate synthetic test corpora");
  FixtureFlags gen_flags;
  gen_flags.attach(gen_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(correct_cmd)) {
      return run_correct(correct_res, correct_method, correct_token, top_k);
    }
    if (app.got_subcommand(eval_cmd)) {
      return run_evaluate(eval_res, eval_split, eval_methods, eval_format,
                          pred_log, jobs);
    }
    if (app.got_subcommand(train_cmd)) {
      return run_train(train_flags, train_split);
    }
    if (app.got_subcommand(swap_cmd)) {
      return run_swap_variants(swap_token, swap_limit);
    }
    if (app.got_subcommand(gen_cmd)) {
      return run_gen_fixtures(gen_flags);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
