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

#include "plspell/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "plspell/diacritics.hpp"
#include "plspell/editdist.hpp"
#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell {

Method parse_method(const std::string& name) {
  if (name == "edit") return Method::edit;
  if (name == "diacritic") return Method::diacritic;
  if (name == "vector") return Method::vector;
  if (name == "lstm1") return Method::lstm1;
  if (name == "lstm2") return Method::lstm2;
  if (name == "lstm-hook") return Method::lstm_hook;
  throw ConfigError("unknown method '" + name +
                    "' (expected edit, diacritic, vector, lstm1, lstm2 or "
                    "lstm-hook)");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::edit: return "edit";
    case Method::diacritic: return "diacritic";
    case Method::vector: return "vector";
    case Method::lstm1: return "lstm1";
    case Method::lstm2: return "lstm2";
    case Method::lstm_hook: return "lstm-hook";
  }
  return "?";
}

namespace {

bool is_neural(Method m) {
  return m == Method::lstm1 || m == Method::lstm2 || m == Method::lstm_hook;
}

void require(const std::string& path, const char* what, Method m) {
  if (path.empty()) {
    throw ConfigError(std::string("method ") + to_string(m) +
                      " requires --" + what);
  }
}

}  // namespace

Corrector Corrector::load(const CorrectorSpec& spec) {
  Corrector c;
  c.spec_ = spec;

  const bool needs_lexicon = spec.method == Method::edit ||
                             spec.method == Method::diacritic ||
                             spec.method == Method::vector || spec.skip_known;
  if (needs_lexicon) {
    require(spec.lexicon_path, "lexicon", spec.method);
    c.lexicon_ = Lexicon::load_file(spec.lexicon_path);
  }
  if (spec.method == Method::vector) {
    require(spec.embeddings_path, "embeddings", spec.method);
    c.embeddings_ = EmbeddingStore::load_file(spec.embeddings_path);
  }
  if (is_neural(spec.method)) {
    require(spec.model_path, "model", spec.method);
    c.model_ = std::make_shared<const neural::Seq2SeqModel>(
        neural::Seq2SeqModel::load(spec.model_path));

    const bool bi = c.model_->directions() == 2;
    const bool hook = c.model_->has_hook();
    if (spec.method == Method::lstm1 && (bi || hook)) {
      throw ConfigError("method lstm1 expects a unidirectional model without "
                        "an init hook");
    }
    if (spec.method == Method::lstm2 && (!bi || hook)) {
      throw ConfigError("method lstm2 expects a bidirectional model without "
                        "an init hook");
    }
    if (spec.method == Method::lstm_hook && !hook) {
      throw ConfigError("method lstm-hook expects a model with an init hook");
    }
    if (hook) {
      require(spec.external_path, "external-layers", spec.method);
      c.external_ = neural::ExternalLayerStore::load_file(
          spec.external_path, c.model_->config().hook->dim,
          c.model_->config().hook->layers);
    }
  }
  return c;
}

bool Corrector::probabilistic() const { return is_neural(spec_.method); }

std::vector<CorrectionCandidate> Corrector::correct(
    std::string_view token) const {
  if (spec_.skip_known && lexicon_ && lexicon_->contains(token)) {
    CorrectionCandidate self;
    self.form = uni::nfc(token);
    self.combined = 0.0;
    self.edit_score = 0.0;
    self.source = std::string(to_string(spec_.method)) + ":known";
    return {std::move(self)};
  }

  switch (spec_.method) {
    case Method::edit: {
      std::vector<CorrectionCandidate> out;
      for (const auto& m : lexicon_->fuzzy_search(token, spec_.max_edit)) {
        CorrectionCandidate cand;
        cand.form = m.word;
        cand.combined = static_cast<double>(m.distance);
        cand.edit_score = scaled_levenshtein(token, m.word);
        cand.source = "edit";
        out.push_back(std::move(cand));
      }
      return out;
    }
    case Method::diacritic:
      return diacritic_correct(token, *lexicon_);
    case Method::vector:
      return vector_distance_correct(token, *lexicon_, *embeddings_,
                                     spec_.max_edit, spec_.edit_weight);
    case Method::lstm1:
    case Method::lstm2:
    case Method::lstm_hook: {
      const neural::ExternalLayerStore::LayerStack* ext = nullptr;
      if (external_) ext = external_->find(token);
      const auto decoded =
          model_->correct(token, ext, spec_.max_decode_extra);
      CorrectionCandidate cand;
      cand.form = decoded.output;
      cand.char_probs = decoded.step_probs;
      double nll = 0.0;
      for (double p : decoded.step_probs) {
        nll -= std::log(std::max(p, 1e-12));
      }
      cand.combined = nll;  // sequence cost: -ln P(output)
      cand.source = to_string(spec_.method);
      return {std::move(cand)};
    }
  }
  return {};
}

std::vector<double> Corrector::gold_probs(const std::string& error,
                                          const std::string& gold) const {
  if (!probabilistic()) {
    throw ConfigError("gold_probs: method is not probabilistic");
  }
  const neural::ExternalLayerStore::LayerStack* ext = nullptr;
  if (external_) ext = external_->find(error);
  return model_
      ->score(uni::to_nfc_code_points(error), uni::to_nfc_code_points(gold),
              ext)
      .gold_probs;
}

Evaluation evaluate(const Corrector& corrector, const ErrorCorpus& corpus,
                    std::size_t jobs) {
  if (!corpus.has_splits()) {
    throw ConfigError("evaluate: corpus has no split assignment");
  }
  const std::vector<std::size_t> test_indices = corpus.indices(Split::test);
  if (test_indices.empty()) {
    throw ConfigError("evaluate: corpus test split is empty");
  }

  std::vector<CaseResult> results(test_indices.size());
  const auto run_case = [&](std::size_t k) {
    const std::size_t idx = test_indices[k];
    const ErrorCase& ec = corpus.cases()[idx];
    CaseResult r;
    r.index = idx;
    r.error = ec.error;
    r.gold = ec.correction;
    const auto candidates = corrector.correct(ec.error);
    if (!candidates.empty()) r.predicted = candidates.front().form;
    r.correct =
        !candidates.empty() && uni::nfc(r.predicted) == uni::nfc(ec.correction);
    if (corrector.probabilistic()) {
      r.gold_probs = corrector.gold_probs(ec.error, ec.correction);
    }
    results[k] = std::move(r);
  };

  if (jobs <= 1) {
    for (std::size_t k = 0; k < test_indices.size(); ++k) run_case(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::size_t n_workers = std::min(jobs, test_indices.size());
    workers.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < test_indices.size();
             k = next.fetch_add(1)) {
          run_case(k);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  Evaluation eval;
  eval.report.method = to_string(corrector.spec().method);
  eval.report.case_count = results.size();
  std::size_t hits = 0;
  for (const auto& r : results) hits += r.correct ? 1 : 0;
  eval.report.accuracy =
      static_cast<double>(hits) / static_cast<double>(results.size());

  if (corrector.probabilistic()) {
    std::vector<std::vector<double>> prob_seqs;
    prob_seqs.reserve(results.size());
    for (const auto& r : results) prob_seqs.push_back(r.gold_probs);
    eval.report.perplexity = corpus_perplexity(prob_seqs).mean_perplexity;
    eval.report.test_loss = mean_cross_entropy_nats(prob_seqs);
  }
  eval.cases = std::move(results);
  return eval;
}

void write_prediction_log(const std::string& path,
                          const std::vector<CaseResult>& cases) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write prediction log: " + path);
  out << "case_index\terror\tgold\tpredicted\tcorrect\n";
  for (const auto& c : cases) {
    out << c.index << '\t' << c.error << '\t' << c.gold << '\t' << c.predicted
        << '\t' << (c.correct ? 1 : 0) << '\n';
  }
  if (!out) throw LoadError("write failure on prediction log: " + path);
}

}  // namespace plspell
