// Benchmarks the OpenMP kernels against their serial reference on a
// synthetic corpus. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "textclf/kernels.hpp"
#include "textclf/models.hpp"
#include "textclf/reference.hpp"
#include "textclf/synth.hpp"
#include "textclf/vectorize.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_per_call(const std::function<void()>& fn, int repeats) {
  fn();  // warm up
  const auto start = Clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double>(stop - start).count() / repeats;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-24s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t docs = 50000;
  if (argc > 1) docs = std::stoull(argv[1]);

  textclf::SynthSpec spec = textclf::synth_preset("clpsych-shape");
  const double scale = static_cast<double>(docs) /
                       static_cast<double>(spec.n_positive + spec.n_negative);
  spec.n_positive = std::max<std::size_t>(
      1, static_cast<std::size_t>(spec.n_positive * scale));
  spec.n_negative = std::max<std::size_t>(
      1, static_cast<std::size_t>(spec.n_negative * scale));

  const textclf::Corpus corpus = textclf::synthesize(spec);
  const textclf::TokenRule rule;
  const textclf::Vocabulary vocab =
      textclf::build_vocabulary(corpus, rule, {1, 2});
  const auto rows = textclf::vectorize_corpus(corpus, vocab, rule);
  std::vector<textclf::Label> labels(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) labels[i] = corpus[i].label;

  const textclf::TrainingSet set =
      textclf::prepare_training_set(rows, labels, 7);
  const std::size_t dim = set.csr.cols;
  std::printf("corpus: %zu documents, %zu features, %zu nonzeros\n",
              corpus.size(), dim, set.csr.val.size());
#ifdef _OPENMP
  std::printf("openmp threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n\n");
#endif
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  std::vector<double> weights(dim, 0.001);
  std::vector<double> margins(set.csr.rows, 0.0);
  std::vector<double> coeff(set.csr.rows, 0.5);
  std::vector<double> grad(dim, 0.0);
  std::vector<std::uint64_t> t0(dim, 0), t1(dim, 0);

  report("row_dots",
         seconds_per_call(
             [&] { textclf::serial::row_dots(set.csr, weights, 0.1, margins); },
             5),
         seconds_per_call(
             [&] { textclf::kernels::row_dots(set.csr, weights, 0.1, margins); },
             5));
  report("column_accumulate",
         seconds_per_call(
             [&] { textclf::serial::column_accumulate(set.csc, coeff, grad); },
             5),
         seconds_per_call(
             [&] { textclf::kernels::column_accumulate(set.csc, coeff, grad); },
             5));
  report("class_feature_totals",
         seconds_per_call(
             [&] {
               textclf::serial::class_feature_totals(set.csc, set.labels, t0,
                                                     t1);
             },
             5),
         seconds_per_call(
             [&] {
               textclf::kernels::class_feature_totals(set.csc, set.labels, t0,
                                                      t1);
             },
             5));
  report("sum",
         seconds_per_call([&] { textclf::serial::plain_sum(coeff); }, 20),
         seconds_per_call([&] { textclf::kernels::chunked_sum(coeff); }, 20));
  return 0;
}
