#include "textclf/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "textclf/error.hpp"
#include "textclf/rng.hpp"

namespace textclf {

namespace {

double compensated_sum(const std::vector<double>& values) {
  long double sum = 0.0L;
  for (double v : values) sum += v;
  return static_cast<double>(sum);
}

// Inversion sampling; requires a cumulative distribution over [0, n).
std::size_t sample_cdf(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.next_double() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

std::size_t sample_poisson(double lambda, Rng& rng) {
  if (lambda <= 0.0) return 0;
  const double u = rng.next_double();
  double p = std::exp(-lambda);
  double cum = p;
  std::size_t k = 0;
  const std::size_t cap =
      static_cast<std::size_t>(lambda + 10.0 * std::sqrt(lambda) + 100.0);
  while (u > cum && k < cap) {
    ++k;
    p *= lambda / static_cast<double>(k);
    cum += p;
  }
  return k;
}

}  // namespace

std::string SynthSpec::token(std::size_t i) const {
  char prefix = 's';
  std::size_t local = i;
  if (i >= vocab_shared + vocab_pos_only) {
    prefix = 'n';
    local = i - vocab_shared - vocab_pos_only;
  } else if (i >= vocab_shared) {
    prefix = 'p';
    local = i - vocab_shared;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%c%05zu", prefix, local);
  return buf;
}

void SynthSpec::set_uniform_distributions() {
  const std::size_t total = vocab_total();
  pos_probs.assign(total, 0.0);
  neg_probs.assign(total, 0.0);
  const std::size_t pos_support = vocab_shared + vocab_pos_only;
  const std::size_t neg_support = vocab_shared + vocab_neg_only;
  for (std::size_t i = 0; i < vocab_shared + vocab_pos_only; ++i) {
    pos_probs[i] = 1.0 / static_cast<double>(pos_support);
  }
  for (std::size_t i = 0; i < vocab_shared; ++i) {
    neg_probs[i] = 1.0 / static_cast<double>(neg_support);
  }
  for (std::size_t i = vocab_shared + vocab_pos_only; i < total; ++i) {
    neg_probs[i] = 1.0 / static_cast<double>(neg_support);
  }
}

void SynthSpec::validate() const {
  if (n_positive == 0 || n_negative == 0) {
    throw Error("synth spec: n_positive and n_negative must be positive");
  }
  if (vocab_total() == 0) throw Error("synth spec: empty vocabulary");
  if (doc_length_mean < 1.0) {
    throw Error("synth spec: doc_length_mean must be at least 1");
  }
  const std::size_t total = vocab_total();
  if (pos_probs.size() != total || neg_probs.size() != total) {
    throw Error("synth spec: distribution length must equal vocabulary size " +
                std::to_string(total));
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (!(pos_probs[i] >= 0.0) || !(neg_probs[i] >= 0.0)) {
      throw Error("synth spec: negative probability at index " +
                  std::to_string(i));
    }
    const bool pos_only =
        i >= vocab_shared && i < vocab_shared + vocab_pos_only;
    const bool neg_only = i >= vocab_shared + vocab_pos_only;
    if (pos_only && neg_probs[i] != 0.0) {
      throw Error("synth spec: negative class assigns mass to positive-only "
                  "token " + token(i));
    }
    if (neg_only && pos_probs[i] != 0.0) {
      throw Error("synth spec: positive class assigns mass to negative-only "
                  "token " + token(i));
    }
  }
  for (const auto* probs : {&pos_probs, &neg_probs}) {
    const double sum = compensated_sum(*probs);
    if (std::abs(sum - 1.0) > 1e-12) {
      throw Error("synth spec: class distribution sums to " +
                  std::to_string(sum) + ", not 1");
    }
    if (std::none_of(probs->begin(), probs->end(),
                     [](double p) { return p > 0.0; })) {
      throw Error("synth spec: class distribution has empty support");
    }
  }
}

Corpus synthesize(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  std::vector<std::string> tokens(spec.vocab_total());
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i] = spec.token(i);

  std::vector<double> pos_cdf(spec.pos_probs.size());
  std::vector<double> neg_cdf(spec.neg_probs.size());
  std::partial_sum(spec.pos_probs.begin(), spec.pos_probs.end(),
                   pos_cdf.begin());
  std::partial_sum(spec.neg_probs.begin(), spec.neg_probs.end(),
                   neg_cdf.begin());

  std::vector<Document> docs;
  docs.reserve(spec.n_positive + spec.n_negative);
  char id[32];
  for (std::size_t d = 0; d < spec.n_positive + spec.n_negative; ++d) {
    const bool positive = d < spec.n_positive;
    Document doc;
    if (positive) {
      std::snprintf(id, sizeof(id), "dep-%06zu", d);
    } else {
      std::snprintf(id, sizeof(id), "ctl-%06zu", d - spec.n_positive);
    }
    doc.id = id;
    doc.label = positive ? Label::depressed : Label::control;
    const std::size_t length =
        1 + sample_poisson(spec.doc_length_mean - 1.0, rng);
    const std::vector<double>& cdf = positive ? pos_cdf : neg_cdf;
    for (std::size_t t = 0; t < length; ++t) {
      if (t > 0) doc.text.push_back(' ');
      doc.text += tokens[sample_cdf(cdf, rng)];
    }
    docs.push_back(std::move(doc));
  }
  return Corpus::from_documents(std::move(docs));
}

namespace {

double poisson_pmf(std::size_t k, double lambda) {
  if (lambda <= 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

// Sum over count vectors x of max_c prior_c * P(x | c), recursing over the
// union support. `coef` carries the running multinomial weight 1/prod(x_i!).
void enumerate_outcomes(const std::vector<double>& pos, const std::vector<double>& neg,
                        double prior_pos, double prior_neg, std::size_t feature,
                        std::size_t remaining, double coef, double pos_prod,
                        double neg_prod, double len_factorial, double& acc) {
  if (feature + 1 == pos.size()) {
    const double p = pos_prod * std::pow(pos[feature], static_cast<double>(remaining));
    const double q = neg_prod * std::pow(neg[feature], static_cast<double>(remaining));
    double c = coef;
    for (std::size_t j = 2; j <= remaining; ++j) c /= static_cast<double>(j);
    acc += len_factorial * c * std::max(prior_pos * p, prior_neg * q);
    return;
  }
  double pos_pow = 1.0, neg_pow = 1.0, c = coef;
  for (std::size_t x = 0; x <= remaining; ++x) {
    if (x > 0) {
      pos_pow *= pos[feature];
      neg_pow *= neg[feature];
      c /= static_cast<double>(x);
    }
    if (pos_pow == 0.0 && neg_pow == 0.0) break;
    enumerate_outcomes(pos, neg, prior_pos, prior_neg, feature + 1,
                       remaining - x, c, pos_prod * pos_pow,
                       neg_prod * neg_pow, len_factorial, acc);
  }
}

double outcome_count(std::size_t length, std::size_t vocab) {
  // C(length + vocab - 1, vocab - 1)
  double c = 1.0;
  for (std::size_t i = 1; i < vocab; ++i) {
    c *= static_cast<double>(length + i) / static_cast<double>(i);
    if (c > 1e9) return c;
  }
  return c;
}

}  // namespace

BayesAccuracy bayes_accuracy(const SynthSpec& spec) {
  spec.validate();
  const double prior_pos = static_cast<double>(spec.n_positive) /
                           static_cast<double>(spec.n_positive + spec.n_negative);
  const double prior_neg = 1.0 - prior_pos;

  bool disjoint = true;
  bool identical = true;
  for (std::size_t i = 0; i < spec.pos_probs.size(); ++i) {
    if (spec.pos_probs[i] > 0.0 && spec.neg_probs[i] > 0.0) disjoint = false;
    if (spec.pos_probs[i] != spec.neg_probs[i]) identical = false;
  }
  if (disjoint) return {1.0, true};
  if (identical) return {std::max(prior_pos, prior_neg), true};

  // Length law: 1 + Poisson(mean - 1), truncated where the tail is < 1e-13.
  const double lambda = spec.doc_length_mean - 1.0;
  std::vector<double> length_probs;
  double cum = 0.0;
  for (std::size_t m = 0; cum < 1.0 - 1e-13; ++m) {
    const double p = poisson_pmf(m, lambda);
    length_probs.push_back(p);
    cum += p;
    if (m > 10000) break;
  }

  double work = 0.0;
  for (std::size_t m = 0; m < length_probs.size(); ++m) {
    work += outcome_count(m + 1, spec.vocab_total());
  }
  if (work <= 2e6) {
    double acc = 0.0;
    for (std::size_t m = 0; m < length_probs.size(); ++m) {
      if (length_probs[m] == 0.0) continue;
      const std::size_t length = m + 1;
      double len_factorial = 1.0;
      for (std::size_t j = 2; j <= length; ++j) {
        len_factorial *= static_cast<double>(j);
      }
      double len_acc = 0.0;
      enumerate_outcomes(spec.pos_probs, spec.neg_probs, prior_pos, prior_neg,
                         0, length, 1.0, 1.0, 1.0, len_factorial, len_acc);
      acc += length_probs[m] * len_acc;
    }
    return {acc, true};
  }

  // Monte Carlo fallback: draw documents from the mixture and score the
  // optimal rule against the drawn class.
  Rng rng(mix_seed(spec.seed, 0xbacc));
  std::vector<double> pos_cdf(spec.pos_probs.size());
  std::vector<double> neg_cdf(spec.neg_probs.size());
  std::partial_sum(spec.pos_probs.begin(), spec.pos_probs.end(), pos_cdf.begin());
  std::partial_sum(spec.neg_probs.begin(), spec.neg_probs.end(), neg_cdf.begin());
  const std::size_t trials = 200000;
  std::size_t correct = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const bool positive = rng.next_double() < prior_pos;
    const std::vector<double>& cdf = positive ? pos_cdf : neg_cdf;
    const std::size_t length = 1 + sample_poisson(lambda, rng);
    double log_pos = std::log(prior_pos), log_neg = std::log(prior_neg);
    for (std::size_t i = 0; i < length; ++i) {
      const std::size_t tok = sample_cdf(cdf, rng);
      log_pos += std::log(spec.pos_probs[tok]);
      log_neg += std::log(spec.neg_probs[tok]);
    }
    const bool predict_pos = log_pos > log_neg;
    if (predict_pos == positive) ++correct;
  }
  return {static_cast<double>(correct) / static_cast<double>(trials), false};
}

namespace {

std::vector<double> parse_prob_list(const std::string& value,
                                    const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error("synth spec: bad number \"" + item + "\" in " + key);
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

SynthSpec load_synth_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open \"" + path + "\"");
  SynthSpec spec;
  bool uniform = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const std::size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const std::size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    if (strip(line).empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(path + ": expected key=value at line " +
                  std::to_string(line_no));
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    try {
      if (key == "n_positive") {
        spec.n_positive = std::stoull(value);
      } else if (key == "n_negative") {
        spec.n_negative = std::stoull(value);
      } else if (key == "vocab_shared") {
        spec.vocab_shared = std::stoull(value);
      } else if (key == "vocab_pos_only") {
        spec.vocab_pos_only = std::stoull(value);
      } else if (key == "vocab_neg_only") {
        spec.vocab_neg_only = std::stoull(value);
      } else if (key == "doc_length_mean") {
        spec.doc_length_mean = std::stod(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "dist") {
        if (value != "uniform") {
          throw Error(path + ": dist must be \"uniform\", got \"" + value +
                      "\"");
        }
        uniform = true;
      } else if (key == "pos_probs") {
        spec.pos_probs = parse_prob_list(value, key);
      } else if (key == "neg_probs") {
        spec.neg_probs = parse_prob_list(value, key);
      } else {
        throw Error(path + ": unknown key \"" + key + "\" at line " +
                    std::to_string(line_no));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(path + ": bad value for \"" + key + "\" at line " +
                  std::to_string(line_no));
    }
  }
  if (uniform) spec.set_uniform_distributions();
  spec.validate();
  return spec;
}

std::string synth_spec_to_string(const SynthSpec& spec) {
  std::ostringstream out;
  out << "n_positive = " << spec.n_positive << '\n';
  out << "n_negative = " << spec.n_negative << '\n';
  out << "vocab_shared = " << spec.vocab_shared << '\n';
  out << "vocab_pos_only = " << spec.vocab_pos_only << '\n';
  out << "vocab_neg_only = " << spec.vocab_neg_only << '\n';
  out << "doc_length_mean = " << format_double(spec.doc_length_mean) << '\n';
  out << "seed = " << spec.seed << '\n';

  SynthSpec uniform = spec;
  uniform.set_uniform_distributions();
  if (uniform.pos_probs == spec.pos_probs &&
      uniform.neg_probs == spec.neg_probs) {
    out << "dist = uniform\n";
  } else {
    for (const auto& [key, probs] :
         {std::pair<const char*, const std::vector<double>*>{"pos_probs",
                                                             &spec.pos_probs},
          {"neg_probs", &spec.neg_probs}}) {
      out << key << " = ";
      for (std::size_t i = 0; i < probs->size(); ++i) {
        if (i > 0) out << ',';
        out << format_double((*probs)[i]);
      }
      out << '\n';
    }
  }
  return out.str();
}

void save_synth_spec(const SynthSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << synth_spec_to_string(spec);
  if (!out) throw Error("write failed for \"" + path + "\"");
}

SynthSpec synth_preset(const std::string& name) {
  SynthSpec spec;
  if (name == "separable") {
    // Single-token documents over disjoint class vocabularies: the optimum
    // of every classifier, including a greedy tree at the default depth, is
    // exactly reachable, so held-out accuracy and AUC are 1.0.
    spec.n_positive = 1000;
    spec.n_negative = 1000;
    spec.vocab_shared = 0;
    spec.vocab_pos_only = 12;
    spec.vocab_neg_only = 12;
    spec.doc_length_mean = 1.0;
    spec.seed = 42;
    spec.set_uniform_distributions();
  } else if (name == "clpsych-shape") {
    // 1/100 scale of the 742,560 / 1,253,594 document split.
    spec.n_positive = 7426;
    spec.n_negative = 12536;
    spec.vocab_shared = 600;
    spec.vocab_pos_only = 60;
    spec.vocab_neg_only = 60;
    spec.doc_length_mean = 12.0;
    spec.seed = 42;
    spec.set_uniform_distributions();
  } else if (name == "bayes085") {
    spec.n_positive = 1500;
    spec.n_negative = 1500;
    spec.vocab_shared = 2;
    spec.vocab_pos_only = 0;
    spec.vocab_neg_only = 0;
    spec.doc_length_mean = 1.0;
    spec.seed = 42;
    spec.pos_probs = {0.85, 0.15};
    spec.neg_probs = {0.15, 0.85};
  } else if (name == "indistinct") {
    spec.n_positive = 800;
    spec.n_negative = 1200;
    spec.vocab_shared = 20;
    spec.vocab_pos_only = 0;
    spec.vocab_neg_only = 0;
    spec.doc_length_mean = 6.0;
    spec.seed = 42;
    spec.set_uniform_distributions();
  } else {
    throw Error("unknown preset \"" + name + "\"");
  }
  return spec;
}

std::vector<std::string> synth_preset_names() {
  return {"separable", "clpsych-shape", "bayes085", "indistinct"};
}

}  // namespace textclf
