#include <algorithm>
#include <numeric>

#include "textclf/error.hpp"
#include "textclf/models.hpp"
#include "textclf/rng.hpp"

namespace textclf {

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::naive_bayes: return "nb";
    case ModelKind::logistic: return "logreg";
    case ModelKind::svm: return "svm";
    case ModelKind::ridge: return "ridge";
    case ModelKind::tree: return "tree";
  }
  return "?";
}

const char* model_display_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::naive_bayes: return "Na\xc3\xafve Bayes";
    case ModelKind::logistic: return "Logistic Regression";
    case ModelKind::svm: return "Linear Support Vector Classifier";
    case ModelKind::ridge: return "Ridge Classifier";
    case ModelKind::tree: return "Decision Trees";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "nb") return ModelKind::naive_bayes;
  if (name == "logreg") return ModelKind::logistic;
  if (name == "svm") return ModelKind::svm;
  if (name == "ridge") return ModelKind::ridge;
  if (name == "tree") return ModelKind::tree;
  throw Error("unknown model kind \"" + name +
              "\" (expected nb, logreg, svm, ridge, or tree)");
}

TrainingSet prepare_training_set(std::span<const SparseVector> x,
                                 std::span<const Label> y,
                                 std::uint64_t seed) {
  if (x.size() != y.size()) throw Error("feature/label length mismatch");
  if (x.empty()) throw Error("training set is empty");
  const std::size_t dimension = x[0].dimension;

  std::vector<std::uint32_t> order(x.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (y[a] != y[b]) return y[a] < y[b];
    if (x[a].indices != x[b].indices) return x[a].indices < x[b].indices;
    return x[a].values < x[b].values;
  });
  Rng rng(mix_seed(seed, 0x726f7773ULL));
  rng.shuffle(order);

  std::vector<SparseVector> rows(order.size());
  TrainingSet set;
  set.targets.resize(order.size());
  set.labels.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rows[i] = x[order[i]];
    const bool positive = y[order[i]] == Label::depressed;
    set.targets[i] = positive ? 1.0 : -1.0;
    set.labels[i] = positive ? 1 : 0;
    if (positive) {
      ++set.n_depressed;
    } else {
      ++set.n_control;
    }
  }
  set.csr = build_csr(rows, dimension);
  set.csc = transpose_to_csc(set.csr);
  return set;
}

ModelKind AnyModel::kind() const {
  struct Visitor {
    ModelKind operator()(const NaiveBayesModel&) { return ModelKind::naive_bayes; }
    ModelKind operator()(const LogisticModel&) { return ModelKind::logistic; }
    ModelKind operator()(const SvmModel&) { return ModelKind::svm; }
    ModelKind operator()(const RidgeModel&) { return ModelKind::ridge; }
    ModelKind operator()(const DecisionTreeModel&) { return ModelKind::tree; }
  };
  return std::visit(Visitor{}, model_);
}

std::size_t AnyModel::dimension() const {
  return std::visit([](const auto& m) { return m.dimension; }, model_);
}

double AnyModel::score(const SparseVector& x) const {
  return std::visit([&](const auto& m) { return m.score(x); }, model_);
}

Label AnyModel::classify(const SparseVector& x) const {
  return std::visit([&](const auto& m) { return m.classify(x); }, model_);
}

bool AnyModel::converged() const {
  struct Visitor {
    bool operator()(const NaiveBayesModel&) { return true; }
    bool operator()(const LogisticModel& m) { return m.converged; }
    bool operator()(const SvmModel& m) { return m.converged; }
    bool operator()(const RidgeModel& m) { return m.converged; }
    bool operator()(const DecisionTreeModel&) { return true; }
  };
  return std::visit(Visitor{}, model_);
}

AnyModel train_model(ModelKind kind, std::span<const SparseVector> x,
                     std::span<const Label> y, const Hyperparams& hp,
                     std::vector<double>* objective_trace) {
  switch (kind) {
    case ModelKind::naive_bayes:
      return train_naive_bayes(x, y, hp.nb_alpha);
    case ModelKind::logistic:
      return train_logistic(x, y, hp, objective_trace);
    case ModelKind::svm:
      return train_svm(x, y, hp, objective_trace);
    case ModelKind::ridge:
      return train_ridge(x, y, hp, objective_trace);
    case ModelKind::tree:
      return train_tree(x, y, hp);
  }
  throw Error("unknown model kind tag " +
              std::to_string(static_cast<std::uint32_t>(kind)));
}

}  // namespace textclf
