#ifndef TEXTCLF_MODELS_HPP
#define TEXTCLF_MODELS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "textclf/corpus.hpp"
#include "textclf/sparse.hpp"

namespace textclf {

enum class ModelKind : std::uint32_t {
  naive_bayes = 1,
  logistic = 2,
  svm = 3,
  ridge = 4,
  tree = 5,
};

const char* model_kind_name(ModelKind kind);     // cli name: nb, logreg, ...
const char* model_display_name(ModelKind kind);  // report row base name
ModelKind parse_model_kind(const std::string& name);

struct Hyperparams {
  double nb_alpha = 1.0;        // Laplace smoothing
  double lr_lambda = 1.0;       // L2 strength, bias unregularized
  double lr_threshold = 0.5;    // classify positive iff score > threshold
  std::uint32_t lr_max_iters = 500;
  double lr_tolerance = 1e-6;   // gradient norm
  double svm_c = 1.0;
  std::uint32_t svm_max_iters = 1000;
  double svm_tolerance = 1e-10;  // relative objective change
  double ridge_lambda = 1.0;
  std::uint32_t ridge_max_iters = 1000;
  double ridge_tolerance = 1e-8;  // relative residual
  std::uint32_t tree_max_depth = 32;
  std::uint32_t tree_min_node = 2;
  std::uint32_t tree_feature_cap = 10000;  // highest-variance scan cap
  bool tree_exact_scan = false;
  std::uint64_t seed = 0;
};

// Training rows in canonical order: sorted by (label, indices, values), then
// permuted by a seeded shuffle. Training over a TrainingSet is therefore a
// function of the document multiset and the seed alone, which makes linear-
// model parameters bitwise reproducible under input reordering despite
// float accumulation.
struct TrainingSet {
  CsrMatrix csr;
  CscMatrix csc;
  std::vector<double> targets;        // -1 control, +1 depressed
  std::vector<std::uint8_t> labels;   // 0 control, 1 depressed
  std::size_t n_control = 0;
  std::size_t n_depressed = 0;
};

TrainingSet prepare_training_set(std::span<const SparseVector> x,
                                 std::span<const Label> y, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Multinomial Naive Bayes. Feature probabilities are Laplace-smoothed class
// count fractions; scoring runs in log space and the multinomial coefficient
// cancels in the class ratio.
struct NaiveBayesModel {
  std::size_t dimension = 0;
  double alpha = 1.0;
  std::array<double, 2> log_prior = {0.0, 0.0};           // [control, depressed]
  std::array<std::vector<double>, 2> feature_log_prob;    // [class][feature]

  std::array<double, 2> joint_log_scores(const SparseVector& x) const;
  std::array<double, 2> posteriors(const SparseVector& x) const;
  double score(const SparseVector& x) const;  // posterior of depressed
  Label classify(const SparseVector& x) const;
};

NaiveBayesModel train_naive_bayes(std::span<const SparseVector> x,
                                  std::span<const Label> y, double alpha);

// ---------------------------------------------------------------------------
// Logistic regression, mean log-loss + (lambda/2)|w|^2, full-batch gradient
// descent with backtracking line search.
struct LogisticModel {
  std::size_t dimension = 0;
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = 1.0;
  double threshold = 0.5;
  bool converged = false;
  std::uint32_t iterations = 0;
  double objective = 0.0;

  double score(const SparseVector& x) const;  // sigmoid, in (0, 1)
  Label classify(const SparseVector& x) const;
};

double lr_objective(const CsrMatrix& x, std::span<const double> targets,
                    double lambda, std::span<const double> weights,
                    double bias);
// grad_w must have size x.cols; returns gradient of the bias in grad_bias.
void lr_gradient(const CsrMatrix& x, const CscMatrix& xt,
                 std::span<const double> targets, double lambda,
                 std::span<const double> weights, double bias,
                 std::span<double> grad_w, double& grad_bias);

LogisticModel train_logistic(std::span<const SparseVector> x,
                             std::span<const Label> y, const Hyperparams& hp,
                             std::vector<double>* objective_trace = nullptr);

// ---------------------------------------------------------------------------
// Linear SVM in the primal: (1/2)|w|^2 + C * sum hinge(t * (w.x - b)),
// full-batch subgradient steps with backtracking, rows visited in the seeded
// canonical permutation.
struct SvmModel {
  std::size_t dimension = 0;
  std::vector<double> weights;
  double offset = 0.0;  // decision value is w.x - offset
  double c = 1.0;
  bool converged = false;
  std::uint32_t iterations = 0;
  double objective = 0.0;

  double score(const SparseVector& x) const;
  Label classify(const SparseVector& x) const;  // sign, ties to control
};

double svm_objective(const CsrMatrix& x, std::span<const double> targets,
                     double c, std::span<const double> weights, double offset);

SvmModel train_svm(std::span<const SparseVector> x, std::span<const Label> y,
                   const Hyperparams& hp,
                   std::vector<double>* objective_trace = nullptr);

// ---------------------------------------------------------------------------
// Ridge classifier: least squares to targets {-1,+1} with L2 on the weights
// (bias unregularized), solved by conjugate gradient on the normal equations.
struct RidgeModel {
  std::size_t dimension = 0;
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = 1.0;
  bool converged = false;
  std::uint32_t iterations = 0;
  double objective = 0.0;

  double score(const SparseVector& x) const;
  Label classify(const SparseVector& x) const;
};

double ridge_objective(const CsrMatrix& x, std::span<const double> targets,
                       double lambda, std::span<const double> weights,
                       double bias);

RidgeModel train_ridge(std::span<const SparseVector> x,
                       std::span<const Label> y, const Hyperparams& hp,
                       std::vector<double>* objective_trace = nullptr);

// ---------------------------------------------------------------------------
// Decision tree grown recursively: pure nodes become leaves, impure nodes
// split on the (feature, count-threshold) pair with the best Gini gain;
// stopping on depth, node size, or zero gain. Splits send value <= threshold
// left. Leaves keep training class counts for score().
struct TreeNode {
  bool is_leaf = true;
  Label label = Label::control;
  std::uint32_t feature = 0;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::uint64_t count_control = 0;
  std::uint64_t count_depressed = 0;
};

struct DecisionTreeModel {
  std::size_t dimension = 0;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::uint32_t max_depth = 32;
  std::uint32_t min_node_size = 2;
  std::uint32_t feature_cap = 10000;
  bool exact_scan = false;

  const TreeNode& route(const SparseVector& x) const;
  double score(const SparseVector& x) const;  // leaf depressed fraction
  Label classify(const SparseVector& x) const;
};

DecisionTreeModel train_tree(std::span<const SparseVector> x,
                             std::span<const Label> y, const Hyperparams& hp);

// ---------------------------------------------------------------------------
// Uniform front over the five classifiers.
class AnyModel {
 public:
  using Variant = std::variant<NaiveBayesModel, LogisticModel, SvmModel,
                               RidgeModel, DecisionTreeModel>;

  AnyModel() = default;
  template <typename M>
  AnyModel(M model) : model_(std::move(model)) {}

  ModelKind kind() const;
  std::size_t dimension() const;
  double score(const SparseVector& x) const;
  Label classify(const SparseVector& x) const;
  bool converged() const;

  const Variant& value() const { return model_; }
  Variant& value() { return model_; }

 private:
  Variant model_;
};

AnyModel train_model(ModelKind kind, std::span<const SparseVector> x,
                     std::span<const Label> y, const Hyperparams& hp,
                     std::vector<double>* objective_trace = nullptr);

// Versioned binary container (magic, version, kind tag, dimension,
// hyperparameters, little-endian doubles, CRC-32 trailer). Round-trips
// scores bit for bit.
void save_model(const AnyModel& model, const std::string& path);
AnyModel load_model(const std::string& path);

}  // namespace textclf

#endif  // TEXTCLF_MODELS_HPP
