#include <algorithm>
#include <cmath>

#include "textclf/error.hpp"
#include "textclf/models.hpp"

namespace textclf {

namespace {

struct Candidate {
  bool valid = false;
  double gain = 0.0;
  std::uint32_t feature = 0;
  double threshold = 0.0;
};

// Strict total order so the argmax is independent of evaluation order.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.feature != b.feature) return a.feature < b.feature;
  return a.threshold < b.threshold;
}

// Exact Gini-gain positivity: gain > 0 iff
//   n * [R*(l0^2+l1^2) + L*(r0^2+r1^2)] > (c0^2+c1^2) * L * R
bool gain_positive(std::uint64_t c0, std::uint64_t c1, std::uint64_t l0,
                   std::uint64_t l1) {
  using u128 = unsigned __int128;
  const std::uint64_t r0 = c0 - l0, r1 = c1 - l1;
  const std::uint64_t left = l0 + l1, right = r0 + r1, n = c0 + c1;
  const u128 lhs = u128(n) * (u128(right) * (u128(l0) * l0 + u128(l1) * l1) +
                              u128(left) * (u128(r0) * r0 + u128(r1) * r1));
  const u128 rhs = (u128(c0) * c0 + u128(c1) * c1) * u128(left) * right;
  return lhs > rhs;
}

double gain_value(std::uint64_t c0, std::uint64_t c1, std::uint64_t l0,
                  std::uint64_t l1) {
  const double r0 = static_cast<double>(c0 - l0);
  const double r1 = static_cast<double>(c1 - l1);
  const double dl0 = static_cast<double>(l0), dl1 = static_cast<double>(l1);
  const double left = dl0 + dl1, right = r0 + r1;
  const double n = static_cast<double>(c0 + c1);
  const double dc0 = static_cast<double>(c0), dc1 = static_cast<double>(c1);
  return (dl0 * dl0 + dl1 * dl1) / (n * left) +
         (r0 * r0 + r1 * r1) / (n * right) - (dc0 * dc0 + dc1 * dc1) / (n * n);
}

struct Triple {
  std::uint32_t feature;
  double value;
  std::uint8_t label;
};

struct Group {
  std::uint32_t feature;
  std::size_t begin;
  std::size_t end;
  double variance;
};

double feature_value(const SparseVector& x, std::uint32_t feature) {
  auto it = std::lower_bound(x.indices.begin(), x.indices.end(), feature);
  if (it == x.indices.end() || *it != feature) return 0.0;
  return x.values[static_cast<std::size_t>(it - x.indices.begin())];
}

// Best split of one feature: sweep distinct values ascending, thresholds at
// midpoints, zeros folded in as the implicit low value.
Candidate scan_feature(const Triple* triples, std::size_t count,
                       std::uint64_t c0, std::uint64_t c1) {
  const std::uint64_t n = c0 + c1;
  std::uint64_t nz0 = 0, nz1 = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (triples[i].label == 0) ++nz0; else ++nz1;
  }
  const std::uint64_t zeros0 = c0 - nz0, zeros1 = c1 - nz1;

  Candidate best;
  best.feature = triples[0].feature;
  std::uint64_t l0 = zeros0, l1 = zeros1;
  double prev_value = 0.0;
  bool have_left = zeros0 + zeros1 > 0;
  std::size_t i = 0;
  while (i < count) {
    const double value = triples[i].value;
    if (have_left && l0 + l1 < n) {
      Candidate cand;
      cand.valid = gain_positive(c0, c1, l0, l1);
      if (cand.valid) {
        cand.gain = gain_value(c0, c1, l0, l1);
        cand.feature = triples[0].feature;
        cand.threshold = 0.5 * (prev_value + value);
        if (better(cand, best)) best = cand;
      }
    }
    while (i < count && triples[i].value == value) {
      if (triples[i].label == 0) ++l0; else ++l1;
      ++i;
    }
    prev_value = value;
    have_left = true;
  }
  return best;
}

}  // namespace

const TreeNode& DecisionTreeModel::route(const SparseVector& x) const {
  const TreeNode* node = &nodes[0];
  while (!node->is_leaf) {
    const double v = feature_value(x, node->feature);
    node = &nodes[static_cast<std::size_t>(v <= node->threshold ? node->left
                                                                : node->right)];
  }
  return *node;
}

double DecisionTreeModel::score(const SparseVector& x) const {
  if (x.dimension != dimension) throw Error("tree score dimension mismatch");
  const TreeNode& leaf = route(x);
  const std::uint64_t total = leaf.count_control + leaf.count_depressed;
  return total == 0 ? 0.0
                    : static_cast<double>(leaf.count_depressed) /
                          static_cast<double>(total);
}

Label DecisionTreeModel::classify(const SparseVector& x) const {
  if (x.dimension != dimension) throw Error("tree classify dimension mismatch");
  return route(x).label;
}

DecisionTreeModel train_tree(std::span<const SparseVector> x,
                             std::span<const Label> y, const Hyperparams& hp) {
  if (x.size() != y.size()) throw Error("feature/label length mismatch");
  if (x.empty()) throw Error("training set is empty");

  DecisionTreeModel model;
  model.dimension = x[0].dimension;
  model.max_depth = hp.tree_max_depth;
  model.min_node_size = hp.tree_min_node;
  model.feature_cap = hp.tree_feature_cap;
  model.exact_scan = hp.tree_exact_scan;

  struct Task {
    std::int32_t node;
    std::uint32_t depth;
    std::vector<std::uint32_t> docs;
  };

  std::vector<Task> stack;
  {
    Task root;
    root.node = 0;
    root.depth = 0;
    root.docs.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      root.docs[i] = static_cast<std::uint32_t>(i);
    }
    model.nodes.emplace_back();
    stack.push_back(std::move(root));
  }

  std::vector<Triple> triples;
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();

    std::uint64_t c0 = 0, c1 = 0;
    for (std::uint32_t doc : task.docs) {
      if (y[doc] == Label::depressed) ++c1; else ++c0;
    }
    TreeNode& node = model.nodes[static_cast<std::size_t>(task.node)];
    node.count_control = c0;
    node.count_depressed = c1;
    node.label = c1 > c0 ? Label::depressed : Label::control;

    const bool pure = c0 == 0 || c1 == 0;
    if (pure || task.depth >= hp.tree_max_depth ||
        task.docs.size() < hp.tree_min_node) {
      continue;  // leaf; node defaults already set
    }

    triples.clear();
    for (std::uint32_t doc : task.docs) {
      const SparseVector& row = x[doc];
      const std::uint8_t label = y[doc] == Label::depressed ? 1 : 0;
      for (std::size_t k = 0; k < row.nnz(); ++k) {
        triples.push_back({row.indices[k], row.values[k], label});
      }
    }
    std::sort(triples.begin(), triples.end(),
              [](const Triple& a, const Triple& b) {
                if (a.feature != b.feature) return a.feature < b.feature;
                return a.value < b.value;
              });

    // A feature can split only if the node sees at least two distinct
    // values of it (zeros count as a value).
    std::vector<Group> groups;
    const std::size_t node_size = task.docs.size();
    for (std::size_t i = 0; i < triples.size();) {
      std::size_t j = i;
      double sum = 0.0, sum_sq = 0.0;
      bool multi_valued = false;
      while (j < triples.size() && triples[j].feature == triples[i].feature) {
        sum += triples[j].value;
        sum_sq += triples[j].value * triples[j].value;
        if (triples[j].value != triples[i].value) multi_valued = true;
        ++j;
      }
      const bool has_zeros = (j - i) < node_size;
      if (multi_valued || has_zeros) {
        const double mean = sum / static_cast<double>(node_size);
        groups.push_back({triples[i].feature, i, j,
                          sum_sq / static_cast<double>(node_size) - mean * mean});
      }
      i = j;
    }
    if (!hp.tree_exact_scan && groups.size() > hp.tree_feature_cap) {
      std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.variance != b.variance) return a.variance > b.variance;
        return a.feature < b.feature;
      });
      groups.resize(hp.tree_feature_cap);
      std::sort(groups.begin(), groups.end(),
                [](const Group& a, const Group& b) { return a.feature < b.feature; });
    }

    std::vector<Candidate> per_group(groups.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(groups.size());
         ++g) {
      const Group& group = groups[static_cast<std::size_t>(g)];
      per_group[static_cast<std::size_t>(g)] = scan_feature(
          triples.data() + group.begin, group.end - group.begin, c0, c1);
    }
    Candidate best;
    for (const Candidate& cand : per_group) {
      if (better(cand, best)) best = cand;
    }
    if (!best.valid) continue;  // no split with positive gain

    Task left, right;
    left.depth = right.depth = task.depth + 1;
    for (std::uint32_t doc : task.docs) {
      if (feature_value(x[doc], best.feature) <= best.threshold) {
        left.docs.push_back(doc);
      } else {
        right.docs.push_back(doc);
      }
    }
    node.is_leaf = false;
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = static_cast<std::int32_t>(model.nodes.size());
    node.right = node.left + 1;
    left.node = node.left;
    right.node = node.right;
    model.nodes.emplace_back();
    model.nodes.emplace_back();
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  return model;
}

}  // namespace textclf
