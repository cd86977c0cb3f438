#include <bit>
#include <cstring>
#include <fstream>

#include "textclf/error.hpp"
#include "textclf/models.hpp"

static_assert(std::endian::native == std::endian::little,
              "model files are little-endian; big-endian hosts need byte swaps");

namespace textclf {

namespace {

constexpr char kMagic[4] = {'T', 'X', 'C', 'M'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint32_t crc32(const std::string& data) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) {
        c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      }
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t crc = 0xFFFFFFFFu;
  for (unsigned char byte : data) {
    crc = table[(crc ^ byte) & 0xFF] ^ (crc >> 8);
  }
  return crc ^ 0xFFFFFFFFu;
}

struct Writer {
  std::string buf;

  void raw(const void* p, std::size_t n) {
    buf.append(static_cast<const char*>(p), n);
  }
  void u8(std::uint8_t v) { raw(&v, 1); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void i32(std::int32_t v) { raw(&v, 4); }
  void f64(double v) { raw(&v, 8); }
  void f64s(const std::vector<double>& v) {
    raw(v.data(), v.size() * sizeof(double));
  }
};

struct Reader {
  const std::string& buf;
  std::size_t pos = 0;
  const std::string& path;

  void raw(void* p, std::size_t n) {
    if (pos + n > buf.size()) {
      throw Error(path + ": truncated model file");
    }
    std::memcpy(p, buf.data() + pos, n);
    pos += n;
  }
  std::uint8_t u8() { std::uint8_t v; raw(&v, 1); return v; }
  std::uint32_t u32() { std::uint32_t v; raw(&v, 4); return v; }
  std::uint64_t u64() { std::uint64_t v; raw(&v, 8); return v; }
  std::int32_t i32() { std::int32_t v; raw(&v, 4); return v; }
  double f64() { double v; raw(&v, 8); return v; }
  std::vector<double> f64s(std::size_t n) {
    std::vector<double> v(n);
    raw(v.data(), n * sizeof(double));
    return v;
  }
};

struct PayloadWriter {
  Writer& w;

  void operator()(const NaiveBayesModel& m) {
    w.f64(m.alpha);
    w.f64(m.log_prior[0]);
    w.f64(m.log_prior[1]);
    w.f64s(m.feature_log_prob[0]);
    w.f64s(m.feature_log_prob[1]);
  }
  void operator()(const LogisticModel& m) {
    w.f64(m.lambda);
    w.f64(m.threshold);
    w.f64(m.bias);
    w.u8(m.converged ? 1 : 0);
    w.u32(m.iterations);
    w.f64(m.objective);
    w.f64s(m.weights);
  }
  void operator()(const SvmModel& m) {
    w.f64(m.c);
    w.f64(m.offset);
    w.u8(m.converged ? 1 : 0);
    w.u32(m.iterations);
    w.f64(m.objective);
    w.f64s(m.weights);
  }
  void operator()(const RidgeModel& m) {
    w.f64(m.lambda);
    w.f64(m.bias);
    w.u8(m.converged ? 1 : 0);
    w.u32(m.iterations);
    w.f64(m.objective);
    w.f64s(m.weights);
  }
  void operator()(const DecisionTreeModel& m) {
    w.u32(m.max_depth);
    w.u32(m.min_node_size);
    w.u32(m.feature_cap);
    w.u8(m.exact_scan ? 1 : 0);
    w.u64(m.nodes.size());
    for (const TreeNode& node : m.nodes) {
      w.u8(node.is_leaf ? 1 : 0);
      w.u8(static_cast<std::uint8_t>(node.label));
      w.u32(node.feature);
      w.f64(node.threshold);
      w.i32(node.left);
      w.i32(node.right);
      w.u64(node.count_control);
      w.u64(node.count_depressed);
    }
  }
};

}  // namespace

void save_model(const AnyModel& model, const std::string& path) {
  Writer w;
  w.raw(kMagic, 4);
  w.u32(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(model.kind()));
  w.u64(model.dimension());
  std::visit(PayloadWriter{w}, model.value());
  const std::uint32_t checksum = crc32(w.buf);
  w.u32(checksum);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out.write(w.buf.data(), static_cast<std::streamsize>(w.buf.size()));
  if (!out) throw Error("write failed for \"" + path + "\"");
}

AnyModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file \"" + path + "\"");
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (buf.size() < 4 + 4 + 4 + 8 + 4) {
    throw Error(path + ": truncated model file");
  }
  const std::string body = buf.substr(0, buf.size() - 4);
  std::uint32_t stored_crc = 0;
  std::memcpy(&stored_crc, buf.data() + buf.size() - 4, 4);
  if (crc32(body) != stored_crc) {
    throw Error(path + ": model checksum mismatch");
  }

  Reader r{body, 0, path};
  char magic[4];
  r.raw(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw Error(path + ": not a model file");
  }
  const std::uint32_t version = r.u32();
  if (version != kFormatVersion) {
    throw Error(path + ": unsupported model format version " +
                std::to_string(version));
  }
  const std::uint32_t kind_tag = r.u32();
  const std::uint64_t dim64 = r.u64();
  const std::size_t dim = static_cast<std::size_t>(dim64);

  AnyModel model;
  switch (static_cast<ModelKind>(kind_tag)) {
    case ModelKind::naive_bayes: {
      NaiveBayesModel m;
      m.dimension = dim;
      m.alpha = r.f64();
      m.log_prior[0] = r.f64();
      m.log_prior[1] = r.f64();
      m.feature_log_prob[0] = r.f64s(dim);
      m.feature_log_prob[1] = r.f64s(dim);
      model = AnyModel(std::move(m));
      break;
    }
    case ModelKind::logistic: {
      LogisticModel m;
      m.dimension = dim;
      m.lambda = r.f64();
      m.threshold = r.f64();
      m.bias = r.f64();
      m.converged = r.u8() != 0;
      m.iterations = r.u32();
      m.objective = r.f64();
      m.weights = r.f64s(dim);
      model = AnyModel(std::move(m));
      break;
    }
    case ModelKind::svm: {
      SvmModel m;
      m.dimension = dim;
      m.c = r.f64();
      m.offset = r.f64();
      m.converged = r.u8() != 0;
      m.iterations = r.u32();
      m.objective = r.f64();
      m.weights = r.f64s(dim);
      model = AnyModel(std::move(m));
      break;
    }
    case ModelKind::ridge: {
      RidgeModel m;
      m.dimension = dim;
      m.lambda = r.f64();
      m.bias = r.f64();
      m.converged = r.u8() != 0;
      m.iterations = r.u32();
      m.objective = r.f64();
      m.weights = r.f64s(dim);
      model = AnyModel(std::move(m));
      break;
    }
    case ModelKind::tree: {
      DecisionTreeModel m;
      m.dimension = dim;
      m.max_depth = r.u32();
      m.min_node_size = r.u32();
      m.feature_cap = r.u32();
      m.exact_scan = r.u8() != 0;
      const std::uint64_t n_nodes = r.u64();
      m.nodes.resize(static_cast<std::size_t>(n_nodes));
      for (TreeNode& node : m.nodes) {
        node.is_leaf = r.u8() != 0;
        node.label = static_cast<Label>(r.u8());
        node.feature = r.u32();
        node.threshold = r.f64();
        node.left = r.i32();
        node.right = r.i32();
        node.count_control = r.u64();
        node.count_depressed = r.u64();
      }
      if (m.nodes.empty()) throw Error(path + ": tree model has no nodes");
      model = AnyModel(std::move(m));
      break;
    }
    default:
      throw Error(path + ": unknown model kind tag " +
                  std::to_string(kind_tag));
  }
  if (r.pos != body.size()) {
    throw Error(path + ": trailing bytes in model file");
  }
  return model;
}

}  // namespace textclf
