#ifndef TEXTCLF_CORPUS_HPP
#define TEXTCLF_CORPUS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace textclf {

// The positive (screened-for) class is `depressed`; `control` is negative.
// Every tie in the toolkit resolves to control.
enum class Label : std::uint8_t { control = 0, depressed = 1 };

constexpr const char* kControlName = "control";
constexpr const char* kDepressedName = "depressed";

const char* label_name(Label label);

// Parses "depressed"/"control"; anything else throws (closed two-class set).
Label parse_label(const std::string& name);

struct Document {
  std::string id;
  std::string text;
  Label label = Label::control;
};

// Immutable after construction; safe to share across concurrent readers.
class Corpus {
 public:
  Corpus() = default;

  // Validates id uniqueness and tallies class counts.
  static Corpus from_documents(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const Document& operator[](std::size_t i) const { return documents_[i]; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

  std::size_t count(Label label) const {
    return class_counts_[static_cast<std::size_t>(label)];
  }
  std::array<std::size_t, 2> class_counts() const { return class_counts_; }

 private:
  std::vector<Document> documents_;
  std::array<std::size_t, 2> class_counts_ = {0, 0};
};

// JSONL: one object per line with string fields id, text, label. UTF-8, LF.
Corpus load_jsonl(const std::string& path);
void save_jsonl(const Corpus& corpus, const std::string& path);

// CSV: RFC 4180, header names columns id,text,label (any order; extra
// columns are ignored).
Corpus load_csv(const std::string& path);

}  // namespace textclf

#endif  // TEXTCLF_CORPUS_HPP
