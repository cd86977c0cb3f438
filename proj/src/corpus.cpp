#include "textclf/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "textclf/error.hpp"

namespace textclf {

const char* label_name(Label label) {
  return label == Label::depressed ? kDepressedName : kControlName;
}

Label parse_label(const std::string& name) {
  if (name == kDepressedName) return Label::depressed;
  if (name == kControlName) return Label::control;
  throw Error("unknown label \"" + name + "\" (expected \"" + kDepressedName +
              "\" or \"" + kControlName + "\")");
}

Corpus Corpus::from_documents(std::vector<Document> documents) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  seen.reserve(documents.size());
  for (const Document& doc : documents) {
    if (!seen.insert(doc.id).second) {
      throw Error("duplicate id \"" + doc.id + "\"");
    }
    ++corpus.class_counts_[static_cast<std::size_t>(doc.label)];
  }
  corpus.documents_ = std::move(documents);
  return corpus;
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\"");
  return in;
}

}  // namespace

Corpus load_jsonl(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw Error(path + ": parse error at line " + std::to_string(line_no));
    }
    Document doc;
    for (const char* field : {"id", "text", "label"}) {
      if (!obj.contains(field) || !obj[field].is_string()) {
        throw Error(path + ": parse error at line " + std::to_string(line_no) +
                    ": missing string field \"" + field + "\"");
      }
    }
    doc.id = obj["id"].get<std::string>();
    doc.text = obj["text"].get<std::string>();
    doc.label = parse_label(obj["label"].get<std::string>());
    docs.push_back(std::move(doc));
  }
  return Corpus::from_documents(std::move(docs));
}

void save_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  for (const Document& doc : corpus.documents()) {
    nlohmann::json obj;
    obj["id"] = doc.id;
    obj["text"] = doc.text;
    obj["label"] = label_name(doc.label);
    out << obj.dump() << '\n';
  }
  if (!out) throw Error("write failed for \"" + path + "\"");
}

namespace {

// One RFC 4180 record; quoted fields may span lines. Returns false at EOF.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line_no, const std::string& path) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;
  std::string field;
  bool quoted = false;
  const std::size_t record_line = line_no;
  while (true) {
    if (c == EOF) {
      if (quoted) {
        throw Error(path + ": unterminated quote in record starting at line " +
                    std::to_string(record_line));
      }
      fields.push_back(std::move(field));
      return true;
    }
    char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        int next = in.peek();
        if (next == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line_no;
        field.push_back(ch);
      }
    } else if (ch == '"') {
      if (!field.empty()) {
        throw Error(path + ": stray quote at line " + std::to_string(line_no));
      }
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && in.peek() == '\n') in.get();
      ++line_no;
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
    c = in.get();
  }
}

}  // namespace

Corpus load_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> fields;
  std::size_t line_no = 1;
  if (!read_csv_record(in, fields, line_no, path)) {
    return Corpus::from_documents({});
  }
  int col_id = -1, col_text = -1, col_label = -1;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == "id") col_id = static_cast<int>(i);
    if (fields[i] == "text") col_text = static_cast<int>(i);
    if (fields[i] == "label") col_label = static_cast<int>(i);
  }
  if (col_id < 0 || col_text < 0 || col_label < 0) {
    std::string missing = col_id < 0 ? "id" : (col_text < 0 ? "text" : "label");
    throw Error(path + ": header is missing column \"" + missing + "\"");
  }
  const std::size_t ncols = fields.size();

  std::vector<Document> docs;
  std::size_t record_line = line_no;
  while (read_csv_record(in, fields, line_no, path)) {
    if (fields.size() == 1 && fields[0].empty()) {
      record_line = line_no;
      continue;  // trailing blank line
    }
    if (fields.size() != ncols) {
      throw Error(path + ": wrong field count at line " +
                  std::to_string(record_line) + " (expected " +
                  std::to_string(ncols) + ", got " +
                  std::to_string(fields.size()) + ")");
    }
    Document doc;
    doc.id = fields[static_cast<std::size_t>(col_id)];
    doc.text = fields[static_cast<std::size_t>(col_text)];
    doc.label = parse_label(fields[static_cast<std::size_t>(col_label)]);
    docs.push_back(std::move(doc));
    record_line = line_no;
  }
  return Corpus::from_documents(std::move(docs));
}

}  // namespace textclf
