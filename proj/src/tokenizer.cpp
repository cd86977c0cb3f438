#include "textclf/tokenizer.hpp"

#include "textclf/unicode.hpp"

namespace textclf {

std::vector<std::string> tokenize(const std::string& text,
                                  const TokenRule& rule) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_len = 0;  // codepoints, not bytes
  std::size_t pos = 0;
  const auto flush = [&] {
    if (current_len >= 2) tokens.push_back(current);
    current.clear();
    current_len = 0;
  };
  while (pos < text.size()) {
    char32_t cp = decode_utf8(text, pos);
    if (rule.lowercase) cp = to_lower(cp);
    if (is_word_char(cp)) {
      append_utf8(current, cp);
      ++current_len;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace textclf
