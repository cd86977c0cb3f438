#ifndef TEXTCLF_TOKENIZER_HPP
#define TEXTCLF_TOKENIZER_HPP

#include <string>
#include <vector>

namespace textclf {

// Tokens are maximal runs of at least two word characters (Unicode letters,
// numbers, underscore). Lowercasing applies the simple one-to-one Unicode
// mapping before classification. Deterministic; depends only on text + rule.
struct TokenRule {
  bool lowercase = true;
};

std::vector<std::string> tokenize(const std::string& text,
                                  const TokenRule& rule = {});

}  // namespace textclf

#endif  // TEXTCLF_TOKENIZER_HPP
