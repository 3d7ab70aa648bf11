#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylo {

// Tokenization result with the inter-token separators preserved, so the
// original text can be reassembled byte-for-byte:
//   separators[0] + tokens[0] + separators[1] + ... + tokens[n-1] + separators[n]
struct TokenizedText {
    std::vector<std::string> tokens;
    std::vector<std::string> separators; // always tokens.size() + 1 entries

    std::string reassemble() const;
};

// Splits French running text into word and punctuation tokens.
//
// Rules:
//  - elisions keep their apostrophe and close a token ("l'honneur" ->
//    "l'", "honneur"); recognized for 1-2 letter prefixes plus jusqu' and
//    lorsqu';
//  - inversion clitics attached by hyphens become bare tokens ("parle-t-on"
//    -> "parle", "t", "on"); other hyphenated words stay single tokens
//    ("tiers-monde");
//  - every punctuation mark is a standalone single-character token.
//
// Deterministic; empty input yields an empty token list.
TokenizedText tokenize(std::string_view text);

// Convenience: just the token strings.
std::vector<std::string> tokenize_forms(std::string_view text);

} // namespace stylo
