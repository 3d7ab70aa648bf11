#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 support, enough for French text. Not a general Unicode
// library: letter/space classification covers ASCII, Latin-1 Supplement and
// Latin Extended-A, which is what the corpora contain.
namespace stylo::utf8 {

// Decodes the code point starting at byte offset `i` and advances `i` past
// it. An invalid byte decodes as its own value and advances by one, so that
// slicing the original string by byte offsets always round-trips.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

bool is_space(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_apostrophe(char32_t cp); // U+0027 and U+2019

char32_t to_lower(char32_t cp);

// Lowercases a whole UTF-8 string (French-aware: accented Latin-1, OE, Y").
std::string fold_lower(std::string_view s);

} // namespace stylo::utf8
