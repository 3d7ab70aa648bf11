#include "stylo/tokenizer.hpp"

#include <array>
#include <algorithm>

#include "utf8.hpp"

namespace stylo {

namespace {

using utf8::decode;

// Elided prefixes longer than two letters. One- and two-letter prefixes
// (l', d', j', n', s', t', c', m', qu', ...) elide unconditionally.
constexpr std::string_view kLongElisions[] = {"jusqu", "lorsqu"};

constexpr std::string_view kClitics[] = {
    "t", "on", "je", "vous", "il", "ils", "elle", "elles", "ce", "nous",
};

bool is_word_cp(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

std::size_t letter_count(std::string_view s) {
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        if (!utf8::is_letter(decode(s, i))) return static_cast<std::size_t>(-1);
        ++n;
    }
    return n;
}

bool is_elidable_prefix(std::string_view letters) {
    auto n = letter_count(letters);
    if (n == static_cast<std::size_t>(-1) || n == 0) return false;
    if (n <= 2) return true;
    auto folded = utf8::fold_lower(letters);
    return std::find(std::begin(kLongElisions), std::end(kLongElisions), folded) !=
           std::end(kLongElisions);
}

bool is_clitic(std::string_view part) {
    auto folded = utf8::fold_lower(part);
    return std::find(std::begin(kClitics), std::end(kClitics), folded) !=
           std::end(kClitics);
}

// Splits one raw word run. Pushes tokens and the separators *between* them
// (a hyphen dropped between clitics, or nothing after an elision).
void split_word(std::string_view word, std::vector<std::string>& tokens,
                std::vector<std::string>& seps, std::string& pending_sep) {
    // Pass 1: elision splits. Find apostrophes whose prefix (letters since
    // the previous split) is elidable; the apostrophe stays on the left.
    std::vector<std::string_view> segments;
    std::size_t seg_start = 0, i = 0;
    while (i < word.size()) {
        std::size_t cp_start = i;
        char32_t cp = decode(word, i);
        if (utf8::is_apostrophe(cp) && i < word.size() &&
            is_elidable_prefix(word.substr(seg_start, cp_start - seg_start))) {
            segments.push_back(word.substr(seg_start, i - seg_start));
            seg_start = i;
        }
    }
    segments.push_back(word.substr(seg_start));

    auto emit = [&](std::string_view tok, std::string_view sep_after) {
        tokens.emplace_back(tok);
        seps.push_back(std::move(pending_sep));
        pending_sep.assign(sep_after);
    };

    // Pass 2: per segment, detach trailing inversion clitics at hyphens.
    for (std::size_t s = 0; s < segments.size(); ++s) {
        std::string_view seg = segments[s];
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= seg.size(); ++k) {
            if (k == seg.size() || seg[k] == '-') {
                parts.push_back(seg.substr(start, k - start));
                start = k + 1;
            }
        }
        std::size_t head_end = parts.size(); // parts[head_end..] are clitics
        while (head_end > 0 && is_clitic(parts[head_end - 1])) --head_end;
        if (head_end == parts.size()) {
            // No trailing clitics: keep the segment whole (tiers-monde).
            emit(seg, "");
            continue;
        }
        if (head_end > 0) {
            // Head keeps its internal hyphens.
            std::size_t head_len = static_cast<std::size_t>(
                parts[head_end - 1].data() + parts[head_end - 1].size() - seg.data());
            emit(seg.substr(0, head_len), "-");
        }
        for (std::size_t p = head_end; p < parts.size(); ++p)
            emit(parts[p], p + 1 < parts.size() ? "-" : "");
    }
}

} // namespace

std::string TokenizedText::reassemble() const {
    std::string out = separators.empty() ? std::string{} : separators[0];
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        out += tokens[i];
        out += separators[i + 1];
    }
    return out;
}

TokenizedText tokenize(std::string_view text) {
    TokenizedText result;
    std::string pending_sep;

    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = decode(text, i);

        if (utf8::is_space(cp)) {
            while (i < text.size()) {
                std::size_t k = i;
                if (!utf8::is_space(decode(text, k))) break;
                i = k;
            }
            pending_sep += text.substr(start, i - start);
            continue;
        }

        if (is_word_cp(cp)) {
            // Consume the raw run: word characters, plus apostrophes and
            // hyphens that are followed by another word character.
            std::size_t end = i;
            while (end < text.size()) {
                std::size_t k = end;
                char32_t c = decode(text, k);
                if (is_word_cp(c)) {
                    end = k;
                    continue;
                }
                if ((utf8::is_apostrophe(c) || c == '-') && k < text.size()) {
                    std::size_t k2 = k;
                    if (is_word_cp(decode(text, k2))) {
                        end = k;
                        continue;
                    }
                }
                break;
            }
            split_word(text.substr(start, end - start), result.tokens,
                       result.separators, pending_sep);
            i = end;
            continue;
        }

        // Punctuation: one code point per token.
        result.tokens.emplace_back(text.substr(start, i - start));
        result.separators.push_back(std::move(pending_sep));
        pending_sep.clear();
    }
    result.separators.push_back(std::move(pending_sep));
    return result;
}

std::vector<std::string> tokenize_forms(std::string_view text) {
    return tokenize(text).tokens;
}

} // namespace stylo
