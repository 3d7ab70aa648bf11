#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/pos.hpp"

namespace stylo {

// Calendar date, ISO-8601 day precision.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    // Strict "YYYY-MM-DD" with real calendar validation.
    static std::optional<Date> parse(std::string_view s);
    std::string to_string() const;
};

// One running-text position: surface form, dictionary headword, tag.
struct Token {
    std::string form;
    std::string lemma;
    PosTag pos;

    bool operator==(const Token&) const = default;
};

// The counting unit: lemma plus POS category with traits dropped. Two tokens
// map to the same vocable iff lemma and category are equal.
struct Vocable {
    std::string lemma;
    PosCategory category = PosCategory::NounCommon;

    bool operator==(const Vocable&) const = default;
    auto operator<=>(const Vocable&) const = default;

    static Vocable of(const Token& t) { return {t.lemma, t.pos.category}; }

    // Stable string key, "lemma/CODE" (e.g. "pouvoir/V"). The category code
    // is appended after the last '/', so a '/' inside a lemma stays
    // recoverable.
    std::string key() const;
};

std::string vocable_key(std::string_view lemma, PosCategory cat);

struct DocMeta {
    std::string id;
    std::string author;
    Date date;
    std::optional<std::string> genre;
    std::optional<std::string> title;

    bool operator==(const DocMeta&) const = default;
};

struct Document {
    DocMeta meta;
    std::vector<std::vector<Token>> sentences;

    bool operator==(const Document&) const = default;

    // Word tokens = everything that is not punctuation.
    std::size_t word_token_count() const;
    std::size_t token_count() const;
};

// Variant spelling -> canonical spelling, matched case-insensitively on the
// variant. Loading rejects chained entries (a canonical value that is itself
// a variant key of a different canonical), which makes apply() idempotent.
class NormalizationTable {
public:
    NormalizationTable() = default;

    // Throws ConfigError on chained entries or conflicting duplicates.
    static NormalizationTable from_pairs(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    // Two tab-separated columns per line: variant, canonical.
    static NormalizationTable load(const std::string& path);

    // Canonical text if `form` is a variant (case-insensitive), else `form`.
    std::string apply(std::string_view form) const;

    bool empty() const { return variants_.empty(); }
    std::size_t size() const { return variants_.size(); }

private:
    std::map<std::string, std::string> variants_; // folded variant -> canonical
};

struct Corpus {
    std::vector<Document> documents;
    NormalizationTable normalization;

    const Document* find(std::string_view id) const;
};

} // namespace stylo
