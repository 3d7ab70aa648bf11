#include "stylo/corpus.hpp"

#include <charconv>
#include <fstream>

#include "stylo/error.hpp"
#include "utf8.hpp"

namespace stylo {

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

int days_in_month(int year, int month) {
    static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return d[month - 1];
}

} // namespace

std::optional<Date> Date::parse(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    Date d;
    if (!parse_int(s.substr(0, 4), d.year) || !parse_int(s.substr(5, 2), d.month) ||
        !parse_int(s.substr(8, 2), d.day))
        return std::nullopt;
    if (d.month < 1 || d.month > 12) return std::nullopt;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
    return d;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::string vocable_key(std::string_view lemma, PosCategory cat) {
    std::string key;
    auto code = category_code(cat);
    key.reserve(lemma.size() + 1 + code.size());
    key.append(lemma);
    key.push_back('/');
    key.append(code);
    return key;
}

std::string Vocable::key() const { return vocable_key(lemma, category); }

std::size_t Document::word_token_count() const {
    std::size_t n = 0;
    for (const auto& sent : sentences)
        for (const auto& tok : sent)
            if (!is_punctuation(tok.pos)) ++n;
    return n;
}

std::size_t Document::token_count() const {
    std::size_t n = 0;
    for (const auto& sent : sentences) n += sent.size();
    return n;
}

NormalizationTable NormalizationTable::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    NormalizationTable t;
    for (const auto& [variant, canonical] : pairs) {
        if (variant.empty())
            throw ConfigError("normalization table: empty variant");
        auto folded = utf8::fold_lower(variant);
        auto [it, inserted] = t.variants_.emplace(folded, canonical);
        if (!inserted && it->second != canonical)
            throw ConfigError("normalization table: variant '" + variant +
                              "' mapped to both '" + it->second + "' and '" + canonical + "'");
    }
    // Reject chains: a canonical that is itself a variant key must map to
    // itself, otherwise apply() would not be idempotent.
    for (const auto& [variant, canonical] : t.variants_) {
        auto it = t.variants_.find(utf8::fold_lower(canonical));
        if (it != t.variants_.end() && it->second != canonical)
            throw ConfigError("normalization table: '" + canonical +
                              "' is both a canonical value and a variant of '" +
                              it->second + "'");
    }
    return t;
}

NormalizationTable NormalizationTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open normalization table");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 2 tab-separated fields");
        pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return from_pairs(pairs);
}

std::string NormalizationTable::apply(std::string_view form) const {
    if (variants_.empty()) return std::string(form);
    auto it = variants_.find(utf8::fold_lower(form));
    if (it == variants_.end()) return std::string(form);
    return it->second;
}

const Document* Corpus::find(std::string_view id) const {
    for (const auto& d : documents)
        if (d.meta.id == id) return &d;
    return nullptr;
}

} // namespace stylo
