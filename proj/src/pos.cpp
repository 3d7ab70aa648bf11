#include "stylo/pos.hpp"

namespace stylo {

namespace {

struct CategoryEntry {
    PosCategory cat;
    std::string_view code;
};

// Order matters only for readability; lookups are linear over 18 entries.
constexpr CategoryEntry kCategories[] = {
    {PosCategory::NounCommon, "NC"},
    {PosCategory::NounProper, "NP"},
    {PosCategory::Verb, "V"},
    {PosCategory::Adjective, "ADJ"},
    {PosCategory::Adverb, "ADV"},
    {PosCategory::PronounPersonal, "PRO-PERS"},
    {PosCategory::PronounOther, "PRO"},
    {PosCategory::DeterminerArticle, "DET-ART"},
    {PosCategory::DeterminerPossessive, "DET-POSS"},
    {PosCategory::DeterminerDemonstrative, "DET-DEM"},
    {PosCategory::Number, "NUM"},
    {PosCategory::ConjunctionCoordination, "CC"},
    {PosCategory::ConjunctionSubordination, "CS"},
    {PosCategory::Preposition, "PREP"},
    {PosCategory::Locution, "LOC"},
    {PosCategory::Interjection, "INTJ"},
    {PosCategory::ForeignWord, "ETR"},
    {PosCategory::Punctuation, "PONCT"},
};

constexpr struct {
    VerbTense tense;
    std::string_view suffix;
} kTenses[] = {
    {VerbTense::Present, "PRES"},
    {VerbTense::Imperfect, "IMPF"},
    {VerbTense::SimplePast, "PS"},
    {VerbTense::PastParticiple, "PP"},
    {VerbTense::Infinitive, "INF"},
    {VerbTense::Other, "OTH"},
};

std::optional<PersonTraits> parse_person_suffix(std::string_view s) {
    if (s.size() != 2) return std::nullopt;
    if (s[0] < '1' || s[0] > '3') return std::nullopt;
    if (s[1] != 'S' && s[1] != 'P') return std::nullopt;
    return PersonTraits{s[0] - '0', s[1] == 'P'};
}

} // namespace

std::string_view category_code(PosCategory cat) {
    for (const auto& e : kCategories)
        if (e.cat == cat) return e.code;
    return "?";
}

std::string pos_code(const PosTag& tag) {
    std::string code{category_code(tag.category)};
    if (tag.category == PosCategory::Verb && tag.tense) {
        for (const auto& t : kTenses)
            if (t.tense == *tag.tense) {
                code += '-';
                code += t.suffix;
                break;
            }
        if (tag.passive) code += "-PASS";
    } else if (tag.person) {
        code += '-';
        code += static_cast<char>('0' + tag.person->person);
        code += tag.person->plural ? 'P' : 'S';
    }
    return code;
}

std::optional<PosTag> parse_pos_code(std::string_view code) {
    // Verb codes: V-<tense>[-PASS]. A bare "V" is not in the table.
    if (code.size() > 2 && code.substr(0, 2) == "V-") {
        std::string_view rest = code.substr(2);
        bool passive = false;
        if (rest.size() > 5 && rest.substr(rest.size() - 5) == "-PASS") {
            passive = true;
            rest.remove_suffix(5);
        }
        for (const auto& t : kTenses)
            if (t.suffix == rest) return PosTag::verb(t.tense, passive);
        return std::nullopt;
    }
    // Person-bearing codes: PRO-PERS[-<1|2|3><S|P>], DET-POSS[-<1|2|3><S|P>].
    for (std::string_view base : {std::string_view{"PRO-PERS"}, std::string_view{"DET-POSS"}}) {
        if (code.substr(0, base.size()) == base) {
            PosCategory cat = base == "PRO-PERS" ? PosCategory::PronounPersonal
                                                 : PosCategory::DeterminerPossessive;
            if (code.size() == base.size()) return PosTag::of(cat);
            if (code.size() == base.size() + 3 && code[base.size()] == '-') {
                if (auto p = parse_person_suffix(code.substr(base.size() + 1))) {
                    PosTag tag = PosTag::of(cat);
                    tag.person = *p;
                    return tag;
                }
            }
            return std::nullopt;
        }
    }
    for (const auto& e : kCategories)
        if (e.code == code && e.cat != PosCategory::Verb) return PosTag::of(e.cat);
    return std::nullopt;
}

bool is_punctuation(const PosTag& tag) {
    return tag.category == PosCategory::Punctuation;
}

bool is_content_category(PosCategory cat) {
    return cat == PosCategory::NounCommon || cat == PosCategory::NounProper ||
           cat == PosCategory::Verb || cat == PosCategory::Adjective;
}

} // namespace stylo
