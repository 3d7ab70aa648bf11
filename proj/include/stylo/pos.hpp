#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace stylo {

enum class PosCategory {
    NounCommon,
    NounProper,
    Verb,
    Adjective,
    Adverb,
    PronounPersonal,
    PronounOther,
    DeterminerArticle,
    DeterminerPossessive,
    DeterminerDemonstrative,
    Number,
    ConjunctionCoordination,
    ConjunctionSubordination,
    Preposition,
    Locution,
    Interjection,
    ForeignWord,
    Punctuation,
};

enum class VerbTense {
    Present,
    Imperfect,
    SimplePast,
    PastParticiple,
    Infinitive,
    Other,
};

// Person/number marking on personal pronouns and possessive determiners.
struct PersonTraits {
    int person = 3; // 1, 2 or 3
    bool plural = false;

    bool operator==(const PersonTraits&) const = default;
};

// A full part-of-speech tag: category plus the morphological traits the tag
// codes carry. Verbs always have a tense (V-OTH when the tagger does not
// distinguish); the passive hint is an optional extra on verbs.
struct PosTag {
    PosCategory category = PosCategory::NounCommon;
    std::optional<VerbTense> tense;         // set iff category == Verb
    bool passive = false;                   // verbs only
    std::optional<PersonTraits> person;     // PronounPersonal / DeterminerPossessive only

    bool operator==(const PosTag&) const = default;

    static PosTag of(PosCategory cat) { return PosTag{cat, {}, false, {}}; }
    static PosTag verb(VerbTense tense, bool passive = false) {
        return PosTag{PosCategory::Verb, tense, passive, {}};
    }
};

// Short code of a category alone, traits dropped: "NC", "NP", "V",
// "PRO-PERS", "DET-POSS", "PONCT", ... Used as the stable item string for
// pos-category counting and inside vocable keys.
std::string_view category_code(PosCategory cat);

// Full tag code as written in tagged files: "V-PS", "V-PP-PASS",
// "PRO-PERS-1S", "DET-POSS", "NC", ... parse_pos_code(pos_code(t)) == t.
std::string pos_code(const PosTag& tag);

// Parses a tag code from the published table. Unknown codes are fatal:
// returns nullopt and the caller reports the offending code.
std::optional<PosTag> parse_pos_code(std::string_view code);

bool is_punctuation(const PosTag& tag);

// Content words in the collocation sense: common/proper nouns, verbs and
// adjectives.
bool is_content_category(PosCategory cat);

} // namespace stylo
