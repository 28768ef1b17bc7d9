#pragma once

// Declarative rule packs: per-language predicates for yes-no question
// detection plus polarity keywords and constraints for direct answers.
// Packs are plain data; evaluation lives in rule_eval.hpp.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polarqa/corpus.hpp"
#include "polarqa/error.hpp"
#include "polarqa/text.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

enum class PredicateKind {
    ContainsAnyToken,
    ContainsAnyNgram,
    ContainsAnySubstring,
    NotContainsAnyToken,
    NotContainsAnySubstring,
    EndsWithAny,
    ContainsChar,
    NotContainsChar,
    TokenCountBetween,
    MaxMentions,
    NoLinks,
    NoHashtags,
    NoDigits,
    AuthorVerified,
    NotRetweet,
    NotReply,
    AcceptedAnswer,
};

inline constexpr std::pair<PredicateKind, std::string_view> kPredicateNames[] = {
    {PredicateKind::ContainsAnyToken, "contains_any_token"},
    {PredicateKind::ContainsAnyNgram, "contains_any_ngram"},
    {PredicateKind::ContainsAnySubstring, "contains_any_substring"},
    {PredicateKind::NotContainsAnyToken, "not_contains_any_token"},
    {PredicateKind::NotContainsAnySubstring, "not_contains_any_substring"},
    {PredicateKind::EndsWithAny, "ends_with_any"},
    {PredicateKind::ContainsChar, "contains_char"},
    {PredicateKind::NotContainsChar, "not_contains_char"},
    {PredicateKind::TokenCountBetween, "token_count_between"},
    {PredicateKind::MaxMentions, "max_mentions"},
    {PredicateKind::NoLinks, "no_links"},
    {PredicateKind::NoHashtags, "no_hashtags"},
    {PredicateKind::NoDigits, "no_digits"},
    {PredicateKind::AuthorVerified, "author_verified"},
    {PredicateKind::NotRetweet, "not_retweet"},
    {PredicateKind::NotReply, "not_reply"},
    {PredicateKind::AcceptedAnswer, "accepted_answer"},
};

inline std::string_view predicate_name(PredicateKind k) {
    for (auto& [kind, name] : kPredicateNames)
        if (kind == k) return name;
    return "?";
}

inline PredicateKind predicate_from_name(std::string_view name) {
    for (auto& [kind, n] : kPredicateNames)
        if (n == name) return kind;
    throw DataError("unknown predicate kind: '" + std::string(name) + "'");
}

struct Predicate {
    PredicateKind kind;
    std::vector<std::string> surfaces;  // token/ngram/substring/ends_with/char payloads
    int min = 0;                        // token_count_between
    int max = 0;
    int limit = 0;  // max_mentions
};

inline Predicate surfaces_predicate(PredicateKind kind, std::vector<std::string> surfaces) {
    Predicate p;
    p.kind = kind;
    p.surfaces = std::move(surfaces);
    return p;
}

inline Predicate token_count_between(int min, int max) {
    Predicate p;
    p.kind = PredicateKind::TokenCountBetween;
    p.min = min;
    p.max = max;
    return p;
}

inline Predicate max_mentions(int limit) {
    Predicate p;
    p.kind = PredicateKind::MaxMentions;
    p.limit = limit;
    return p;
}

inline Predicate flag_predicate(PredicateKind kind) {
    Predicate p;
    p.kind = kind;
    return p;
}

// How a keyword surface attaches to the tokenized text:
//   token     - equals one token;
//   ngram     - equals a run of consecutive tokens;
//   prefix    - the text starting at a token boundary begins with the surface
//               (covers agglutinative stems and answer-initial matching);
//   substring - a token ends with the surface (e.g. the clitic "n't").
enum class MatchMode { Token, Ngram, Prefix, Substring };

inline std::string_view match_mode_name(MatchMode m) {
    switch (m) {
        case MatchMode::Token: return "token";
        case MatchMode::Ngram: return "ngram";
        case MatchMode::Prefix: return "prefix";
        case MatchMode::Substring: return "substring";
    }
    return "?";
}

inline MatchMode match_mode_from_name(std::string_view s) {
    if (s == "token") return MatchMode::Token;
    if (s == "ngram") return MatchMode::Ngram;
    if (s == "prefix") return MatchMode::Prefix;
    if (s == "substring") return MatchMode::Substring;
    throw DataError("unknown keyword match mode: '" + std::string(s) + "'");
}

struct Keyword {
    std::string surface;
    MatchMode mode = MatchMode::Token;
    std::optional<std::string> gloss;
};

inline Keyword keyword(std::string surface, MatchMode mode, std::string gloss = "") {
    Keyword k;
    k.surface = std::move(surface);
    k.mode = mode;
    if (!gloss.empty()) k.gloss = std::move(gloss);
    return k;
}

// Named extensions beyond the closed predicate vocabulary.

// Answer side: echo of the question's first verb, affirmative or negated.
struct VerbEchoRule {
    std::vector<std::string> lexicon;
    std::vector<std::string> negators;
};

// Question side: approximate "contains a verb" via a form list plus an
// infinitive-suffix heuristic on long-enough tokens.
struct VerbPresenceRule {
    std::vector<std::string> forms;
    std::vector<std::string> infinitive_suffixes;
    int min_token_length = 4;  // in code points
};

// Question side: reject turns whose text (trailing terminal punctuation
// stripped) ends with any of the surfaces.
struct NotEndsWithAnyRule {
    std::vector<std::string> surfaces;
};

using SpecialRule = std::variant<VerbEchoRule, VerbPresenceRule, NotEndsWithAnyRule>;

inline std::string_view special_rule_name(const SpecialRule& r) {
    if (std::holds_alternative<VerbEchoRule>(r)) return "verb-echo";
    if (std::holds_alternative<VerbPresenceRule>(r)) return "verb-presence";
    return "not-ends-with-any";
}

// Where in the answer text keywords may match.
enum class AnswerAnchor { Anywhere, Start };

struct RulePack {
    std::string language;
    TokenizerScheme tokenizer = TokenizerScheme::Whitespace;
    AnswerAnchor answer_anchor = AnswerAnchor::Anywhere;
    std::vector<Predicate> question_rules;  // conjunctive
    std::vector<Keyword> yes_keywords;
    std::vector<Keyword> no_keywords;
    std::vector<Predicate> answer_constraints;  // conjunctive
    std::vector<SpecialRule> special_rules;

    const VerbEchoRule* verb_echo_rule() const {
        for (auto& r : special_rules)
            if (auto* v = std::get_if<VerbEchoRule>(&r)) return v;
        return nullptr;
    }
    const VerbPresenceRule* verb_presence_rule() const {
        for (auto& r : special_rules)
            if (auto* v = std::get_if<VerbPresenceRule>(&r)) return v;
        return nullptr;
    }
    const NotEndsWithAnyRule* not_ends_with_rule() const {
        for (auto& r : special_rules)
            if (auto* v = std::get_if<NotEndsWithAnyRule>(&r)) return v;
        return nullptr;
    }
};

namespace detail {

// Matching is case-insensitive over NFC text, so keyword identity is
// compared on the same normalized form.
inline std::string match_form(std::string_view s) { return uni::lower(uni::nfc(s)); }

inline bool has_internal_space(std::string_view s) {
    auto pos = s.find(' ');
    return pos != std::string_view::npos && pos != 0 && pos != s.size() - 1;
}

inline std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0, i = 0;
    while (i < s.size()) {
        uni::decode_at(s, i);
        ++n;
    }
    return n;
}

inline void validate_keyword(const Keyword& k, TokenizerScheme scheme, std::string_view list) {
    if (k.surface.empty() || uni::trim(k.surface).empty())
        throw DataError(std::string(list) + ": empty keyword surface");
    if (k.mode == MatchMode::Ngram) {
        if (scheme == TokenizerScheme::Whitespace && !has_internal_space(k.surface))
            throw DataError(std::string(list) + ": ngram keyword '" + k.surface +
                            "' needs an internal space");
        if (scheme == TokenizerScheme::HanChar && codepoint_count(k.surface) < 2)
            throw DataError(std::string(list) + ": ngram keyword '" + k.surface +
                            "' needs at least two characters");
    }
    if (k.mode == MatchMode::Token && k.surface.find(' ') != std::string::npos)
        throw DataError(std::string(list) + ": token keyword '" + k.surface +
                        "' must not contain spaces (use ngram)");
}

inline void validate_predicate(const Predicate& p) {
    switch (p.kind) {
        case PredicateKind::ContainsAnyToken:
        case PredicateKind::ContainsAnyNgram:
        case PredicateKind::ContainsAnySubstring:
        case PredicateKind::NotContainsAnyToken:
        case PredicateKind::NotContainsAnySubstring:
        case PredicateKind::EndsWithAny:
            if (p.surfaces.empty())
                throw DataError(std::string(predicate_name(p.kind)) + ": empty surface list");
            for (auto& s : p.surfaces)
                if (s.empty())
                    throw DataError(std::string(predicate_name(p.kind)) + ": empty surface");
            break;
        case PredicateKind::ContainsChar:
        case PredicateKind::NotContainsChar: {
            if (p.surfaces.size() != 1 || codepoint_count(p.surfaces[0]) != 1)
                throw DataError(std::string(predicate_name(p.kind)) +
                                ": payload must be a single character");
            break;
        }
        case PredicateKind::TokenCountBetween:
            if (p.min < 0 || p.min > p.max)
                throw DataError("token_count_between: requires 0 <= min <= max, got min=" +
                                std::to_string(p.min) + " max=" + std::to_string(p.max));
            break;
        case PredicateKind::MaxMentions:
            if (p.limit < 0) throw DataError("max_mentions: negative limit");
            break;
        default: break;
    }
}

}  // namespace detail

// Enforces every RulePack invariant; throws DataError with a field-level
// message on the first violation.
inline void validate_pack(const RulePack& pack) {
    if (!valid_language_code(pack.language))
        throw DataError("rule pack: invalid language code '" + pack.language + "'");

    std::set<std::string> yes_forms;
    for (auto& k : pack.yes_keywords) {
        detail::validate_keyword(k, pack.tokenizer, "yes_keywords");
        yes_forms.insert(detail::match_form(k.surface));
    }
    for (auto& k : pack.no_keywords) {
        detail::validate_keyword(k, pack.tokenizer, "no_keywords");
        if (yes_forms.count(detail::match_form(k.surface)))
            throw DataError("keyword '" + k.surface + "' appears in both polarity lists");
    }
    for (auto& p : pack.question_rules) detail::validate_predicate(p);
    for (auto& p : pack.answer_constraints) detail::validate_predicate(p);

    for (auto& r : pack.special_rules) {
        if (auto* echo = std::get_if<VerbEchoRule>(&r)) {
            if (echo->lexicon.empty()) throw DataError("verb-echo: empty verb lexicon");
        } else if (auto* verb = std::get_if<VerbPresenceRule>(&r)) {
            if (verb->forms.empty() && verb->infinitive_suffixes.empty())
                throw DataError("verb-presence: needs verb forms or suffixes");
            if (verb->min_token_length < 1) throw DataError("verb-presence: min_token_length < 1");
        } else if (auto* ends = std::get_if<NotEndsWithAnyRule>(&r)) {
            if (ends->surfaces.empty()) throw DataError("not-ends-with-any: empty surface list");
        }
    }
}

// --- match traces ---------------------------------------------------------

struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;
    bool operator==(const Span&) const = default;
};

struct Fired {
    std::string what;     // predicate kind, special rule name, or keyword:<surface>
    bool passed = false;  // predicate outcome; keywords are always hits
    std::optional<Span> span;
    std::string matched;  // the surface that matched, when there is one
};

struct MatchTrace {
    bool decision = false;
    std::optional<Interpretation> polarity;
    std::vector<Fired> fired;

    // Compact single-line form for dataset exports.
    std::string summary() const {
        std::string out;
        for (auto& f : fired) {
            if (!f.passed) continue;
            if (!out.empty()) out += ";";
            out += f.what;
            if (!f.matched.empty() && f.matched != f.what) out += "=" + f.matched;
        }
        return out;
    }
};

enum class AnswerKind { Direct, Indirect, Discarded };

struct AnswerDecision {
    AnswerKind kind = AnswerKind::Indirect;
    std::optional<Interpretation> label;  // set iff Direct; never Middle
    std::string discard_reason;           // set iff Discarded
    MatchTrace trace;
};

// Outcome for a whole question-answer pair.
enum class PairClass { NotYesNo, DirectYes, DirectNo, Indirect, Discarded };

inline std::string_view pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::NotYesNo: return "not-yes-no";
        case PairClass::DirectYes: return "direct-yes";
        case PairClass::DirectNo: return "direct-no";
        case PairClass::Indirect: return "indirect";
        case PairClass::Discarded: return "discarded";
    }
    return "?";
}

}  // namespace polarqa
