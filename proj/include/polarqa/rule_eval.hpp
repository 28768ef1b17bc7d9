#pragma once

// Rule-pack evaluation: question gating and answer polarity classification.
// All matching is case-insensitive over NFC text. Traces report byte spans
// in the original (unfolded) text.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polarqa/corpus.hpp"
#include "polarqa/error.hpp"
#include "polarqa/rules.hpp"
#include "polarqa/text.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

namespace detail {

// Punctuation that sticks to word edges in transcripts and tweets; it is
// ignored for token-level comparisons ("¿vienes" matches the form "vienes",
// "no," matches the keyword "no"). Terminal punctuation is already split off
// by the tokenizer.
inline bool is_edge_punct(char32_t cp) {
    switch (cp) {
        case U',': case U';': case U':': case U'"': case U'\'': case U'(': case U')':
        case U'[': case U']': case U'{': case U'}': case U'-':
        case U'¿': case U'¡': case U'«': case U'»':
        case U'‘': case U'’': case U'“': case U'”': case U'…':
        case U'–': case U'—': case U'、': case U'，': case U'；':
        case U'：': case U'（': case U'）': case U'「': case U'」':
        case U'『': case U'』': case U'《': case U'》':
            return true;
        default: return false;
    }
}

// Case-folded view of a turn with tokenization and a byte map back to the
// original text (folding can change code point widths, e.g. U+0130 -> i).
// Each token also carries its edge-stripped core.
struct EvalText {
    std::string folded;
    std::vector<std::size_t> to_orig;  // folded.size()+1 entries
    std::vector<Token> tokens;         // spans in folded coordinates
    std::vector<Span> cores;           // folded coords, per token
    std::vector<std::string> core_text;

    Span orig_span(std::size_t off, std::size_t len) const {
        return Span{to_orig[off], to_orig[off + len] - to_orig[off]};
    }
};

inline EvalText make_eval_text(const std::string& text, TokenizerScheme scheme) {
    EvalText et;
    et.folded.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = uni::decode_at(text, i);
        char32_t low = uni::to_lower(cp);
        std::string enc;
        uni::encode_to(low, enc);
        for (std::size_t b = 0; b < enc.size(); ++b) et.to_orig.push_back(start);
        et.folded += enc;
    }
    et.to_orig.push_back(text.size());
    et.tokens = tokenize_spans(et.folded, scheme);

    for (auto& t : et.tokens) {
        std::size_t lo = t.offset, hi = t.offset + t.length;
        if (scheme == TokenizerScheme::Whitespace) {
            while (lo < hi) {
                std::size_t j = lo;
                if (!is_edge_punct(uni::decode_at(et.folded, j))) break;
                lo = j;
            }
            while (hi > lo) {
                std::size_t last = lo, j = lo;
                while (j < hi) {
                    last = j;
                    uni::decode_at(et.folded, j);
                }
                std::size_t k = last;
                if (!is_edge_punct(uni::decode_at(et.folded, k))) break;
                hi = last;
            }
        }
        et.cores.push_back({lo, hi - lo});
        et.core_text.push_back(et.folded.substr(lo, hi - lo));
    }
    return et;
}

inline std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ' ') {
            if (i > start) words.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return words;
}

// A keyword hit: starting token index plus the folded byte span it covers.
struct KeywordHit {
    std::size_t token_index = 0;
    std::size_t offset = 0;  // folded coords
    std::size_t length = 0;
    const Keyword* keyword = nullptr;
    Interpretation polarity = Interpretation::Yes;
};

inline bool token_equals(const EvalText& et, std::size_t i, std::string_view word) {
    return et.tokens[i].text == word || et.core_text[i] == word;
}

// Collects every position where `kw` matches, keyed by starting token.
inline void collect_keyword_hits(const EvalText& et, const Keyword& kw, Interpretation pol,
                                 std::vector<KeywordHit>& out) {
    const std::string form = match_form(kw.surface);
    switch (kw.mode) {
        case MatchMode::Token: {
            for (std::size_t i = 0; i < et.tokens.size(); ++i)
                if (token_equals(et, i, form))
                    out.push_back({i, et.tokens[i].offset, et.tokens[i].length, &kw, pol});
            break;
        }
        case MatchMode::Ngram: {
            const auto words = split_words(form);
            if (words.empty()) return;
            for (std::size_t i = 0; i + words.size() <= et.tokens.size(); ++i) {
                bool all = true;
                for (std::size_t w = 0; w < words.size(); ++w)
                    if (!token_equals(et, i + w, words[w])) {
                        all = false;
                        break;
                    }
                if (all) {
                    const Token& first = et.tokens[i];
                    const Token& last = et.tokens[i + words.size() - 1];
                    out.push_back(
                        {i, first.offset, last.offset + last.length - first.offset, &kw, pol});
                }
            }
            break;
        }
        case MatchMode::Prefix: {
            // Text starting at a token's core begins with the surface; the
            // match may end mid-token and may cross token boundaries.
            for (std::size_t i = 0; i < et.tokens.size(); ++i) {
                std::size_t off = et.cores[i].offset;
                if (et.folded.compare(off, form.size(), form) == 0)
                    out.push_back({i, off, form.size(), &kw, pol});
            }
            break;
        }
        case MatchMode::Substring: {
            // Right-anchored inside a token: the token's core ends with the
            // surface (trailing punctuation does not block the clitic).
            for (std::size_t i = 0; i < et.tokens.size(); ++i) {
                const std::string& core = et.core_text[i];
                if (core.size() >= form.size() &&
                    core.compare(core.size() - form.size(), form.size(), form) == 0) {
                    const Span& c = et.cores[i];
                    out.push_back({i, c.offset + c.length - form.size(), form.size(), &kw, pol});
                }
            }
            break;
        }
    }
}

inline bool required_flag(const std::optional<bool>& v, std::string_view kind,
                          const std::string& turn_id) {
    if (!v)
        throw ConfigError("predicate '" + std::string(kind) +
                          "': source metadata for turn '" + turn_id +
                          "' does not carry this field (wrong corpus profile?)");
    return *v;
}

// Evaluates one predicate against a turn; fills a trace entry.
inline bool eval_predicate(const Predicate& p, const Turn& turn, const EvalText& et,
                           Fired& entry) {
    entry.what = std::string(predicate_name(p.kind));
    entry.span.reset();
    entry.matched.clear();
    auto set_match = [&](std::size_t off, std::size_t len, const std::string& surface) {
        entry.span = et.orig_span(off, len);
        entry.matched = surface;
    };

    switch (p.kind) {
        case PredicateKind::ContainsAnyToken:
        case PredicateKind::NotContainsAnyToken: {
            bool found = false;
            for (auto& s : p.surfaces) {
                const std::string form = match_form(s);
                for (std::size_t i = 0; i < et.tokens.size() && !found; ++i)
                    if (token_equals(et, i, form)) {
                        found = true;
                        set_match(et.tokens[i].offset, et.tokens[i].length, s);
                    }
                if (found) break;
            }
            return p.kind == PredicateKind::ContainsAnyToken ? found : !found;
        }
        case PredicateKind::ContainsAnyNgram: {
            for (auto& s : p.surfaces) {
                const auto words = split_words(match_form(s));
                if (words.empty()) continue;
                for (std::size_t i = 0; i + words.size() <= et.tokens.size(); ++i) {
                    bool all = true;
                    for (std::size_t w = 0; w < words.size(); ++w)
                        if (!token_equals(et, i + w, words[w])) {
                            all = false;
                            break;
                        }
                    if (all) {
                        const Token& first = et.tokens[i];
                        const Token& last = et.tokens[i + words.size() - 1];
                        set_match(first.offset, last.offset + last.length - first.offset, s);
                        return true;
                    }
                }
            }
            return false;
        }
        case PredicateKind::ContainsAnySubstring:
        case PredicateKind::NotContainsAnySubstring: {
            bool found = false;
            for (auto& s : p.surfaces) {
                const std::string form = match_form(s);
                auto pos = et.folded.find(form);
                if (pos != std::string::npos) {
                    found = true;
                    set_match(pos, form.size(), s);
                    break;
                }
            }
            return p.kind == PredicateKind::ContainsAnySubstring ? found : !found;
        }
        case PredicateKind::EndsWithAny: {
            for (auto& s : p.surfaces) {
                const std::string form = match_form(s);
                if (et.folded.size() >= form.size() &&
                    et.folded.compare(et.folded.size() - form.size(), form.size(), form) == 0) {
                    set_match(et.folded.size() - form.size(), form.size(), s);
                    return true;
                }
            }
            return false;
        }
        case PredicateKind::ContainsChar:
        case PredicateKind::NotContainsChar: {
            const std::string form = match_form(p.surfaces[0]);
            auto pos = et.folded.find(form);
            bool found = pos != std::string::npos;
            if (found) set_match(pos, form.size(), p.surfaces[0]);
            return p.kind == PredicateKind::ContainsChar ? found : !found;
        }
        case PredicateKind::TokenCountBetween: {
            auto n = et.tokens.size();
            entry.matched = std::to_string(n) + " tokens";
            return n >= static_cast<std::size_t>(p.min) && n <= static_cast<std::size_t>(p.max);
        }
        case PredicateKind::MaxMentions:
            entry.matched = std::to_string(turn.meta.mention_count) + " mentions";
            return turn.meta.mention_count <= p.limit;
        case PredicateKind::NoLinks: return turn.meta.link_count == 0;
        case PredicateKind::NoHashtags: return turn.meta.hashtag_count == 0;
        case PredicateKind::NoDigits: return !turn.meta.digit_present;
        case PredicateKind::AuthorVerified:
            return required_flag(turn.meta.author_verified, "author_verified", turn.id);
        case PredicateKind::NotRetweet:
            return !required_flag(turn.meta.is_retweet, "not_retweet", turn.id);
        case PredicateKind::NotReply:
            return !required_flag(turn.meta.is_reply, "not_reply", turn.id);
        case PredicateKind::AcceptedAnswer:
            return required_flag(turn.meta.is_accepted, "accepted_answer", turn.id);
    }
    return false;
}

inline std::string strip_trailing_terminal_punct(std::string_view folded) {
    std::string out(folded);
    while (!out.empty()) {
        std::string trimmed = uni::trim(out);
        if (trimmed.size() != out.size()) {
            out = std::move(trimmed);
            continue;
        }
        // peel one trailing terminal-punctuation code point, if any
        std::size_t i = 0, last = 0;
        while (i < out.size()) {
            last = i;
            uni::decode_at(out, i);
        }
        std::size_t at = last;
        char32_t cp = uni::decode_at(out, at);
        if (!is_terminal_punct(cp)) break;
        out.erase(last);
    }
    return out;
}

}  // namespace detail

// --- question side ---------------------------------------------------------

// Evaluates every conjunctive question rule (predicates plus question-side
// special rules); the trace holds one entry per rule, pass or fail, and the
// decision is their conjunction.
inline MatchTrace eval_question_rules(const Turn& turn, const RulePack& pack) {
    if (turn.language != pack.language)
        throw DataError("rule pack for '" + pack.language + "' applied to a '" + turn.language +
                        "' turn (" + turn.id + ")");
    auto et = detail::make_eval_text(turn.text, pack.tokenizer);

    MatchTrace trace;
    trace.decision = true;
    for (auto& p : pack.question_rules) {
        Fired entry;
        entry.passed = detail::eval_predicate(p, turn, et, entry);
        trace.decision = trace.decision && entry.passed;
        trace.fired.push_back(std::move(entry));
    }

    for (auto& rule : pack.special_rules) {
        if (auto* verb = std::get_if<VerbPresenceRule>(&rule)) {
            Fired entry;
            entry.what = "verb-presence";
            entry.passed = false;
            for (std::size_t i = 0; i < et.tokens.size() && !entry.passed; ++i) {
                const std::string& core = et.core_text[i];
                for (auto& f : verb->forms)
                    if (detail::token_equals(et, i, detail::match_form(f))) {
                        entry.passed = true;
                        entry.span = et.orig_span(et.cores[i].offset, et.cores[i].length);
                        entry.matched = core;
                        break;
                    }
                if (entry.passed) break;
                if (detail::codepoint_count(core) <
                    static_cast<std::size_t>(verb->min_token_length))
                    continue;
                for (auto& suf : verb->infinitive_suffixes) {
                    const std::string form = detail::match_form(suf);
                    if (core.size() > form.size() &&
                        core.compare(core.size() - form.size(), form.size(), form) == 0) {
                        entry.passed = true;
                        entry.span = et.orig_span(et.cores[i].offset, et.cores[i].length);
                        entry.matched = core;
                        break;
                    }
                }
            }
            trace.decision = trace.decision && entry.passed;
            trace.fired.push_back(std::move(entry));
        } else if (auto* ends = std::get_if<NotEndsWithAnyRule>(&rule)) {
            Fired entry;
            entry.what = "not-ends-with-any";
            entry.passed = true;
            const std::string stripped = detail::strip_trailing_terminal_punct(et.folded);
            for (auto& s : ends->surfaces) {
                const std::string form = detail::match_form(s);
                if (stripped.size() >= form.size() &&
                    stripped.compare(stripped.size() - form.size(), form.size(), form) == 0) {
                    entry.passed = false;
                    entry.matched = s;
                    break;
                }
            }
            trace.decision = trace.decision && entry.passed;
            trace.fired.push_back(std::move(entry));
        }
        // verb-echo is answer-side; ignored here
    }
    return trace;
}

// --- answer side -----------------------------------------------------------

// Echo of the question's main verb in the answer: finds the leftmost lexicon
// entry in the question (longest wins at a position), then reads the answer's
// leading characters. Returns the polarity, or nullopt when no echo applies.
inline std::optional<Interpretation> verb_echo(const std::string& question,
                                               const std::string& answer,
                                               const std::vector<std::string>& verb_lexicon,
                                               const std::vector<std::string>& negators) {
    if (verb_lexicon.empty()) throw ConfigError("verb-echo: empty verb lexicon");
    const std::string q = detail::match_form(question);
    const std::string a = detail::match_form(answer);

    std::size_t best_pos = std::string::npos;
    std::string best;
    for (auto& v : verb_lexicon) {
        const std::string form = detail::match_form(v);
        if (form.empty()) continue;
        auto pos = q.find(form);
        if (pos == std::string::npos) continue;
        if (pos < best_pos || (pos == best_pos && form.size() > best.size())) {
            best_pos = pos;
            best = form;
        }
    }
    if (best.empty()) return std::nullopt;

    if (a.compare(0, best.size(), best) == 0) return Interpretation::Yes;
    for (auto& n : negators) {
        const std::string neg = detail::match_form(n) + best;
        if (a.compare(0, neg.size(), neg) == 0) return Interpretation::No;
    }
    return std::nullopt;
}

// Classifies an answer turn against a pack. Order of business: answer
// constraints (first failure discards), then polarity keywords with
// longest-match-first arbitration, then special rules, else Indirect.
inline AnswerDecision classify_answer(const Turn& question, const Turn& answer,
                                      const RulePack& pack) {
    if (answer.language != pack.language)
        throw DataError("rule pack for '" + pack.language + "' applied to a '" +
                        answer.language + "' turn (" + answer.id + ")");
    auto et = detail::make_eval_text(answer.text, pack.tokenizer);

    AnswerDecision out;
    for (auto& c : pack.answer_constraints) {
        Fired entry;
        entry.passed = detail::eval_predicate(c, answer, et, entry);
        bool ok = entry.passed;
        out.trace.fired.push_back(std::move(entry));
        if (!ok) {
            out.kind = AnswerKind::Discarded;
            out.discard_reason = std::string(predicate_name(c.kind));
            out.trace.decision = false;
            return out;
        }
    }

    std::vector<detail::KeywordHit> hits;
    for (auto& k : pack.yes_keywords)
        detail::collect_keyword_hits(et, k, Interpretation::Yes, hits);
    for (auto& k : pack.no_keywords)
        detail::collect_keyword_hits(et, k, Interpretation::No, hits);
    if (pack.answer_anchor == AnswerAnchor::Start) {
        std::erase_if(hits, [](const detail::KeywordHit& h) { return h.token_index != 0; });
    }

    // Longest match wins per starting token; equal lengths all survive.
    std::map<std::size_t, std::vector<detail::KeywordHit>> by_pos;
    for (auto& h : hits) {
        auto& slot = by_pos[h.token_index];
        if (slot.empty() || h.length > slot.front().length) {
            slot.clear();
            slot.push_back(h);
        } else if (h.length == slot.front().length) {
            slot.push_back(h);
        }
    }

    bool saw_yes = false, saw_no = false;
    for (auto& [pos, winners] : by_pos)
        for (auto& h : winners) {
            (h.polarity == Interpretation::Yes ? saw_yes : saw_no) = true;
            Fired entry;
            entry.what = std::string(h.polarity == Interpretation::Yes ? "yes_keyword"
                                                                       : "no_keyword");
            entry.passed = true;
            entry.span = et.orig_span(h.offset, h.length);
            entry.matched = h.keyword->surface;
            out.trace.fired.push_back(std::move(entry));
        }

    if (saw_yes && saw_no) {
        out.kind = AnswerKind::Discarded;
        out.discard_reason = "ambiguous-polarity";
        out.trace.decision = false;
        return out;
    }
    if (saw_yes || saw_no) {
        out.kind = AnswerKind::Direct;
        out.label = saw_yes ? Interpretation::Yes : Interpretation::No;
        out.trace.decision = true;
        out.trace.polarity = out.label;
        return out;
    }

    if (const VerbEchoRule* echo = pack.verb_echo_rule()) {
        auto pol = verb_echo(question.text, answer.text, echo->lexicon, echo->negators);
        if (pol) {
            out.kind = AnswerKind::Direct;
            out.label = pol;
            out.trace.decision = true;
            out.trace.polarity = pol;
            Fired entry;
            entry.what = "verb-echo";
            entry.passed = true;
            out.trace.fired.push_back(std::move(entry));
            return out;
        }
    }

    out.kind = AnswerKind::Indirect;
    out.trace.decision = false;
    return out;
}

// Full pipeline for one pair: question gate first, then the answer.
struct PairResult {
    PairClass cls = PairClass::NotYesNo;
    std::string discard_reason;
    std::optional<Interpretation> label;
    MatchTrace question_trace;
    MatchTrace answer_trace;
};

inline PairResult classify_pair(const QAPair& pair, const RulePack& pack) {
    PairResult r;
    r.question_trace = eval_question_rules(pair.question, pack);
    if (!r.question_trace.decision) {
        r.cls = PairClass::NotYesNo;
        return r;
    }
    AnswerDecision a = classify_answer(pair.question, pair.answer, pack);
    r.answer_trace = std::move(a.trace);
    switch (a.kind) {
        case AnswerKind::Direct:
            r.cls = *a.label == Interpretation::Yes ? PairClass::DirectYes : PairClass::DirectNo;
            r.label = a.label;
            break;
        case AnswerKind::Indirect: r.cls = PairClass::Indirect; break;
        case AnswerKind::Discarded:
            r.cls = PairClass::Discarded;
            r.discard_reason = a.discard_reason;
            break;
    }
    return r;
}

}  // namespace polarqa
