#pragma once

// Core data model: conversation turns, question-answer pairs, and the
// three-way interpretation label. All types are immutable value types once
// built; construction normalizes text to NFC and trims whitespace.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

struct SourceMeta {
    int link_count = 0;
    int hashtag_count = 0;
    int mention_count = 0;
    bool digit_present = false;
    std::optional<bool> author_verified;
    std::optional<bool> is_retweet;
    std::optional<bool> is_reply;
    std::optional<bool> is_accepted;

    bool operator==(const SourceMeta&) const = default;
};

struct Turn {
    std::string id;
    std::string text;  // NFC, trimmed
    std::string language;
    std::optional<std::string> speaker;
    SourceMeta meta;

    bool operator==(const Turn&) const = default;
};

inline bool valid_language_code(std::string_view code) {
    if (code.size() < 2 || code.size() > 3) return false;
    for (char c : code)
        if (c < 'a' || c > 'z') return false;
    return true;
}

// Normalizes and validates; the single place Turn invariants are enforced.
inline Turn make_turn(std::string id, std::string_view raw_text, std::string language,
                      std::optional<std::string> speaker = std::nullopt, SourceMeta meta = {}) {
    if (!valid_language_code(language))
        throw DataError("turn '" + id + "': invalid language code '" + language + "'");
    if (meta.link_count < 0 || meta.hashtag_count < 0 || meta.mention_count < 0)
        throw DataError("turn '" + id + "': negative metadata count");
    std::string text = uni::trim(uni::nfc(raw_text));
    if (text.empty()) throw DataError("turn '" + id + "': empty text after normalization");
    Turn t;
    t.id = std::move(id);
    t.text = std::move(text);
    t.language = std::move(language);
    t.speaker = std::move(speaker);
    t.meta = meta;
    return t;
}

struct QAPair {
    Turn question;
    Turn answer;
    std::vector<Turn> context_before;
    std::vector<Turn> context_after;
    std::string source;

    std::string id() const { return question.id + "/" + answer.id; }
    bool operator==(const QAPair&) const = default;
};

inline QAPair make_qa_pair(Turn question, Turn answer, std::string source,
                           std::vector<Turn> context_before = {},
                           std::vector<Turn> context_after = {}) {
    if (question.language != answer.language)
        throw DataError("pair " + question.id + "/" + answer.id +
                        ": question and answer languages differ (" + question.language + " vs " +
                        answer.language + ")");
    QAPair p;
    p.question = std::move(question);
    p.answer = std::move(answer);
    p.context_before = std::move(context_before);
    p.context_after = std::move(context_after);
    p.source = std::move(source);
    return p;
}

// Ordinal order Yes < Middle < No; linear kappa weights depend on it.
enum class Interpretation { Yes = 0, Middle = 1, No = 2 };

inline std::string_view to_string(Interpretation v) {
    switch (v) {
        case Interpretation::Yes: return "yes";
        case Interpretation::Middle: return "middle";
        case Interpretation::No: return "no";
    }
    return "?";
}

inline Interpretation interpretation_from_string(std::string_view s) {
    if (s == "yes" || s == "Yes") return Interpretation::Yes;
    if (s == "middle" || s == "Middle") return Interpretation::Middle;
    if (s == "no" || s == "No") return Interpretation::No;
    throw DataError("unknown interpretation label: '" + std::string(s) + "'");
}

}  // namespace polarqa
