#pragma once

// JSONL corpus ingestion. Three input profiles (flat-turns, threaded-replies,
// faq-pairs) produce a normalized turn stream; pairing turns question
// candidates with answer candidates. A fourth profile, qa-pairs, reads
// already-paired records (also the serialization this module writes).

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarqa/corpus.hpp"
#include "polarqa/error.hpp"
#include "polarqa/rule_io.hpp"  // ordered_json
#include "polarqa/unicode.hpp"

namespace polarqa {

enum class IngestProfile { FlatTurns, ThreadedReplies, FaqPairs, QaPairs };

inline std::string_view ingest_profile_name(IngestProfile p) {
    switch (p) {
        case IngestProfile::FlatTurns: return "flat-turns";
        case IngestProfile::ThreadedReplies: return "threaded-replies";
        case IngestProfile::FaqPairs: return "faq-pairs";
        case IngestProfile::QaPairs: return "qa-pairs";
    }
    return "?";
}

inline IngestProfile ingest_profile_from_name(std::string_view s) {
    if (s == "flat-turns") return IngestProfile::FlatTurns;
    if (s == "threaded-replies") return IngestProfile::ThreadedReplies;
    if (s == "faq-pairs") return IngestProfile::FaqPairs;
    if (s == "qa-pairs") return IngestProfile::QaPairs;
    throw UsageError("unknown corpus profile: '" + std::string(s) +
                     "' (supported: flat-turns threaded-replies faq-pairs qa-pairs)");
}

// A turn plus the grouping hints pairing needs but Turn does not carry.
struct SourcedTurn {
    Turn turn;
    std::string conversation;  // grouping key; empty = whole file is one dialogue
    std::string reply_to;      // threaded-replies only
};

struct IngestError {
    std::size_t line = 0;
    std::string message;
};

struct IngestResult {
    std::vector<SourcedTurn> turns;
    std::vector<QAPair> pairs;  // qa-pairs profile only
    std::vector<IngestError> errors;
};

namespace detail {

inline std::string str_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw DataError(std::string("missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

inline std::string opt_str(const ordered_json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return "";
    if (!j[key].is_string()) throw DataError(std::string("field '") + key + "' must be a string");
    return j[key].get<std::string>();
}

inline int list_count(const ordered_json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return 0;
    if (j[key].is_array()) return static_cast<int>(j[key].size());
    if (j[key].is_number_integer()) return j[key].get<int>();  // pre-counted
    throw DataError(std::string("field '") + key + "' must be a list or count");
}

inline std::optional<bool> opt_flag(const ordered_json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_boolean()) throw DataError(std::string("field '") + key + "' must be a boolean");
    return j[key].get<bool>();
}

// Shared by flat-turns and threaded-replies: id/text/lang plus social-media
// metadata. digit_present is computed from the raw text.
inline Turn turn_from_record(const ordered_json& j, std::optional<bool> reply_override) {
    const std::string id = str_field(j, "id");
    const std::string text = str_field(j, "text");
    const std::string lang = str_field(j, "lang");
    std::optional<std::string> speaker;
    if (!opt_str(j, "speaker").empty()) speaker = opt_str(j, "speaker");

    SourceMeta meta;
    meta.link_count = list_count(j, "links");
    meta.hashtag_count = list_count(j, "hashtags");
    meta.mention_count = list_count(j, "mentions");
    meta.digit_present = uni::contains_decimal_digit(text);
    meta.author_verified = opt_flag(j, "verified");
    meta.is_retweet = opt_flag(j, "retweet");
    meta.is_reply = reply_override ? reply_override : opt_flag(j, "reply");
    meta.is_accepted = opt_flag(j, "accepted");
    return make_turn(id, text, lang, speaker, meta);
}

}  // namespace detail

// --- turn / pair serialization ---------------------------------------------

inline ordered_json meta_to_json(const SourceMeta& m) {
    ordered_json j;
    j["links"] = m.link_count;
    j["hashtags"] = m.hashtag_count;
    j["mentions"] = m.mention_count;
    j["digit"] = m.digit_present;
    if (m.author_verified) j["verified"] = *m.author_verified;
    if (m.is_retweet) j["retweet"] = *m.is_retweet;
    if (m.is_reply) j["reply"] = *m.is_reply;
    if (m.is_accepted) j["accepted"] = *m.is_accepted;
    return j;
}

inline SourceMeta meta_from_json(const ordered_json& j) {
    SourceMeta m;
    if (j.contains("links")) m.link_count = j["links"].get<int>();
    if (j.contains("hashtags")) m.hashtag_count = j["hashtags"].get<int>();
    if (j.contains("mentions")) m.mention_count = j["mentions"].get<int>();
    if (j.contains("digit")) m.digit_present = j["digit"].get<bool>();
    m.author_verified = detail::opt_flag(j, "verified");
    m.is_retweet = detail::opt_flag(j, "retweet");
    m.is_reply = detail::opt_flag(j, "reply");
    m.is_accepted = detail::opt_flag(j, "accepted");
    return m;
}

inline ordered_json turn_to_json(const Turn& t) {
    ordered_json j;
    j["id"] = t.id;
    j["text"] = t.text;
    j["lang"] = t.language;
    if (t.speaker) j["speaker"] = *t.speaker;
    j["meta"] = meta_to_json(t.meta);
    return j;
}

inline Turn turn_from_json(const ordered_json& j) {
    std::optional<std::string> speaker;
    if (j.contains("speaker")) speaker = j["speaker"].get<std::string>();
    SourceMeta meta;
    if (j.contains("meta")) meta = meta_from_json(j["meta"]);
    return make_turn(detail::str_field(j, "id"), detail::str_field(j, "text"),
                     detail::str_field(j, "lang"), speaker, meta);
}

inline ordered_json qa_pair_to_json(const QAPair& p) {
    ordered_json j;
    j["question"] = turn_to_json(p.question);
    j["answer"] = turn_to_json(p.answer);
    if (!p.context_before.empty()) {
        j["context_before"] = ordered_json::array();
        for (auto& t : p.context_before) j["context_before"].push_back(turn_to_json(t));
    }
    if (!p.context_after.empty()) {
        j["context_after"] = ordered_json::array();
        for (auto& t : p.context_after) j["context_after"].push_back(turn_to_json(t));
    }
    j["source"] = p.source;
    return j;
}

inline QAPair qa_pair_from_json(const ordered_json& j) {
    if (!j.contains("question") || !j.contains("answer"))
        throw DataError("qa-pairs record needs 'question' and 'answer'");
    std::vector<Turn> before, after;
    if (j.contains("context_before"))
        for (auto& t : j["context_before"]) before.push_back(turn_from_json(t));
    if (j.contains("context_after"))
        for (auto& t : j["context_after"]) after.push_back(turn_from_json(t));
    return make_qa_pair(turn_from_json(j["question"]), turn_from_json(j["answer"]),
                        detail::opt_str(j, "source"), std::move(before), std::move(after));
}

// --- ingestion --------------------------------------------------------------

// Reads one JSONL file under a profile. Malformed lines become error records
// (with their 1-based line number) and processing continues; an unreadable
// file is fatal.
inline IngestResult ingest_jsonl(const std::string& path, IngestProfile profile) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);

    IngestResult out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (uni::trim(line).empty()) continue;
        try {
            ordered_json j = ordered_json::parse(line);
            switch (profile) {
                case IngestProfile::FlatTurns: {
                    SourcedTurn st;
                    st.turn = detail::turn_from_record(j, std::nullopt);
                    st.conversation = detail::opt_str(j, "conversation");
                    out.turns.push_back(std::move(st));
                    break;
                }
                case IngestProfile::ThreadedReplies: {
                    SourcedTurn st;
                    const std::string reply_to = detail::opt_str(j, "reply_to");
                    st.turn = detail::turn_from_record(j, !reply_to.empty());
                    st.reply_to = reply_to;
                    out.turns.push_back(std::move(st));
                    break;
                }
                case IngestProfile::FaqPairs: {
                    // one record carries both sides; the answer inherits the
                    // accepted flag
                    const std::string id = detail::str_field(j, "id");
                    const std::string lang = detail::str_field(j, "lang");
                    const std::string q_text = detail::str_field(j, "question");
                    const std::string a_text = detail::str_field(j, "answer");
                    SourceMeta qm, am;
                    qm.digit_present = uni::contains_decimal_digit(q_text);
                    am.digit_present = uni::contains_decimal_digit(a_text);
                    am.is_accepted = detail::opt_flag(j, "accepted");
                    SourcedTurn q, a;
                    q.turn = make_turn(id + "/q", q_text, lang, std::nullopt, qm);
                    a.turn = make_turn(id + "/a", a_text, lang, std::nullopt, am);
                    q.conversation = a.conversation = id;
                    out.turns.push_back(std::move(q));
                    out.turns.push_back(std::move(a));
                    break;
                }
                case IngestProfile::QaPairs:
                    out.pairs.push_back(qa_pair_from_json(j));
                    break;
            }
        } catch (const nlohmann::json::exception& e) {
            out.errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
        } catch (const Error& e) {
            out.errors.push_back({line_no, e.what()});
        }
    }
    return out;
}

// Pairs question candidates with answer candidates. Linear profiles pair each
// turn with its immediate successor inside a conversation; threaded-replies
// pairs each post with each of its direct replies.
inline std::vector<QAPair> pair_adjacent(const std::vector<SourcedTurn>& turns,
                                         IngestProfile profile, const std::string& source) {
    std::vector<QAPair> pairs;
    if (profile == IngestProfile::ThreadedReplies) {
        std::map<std::string, const SourcedTurn*> by_id;
        for (auto& st : turns) by_id.emplace(st.turn.id, &st);
        for (auto& st : turns) {
            if (st.reply_to.empty()) continue;
            auto it = by_id.find(st.reply_to);
            if (it == by_id.end()) continue;  // reply to something outside the file
            pairs.push_back(make_qa_pair(it->second->turn, st.turn, source));
        }
        return pairs;
    }
    // linear adjacency per conversation, preserving input order
    for (std::size_t i = 0; i + 1 < turns.size(); ++i) {
        if (turns[i].conversation != turns[i + 1].conversation) continue;
        pairs.push_back(make_qa_pair(turns[i].turn, turns[i + 1].turn, source));
    }
    return pairs;
}

// Convenience: file → pairs under one profile (the mine subcommand's path).
inline std::vector<QAPair> load_pairs(const std::string& path, IngestProfile profile,
                                      const std::string& source, std::vector<IngestError>* errs) {
    IngestResult r = ingest_jsonl(path, profile);
    if (errs) *errs = r.errors;
    if (profile == IngestProfile::QaPairs) return std::move(r.pairs);
    return pair_adjacent(r.turns, profile, source);
}

inline void write_qa_pairs(const std::vector<QAPair>& pairs, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write: " + path);
    for (auto& p : pairs) out << qa_pair_to_json(p).dump() << "\n";
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw IoError("write failed: " + path);
    }
}

}  // namespace polarqa
