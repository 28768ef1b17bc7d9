#pragma once

// Rule packs as JSON documents: load with field-level validation, export
// byte-stably (two exports of the same pack are identical).

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polarqa/error.hpp"
#include "polarqa/rules.hpp"

namespace polarqa {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw DataError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (auto& v : j) {
        if (!v.is_string()) throw DataError(where + ": expected an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

inline int int_field(const ordered_json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw DataError(where + ": missing '" + key + "'");
    if (!j[key].is_number_integer()) throw DataError(where + ": '" + key + "' must be an integer");
    return j[key].get<int>();
}

}  // namespace detail

inline Predicate predicate_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DataError("predicate: missing 'kind'");
    const std::string kind_name = j["kind"].get<std::string>();
    Predicate p;
    p.kind = predicate_from_name(kind_name);
    const std::string where = "predicate '" + kind_name + "'";
    switch (p.kind) {
        case PredicateKind::ContainsAnyToken:
        case PredicateKind::ContainsAnyNgram:
        case PredicateKind::ContainsAnySubstring:
        case PredicateKind::NotContainsAnyToken:
        case PredicateKind::NotContainsAnySubstring:
        case PredicateKind::EndsWithAny:
        case PredicateKind::ContainsChar:
        case PredicateKind::NotContainsChar:
            if (!j.contains("surfaces")) throw DataError(where + ": missing 'surfaces'");
            p.surfaces = detail::string_list(j["surfaces"], where + ".surfaces");
            break;
        case PredicateKind::TokenCountBetween:
            p.min = detail::int_field(j, "min", where);
            p.max = detail::int_field(j, "max", where);
            break;
        case PredicateKind::MaxMentions:
            p.limit = detail::int_field(j, "limit", where);
            break;
        default: break;  // flag predicates carry no payload
    }
    detail::validate_predicate(p);
    return p;
}

inline ordered_json predicate_to_json(const Predicate& p) {
    ordered_json j;
    j["kind"] = std::string(predicate_name(p.kind));
    switch (p.kind) {
        case PredicateKind::ContainsAnyToken:
        case PredicateKind::ContainsAnyNgram:
        case PredicateKind::ContainsAnySubstring:
        case PredicateKind::NotContainsAnyToken:
        case PredicateKind::NotContainsAnySubstring:
        case PredicateKind::EndsWithAny:
        case PredicateKind::ContainsChar:
        case PredicateKind::NotContainsChar: j["surfaces"] = p.surfaces; break;
        case PredicateKind::TokenCountBetween:
            j["min"] = p.min;
            j["max"] = p.max;
            break;
        case PredicateKind::MaxMentions: j["limit"] = p.limit; break;
        default: break;
    }
    return j;
}

inline Keyword keyword_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("surface") || !j["surface"].is_string())
        throw DataError(where + ": keyword missing 'surface'");
    Keyword k;
    k.surface = j["surface"].get<std::string>();
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw DataError(where + ": keyword 'mode' must be a string");
        k.mode = match_mode_from_name(j["mode"].get<std::string>());
    }
    if (j.contains("gloss")) {
        if (!j["gloss"].is_string()) throw DataError(where + ": keyword 'gloss' must be a string");
        k.gloss = j["gloss"].get<std::string>();
    }
    return k;
}

inline ordered_json keyword_to_json(const Keyword& k) {
    ordered_json j;
    j["surface"] = k.surface;
    j["mode"] = std::string(match_mode_name(k.mode));
    if (k.gloss) j["gloss"] = *k.gloss;
    return j;
}

inline SpecialRule special_rule_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
        throw DataError("special rule: missing 'name'");
    const std::string name = j["name"].get<std::string>();
    if (name == "verb-echo") {
        VerbEchoRule r;
        if (!j.contains("lexicon")) throw DataError("verb-echo: missing 'lexicon'");
        r.lexicon = detail::string_list(j["lexicon"], "verb-echo.lexicon");
        if (j.contains("negators"))
            r.negators = detail::string_list(j["negators"], "verb-echo.negators");
        return r;
    }
    if (name == "verb-presence") {
        VerbPresenceRule r;
        if (j.contains("forms")) r.forms = detail::string_list(j["forms"], "verb-presence.forms");
        if (j.contains("infinitive_suffixes"))
            r.infinitive_suffixes =
                detail::string_list(j["infinitive_suffixes"], "verb-presence.infinitive_suffixes");
        if (j.contains("min_token_length"))
            r.min_token_length = detail::int_field(j, "min_token_length", "verb-presence");
        return r;
    }
    if (name == "not-ends-with-any") {
        NotEndsWithAnyRule r;
        if (!j.contains("surfaces")) throw DataError("not-ends-with-any: missing 'surfaces'");
        r.surfaces = detail::string_list(j["surfaces"], "not-ends-with-any.surfaces");
        return r;
    }
    throw DataError("unknown special rule: '" + name + "'");
}

inline ordered_json special_rule_to_json(const SpecialRule& r) {
    ordered_json j;
    j["name"] = std::string(special_rule_name(r));
    if (auto* echo = std::get_if<VerbEchoRule>(&r)) {
        j["lexicon"] = echo->lexicon;
        j["negators"] = echo->negators;
    } else if (auto* verb = std::get_if<VerbPresenceRule>(&r)) {
        j["forms"] = verb->forms;
        j["infinitive_suffixes"] = verb->infinitive_suffixes;
        j["min_token_length"] = verb->min_token_length;
    } else if (auto* ends = std::get_if<NotEndsWithAnyRule>(&r)) {
        j["surfaces"] = ends->surfaces;
    }
    return j;
}

inline RulePack pack_from_json(const ordered_json& j) {
    if (!j.is_object()) throw DataError("rule pack: expected a JSON object");
    RulePack pack;
    if (!j.contains("language") || !j["language"].is_string())
        throw DataError("rule pack: missing 'language'");
    pack.language = j["language"].get<std::string>();
    if (!j.contains("tokenizer") || !j["tokenizer"].is_string())
        throw DataError("rule pack: missing 'tokenizer'");
    pack.tokenizer = tokenizer_from_name(j["tokenizer"].get<std::string>());
    if (j.contains("answer_keyword_anchor")) {
        const std::string a = j["answer_keyword_anchor"].get<std::string>();
        if (a == "start")
            pack.answer_anchor = AnswerAnchor::Start;
        else if (a == "anywhere")
            pack.answer_anchor = AnswerAnchor::Anywhere;
        else
            throw DataError("rule pack: answer_keyword_anchor must be 'start' or 'anywhere'");
    }
    if (j.contains("question_rules"))
        for (auto& p : j["question_rules"]) pack.question_rules.push_back(predicate_from_json(p));
    if (j.contains("yes_keywords"))
        for (auto& k : j["yes_keywords"])
            pack.yes_keywords.push_back(keyword_from_json(k, "yes_keywords"));
    if (j.contains("no_keywords"))
        for (auto& k : j["no_keywords"])
            pack.no_keywords.push_back(keyword_from_json(k, "no_keywords"));
    if (j.contains("answer_constraints"))
        for (auto& p : j["answer_constraints"])
            pack.answer_constraints.push_back(predicate_from_json(p));
    if (j.contains("special_rules"))
        for (auto& r : j["special_rules"]) pack.special_rules.push_back(special_rule_from_json(r));
    validate_pack(pack);
    return pack;
}

inline ordered_json pack_to_json(const RulePack& pack) {
    ordered_json j;
    j["language"] = pack.language;
    j["tokenizer"] = std::string(tokenizer_name(pack.tokenizer));
    j["answer_keyword_anchor"] =
        pack.answer_anchor == AnswerAnchor::Start ? "start" : "anywhere";
    j["question_rules"] = ordered_json::array();
    for (auto& p : pack.question_rules) j["question_rules"].push_back(predicate_to_json(p));
    j["yes_keywords"] = ordered_json::array();
    for (auto& k : pack.yes_keywords) j["yes_keywords"].push_back(keyword_to_json(k));
    j["no_keywords"] = ordered_json::array();
    for (auto& k : pack.no_keywords) j["no_keywords"].push_back(keyword_to_json(k));
    j["answer_constraints"] = ordered_json::array();
    for (auto& p : pack.answer_constraints) j["answer_constraints"].push_back(predicate_to_json(p));
    j["special_rules"] = ordered_json::array();
    for (auto& r : pack.special_rules) j["special_rules"].push_back(special_rule_to_json(r));
    return j;
}

inline RulePack load_pack(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule pack: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("rule pack " + path + ": " + e.what());
    }
    try {
        return pack_from_json(j);
    } catch (DataError& e) {
        throw DataError("rule pack " + path + ": " + e.what());
    }
}

inline std::string pack_to_string(const RulePack& pack) { return pack_to_json(pack).dump(2) + "\n"; }

// Human-readable listing for `pack show`.
inline std::string pack_describe(const RulePack& pack) {
    std::ostringstream out;
    out << "language: " << pack.language << "\n";
    out << "tokenizer: " << tokenizer_name(pack.tokenizer) << "\n";
    out << "answer keyword anchor: "
        << (pack.answer_anchor == AnswerAnchor::Start ? "start" : "anywhere") << "\n";
    auto describe_predicate = [&](const Predicate& p) {
        out << "  - " << predicate_name(p.kind);
        if (!p.surfaces.empty()) {
            out << ": ";
            for (std::size_t i = 0; i < p.surfaces.size(); ++i)
                out << (i ? ", " : "") << p.surfaces[i];
        }
        if (p.kind == PredicateKind::TokenCountBetween) out << ": " << p.min << ".." << p.max;
        if (p.kind == PredicateKind::MaxMentions) out << ": " << p.limit;
        out << "\n";
    };
    out << "question rules (" << pack.question_rules.size() << "):\n";
    for (auto& p : pack.question_rules) describe_predicate(p);
    auto describe_keywords = [&](const char* label, const std::vector<Keyword>& kws) {
        out << label << " (" << kws.size() << "):\n";
        for (auto& k : kws) {
            out << "  - " << k.surface << " [" << match_mode_name(k.mode) << "]";
            if (k.gloss) out << " -- " << *k.gloss;
            out << "\n";
        }
    };
    describe_keywords("yes keywords", pack.yes_keywords);
    describe_keywords("no keywords", pack.no_keywords);
    out << "answer constraints (" << pack.answer_constraints.size() << "):\n";
    for (auto& p : pack.answer_constraints) describe_predicate(p);
    out << "special rules (" << pack.special_rules.size() << "):\n";
    for (auto& r : pack.special_rules) out << "  - " << special_rule_name(r) << "\n";
    return out.str();
}

}  // namespace polarqa
