#pragma once

// The five built-in rule packs. Keyword inventories and bounds follow the
// per-language rule write-ups; glosses ride along for `pack show`.

#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/rules.hpp"

namespace polarqa {

inline const std::vector<std::string>& supported_builtin_languages() {
    static const std::vector<std::string> langs = {"es", "hi", "ko", "tr", "zh"};
    return langs;
}

namespace packs {

// Hindi: Twitter threads. Question tweets must look like clean, first-hand
// yes-no questions; answer tweets are replies with tight spam filters.
inline RulePack hindi() {
    RulePack p;
    p.language = "hi";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.question_rules = {
        surfaces_predicate(PredicateKind::ContainsChar, {"?"}),
        surfaces_predicate(PredicateKind::ContainsAnyNgram,
                           {"क्या आप", "क्या हम", "क्या यह", "क्या कभी", "यह हो सकता है"}),
        surfaces_predicate(PredicateKind::NotContainsAnyToken,
                           {"कहाँ", "क्यों", "कैसे", "कौन", "किसका", "कौनसा", "या", "कब"}),
        token_count_between(3, 100),
        flag_predicate(PredicateKind::NoLinks),
        max_mentions(0),
        flag_predicate(PredicateKind::NoHashtags),
        flag_predicate(PredicateKind::NoDigits),
        flag_predicate(PredicateKind::AuthorVerified),
        flag_predicate(PredicateKind::NotRetweet),
        flag_predicate(PredicateKind::NotReply),
    };
    p.yes_keywords = {
        keyword("हाँ", MatchMode::Token, "yes"),
        keyword("हा", MatchMode::Token, "yes"),
        keyword("हां", MatchMode::Token, "yes"),
        keyword("जी", MatchMode::Token, "yes"),
        keyword("ज़रूर", MatchMode::Token, "sure"),
        keyword("सही", MatchMode::Token, "correct"),
        keyword("निश्चित रूप", MatchMode::Ngram, "definitely"),
        // code-switched English keywords, common in Hindi tweets
        keyword("yes", MatchMode::Token),
        keyword("yeah", MatchMode::Token),
        keyword("sure", MatchMode::Token),
        keyword("of course", MatchMode::Ngram),
        keyword("100%", MatchMode::Token),
    };
    p.no_keywords = {
        keyword("नही", MatchMode::Token, "no"),
        keyword("नहीं", MatchMode::Token, "no"),
        keyword("मत", MatchMode::Token, "don't"),
        keyword("न", MatchMode::Token, "not"),
        keyword("no", MatchMode::Token),
        keyword("never", MatchMode::Token),
        keyword("n't", MatchMode::Substring),  // clitic, never a standalone token
    };
    p.answer_constraints = {
        flag_predicate(PredicateKind::NoLinks),
        flag_predicate(PredicateKind::NoHashtags),
        max_mentions(1),  // only the reply back to the asker
        surfaces_predicate(PredicateKind::NotContainsChar, {"?"}),
        token_count_between(6, 30),
    };
    return p;
}

// Turkish: MFAQ-style question/answer pairs. The interrogative particle
// (mi/mı/mu/mü and its inflections) marks yes-no questions.
inline RulePack turkish() {
    RulePack p;
    p.language = "tr";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.question_rules = {
        surfaces_predicate(PredicateKind::ContainsAnyToken,
                           {"mıyım", "miyim", "muyum", "müyüm", "mısın", "misin", "musun",
                            "müsün", "mı", "mi", "mu", "mü", "mıyız", "miyiz", "muyuz",
                            "müyüz", "mısınız", "misiniz", "musunuz", "müsünüz"}),
        surfaces_predicate(PredicateKind::NotContainsAnyToken,
                           {"ne", "nerede", "nasıl", "nasil", "neden", "kim", "hangi", "kimin"}),
        surfaces_predicate(PredicateKind::NotContainsAnySubstring, {"ne zaman"}),
        token_count_between(1, 49),  // "less than 50 tokens"
    };
    p.yes_keywords = {
        keyword("evet", MatchMode::Token, "yes"),
        keyword("evt", MatchMode::Token, "yes, informal"),
        keyword("eet", MatchMode::Token, "yes, informal"),
        keyword("tabii", MatchMode::Token, "of course"),
        keyword("tabi", MatchMode::Token, "of course, informal"),
        keyword("tabiiki", MatchMode::Token, "of course, informal"),
        keyword("tabiki", MatchMode::Token, "of course, informal"),
        keyword("aynen", MatchMode::Token, "absolutely"),
        keyword("hıhı", MatchMode::Token, "yes, informal"),
    };
    p.no_keywords = {
        keyword("hayır", MatchMode::Token, "no"),
        keyword("hayir", MatchMode::Token, "no, informal"),
        keyword("hyr", MatchMode::Token, "no, informal"),
        keyword("yoo", MatchMode::Token, "no, informal"),
    };
    p.answer_constraints = {
        flag_predicate(PredicateKind::AcceptedAnswer),
    };
    return p;
}

// Spanish: CallFriend transcripts. "Contains a verb" is approximated by a
// conjugated-form list plus an infinitive-suffix heuristic.
inline RulePack spanish() {
    RulePack p;
    p.language = "es";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.question_rules = {
        surfaces_predicate(PredicateKind::EndsWithAny, {"?"}),
        surfaces_predicate(
            PredicateKind::NotContainsAnySubstring,
            {"por que", "por qué", "cuando", "cuándo", "donde", "dónde", "como", "cómo",
             "cuanto", "cuánto", "quien", "quién", "cual", "cuál", "cuales", "cuáles"}),
    };
    VerbPresenceRule verbs;
    verbs.forms = {
        "es",      "eres",    "soy",      "somos",    "son",      "era",      "fue",
        "está",    "estás",   "estoy",    "estamos",  "están",    "estaba",   "hay",
        "ha",      "has",     "han",      "he",       "hemos",    "había",    "tiene",
        "tienes",  "tengo",   "tenemos",  "tienen",   "tenía",    "va",       "vas",
        "voy",     "vamos",   "van",      "iba",      "puede",    "puedes",   "puedo",
        "podemos", "pueden",  "podría",   "podrías",  "quiere",   "quieres",  "quiero",
        "quieren", "sabe",    "sabes",    "sé",       "saben",    "viene",    "vienes",
        "vengo",   "vienen",  "hace",     "haces",    "hago",     "hacen",    "hizo",
        "dice",    "dices",   "digo",     "dicen",    "dijo",     "gusta",    "gustan",
        "gustaría", "llama",  "llamas",   "llamo",    "parece",   "queda",    "pasa",
        "sale",    "sales",   "salgo",    "cuesta",   "necesito", "necesitas", "necesita",
        "conoces", "conozco", "entiendes", "entiendo", "crees",   "creo",     "cree",
        "piensas", "pienso",  "piensa",
    };
    verbs.infinitive_suffixes = {"ar", "er", "ir"};
    verbs.min_token_length = 4;
    p.special_rules.push_back(verbs);
    p.yes_keywords = {
        keyword("si", MatchMode::Token, "yes"),
        keyword("sí", MatchMode::Token, "yes"),
        keyword("claro", MatchMode::Token, "sure"),
        keyword("correct", MatchMode::Token, "correct"),
        keyword("correcto", MatchMode::Token, "correct"),
        keyword("vale", MatchMode::Token, "ok"),
        keyword("por supuesto", MatchMode::Ngram, "sure"),
        keyword("quizas", MatchMode::Token, "maybe"),
        keyword("quizás", MatchMode::Token, "maybe"),
        keyword("de acuerdo", MatchMode::Ngram, "understood"),
        keyword("asi es", MatchMode::Ngram, "that's right"),
        keyword("así es", MatchMode::Ngram, "that's right"),
    };
    p.no_keywords = {
        keyword("no", MatchMode::Token, "no"),
        keyword("nah", MatchMode::Token),
        keyword("nope", MatchMode::Token),
        keyword("no se", MatchMode::Ngram, "I don't know"),
        keyword("no sé", MatchMode::Ngram, "I don't know"),
        keyword("no lo se", MatchMode::Ngram, "I don't know"),
        keyword("no lo sé", MatchMode::Ngram, "I don't know"),
        keyword("no estoy seguro", MatchMode::Ngram, "I am not sure"),
        keyword("ni idea", MatchMode::Ngram, "no idea"),
    };
    return p;
}

// Chinese: NaturalConv dialogues and LCCC post/reply threads share this
// pack. Questions end with a modal particle plus the full-width question
// mark; answers must match at the start, or echo the question's first verb.
inline RulePack chinese() {
    RulePack p;
    p.language = "zh";
    p.tokenizer = TokenizerScheme::HanChar;
    p.answer_anchor = AnswerAnchor::Start;
    p.question_rules = {
        surfaces_predicate(PredicateKind::EndsWithAny, {"吗？", "嘛？"}),
    };
    p.yes_keywords = {
        keyword("对", MatchMode::Prefix, "right"),
        keyword("好", MatchMode::Prefix, "okay"),
        keyword("嗯", MatchMode::Prefix, "uh-huh"),
        keyword("恩", MatchMode::Prefix, "uh-huh"),
        keyword("当然", MatchMode::Prefix, "of course"),
        keyword("必须", MatchMode::Prefix, "must"),
    };
    p.no_keywords = {
        keyword("不", MatchMode::Prefix, "no"),
        keyword("没", MatchMode::Prefix, "absence"),
    };
    VerbEchoRule echo;
    echo.lexicon = {"可以", "能", "会", "要", "是", "有", "想", "喜欢", "去", "同意"};
    echo.negators = {"不", "没"};
    p.special_rules.push_back(echo);
    return p;
}

// Korean: AI Hub call-center Q&A. The corpus is already question-bearing, so
// the question side only rejects wh-questions and statement-final particles.
inline RulePack korean() {
    RulePack p;
    p.language = "ko";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.question_rules = {
        surfaces_predicate(
            PredicateKind::NotContainsAnySubstring,
            {"어떻게",   "뭐가",       "뭐 가",     "어떤",      "무슨",      "뭐에요",
             "뭐예요",   "얼만",       "들어가요",  "들어가나요", "몇번",      "몇 평",
             "몇평",     "몇 번",      "언제",      "어디",      "어딧",      "무엇을",
             "어떤 거",  "걸려요",     "몇 분",     "몇분",      "몇 시",     "차량번호확인",
             "비용은요", "어느",       "얼마",      "어떤 부분", "왜 안",     "어느 쪽",
             "어떤 물품", "멫 시까지", "몇시까지",  "몇 일",     "몇시",      "몇일",
             "머 알아야", "뭐 필요",   "몇대",      "몇 대",     "앞자리는요"}),
    };
    NotEndsWithAnyRule ends;
    ends.surfaces = {"할려구요", "하려구요", "아니면",   "했는데요",     "같",
                     "은데요",   "거든요",   "렸는데요", "같아서요",     "싶어서요",
                     "은요",     "가지구요", "같애서",   "하는데요",     "카는데요",
                     "좀 할께요", "가가지고", "놔두고 내렸는데"};
    p.special_rules.push_back(ends);
    p.yes_keywords = {
        keyword("네", MatchMode::Prefix, "yes"),
        keyword("예", MatchMode::Prefix, "yeah"),
        keyword("그렇", MatchMode::Prefix, "right"),
        keyword("맞아", MatchMode::Prefix, "correct"),
    };
    p.no_keywords = {
        keyword("아 없", MatchMode::Prefix, "ah no"),
        keyword("예 없", MatchMode::Prefix, "yeah, no"),
        keyword("안타깝", MatchMode::Prefix, "unfortunately"),
        keyword("아니", MatchMode::Prefix, "no"),
        keyword("아뇨", MatchMode::Prefix, "nay"),
        keyword("아닙", MatchMode::Prefix, "no"),
    };
    return p;
}

}  // namespace packs

inline RulePack builtin_pack(const std::string& language) {
    RulePack p;
    if (language == "hi")
        p = packs::hindi();
    else if (language == "tr")
        p = packs::turkish();
    else if (language == "es")
        p = packs::spanish();
    else if (language == "zh")
        p = packs::chinese();
    else if (language == "ko")
        p = packs::korean();
    else {
        std::string msg = "no built-in rule pack for '" + language + "' (supported:";
        for (auto& l : supported_builtin_languages()) msg += " " + l;
        throw ConfigError(msg + ")");
    }
    validate_pack(p);
    return p;
}

}  // namespace polarqa
