#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "polarqa/builtin_packs.hpp"
#include "polarqa/rng.hpp"
#include "polarqa/rule_eval.hpp"
#include "polarqa/rule_io.hpp"
#include "polarqa/rules.hpp"

using namespace polarqa;

namespace {

Turn turn(const std::string& text, const std::string& lang, SourceMeta meta = {}) {
    static int n = 0;
    return make_turn("u-" + std::to_string(++n), text, lang, std::nullopt, meta);
}

SourceMeta hi_q_meta() {
    SourceMeta m;
    m.author_verified = true;
    m.is_retweet = false;
    m.is_reply = false;
    return m;
}

}  // namespace

// ---------------------------------------------------------------- questions

TEST_CASE("question gate on the reference examples") {
    auto zh = builtin_pack("zh");
    CHECK(eval_question_rules(turn("我可以坐这里吗？", "zh"), zh).decision);

    auto tr = builtin_pack("tr");
    CHECK_FALSE(eval_question_rules(turn("bugün nerede buluşuyoruz musun?", "tr"), tr).decision);

    auto es = builtin_pack("es");
    CHECK_FALSE(eval_question_rules(turn("¿cuando vienes?", "es"), es).decision);
    CHECK(eval_question_rules(turn("¿vienes mañana?", "es"), es).decision);
}

TEST_CASE("question trace has one entry per conjunctive rule") {
    auto es = builtin_pack("es");
    auto trace = eval_question_rules(turn("¿vienes mañana?", "es"), es);
    // 2 predicates + verb-presence
    REQUIRE(trace.fired.size() == es.question_rules.size() + es.special_rules.size());
    CHECK(trace.decision);
    for (auto& f : trace.fired) CHECK(f.passed);

    auto bad = eval_question_rules(turn("¿cuando vienes?", "es"), es);
    REQUIRE(bad.fired.size() == trace.fired.size());  // failures still listed
    CHECK_FALSE(bad.decision);
}

TEST_CASE("language mismatch is rejected") {
    auto zh = builtin_pack("zh");
    CHECK_THROWS_AS(eval_question_rules(turn("hola?", "es"), zh), DataError);
    CHECK_THROWS_AS(classify_answer(turn("你好吗？", "zh"), turn("si", "es"), zh), DataError);
}

TEST_CASE("metadata-dependent predicates demand the field") {
    auto hi = builtin_pack("hi");
    // no author_verified / retweet / reply flags at all
    CHECK_THROWS_AS(eval_question_rules(turn("क्या आप कल आ रहे हैं?", "hi"), hi), ConfigError);
    CHECK(eval_question_rules(turn("क्या आप कल आ रहे हैं?", "hi", hi_q_meta()), hi).decision);

    auto tr = builtin_pack("tr");
    Turn q = turn("geliyor musun?", "tr");
    CHECK_THROWS_AS(classify_answer(q, turn("evet", "tr"), tr), ConfigError);
}

TEST_CASE("exclusion predicates are monotone") {
    auto tr = builtin_pack("tr");
    const std::vector<std::string> texts = {
        "geliyor musun?", "nerede kaldın geliyor musun?", "bunu bana getir",
        "hazır mısınız?", "ne oldu",
    };
    RulePack stricter = tr;
    stricter.question_rules.push_back(
        surfaces_predicate(PredicateKind::NotContainsAnyToken, {"zzz"}));
    for (auto& t : texts) {
        bool before = eval_question_rules(turn(t, "tr"), tr).decision;
        bool after = eval_question_rules(turn(t, "tr"), stricter).decision;
        if (!before) CHECK_FALSE(after);
    }
}

TEST_CASE("evaluation is deterministic") {
    auto ko = builtin_pack("ko");
    Turn q = turn("지금 예약 가능한가요?", "ko");
    Turn a = turn("예 없어요 오늘은", "ko");
    auto r1 = classify_answer(q, a, ko);
    auto r2 = classify_answer(q, a, ko);
    CHECK(r1.kind == r2.kind);
    CHECK(r1.label == r2.label);
    REQUIRE(r1.trace.fired.size() == r2.trace.fired.size());
    for (std::size_t i = 0; i < r1.trace.fired.size(); ++i) {
        CHECK(r1.trace.fired[i].what == r2.trace.fired[i].what);
        CHECK(r1.trace.fired[i].span == r2.trace.fired[i].span);
    }
}

// ------------------------------------------------------------------ answers

TEST_CASE("hindi reference answer: yes keyword under all constraints") {
    auto hi = builtin_pack("hi");
    Turn q = turn("क्या आप कल आ रहे हैं?", "hi", hi_q_meta());
    Turn a = turn("हाँ मैं कल आपके साथ जरूर आ रहा हूँ", "hi");  // 10 tokens
    auto r = classify_answer(q, a, hi);
    CHECK(r.kind == AnswerKind::Direct);
    CHECK(r.label == Interpretation::Yes);
}

TEST_CASE("constraints run before keywords and name the first failure") {
    auto hi = builtin_pack("hi");
    Turn q = turn("क्या आप कल आ रहे हैं?", "hi", hi_q_meta());

    SourceMeta linky;
    linky.link_count = 2;
    linky.hashtag_count = 1;
    auto r = classify_answer(q, turn("हाँ देखो यह वाला लिंक ठीक है", "hi", linky), hi);
    CHECK(r.kind == AnswerKind::Discarded);
    CHECK(r.discard_reason == "no_links");  // first in constraint order

    auto tr = builtin_pack("tr");
    SourceMeta rejected;
    rejected.is_accepted = false;
    auto r2 = classify_answer(turn("geliyor musun?", "tr"),
                              turn("evet geliyorum", "tr", rejected), tr);
    CHECK(r2.kind == AnswerKind::Discarded);
    CHECK(r2.discard_reason == "accepted_answer");
}

TEST_CASE("both polarities -> ambiguous discard, never a direct label") {
    struct Case {
        const char* lang;
        const char* answer;
        SourceMeta am;
    };
    SourceMeta tr_ok;
    tr_ok.is_accepted = true;
    const std::vector<Case> cases = {
        {"hi", "हाँ नहीं पता मुझे कुछ भी", {}},
        {"tr", "evet hayır karar veremedim", tr_ok},
        {"es", "no claro", {}},
        {"ko", "네 아니 잠시만요", {}},
    };
    const std::map<std::string, std::string> questions = {
        {"hi", "क्या आप कल आ रहे हैं?"},
        {"tr", "geliyor musun?"},
        {"es", "¿vienes mañana?"},
        {"ko", "지금 예약 가능한가요?"},
    };
    for (auto& c : cases) {
        auto pack = builtin_pack(c.lang);
        SourceMeta qm = std::string(c.lang) == "hi" ? hi_q_meta() : SourceMeta{};
        auto r = classify_answer(turn(questions.at(c.lang), c.lang, qm),
                                 turn(c.answer, c.lang, c.am), pack);
        INFO(c.lang << ": " << c.answer);
        CHECK(r.kind == AnswerKind::Discarded);
        CHECK(r.discard_reason == "ambiguous-polarity");
        CHECK_FALSE(r.label.has_value());
    }
}

TEST_CASE("longest match at a position wins: 예 없 over 예") {
    auto ko = builtin_pack("ko");
    Turn q = turn("내일 오전에 자리 있나요?", "ko");
    auto no = classify_answer(q, turn("예 없어요 오늘은", "ko"), ko);
    CHECK(no.kind == AnswerKind::Direct);
    CHECK(no.label == Interpretation::No);

    auto yes = classify_answer(q, turn("예 바로 됩니다", "ko"), ko);
    CHECK(yes.kind == AnswerKind::Direct);
    CHECK(yes.label == Interpretation::Yes);
}

TEST_CASE("match modes behave as documented") {
    RulePack p;
    p.language = "en";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.yes_keywords = {
        keyword("yes", MatchMode::Token),
        keyword("of course", MatchMode::Ngram),
        keyword("oka", MatchMode::Prefix),
    };
    p.no_keywords = {keyword("n't", MatchMode::Substring)};
    validate_pack(p);
    Turn q = turn("really?", "en");

    auto direct = [&](const char* text) {
        auto r = classify_answer(q, turn(text, "en"), p);
        return r.kind == AnswerKind::Direct ? r.label : std::nullopt;
    };

    CHECK(direct("well yes it is") == Interpretation::Yes);     // token
    CHECK(direct("yessir") == std::nullopt);                    // token needs equality
    CHECK(direct("of course it is") == Interpretation::Yes);    // ngram
    CHECK(direct("course of it") == std::nullopt);              // ngram order matters
    CHECK(direct("okay then") == Interpretation::Yes);          // prefix mid-token end
    CHECK(direct("ok then") == std::nullopt);                   // prefix must be complete
    CHECK(direct("i don't know") == Interpretation::No);        // substring at token end
    CHECK(direct("n'talk nonsense") == std::nullopt);           // not at a token end
}

TEST_CASE("edge punctuation does not block token matches") {
    RulePack p;
    p.language = "en";
    p.tokenizer = TokenizerScheme::Whitespace;
    p.yes_keywords = {keyword("yes", MatchMode::Token)};
    p.no_keywords = {keyword("no", MatchMode::Token)};
    Turn q = turn("really?", "en");
    auto r = classify_answer(q, turn("no, thanks", "en"), p);
    CHECK(r.kind == AnswerKind::Direct);
    CHECK(r.label == Interpretation::No);
    auto r2 = classify_answer(q, turn("(yes) obviously", "en"), p);
    CHECK(r2.label == Interpretation::Yes);
    // ... but a keyword buried inside a word still does not match
    auto r3 = classify_answer(q, turn("nothing at all", "en"), p);
    CHECK(r3.kind == AnswerKind::Indirect);
}

TEST_CASE("start anchor restricts matches to the first token") {
    auto zh = builtin_pack("zh");
    Turn q = turn("你要去吗？", "zh");
    auto r = classify_answer(q, turn("我说不行", "zh"), zh);
    CHECK(r.kind == AnswerKind::Indirect);
    auto r2 = classify_answer(q, turn("不行", "zh"), zh);
    CHECK(r2.label == Interpretation::No);
}

TEST_CASE("direct decisions always carry a matched trace entry") {
    auto ko = builtin_pack("ko");
    Turn q = turn("오늘 배송 되나요?", "ko");
    auto r = classify_answer(q, turn("그렇습니다 고객님", "ko"), ko);
    REQUIRE(r.kind == AnswerKind::Direct);
    bool any = false;
    for (auto& f : r.trace.fired)
        if (f.passed && (f.what == "yes_keyword" || f.what == "no_keyword" ||
                         f.what == "verb-echo"))
            any = true;
    CHECK(any);
}

// --------------------------------------------------------------- verb echo

TEST_CASE("verb echo on the reference examples") {
    const std::vector<std::string> lex = {"可以", "能", "会", "要", "是",
                                          "有",   "想", "喜欢", "去", "同意"};
    const std::vector<std::string> neg = {"不", "没"};
    CHECK(verb_echo("我可以坐这里吗？", "可以的", lex, neg) == Interpretation::Yes);
    CHECK(verb_echo("我可以坐这里吗？", "不可以", lex, neg) == Interpretation::No);
    CHECK(verb_echo("你好吗？", "好", lex, neg) == std::nullopt);  // no lexicon verb
    CHECK(verb_echo("你要能去吗？", "能的", lex, neg) == std::nullopt);  // 要 is first
    CHECK(verb_echo("我可以坐这里吗？", "没可以", lex, neg) == Interpretation::No);
    CHECK(verb_echo("我可以坐这里吗？", "坐吧", lex, neg) == std::nullopt);
    CHECK_THROWS_AS(verb_echo("你好吗？", "好", {}, neg), ConfigError);
}

TEST_CASE("verb echo prefers the longest entry at the leftmost position") {
    // both entries start at the same position; the longer one is the verb
    const std::vector<std::string> lex = {"可", "可以"};
    const std::vector<std::string> neg = {"不"};
    CHECK(verb_echo("我可以走吗？", "可以", lex, neg) == Interpretation::Yes);
    CHECK(verb_echo("我可以走吗？", "不可以", lex, neg) == Interpretation::No);
}

// --------------------------------------------------------------- validation

TEST_CASE("pack validation rejects bad packs") {
    RulePack p;
    p.language = "tr";
    p.yes_keywords = {keyword("evet", MatchMode::Token)};
    p.no_keywords = {keyword("evet", MatchMode::Token)};
    CHECK_THROWS_AS(validate_pack(p), DataError);  // both polarities

    RulePack q;
    q.language = "xx!";
    CHECK_THROWS_AS(validate_pack(q), DataError);  // language code

    RulePack r;
    r.language = "tr";
    r.question_rules = {token_count_between(5, 3)};
    CHECK_THROWS_AS(validate_pack(r), DataError);  // min > max

    RulePack s;
    s.language = "tr";
    s.yes_keywords = {keyword("of course", MatchMode::Token)};
    CHECK_THROWS_AS(validate_pack(s), DataError);  // token keyword with space

    RulePack t;
    t.language = "tr";
    t.yes_keywords = {keyword("evet", MatchMode::Ngram)};
    CHECK_THROWS_AS(validate_pack(t), DataError);  // ngram without internal space

    RulePack u;
    u.language = "hi";
    u.question_rules = {surfaces_predicate(PredicateKind::ContainsChar, {"?!"})};
    CHECK_THROWS_AS(validate_pack(u), DataError);  // multi-char payload

    RulePack v;
    v.language = "hi";
    v.question_rules = {surfaces_predicate(PredicateKind::ContainsAnyToken, {})};
    CHECK_THROWS_AS(validate_pack(v), DataError);  // empty surface list
}

TEST_CASE("keyword polarity overlap is detected after normalization") {
    RulePack p;
    p.language = "es";
    p.yes_keywords = {keyword("sí", MatchMode::Token)};  // decomposed sí
    p.no_keywords = {keyword("sí", MatchMode::Token)};    // composed sí
    CHECK_THROWS_AS(validate_pack(p), DataError);
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(predicate_from_name("contains_verb"), DataError);
    CHECK_THROWS_AS(match_mode_from_name("fuzzy"), DataError);
    CHECK_THROWS_AS(builtin_pack("fr"), ConfigError);
    try {
        builtin_pack("fr");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        for (auto& code : supported_builtin_languages())
            CHECK(msg.find(code) != std::string::npos);
    }
}

// ---------------------------------------------------------------- pack i/o

TEST_CASE("built-in packs survive a json round trip, byte stable") {
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        std::string one = pack_to_string(pack);
        RulePack reloaded = pack_from_json(ordered_json::parse(one));
        std::string two = pack_to_string(reloaded);
        INFO(lang);
        CHECK(one == two);
        CHECK(reloaded.language == pack.language);
        CHECK(reloaded.yes_keywords.size() == pack.yes_keywords.size());
        CHECK(reloaded.no_keywords.size() == pack.no_keywords.size());
        CHECK(reloaded.question_rules.size() == pack.question_rules.size());
        CHECK(reloaded.special_rules.size() == pack.special_rules.size());
    }
}

TEST_CASE("turkish pack inventory matches the documented counts") {
    auto tr = builtin_pack("tr");
    REQUIRE(!tr.question_rules.empty());
    CHECK(tr.question_rules[0].kind == PredicateKind::ContainsAnyToken);
    CHECK(tr.question_rules[0].surfaces.size() == 20);
    CHECK(tr.yes_keywords.size() == 9);
    CHECK(tr.no_keywords.size() == 4);
}

TEST_CASE("hindi pack carries the documented bounds") {
    auto hi = builtin_pack("hi");
    bool q_bounds = false, a_bounds = false, a_qmark = false;
    for (auto& p : hi.question_rules)
        if (p.kind == PredicateKind::TokenCountBetween && p.min == 3 && p.max == 100)
            q_bounds = true;
    for (auto& p : hi.answer_constraints) {
        if (p.kind == PredicateKind::TokenCountBetween && p.min == 6 && p.max == 30)
            a_bounds = true;
        if (p.kind == PredicateKind::NotContainsChar) a_qmark = true;
    }
    CHECK(q_bounds);
    CHECK(a_bounds);
    CHECK(a_qmark);
}

TEST_CASE("korean pack lists 어떻게 in the wh exclusions") {
    auto ko = builtin_pack("ko");
    bool found = false;
    for (auto& p : ko.question_rules)
        if (p.kind == PredicateKind::NotContainsAnySubstring)
            for (auto& s : p.surfaces)
                if (s == "어떻게") found = true;
    CHECK(found);
}

TEST_CASE("pack json parse errors carry field context") {
    auto bad = ordered_json::parse(R"({"language":"tr","tokenizer":"whitespace",
        "question_rules":[{"kind":"contains_verb"}]})");
    CHECK_THROWS_WITH(pack_from_json(bad), Catch::Matchers::ContainsSubstring("contains_verb"));

    auto dup = ordered_json::parse(R"({"language":"tr","tokenizer":"whitespace",
        "yes_keywords":[{"surface":"evet"}],"no_keywords":[{"surface":"evet"}]})");
    CHECK_THROWS_WITH(pack_from_json(dup), Catch::Matchers::ContainsSubstring("evet"));

    auto bounds = ordered_json::parse(R"({"language":"tr","tokenizer":"whitespace",
        "question_rules":[{"kind":"token_count_between","min":5,"max":3}]})");
    CHECK_THROWS_WITH(pack_from_json(bounds), Catch::Matchers::ContainsSubstring("min"));
}

TEST_CASE("pack description lists every keyword") {
    auto es = builtin_pack("es");
    std::string desc = pack_describe(es);
    for (auto& k : es.yes_keywords) CHECK(desc.find(k.surface) != std::string::npos);
    for (auto& k : es.no_keywords) CHECK(desc.find(k.surface) != std::string::npos);
}
