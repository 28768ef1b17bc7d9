#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "polarqa/builtin_packs.hpp"
#include "polarqa/fixtures.hpp"
#include "polarqa/rule_eval.hpp"

using namespace polarqa;

TEST_CASE("every fixture reproduces its expected classification") {
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        auto fixtures = fixture_corpus(lang);
        INFO(lang << ": " << fixtures.size() << " fixtures");
        CHECK(fixtures.size() >= 40);
        for (auto& f : fixtures) {
            auto r = classify_pair(f.pair, pack);
            INFO(lang << " " << f.pair.id() << " [" << f.note << "]: q='"
                      << f.pair.question.text << "' a='" << f.pair.answer.text << "'");
            CHECK(r.cls == f.expected);
            if (f.expected == PairClass::Discarded) CHECK(r.discard_reason == f.discard_reason);
            if (f.expected == PairClass::DirectYes) CHECK(r.label == Interpretation::Yes);
            if (f.expected == PairClass::DirectNo) CHECK(r.label == Interpretation::No);
        }
    }
}

TEST_CASE("fixture corpora exercise every predicate kind the pack carries") {
    // Every question rule and answer constraint should fail for at least one
    // fixture (otherwise the fixture set never proves the rule can reject).
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        auto fixtures = fixture_corpus(lang);

        std::set<std::string> q_failed, a_failed;
        for (auto& f : fixtures) {
            auto r = classify_pair(f.pair, pack);
            for (auto& e : r.question_trace.fired)
                if (!e.passed) q_failed.insert(e.what);
            if (r.cls == PairClass::Discarded && r.discard_reason != "ambiguous-polarity")
                a_failed.insert(r.discard_reason);
        }
        for (auto& p : pack.question_rules) {
            INFO(lang << ": question rule " << predicate_name(p.kind));
            CHECK(q_failed.count(std::string(predicate_name(p.kind))));
        }
        for (auto& r : pack.special_rules) {
            if (std::holds_alternative<VerbEchoRule>(r)) continue;  // answer side
            INFO(lang << ": special rule " << special_rule_name(r));
            CHECK(q_failed.count(std::string(special_rule_name(r))));
        }
        for (auto& p : pack.answer_constraints) {
            INFO(lang << ": answer constraint " << predicate_name(p.kind));
            CHECK(a_failed.count(std::string(predicate_name(p.kind))));
        }
    }
}

TEST_CASE("fixture corpora include every outcome class") {
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        auto fixtures = fixture_corpus(lang);
        std::map<PairClass, int> seen;
        for (auto& f : fixtures) seen[f.expected]++;
        INFO(lang);
        CHECK(seen[PairClass::NotYesNo] > 0);
        CHECK(seen[PairClass::DirectYes] > 0);
        CHECK(seen[PairClass::DirectNo] > 0);
        CHECK(seen[PairClass::Indirect] > 0);
        // A pack with no answer constraints and start-anchored keywords cannot
        // discard: ambiguity needs two polarities at one position, and a
        // single start position admits only one longest match.
        bool discard_possible = !pack.answer_constraints.empty() ||
                                pack.answer_anchor == AnswerAnchor::Anywhere;
        if (discard_possible) CHECK(seen[PairClass::Discarded] > 0);
    }
}

TEST_CASE("every pack keyword fires in at least one direct fixture") {
    // Each keyword surface should be the matched surface of some fixture's
    // answer trace, so the corpora pin every list entry.
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        auto fixtures = fixture_corpus(lang);
        std::set<std::string> matched;
        for (auto& f : fixtures) {
            auto r = classify_pair(f.pair, pack);
            for (auto& e : r.answer_trace.fired)
                if (e.passed && (e.what == "yes_keyword" || e.what == "no_keyword"))
                    matched.insert(e.matched);
        }
        for (auto& k : pack.yes_keywords) {
            INFO(lang << ": yes keyword '" << k.surface << "'");
            CHECK(matched.count(k.surface));
        }
        for (auto& k : pack.no_keywords) {
            INFO(lang << ": no keyword '" << k.surface << "'");
            CHECK(matched.count(k.surface));
        }
    }
}

TEST_CASE("keyword inventories are disjoint within and consistent across packs") {
    // Within a pack a surface carries one polarity; across packs a shared
    // surface (e.g. "no" in both the Hindi code-switch list and the Spanish
    // pack) never flips polarity.
    std::map<std::string, Interpretation> polarity_of;
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        std::set<std::string> in_pack;
        auto note = [&](const Keyword& k, Interpretation pol) {
            const std::string form = std::string(match_mode_name(k.mode)) + ":" + k.surface;
            INFO(lang << ": " << form);
            CHECK(!in_pack.count(form));  // no duplicate entries in one pack
            in_pack.insert(form);
            auto it = polarity_of.find(k.surface);
            if (it != polarity_of.end())
                CHECK(it->second == pol);  // consistent polarity everywhere
            else
                polarity_of.emplace(k.surface, pol);
        };
        for (auto& k : pack.yes_keywords) note(k, Interpretation::Yes);
        for (auto& k : pack.no_keywords) note(k, Interpretation::No);
    }
}

TEST_CASE("code-switched english keywords live in the hindi pack") {
    auto hi = builtin_pack("hi");
    std::set<std::string> yes, no;
    for (auto& k : hi.yes_keywords) yes.insert(k.surface);
    for (auto& k : hi.no_keywords) no.insert(k.surface);
    for (auto* s : {"yes", "yeah", "sure", "of course", "100%"}) CHECK(yes.count(s));
    for (auto* s : {"no", "never", "n't"}) CHECK(no.count(s));
}

TEST_CASE("spec-pinned fixtures are present with their outcomes") {
    auto find = [](const std::vector<Fixture>& v, const std::string& q, const std::string& a)
        -> const Fixture* {
        for (auto& f : v)
            if (f.pair.question.text == q && f.pair.answer.text == a) return &f;
        return nullptr;
    };

    auto zh = fixture_corpus("zh");
    auto* seat = find(zh, "我可以坐这里吗？", "可以的");
    REQUIRE(seat);
    CHECK(seat->expected == PairClass::DirectYes);

    auto tr = fixture_corpus("tr");
    auto* evet = find(tr, "sen de bizimle birlikte yarın sabah o uzun yola çıkacak musun?",
                      "evet tabii");
    REQUIRE(evet);
    CHECK(evet->expected == PairClass::DirectYes);

    auto es = fixture_corpus("es");
    auto* ni = find(es, "¿vienes mañana?", "ni idea");
    REQUIRE(ni);
    CHECK(ni->expected == PairClass::DirectNo);
}
