#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "polarqa/builtin_packs.hpp"
#include "polarqa/mine.hpp"
#include "polarqa/rng.hpp"

using namespace polarqa;
using testutil::TempDir;

namespace {

QAPair tr_pair(int n, const std::string& q, const std::string& a, bool accepted = true) {
    SourceMeta am;
    am.is_accepted = accepted;
    return make_qa_pair(make_turn("q" + std::to_string(n), q, "tr"),
                        make_turn("a" + std::to_string(n), a, "tr", std::nullopt, am), "fix");
}

// 10 pairs: 6 yes-no questions (3 direct-yes, 1 direct-no, 1 indirect,
// 1 discarded) and 4 non-questions.
std::vector<QAPair> ten_pair_fixture() {
    return {
        tr_pair(1, "yarın gelir misin?", "evet gelirim"),
        tr_pair(2, "bu doğru mu?", "aynen öyle"),
        tr_pair(3, "bunu sen mi yaptın?", "tabii ki ben yaptım"),
        tr_pair(4, "bugün müsait misin?", "hayır bugün olmaz"),
        tr_pair(5, "sence olur mu?", "bilemedim valla"),
        tr_pair(6, "kargo geldi mi?", "evet geldi", /*accepted=*/false),
        tr_pair(7, "nerede buluşuyoruz?", "evet orada"),
        tr_pair(8, "bugün hava çok güzel", "evet öyle"),
        tr_pair(9, "ne zaman geliyorsun buraya söyle misin?", "evet birazdan"),
        tr_pair(10, "kim geldi dün akşam?", "hayır kimse"),
    };
}

}  // namespace

TEST_CASE("the ten-pair fixture reproduces the documented report") {
    auto out = mine(ten_pair_fixture(), builtin_pack("tr"));
    CHECK(out.report.pairs_total == 10);
    CHECK(out.report.questions_found == 6);
    CHECK(out.report.direct_count == 4);
    CHECK(out.report.yes_count == 3);
    CHECK(out.report.no_count == 1);
    CHECK(out.report.indirect_count == 1);
    CHECK(out.report.discarded_count == 1);
    CHECK(out.report.yes_ratio() == 0.75);
    CHECK(out.report.no_ratio() == 0.25);
    REQUIRE(out.report.per_reason_discards.size() == 1);
    CHECK(out.report.per_reason_discards.at("accepted_answer") == 1);
    CHECK(out.instances.size() == 4);
    CHECK(out.candidates.size() == 1);
    CHECK(out.candidates[0].pair.id() == "q5/a5");
}

TEST_CASE("empty and match-free streams produce zeroed reports") {
    auto empty = mine({}, builtin_pack("tr"));
    CHECK(empty.report.pairs_total == 0);
    CHECK(empty.report.questions_found == 0);
    CHECK(empty.report.yes_ratio() == 0.0);
    CHECK(empty.instances.empty());
    CHECK(empty.candidates.empty());

    auto none = mine({tr_pair(1, "bugün hava güzel", "evet"),
                      tr_pair(2, "kim o kapıda?", "hiç bilmem")},
                     builtin_pack("tr"));
    CHECK(none.report.pairs_total == 2);
    CHECK(none.report.questions_found == 0);
    CHECK(none.report.direct_count + none.report.indirect_count + none.report.discarded_count ==
          0);
}

TEST_CASE("mixed-language streams are fatal and name the pair") {
    Miner m(builtin_pack("tr"));
    m.feed(tr_pair(1, "geliyor musun?", "evet"));
    auto es = make_qa_pair(make_turn("qx", "¿vienes?", "es"), make_turn("ax", "si", "es"), "s");
    CHECK_THROWS_WITH(m.feed(es), Catch::Matchers::ContainsSubstring("qx/ax"));
}

TEST_CASE("partition and ratio invariants hold on randomized corpora") {
    // synthetic turkish-ish soup: some real questions, some noise
    const std::vector<std::string> q_heads = {"yarın gelir", "bu doğru", "bugün müsait",
                                              "nerede kaldın sen", "bugün hava güzel"};
    const std::vector<std::string> q_tails = {"misin?", "mu?", "misiniz?", "", "diyorum"};
    const std::vector<std::string> answers = {
        "evet gelirim", "hayır olmaz", "belki bakarız", "tabii canım",
        "hiç sanmıyorum valla", "evet", "yoo", "bilmem ki bu nasıl olacak"};
    Rng rng(20240817);
    std::vector<QAPair> pairs;
    for (int i = 0; i < 2000; ++i) {
        std::string q = q_heads[rng.bounded(q_heads.size())];
        std::string tail = q_tails[rng.bounded(q_tails.size())];
        if (!tail.empty()) q += " " + tail;
        pairs.push_back(tr_pair(i, q, answers[rng.bounded(answers.size())],
                                rng.bounded(4) != 0));
    }
    auto out = mine(pairs, builtin_pack("tr"));
    CHECK(out.report.pairs_total == 2000);
    CHECK(out.report.direct_count + out.report.indirect_count + out.report.discarded_count ==
          out.report.questions_found);
    CHECK(out.instances.size() == out.report.direct_count);
    CHECK(out.candidates.size() == out.report.indirect_count);

    // independent recount of the yes ratio
    std::size_t yes = 0;
    for (auto& inst : out.instances)
        if (inst.label == Interpretation::Yes) ++yes;
    CHECK(yes == out.report.yes_count);
    if (out.report.direct_count > 0)
        CHECK(out.report.yes_ratio() ==
              static_cast<double>(yes) / static_cast<double>(out.report.direct_count));
    std::size_t discard_sum = 0;
    for (auto& [reason, count] : out.report.per_reason_discards) discard_sum += count;
    CHECK(discard_sum == out.report.discarded_count);
}

TEST_CASE("per-pair decisions are order-independent") {
    auto pairs = ten_pair_fixture();
    auto forward = mine(pairs, builtin_pack("tr"));
    std::reverse(pairs.begin(), pairs.end());
    auto backward = mine(pairs, builtin_pack("tr"));
    CHECK(forward.report.questions_found == backward.report.questions_found);
    CHECK(forward.report.yes_count == backward.report.yes_count);
    REQUIRE(forward.instances.size() == backward.instances.size());
    // same ids, reversed order
    for (std::size_t i = 0; i < forward.instances.size(); ++i)
        CHECK(forward.instances[i].pair.id() ==
              backward.instances[backward.instances.size() - 1 - i].pair.id());
}

TEST_CASE("dataset export is stable and refuses middle labels") {
    auto out = mine(ten_pair_fixture(), builtin_pack("tr"));
    TempDir dir;
    auto path = dir.file("direct.jsonl");
    export_dataset(out.instances, path);
    std::string once = testutil::read_file(path);
    CHECK(std::count(once.begin(), once.end(), '\n') == 4);
    CHECK(once.find("\"label\":\"yes\"") != std::string::npos);
    CHECK(once.find("\"trace\":") != std::string::npos);

    auto path2 = dir.file("direct2.jsonl");
    export_dataset(out.instances, path2);
    CHECK(once == testutil::read_file(path2));

    auto bad = out.instances;
    bad[0].label = Interpretation::Middle;
    CHECK_THROWS_AS(export_dataset(bad, dir.file("bad.jsonl")), DataError);
}

TEST_CASE("candidate sampling is a seeded uniform subsample") {
    std::vector<IndirectCandidate> cands;
    for (int i = 0; i < 1000; ++i)
        cands.push_back({tr_pair(i, "olur mu bu?", "belki yarın bakarız")});

    auto all = sample_candidates(cands, 1000, 7);
    CHECK(all.size() == 1000);
    std::vector<std::string> ids;
    for (auto& c : all) ids.push_back(c.pair.id());
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());  // no repeats

    auto s1 = sample_candidates(cands, 300, 7);
    auto s2 = sample_candidates(cands, 300, 7);
    REQUIRE(s1.size() == 300);
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].pair.id() == s2[i].pair.id());

    auto other_seed = sample_candidates(cands, 300, 8);
    bool same = true;
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i].pair.id() != other_seed[i].pair.id()) same = false;
    CHECK_FALSE(same);

    CHECK_THROWS_WITH(sample_candidates(cands, 2000, 1),
                      Catch::Matchers::ContainsSubstring("2000") &&
                          Catch::Matchers::ContainsSubstring("1000"));
}

TEST_CASE("report serializations carry every field") {
    auto out = mine(ten_pair_fixture(), builtin_pack("tr"));
    std::string text = report_to_text(out.report);
    CHECK(text.find("yes-no questions found: 6") != std::string::npos);
    CHECK(text.find("direct answers: 4") != std::string::npos);
    CHECK(text.find("discarded by accepted_answer: 1") != std::string::npos);
    CHECK(text.find("yes ratio over direct: 0.7500") != std::string::npos);

    auto j = report_to_json(out.report);
    CHECK(j["questions_found"] == 6);
    CHECK(j["yes_ratio"] == 0.75);
    CHECK(j["per_reason_discards"]["accepted_answer"] == 1);
}
