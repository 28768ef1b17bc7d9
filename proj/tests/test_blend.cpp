#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "polarqa/blend.hpp"

using namespace polarqa;

namespace {

std::vector<ItemRef> refs_of(const EpochManifest& m, const std::string& dataset) {
    std::vector<ItemRef> out;
    for (auto& r : m.item_refs)
        if (r.dataset == dataset) out.push_back(r);
    return out;
}

}  // namespace

TEST_CASE("banker's rounding at the halves") {
    CHECK(round_half_even(0.5) == 0);
    CHECK(round_half_even(1.5) == 2);
    CHECK(round_half_even(2.5) == 2);
    CHECK(round_half_even(3.5) == 4);
    CHECK(round_half_even(-0.5) == 0);
    CHECK(round_half_even(-2.5) == -2);
    CHECK(round_half_even(2.4999) == 2);
    CHECK(round_half_even(2.5001) == 3);
    CHECK(round_half_even(125.0) == 125);
}

TEST_CASE("geometric decay halves the noisy portion per epoch") {
    auto plan = make_blend_plan({{"gold", 40}}, {{"noisy", 1000}}, 0.5, 4, 7);
    REQUIRE(plan.manifests.size() == 4);
    std::vector<std::size_t> expect = {1000, 500, 250, 125};
    for (std::size_t e = 0; e < 4; ++e) {
        CHECK(plan.manifests[e].epoch == e + 1);
        CHECK(refs_of(plan.manifests[e], "noisy").size() == expect[e]);
        CHECK(refs_of(plan.manifests[e], "gold").size() == 40);
        CHECK(plan.manifests[e].item_refs.size() == 40 + expect[e]);
    }
}

TEST_CASE("alpha one keeps everything, alpha zero keeps only epoch one") {
    auto full = make_blend_plan({}, {{"n", 64}}, 1.0, 3, 0);
    for (auto& m : full.manifests) CHECK(m.item_refs.size() == 64);

    auto cliff = make_blend_plan({}, {{"n", 64}}, 0.0, 3, 0);
    CHECK(cliff.manifests[0].item_refs.size() == 64);
    CHECK(cliff.manifests[1].item_refs.empty());
    CHECK(cliff.manifests[2].item_refs.empty());
}

TEST_CASE("noisy_count_at rounds ties to even") {
    CHECK(noisy_count_at(10, 0.25, 1) == 10);
    CHECK(noisy_count_at(10, 0.25, 2) == 2);  // 2.5 rounds to 2
    CHECK(noisy_count_at(10, 0.25, 3) == 1);  // 0.625 rounds to 1
    CHECK(noisy_count_at(1, 0.5, 2) == 0);    // 0.5 rounds to 0
    CHECK(noisy_count_at(3, 0.5, 2) == 2);    // 1.5 rounds to 2
}

TEST_CASE("subsets are nested and gold never shrinks") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto plan = make_blend_plan({{"g1", 9}, {"g2", 4}},
                                    {{"a", 100}, {"b", 37}}, 0.5, 5, seed);
        // gold portion is identical (and in dataset order) every epoch
        std::vector<ItemRef> gold_expect;
        for (std::size_t i = 0; i < 9; ++i) gold_expect.push_back({"g1", i});
        for (std::size_t i = 0; i < 4; ++i) gold_expect.push_back({"g2", i});
        for (auto& m : plan.manifests) {
            REQUIRE(m.item_refs.size() >= gold_expect.size());
            CHECK(std::equal(gold_expect.begin(), gold_expect.end(), m.item_refs.begin()));
        }
        // every later epoch's noisy picks are a subset of the previous epoch's
        for (auto& ds : {std::string("a"), std::string("b")}) {
            for (std::size_t e = 1; e < plan.manifests.size(); ++e) {
                auto prev = refs_of(plan.manifests[e - 1], ds);
                auto cur = refs_of(plan.manifests[e], ds);
                std::set<ItemRef> prev_set(prev.begin(), prev.end());
                for (auto& r : cur) {
                    CHECK(prev_set.count(r) == 1);
                    CHECK(r.index < (ds == "a" ? 100u : 37u));
                }
                // no duplicate indices within one epoch
                std::set<ItemRef> cur_set(cur.begin(), cur.end());
                CHECK(cur_set.size() == cur.size());
            }
        }
    }
}

TEST_CASE("adding a dataset does not disturb another's subset") {
    auto solo = make_blend_plan({}, {{"a", 50}}, 0.5, 4, 11);
    auto duo = make_blend_plan({}, {{"a", 50}, {"b", 80}}, 0.5, 4, 11);
    for (std::size_t e = 0; e < 4; ++e)
        CHECK(refs_of(solo.manifests[e], "a") == refs_of(duo.manifests[e], "a"));
}

TEST_CASE("same seed reproduces the plan, different seed reorders it") {
    auto p1 = make_blend_plan({}, {{"a", 200}}, 0.5, 3, 5);
    auto p2 = make_blend_plan({}, {{"a", 200}}, 0.5, 3, 5);
    auto p3 = make_blend_plan({}, {{"a", 200}}, 0.5, 3, 6);
    for (std::size_t e = 0; e < 3; ++e) {
        CHECK(p1.manifests[e].item_refs == p2.manifests[e].item_refs);
    }
    CHECK(p1.manifests[1].item_refs != p3.manifests[1].item_refs);
}

TEST_CASE("manifest files round-trip and are byte-stable") {
    testutil::TempDir dir;
    auto plan = make_blend_plan({{"gold", 3}}, {{"noisy", 10}}, 0.5, 2, 42);
    emit_manifests(plan, dir.file("plan"));
    emit_manifests(plan, dir.file("plan2"));
    auto e1 = testutil::read_file(dir.file("plan/epoch-1"));
    CHECK(e1 == testutil::read_file(dir.file("plan2/epoch-1")));
    CHECK(e1.find("gold\t0\n") == 0);

    auto refs1 = read_manifest(dir.file("plan/epoch-1"));
    auto refs2 = read_manifest(dir.file("plan/epoch-2"));
    CHECK(refs1 == plan.manifests[0].item_refs);
    CHECK(refs2 == plan.manifests[1].item_refs);
    std::set<ItemRef> first(refs1.begin(), refs1.end());
    for (auto& r : refs2) CHECK(first.count(r) == 1);
}

TEST_CASE("malformed manifests and bad parameters are rejected") {
    testutil::TempDir dir;
    testutil::write_file(dir.file("bad"), "noisy 3\n");
    CHECK_THROWS_WITH(read_manifest(dir.file("bad")),
                      Catch::Matchers::ContainsSubstring(":1:"));
    CHECK_THROWS_AS(read_manifest(dir.file("absent")), IoError);

    CHECK_THROWS_AS(make_blend_plan({}, {{"a", 5}}, -0.1, 2, 0), DataError);
    CHECK_THROWS_AS(make_blend_plan({}, {{"a", 5}}, 1.5, 2, 0), DataError);
    CHECK_THROWS_AS(make_blend_plan({}, {{"a", 5}}, 0.5, 0, 0), DataError);
}
