#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "polarqa/langsim.hpp"
#include "polarqa/rng.hpp"

using namespace polarqa;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

LangVector lv(std::string code, std::vector<std::optional<double>> f) {
    return {std::move(code), std::move(f)};
}

}  // namespace

TEST_CASE("vector tables load with missing-value sentinels") {
    testutil::TempDir dir;
    auto path = dir.file("vec.tsv");
    testutil::write_file(path,
                         "# syntax features, 0/1 valued\n"
                         "lang\tf1\tf2\tf3\n"
                         "hi\t1\t0.5\t--\n"
                         "tr\t0\t1\t1\n");
    auto table = load_vectors(path);
    CHECK(table.feature_ids == std::vector<std::string>{"f1", "f2", "f3"});
    REQUIRE(table.vectors.size() == 2);
    auto& hi = table.vectors.at("hi");
    CHECK(hi.features[0] == 1.0);
    CHECK(hi.features[1] == 0.5);
    CHECK_FALSE(hi.features[2].has_value());
    CHECK(table.vectors.at("tr").features[2] == 1.0);
}

TEST_CASE("table loading rejects malformed rows") {
    testutil::TempDir dir;

    auto dup = dir.file("dup.tsv");
    testutil::write_file(dup, "lang\tf1\nhi\t1\nhi\t0\n");
    CHECK_THROWS_WITH(load_vectors(dup), ContainsSubstring("duplicate language"));

    auto blank = dir.file("blank.tsv");
    testutil::write_file(blank, "lang\tf1\tf2\nhi\t--\t--\n");
    CHECK_THROWS_WITH(load_vectors(blank), ContainsSubstring("no feature values"));

    auto bad = dir.file("bad.tsv");
    testutil::write_file(bad, "lang\tf1\nhi\tmaybe\n");
    CHECK_THROWS_WITH(load_vectors(bad), ContainsSubstring("bad value 'maybe'"));

    auto range = dir.file("range.tsv");
    testutil::write_file(range, "lang\tf1\nhi\t1.5\n");
    CHECK_THROWS_WITH(load_vectors(range), ContainsSubstring("outside [0,1]"));

    auto ragged = dir.file("ragged.tsv");
    testutil::write_file(ragged, "lang\tf1\tf2\nhi\t1\n");
    CHECK_THROWS_WITH(load_vectors(ragged), ContainsSubstring("expected 3 columns"));

    auto empty = dir.file("empty.tsv");
    testutil::write_file(empty, "# nothing here\n");
    CHECK_THROWS_WITH(load_vectors(empty), ContainsSubstring("empty vector table"));

    CHECK_THROWS_AS(load_vectors(dir.file("absent.tsv")), IoError);
}

TEST_CASE("cosine hits the landmark values") {
    CHECK_THAT(cosine_similarity(lv("a", {1, 0, 1}), lv("b", {1, 0, 1})), WithinAbs(1.0, 1e-12));
    CHECK_THAT(cosine_similarity(lv("a", {1, 0}), lv("b", {0, 1})), WithinAbs(0.0, 1e-12));
    // masked dimension: effective vectors (1,--) ∩ (1,1) over shared dims
    CHECK_THAT(cosine_similarity(lv("a", {1, 1, std::nullopt}), lv("b", {1, 0, 1})),
               WithinAbs(1.0 / std::sqrt(2.0), 1e-8));
}

TEST_CASE("cosine failure modes name the offending languages") {
    CHECK_THROWS_WITH(cosine_similarity(lv("a", {1, 0}), lv("b", {1, 0, 1})),
                      ContainsSubstring("dimensionality"));
    CHECK_THROWS_WITH(
        cosine_similarity(lv("a", {1, std::nullopt}), lv("b", {std::nullopt, 1})),
        ContainsSubstring("share no feature dimensions"));
    CHECK_THROWS_WITH(cosine_similarity(lv("zz", {0, 0}), lv("b", {1, 1})),
                      ContainsSubstring("zero-norm") && ContainsSubstring("zz"));
}

TEST_CASE("cosine is symmetric and scale-insensitive") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::optional<double>> fa, fb;
        for (int i = 0; i < 12; ++i) {
            fa.push_back(rng.bounded(5) == 0 ? std::optional<double>{} : rng.uniform01());
            fb.push_back(rng.bounded(5) == 0 ? std::optional<double>{} : rng.uniform01());
        }
        auto a = lv("a", fa), b = lv("b", fb);
        double sab;
        try {
            sab = cosine_similarity(a, b);
        } catch (const DataError&) {
            continue;  // no shared dims or zero projection; nothing to compare
        }
        CHECK_THAT(cosine_similarity(b, a), WithinAbs(sab, 1e-12));
        CHECK(sab >= 0.0);  // non-negative features
        CHECK(sab <= 1.0 + 1e-12);

        // shrinking one vector by a constant must not move the cosine
        auto scaled = a;
        for (auto& f : scaled.features)
            if (f) *f *= 0.25;
        CHECK_THAT(cosine_similarity(scaled, b), WithinAbs(sab, 1e-9));
    }
}

TEST_CASE("rank_pairs orders the cross product by similarity") {
    testutil::TempDir dir;
    auto path = dir.file("vec.tsv");
    // Built so that sim(hi,hi)=1, sim(hi,tr)=0, sim(es,hi)≈0.894, sim(es,tr)≈0.447
    testutil::write_file(path,
                         "lang\tf1\tf2\n"
                         "hi\t1\t0\n"
                         "tr\t0\t1\n"
                         "es\t1\t0.5\n");
    auto table = load_vectors(path);
    auto ranked = rank_pairs(table, {"hi", "es"}, {"hi", "tr"});
    REQUIRE(ranked.size() == 4);
    CHECK(ranked[0].eval_lang == "hi");
    CHECK(ranked[0].sup_lang == "hi");
    CHECK_THAT(ranked[0].similarity, WithinAbs(1.0, 1e-12));
    CHECK(ranked[1].eval_lang == "es");
    CHECK(ranked[1].sup_lang == "hi");
    CHECK(ranked[2].eval_lang == "es");
    CHECK(ranked[2].sup_lang == "tr");
    CHECK(ranked[3].eval_lang == "hi");
    CHECK(ranked[3].sup_lang == "tr");
    CHECK_THAT(ranked[3].similarity, WithinAbs(0.0, 1e-12));

    CHECK_THROWS_WITH(rank_pairs(table, {"hi"}, {"ko"}),
                      ContainsSubstring("no vector for language 'ko'"));
}

TEST_CASE("equal similarities fall back to code order") {
    testutil::TempDir dir;
    auto path = dir.file("vec.tsv");
    testutil::write_file(path,
                         "lang\tf1\tf2\n"
                         "aa\t1\t0\n"
                         "bb\t1\t0\n"
                         "cc\t1\t0\n");
    auto table = load_vectors(path);
    auto ranked = rank_pairs(table, {"cc", "aa"}, {"bb", "aa"});
    REQUIRE(ranked.size() == 4);  // all similarities are exactly 1
    CHECK(ranked[0].eval_lang == "aa");
    CHECK(ranked[0].sup_lang == "aa");
    CHECK(ranked[1].eval_lang == "aa");
    CHECK(ranked[1].sup_lang == "bb");
    CHECK(ranked[2].eval_lang == "cc");
    CHECK(ranked[2].sup_lang == "aa");
    CHECK(ranked[3].eval_lang == "cc");
    CHECK(ranked[3].sup_lang == "bb");
}
