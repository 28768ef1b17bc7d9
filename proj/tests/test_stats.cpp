#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "polarqa/stats.hpp"

using namespace polarqa;
using Catch::Matchers::WithinAbs;

namespace {
const Interpretation Y = Interpretation::Yes;
const Interpretation M = Interpretation::Middle;
const Interpretation N = Interpretation::No;
}  // namespace

TEST_CASE("perfect predictions score 1.0 everywhere") {
    std::vector<Interpretation> gold = {Y, Y, M, N, N, M};
    auto r = score(gold, gold);
    CHECK(r.macro_f1 == 1.0);
    CHECK(r.accuracy == 1.0);
    for (auto& [_, s] : r.per_label) {
        CHECK(s.precision == 1.0);
        CHECK(s.recall == 1.0);
        CHECK(s.f1 == 1.0);
    }
}

TEST_CASE("six-item fixture lands on macro-F1 of one half") {
    std::vector<Interpretation> gold = {Y, Y, N, N, M, M};
    std::vector<Interpretation> preds = {Y, N, N, M, M, Y};
    auto r = score(preds, gold);
    for (auto lbl : {Y, M, N}) {
        CHECK_THAT(r.per_label.at(lbl).precision, WithinAbs(0.5, 1e-9));
        CHECK_THAT(r.per_label.at(lbl).recall, WithinAbs(0.5, 1e-9));
        CHECK_THAT(r.per_label.at(lbl).f1, WithinAbs(0.5, 1e-9));
    }
    CHECK_THAT(r.macro_f1, WithinAbs(0.5, 1e-9));
    CHECK_THAT(r.accuracy, WithinAbs(0.5, 1e-9));
    CHECK(r.n == 6);
}

TEST_CASE("disjoint predictions score zero, with 0/0 defined as 0") {
    std::vector<Interpretation> gold(8, Y);
    std::vector<Interpretation> preds(8, N);
    auto r = score(preds, gold);
    CHECK(r.macro_f1 == 0.0);
    CHECK(r.accuracy == 0.0);
    CHECK(r.per_label.at(Y).recall == 0.0);   // 0/8
    CHECK(r.per_label.at(Y).precision == 0.0);  // 0/0
    CHECK(r.per_label.at(M).f1 == 0.0);       // label absent on both sides
}

TEST_CASE("confusion matrix marginals add up") {
    Rng rng(3);
    std::vector<Interpretation> gold, preds;
    for (int i = 0; i < 500; ++i) {
        gold.push_back(static_cast<Interpretation>(rng.bounded(3)));
        preds.push_back(static_cast<Interpretation>(rng.bounded(3)));
    }
    auto r = score(preds, gold);
    std::size_t total = 0, diag = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            total += r.confusion[i][j];
            if (i == j) diag += r.confusion[i][j];
        }
    CHECK(total == 500);
    CHECK(r.accuracy == static_cast<double>(diag) / 500.0);
}

TEST_CASE("score rejects mismatched or empty inputs") {
    CHECK_THROWS_AS(score({Y}, {Y, N}), DataError);
    CHECK_THROWS_AS(score({}, {}), DataError);
}

TEST_CASE("benchmark splits take a rounded fifth for validation") {
    std::vector<int> items(300);
    for (int i = 0; i < 300; ++i) items[i] = i;
    auto [val, test] = split_benchmark(items, 0);
    CHECK(val.size() == 60);
    CHECK(test.size() == 240);

    items.resize(600);
    for (int i = 0; i < 600; ++i) items[i] = i;
    auto [val6, test6] = split_benchmark(items, 0);
    CHECK(val6.size() == 120);
    CHECK(test6.size() == 480);
}

TEST_CASE("splits are seeded, disjoint, and exhaustive") {
    std::vector<int> items(101);
    for (int i = 0; i < 101; ++i) items[i] = i;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto [val, test] = split_benchmark(items, seed);
        CHECK(val.size() == 20);  // round(20.2)
        std::set<int> all(val.begin(), val.end());
        std::size_t val_unique = all.size();
        all.insert(test.begin(), test.end());
        CHECK(val_unique == val.size());
        CHECK(all.size() == 101);
    }
    auto a = split_benchmark(items, 9);
    auto b = split_benchmark(items, 9);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
    auto c = split_benchmark(items, 10);
    CHECK(a.first != c.first);
}

TEST_CASE("splitting fewer than five items is refused") {
    CHECK_THROWS_WITH(split_benchmark(std::vector<int>{1, 2, 3, 4}, 0),
                      Catch::Matchers::ContainsSubstring("at least 5"));
}

TEST_CASE("weighted kappa on the documented four-item fixture") {
    std::vector<Interpretation> a = {Y, Y, N, M};
    std::vector<Interpretation> b = {Y, M, N, M};
    CHECK_THAT(weighted_kappa(a, b), WithinAbs(5.0 / 7.0, 1e-9));
    CHECK_THAT(weighted_kappa(b, a), WithinAbs(weighted_kappa(a, b), 1e-12));
}

TEST_CASE("identical annotators reach exactly 1.0") {
    std::vector<Interpretation> a = {Y, N, M, Y, N};
    CHECK(weighted_kappa(a, a) == 1.0);
    std::vector<Interpretation> constant(10, M);
    CHECK(weighted_kappa(constant, constant) == 1.0);  // degenerate marginals
}

TEST_CASE("reversed ordinal agreement goes negative") {
    std::vector<Interpretation> a = {Y, M, N, Y, M, N};
    std::vector<Interpretation> b = {N, M, Y, N, M, Y};
    CHECK_THAT(weighted_kappa(a, b), WithinAbs(-0.5, 1e-9));
}

TEST_CASE("independent annotators hover near zero kappa") {
    Rng rng(13);
    std::vector<Interpretation> a, b;
    for (int i = 0; i < 10000; ++i) {
        a.push_back(static_cast<Interpretation>(rng.bounded(3)));
        b.push_back(static_cast<Interpretation>(rng.bounded(3)));
    }
    CHECK(std::abs(weighted_kappa(a, b)) < 0.1);
}

TEST_CASE("multi-annotator kappa is the mean over pairs") {
    std::vector<Interpretation> a = {Y, Y, N, M};
    std::vector<Interpretation> b = {Y, M, N, M};
    std::vector<Interpretation> c = {Y, Y, N, N};
    double expect =
        (weighted_kappa(a, b) + weighted_kappa(a, c) + weighted_kappa(b, c)) / 3.0;
    CHECK_THAT(weighted_kappa_multi({a, b, c}), WithinAbs(expect, 1e-12));
    CHECK_THROWS_AS(weighted_kappa_multi({a}), DataError);
}

TEST_CASE("kappa rejects mismatched or empty inputs") {
    CHECK_THROWS_AS(weighted_kappa({Y}, {Y, N}), DataError);
    CHECK_THROWS_AS(weighted_kappa({}, {}), DataError);
}

namespace {

// Builds gold/pred triples realizing given discordant counts b and c.
void fill_mcnemar(std::size_t b, std::size_t c, std::vector<std::string>& pa,
                  std::vector<std::string>& pb, std::vector<std::string>& gold) {
    for (std::size_t i = 0; i < b; ++i) {
        pa.push_back("y");
        pb.push_back("n");
        gold.push_back("y");
    }
    for (std::size_t i = 0; i < c; ++i) {
        pa.push_back("n");
        pb.push_back("y");
        gold.push_back("y");
    }
    // concordant padding must not move the statistic
    for (int i = 0; i < 7; ++i) {
        pa.push_back("y");
        pb.push_back("y");
        gold.push_back("y");
        pa.push_back("m");
        pb.push_back("n");
        gold.push_back("y");  // both wrong
    }
}

}  // namespace

TEST_CASE("mcnemar exact branch matches the documented example") {
    std::vector<std::string> pa, pb, gold;
    fill_mcnemar(2, 8, pa, pb, gold);
    auto r = mcnemar_test(pa, pb, gold);
    CHECK(r.b == 2);
    CHECK(r.c == 8);
    CHECK(r.exact);
    CHECK_THAT(r.p_value, WithinAbs(0.109375, 1e-12));

    auto swapped = mcnemar_test(pb, pa, gold);
    CHECK(swapped.b == 8);
    CHECK(swapped.c == 2);
    CHECK_THAT(swapped.p_value, WithinAbs(r.p_value, 1e-12));
}

TEST_CASE("balanced or absent disagreement yields p of one") {
    std::vector<std::string> pa, pb, gold;
    fill_mcnemar(5, 5, pa, pb, gold);
    CHECK(mcnemar_test(pa, pb, gold).p_value == 1.0);

    std::vector<std::string> same = {"y", "n", "m"};
    auto r = mcnemar_test(same, same, {"y", "y", "n"});
    CHECK(r.b == 0);
    CHECK(r.c == 0);
    CHECK(r.p_value == 1.0);
}

TEST_CASE("exact branch agrees with a direct binomial tail for every small table") {
    // Pascal's triangle up to n=24; all quantities are exact dyadics.
    double pascal[25][25] = {};
    for (int n = 0; n <= 24; ++n) {
        pascal[n][0] = pascal[n][n] = 1.0;
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (std::size_t b = 0; b <= 24; ++b)
        for (std::size_t c = 0; b + c <= 24; ++c) {
            if (b + c == 0) continue;
            std::vector<std::string> pa, pb, gold;
            fill_mcnemar(b, c, pa, pb, gold);
            auto r = mcnemar_test(pa, pb, gold);
            REQUIRE(r.exact);
            const std::size_t n = b + c;
            double tail = 0.0;
            for (std::size_t k = 0; k <= std::min(b, c); ++k)
                tail += pascal[n][k] / std::pow(2.0, static_cast<double>(n));
            double expect = std::min(1.0, 2.0 * tail);
            INFO("b=" << b << " c=" << c);
            CHECK_THAT(r.p_value, WithinAbs(expect, 1e-12));
        }
}

TEST_CASE("large samples switch to the corrected chi-square branch") {
    std::vector<std::string> pa, pb, gold;
    fill_mcnemar(20, 10, pa, pb, gold);
    auto r = mcnemar_test(pa, pb, gold);
    CHECK_FALSE(r.exact);
    CHECK_THAT(r.p_value, WithinAbs(0.100348246462, 1e-9));

    // boundary: 24 discordant pairs stay exact, 25 do not
    std::vector<std::string> xa, xb, xg;
    fill_mcnemar(12, 12, xa, xb, xg);
    CHECK(mcnemar_test(xa, xb, xg).exact);
    std::vector<std::string> ya, yb, yg;
    fill_mcnemar(13, 12, ya, yb, yg);
    CHECK_FALSE(mcnemar_test(ya, yb, yg).exact);
}

TEST_CASE("mcnemar validates input lengths") {
    CHECK_THROWS_AS(mcnemar_test({"y"}, {"y", "n"}, {"y"}), DataError);
    CHECK_THROWS_AS(mcnemar_test({}, {}, {}), DataError);
}

TEST_CASE("label distribution reports counts and fractions for all labels") {
    std::vector<Interpretation> labels;
    labels.insert(labels.end(), 150, Y);
    labels.insert(labels.end(), 90, N);
    labels.insert(labels.end(), 60, M);
    auto d = label_distribution(labels);
    CHECK(d.at(Y).count == 150);
    CHECK(d.at(Y).fraction == 0.5);
    CHECK(d.at(N).count == 90);
    CHECK_THAT(d.at(N).fraction, WithinAbs(0.3, 1e-12));
    CHECK(d.at(M).count == 60);
    CHECK_THAT(d.at(M).fraction, WithinAbs(0.2, 1e-12));

    auto empty = label_distribution({});
    CHECK(empty.size() == 3);
    CHECK(empty.at(Y).count == 0);
    CHECK(empty.at(Y).fraction == 0.0);
}
