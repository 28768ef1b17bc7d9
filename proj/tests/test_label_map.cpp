#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "polarqa/label_map.hpp"

using namespace polarqa;

TEST_CASE("schemes carry the documented tables in full") {
    auto circa = circa_relaxed_scheme();
    REQUIRE(circa.table.size() == 6);
    CHECK(map_label(circa, "Yes") == MappedLabel::Yes);
    CHECK(map_label(circa, "No") == MappedLabel::No);
    CHECK(map_label(circa, "Yes, subject to some conditions") == MappedLabel::Yes);
    CHECK(map_label(circa, "In the middle, neither yes nor no") == MappedLabel::Middle);
    CHECK(map_label(circa, "Other") == MappedLabel::Discard);
    CHECK(map_label(circa, "N/A") == MappedLabel::Discard);

    auto swda = swda_ia_scheme();
    REQUIRE(swda.table.size() == 5);
    CHECK(map_label(swda, "Yes") == MappedLabel::Yes);
    CHECK(map_label(swda, "Probably Yes") == MappedLabel::Yes);
    CHECK(map_label(swda, "Middle") == MappedLabel::Middle);
    CHECK(map_label(swda, "Probably No") == MappedLabel::No);
    CHECK(map_label(swda, "No") == MappedLabel::No);

    auto friends = friends_qia_scheme();
    REQUIRE(friends.table.size() == 6);
    CHECK(map_label(friends, "Yes, subject to some conditions") == MappedLabel::Yes);
    CHECK(map_label(friends, "Neither yes nor no") == MappedLabel::Middle);
    CHECK(map_label(friends, "Other") == MappedLabel::Discard);
    CHECK(map_label(friends, "N/A") == MappedLabel::Discard);
}

TEST_CASE("each scheme's label set is unique within the scheme") {
    for (auto& name : supported_schemes()) {
        auto scheme = mapping_scheme(name);
        std::set<std::string> seen;
        for (auto& [label, _] : scheme.table) {
            INFO(name << ": " << label);
            CHECK(seen.insert(label).second);
        }
    }
}

TEST_CASE("unknown labels are rejected, never silently discarded") {
    auto circa = circa_relaxed_scheme();
    CHECK_THROWS_WITH(map_label(circa, "Probably Yes"),
                      Catch::Matchers::ContainsSubstring("circa-relaxed") &&
                          Catch::Matchers::ContainsSubstring("Probably Yes"));
    CHECK_THROWS_AS(map_label(circa, "yes"), DataError);  // case-sensitive on purpose
    CHECK(map_label(circa, "  Yes  ") == MappedLabel::Yes);  // trimmed
}

TEST_CASE("unknown scheme names list the supported ones") {
    CHECK_THROWS_WITH(mapping_scheme("circa"),
                      Catch::Matchers::ContainsSubstring("swda-ia"));
}

TEST_CASE("corpus conversion drops discards with a tally") {
    std::vector<LabeledRow> rows = {
        {"are you hungry?", "definitely", {}, "Yes"},
        {"did it work?", "not at all", {}, "No"},
        {"is it blue?", "look over there", {}, "Other"},
        {"any plans?", "hmm", {}, "N/A"},
        {"will you come?", "depends on the weather", {"hi there"},
         "In the middle, neither yes nor no"},
    };
    auto [pairs, stats] = convert_corpus(rows, circa_relaxed_scheme());
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].label == Interpretation::Yes);
    CHECK(pairs[1].label == Interpretation::No);
    CHECK(pairs[2].label == Interpretation::Middle);
    CHECK(pairs[2].pair.context_before.size() == 1);
    CHECK(pairs[0].pair.source == "circa-relaxed");
    CHECK(stats.input == 5);
    CHECK(stats.emitted == 3);
    CHECK(stats.dropped == 2);
    CHECK(stats.emitted + stats.dropped == stats.input);
    CHECK(stats.per_label.at("yes") == 1);
    CHECK(stats.per_label.at("discard") == 2);
}

TEST_CASE("conversion reports the offending row number") {
    std::vector<LabeledRow> rows = {
        {"ok?", "sure", {}, "Yes"},
        {"fine?", "nope", {}, "Mostly"},
    };
    CHECK_THROWS_WITH(convert_corpus(rows, swda_ia_scheme()),
                      Catch::Matchers::ContainsSubstring("row 2") &&
                          Catch::Matchers::ContainsSubstring("Mostly"));
}

TEST_CASE("swda middle rows survive conversion") {
    auto [pairs, stats] = convert_corpus({{"q?", "maybe", {}, "Middle"}}, swda_ia_scheme());
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].label == Interpretation::Middle);
    CHECK(stats.dropped == 0);
}

TEST_CASE("empty input converts to empty output") {
    auto [pairs, stats] = convert_corpus({}, friends_qia_scheme());
    CHECK(pairs.empty());
    CHECK(stats.input == 0);
}
