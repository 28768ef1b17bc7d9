#include <catch2/catch_amalgamated.hpp>

#include "polarqa/corpus.hpp"

using namespace polarqa;

TEST_CASE("make_turn normalizes and validates") {
    Turn t = make_turn("t1", "  ¿vienes mañana?  ", "es");
    CHECK(t.text == "¿vienes mañana?");  // NFC + trimmed
    CHECK(t.language == "es");

    CHECK_THROWS_AS(make_turn("t2", "   ", "es"), DataError);
    CHECK_THROWS_AS(make_turn("t3", "hola", "ES"), DataError);
    CHECK_THROWS_AS(make_turn("t4", "hola", "e"), DataError);
    CHECK_THROWS_AS(make_turn("t5", "hola", "espa"), DataError);

    SourceMeta m;
    m.link_count = -1;
    CHECK_THROWS_AS(make_turn("t6", "hola", "es", std::nullopt, m), DataError);
}

TEST_CASE("language codes") {
    CHECK(valid_language_code("hi"));
    CHECK(valid_language_code("zho"));
    CHECK_FALSE(valid_language_code("h"));
    CHECK_FALSE(valid_language_code("hind"));
    CHECK_FALSE(valid_language_code("Hi"));
    CHECK_FALSE(valid_language_code("h1"));
}

TEST_CASE("make_qa_pair rejects mixed languages") {
    Turn q = make_turn("q", "geliyor musun?", "tr");
    Turn a_tr = make_turn("a", "evet", "tr");
    Turn a_es = make_turn("a", "si", "es");
    QAPair p = make_qa_pair(q, a_tr, "unit");
    CHECK(p.id() == "q/a");
    CHECK_THROWS_AS(make_qa_pair(q, a_es, "unit"), DataError);
}

TEST_CASE("interpretation ordinal order and names") {
    CHECK(static_cast<int>(Interpretation::Yes) == 0);
    CHECK(static_cast<int>(Interpretation::Middle) == 1);
    CHECK(static_cast<int>(Interpretation::No) == 2);
    CHECK(to_string(Interpretation::Middle) == "middle");
    CHECK(interpretation_from_string("yes") == Interpretation::Yes);
    CHECK(interpretation_from_string("No") == Interpretation::No);
    CHECK_THROWS_AS(interpretation_from_string("maybe"), DataError);
}
