#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "polarqa/ingest.hpp"

using namespace polarqa;
using testutil::TempDir;
using testutil::write_file;

TEST_CASE("flat-turns profile copies fields and computes digits") {
    TempDir dir;
    auto path = dir.file("corpus.jsonl");
    write_file(path,
               R"({"id":"1","text":"hola?","lang":"es"})"
               "\n"
               R"({"id":"2","text":"tengo 3 perros","lang":"es","speaker":"ana"})"
               "\n");
    auto r = ingest_jsonl(path, IngestProfile::FlatTurns);
    REQUIRE(r.errors.empty());
    REQUIRE(r.turns.size() == 2);
    CHECK(r.turns[0].turn.id == "1");
    CHECK(r.turns[0].turn.text == "hola?");
    CHECK(r.turns[0].turn.language == "es");
    CHECK_FALSE(r.turns[0].turn.meta.digit_present);
    CHECK(r.turns[1].turn.speaker == "ana");
    CHECK(r.turns[1].turn.meta.digit_present);  // "3"
}

TEST_CASE("malformed lines become error records and the stream continues") {
    TempDir dir;
    auto path = dir.file("corpus.jsonl");
    write_file(path,
               R"({"id":"1","text":"bien","lang":"es"})"
               "\n"
               R"({"id":"2","lang":"es"})"
               "\n"
               "not json at all\n"
               R"({"id":"4","text":"vale","lang":"es"})"
               "\n");
    auto r = ingest_jsonl(path, IngestProfile::FlatTurns);
    REQUIRE(r.turns.size() == 2);
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].line == 2);  // missing text
    CHECK(r.errors[0].message.find("text") != std::string::npos);
    CHECK(r.errors[1].line == 3);  // invalid JSON
    CHECK(r.turns[1].turn.id == "4");
}

TEST_CASE("unreadable file is fatal") {
    CHECK_THROWS_AS(ingest_jsonl("/nonexistent/nope.jsonl", IngestProfile::FlatTurns), IoError);
}

TEST_CASE("threaded-replies derives reply flags and mention counts") {
    TempDir dir;
    auto path = dir.file("thread.jsonl");
    write_file(path,
               R"({"id":"q7","text":"geliyor musun?","lang":"tr","verified":true})"
               "\n"
               R"({"id":"r1","text":"evet","lang":"tr","reply_to":"q7","mentions":["@a","@b"]})"
               "\n"
               R"({"id":"r2","text":"hayır","lang":"tr","reply_to":"q7"})"
               "\n");
    auto r = ingest_jsonl(path, IngestProfile::ThreadedReplies);
    REQUIRE(r.errors.empty());
    REQUIRE(r.turns.size() == 3);
    CHECK(r.turns[0].turn.meta.is_reply == false);
    CHECK(r.turns[0].turn.meta.author_verified == true);
    CHECK(r.turns[1].turn.meta.is_reply == true);
    CHECK(r.turns[1].turn.meta.mention_count == 2);

    auto pairs = pair_adjacent(r.turns, IngestProfile::ThreadedReplies, "twitter");
    REQUIRE(pairs.size() == 2);  // q with each direct reply
    CHECK(pairs[0].id() == "q7/r1");
    CHECK(pairs[1].id() == "q7/r2");
    CHECK(pairs[0].source == "twitter");
}

TEST_CASE("reply to an id outside the file is skipped, not an error") {
    TempDir dir;
    auto path = dir.file("thread.jsonl");
    write_file(path, R"({"id":"r9","text":"evet","lang":"tr","reply_to":"gone"})" "\n");
    auto r = ingest_jsonl(path, IngestProfile::ThreadedReplies);
    auto pairs = pair_adjacent(r.turns, IngestProfile::ThreadedReplies, "t");
    CHECK(pairs.empty());
}

TEST_CASE("faq-pairs yields question and accepted-flagged answer") {
    TempDir dir;
    auto path = dir.file("faq.jsonl");
    write_file(path,
               R"({"id":"101","lang":"tr","question":"bu normal mi?","answer":"evet normal","accepted":true})"
               "\n"
               R"({"id":"102","lang":"tr","question":"garanti var mı?","answer":"yok","accepted":false})"
               "\n");
    auto r = ingest_jsonl(path, IngestProfile::FaqPairs);
    REQUIRE(r.errors.empty());
    REQUIRE(r.turns.size() == 4);
    auto pairs = pair_adjacent(r.turns, IngestProfile::FaqPairs, "forum");
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].id() == "101/q/101/a");
    CHECK(pairs[0].answer.meta.is_accepted == true);
    CHECK_FALSE(pairs[0].question.meta.is_accepted.has_value());
    CHECK(pairs[1].answer.meta.is_accepted == false);
}

TEST_CASE("linear pairing walks each conversation") {
    auto turn = [](const char* id, const char* conv) {
        SourcedTurn st;
        st.turn = make_turn(id, "merhaba dostum", "tr");
        st.conversation = conv;
        return st;
    };
    std::vector<SourcedTurn> turns = {turn("t1", "c1"), turn("t2", "c1"), turn("t3", "c1"),
                                      turn("u1", "c2")};
    auto pairs = pair_adjacent(turns, IngestProfile::FlatTurns, "s");
    REQUIRE(pairs.size() == 2);  // (t1,t2), (t2,t3); u1 is alone in c2
    CHECK(pairs[0].id() == "t1/t2");
    CHECK(pairs[1].id() == "t2/t3");

    CHECK(pair_adjacent({turn("only", "c")}, IngestProfile::FlatTurns, "s").empty());
    CHECK(pair_adjacent({}, IngestProfile::FlatTurns, "s").empty());
}

TEST_CASE("turn serialization round-trips id, text, language, and meta") {
    SourceMeta m;
    m.link_count = 1;
    m.hashtag_count = 2;
    m.mention_count = 3;
    m.digit_present = true;
    m.author_verified = true;
    m.is_retweet = false;
    Turn t = make_turn("x1", "क्या आप 100% निश्चित हैं?", "hi", "devi", m);
    Turn back = turn_from_json(turn_to_json(t));
    CHECK(back == t);

    // optional flags stay absent
    Turn bare = make_turn("x2", "hola", "es");
    Turn bare_back = turn_from_json(turn_to_json(bare));
    CHECK(bare_back == bare);
    CHECK_FALSE(bare_back.meta.is_reply.has_value());
}

TEST_CASE("qa-pairs files round-trip through write and ingest") {
    SourceMeta am;
    am.is_accepted = true;
    std::vector<QAPair> pairs = {
        make_qa_pair(make_turn("q1", "geliyor musun?", "tr"),
                     make_turn("a1", "evet geliyorum", "tr", std::nullopt, am), "forum"),
        make_qa_pair(make_turn("q2", "hazır mı?", "tr"),
                     make_turn("a2", "bilmiyorum", "tr"), "forum",
                     {make_turn("c1", "selam", "tr")}),
    };
    TempDir dir;
    auto path = dir.file("pairs.jsonl");
    write_qa_pairs(pairs, path);

    auto r = ingest_jsonl(path, IngestProfile::QaPairs);
    REQUIRE(r.errors.empty());
    REQUIRE(r.pairs.size() == 2);
    CHECK(r.pairs[0] == pairs[0]);
    CHECK(r.pairs[1] == pairs[1]);
    CHECK(r.pairs[1].context_before.size() == 1);

    // byte stability of the serialization
    auto path2 = dir.file("pairs2.jsonl");
    write_qa_pairs(r.pairs, path2);
    CHECK(testutil::read_file(path) == testutil::read_file(path2));
}

TEST_CASE("profile names round-trip and unknown names are usage errors") {
    for (auto p : {IngestProfile::FlatTurns, IngestProfile::ThreadedReplies,
                   IngestProfile::FaqPairs, IngestProfile::QaPairs})
        CHECK(ingest_profile_from_name(ingest_profile_name(p)) == p);
    CHECK_THROWS_AS(ingest_profile_from_name("csv"), UsageError);
}
