#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "polarqa/text.hpp"
#include "polarqa/unicode.hpp"

using namespace polarqa;

// Oracle pairs computed offline with a reference Unicode implementation.
static const std::vector<std::pair<std::string, std::string>> kNfcVectors = {
    {"éclair", "éclair"},                  // combining acute composes
    {"Ångstrom", "Ångstrom"},               // angstrom sign -> A-ring
    {"한글", "한글"},     // Hangul jamo -> syllable
    {"क़", "क़"},                       // Devanagari qa stays decomposed
    {"ą́", "ą́"},                // ogonek composes, acute remains
    {"ą́", "ą́"},                // same after combining-class reorder
    {"ñõ", "ñõ"},
    {"sí", "sí"},
    {"hāyir", "hāyir"},
    {"क़्य", "क़्य"},
    {"안녕하세요?", "안녕하세요?"},
    {"你好吗？", "你好吗？"},
};

TEST_CASE("nfc matches reference vectors") {
    for (auto& [input, expected] : kNfcVectors) {
        CHECK(uni::nfc(input) == expected);
    }
}

TEST_CASE("nfc is idempotent on the vectors") {
    for (auto& [input, expected] : kNfcVectors) {
        CHECK(uni::nfc(expected) == expected);
        CHECK(uni::nfc(uni::nfc(input)) == uni::nfc(input));
    }
}

TEST_CASE("nfc leaves ascii alone") {
    CHECK(uni::nfc("hello world? 123") == "hello world? 123");
    CHECK(uni::nfc("") == "");
}

TEST_CASE("hangul composition round trip") {
    // LVT syllable built from jamo
    CHECK(uni::nfc("한") == "한");
    // LV syllable
    CHECK(uni::nfc("가") == "가");
}

TEST_CASE("lowercase folding") {
    CHECK(uni::lower("HELLO") == "hello");
    CHECK(uni::lower("ÉCLAIR") == "éclair");   // É
    CHECK(uni::lower("ŞIŞ") == "şiş");  // Ş
    CHECK(uni::lower("नहीं") == "नहीं");                   // no case in Devanagari
    CHECK(uni::lower("中文") == "中文");
}

TEST_CASE("trim strips unicode whitespace at the edges") {
    CHECK(uni::trim("  a  b ") == "a  b");
    CHECK(uni::trim("\t\nhola\n") == "hola");
    CHECK(uni::trim(" x ") == "x");  // NBSP
    CHECK(uni::trim("   ") == "");
    CHECK(uni::trim("") == "");
}

TEST_CASE("decimal digit detection covers non-ascii digits") {
    CHECK(uni::contains_decimal_digit("abc 5 def"));
    CHECK(uni::contains_decimal_digit("क्या १ है"));  // Devanagari १
    CHECK_FALSE(uni::contains_decimal_digit("no digits here"));
    CHECK_FALSE(uni::contains_decimal_digit("½"));  // not category Nd
}

TEST_CASE("invalid utf-8 decodes to replacement characters") {
    std::string bad = "a";
    bad += static_cast<char>(0xff);
    bad += "b";
    auto cps = uni::decode(bad);
    REQUIRE(cps.size() == 3);
    CHECK(cps[0] == U'a');
    CHECK(cps[1] == 0xFFFD);
    CHECK(cps[2] == U'b');
}

TEST_CASE("whitespace tokenizer splits terminal punctuation") {
    CHECK(tokenize("do we go?", TokenizerScheme::Whitespace) ==
          std::vector<std::string>{"do", "we", "go", "?"});
    CHECK(tokenize("  a  b ", TokenizerScheme::Whitespace) == std::vector<std::string>{"a", "b"});
    CHECK(tokenize("don't stop", TokenizerScheme::Whitespace) ==
          std::vector<std::string>{"don't", "stop"});
    CHECK(tokenize("t.co", TokenizerScheme::Whitespace) ==
          std::vector<std::string>{"t", ".", "co"});
    CHECK(tokenize("geldin mi?!", TokenizerScheme::Whitespace) ==
          std::vector<std::string>{"geldin", "mi", "?", "!"});
    CHECK(tokenize("", TokenizerScheme::Whitespace).empty());
}

TEST_CASE("han-char tokenizer yields one token per code point") {
    CHECK(tokenize("你好吗？", TokenizerScheme::HanChar) ==
          std::vector<std::string>{"你", "好", "吗", "？"});
    CHECK(tokenize("你 好", TokenizerScheme::HanChar) == std::vector<std::string>{"你", "好"});
    CHECK(tokenize("", TokenizerScheme::HanChar).empty());
}

TEST_CASE("token spans point into the source text") {
    auto spans = tokenize_spans("do we go?", TokenizerScheme::Whitespace);
    REQUIRE(spans.size() == 4);
    CHECK(spans[0].offset == 0);
    CHECK(spans[0].length == 2);
    CHECK(spans[3].offset == 8);
    CHECK(spans[3].length == 1);
    std::string src = "你好吗？";
    auto han = tokenize_spans(src, TokenizerScheme::HanChar);
    REQUIRE(han.size() == 4);
    for (auto& t : han) CHECK(src.substr(t.offset, t.length) == t.text);
}

TEST_CASE("token_count agrees with tokenize") {
    CHECK(token_count("do we go?", TokenizerScheme::Whitespace) == 4);
    CHECK(token_count("क्या आप कल आ रहे हैं?", TokenizerScheme::Whitespace) == 7);
    CHECK(token_count("你好吗？", TokenizerScheme::HanChar) == 4);
}

TEST_CASE("tokenizer scheme names round trip") {
    CHECK(tokenizer_from_name("whitespace") == TokenizerScheme::Whitespace);
    CHECK(tokenizer_from_name("han-char") == TokenizerScheme::HanChar);
    CHECK(tokenizer_name(TokenizerScheme::HanChar) == "han-char");
    CHECK_THROWS_AS(tokenizer_from_name("words"), DataError);
}
