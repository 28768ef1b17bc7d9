#pragma once

// Tokenization. Two schemes cover the supported scripts:
//   whitespace - split on Unicode whitespace, with terminal punctuation
//                (? ？ . ! 。) peeled off into tokens of their own so that
//                token-count bounds do not depend on punctuation;
//   han-char   - one token per code point, whitespace dropped.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

enum class TokenizerScheme { Whitespace, HanChar };

inline TokenizerScheme tokenizer_from_name(std::string_view name) {
    if (name == "whitespace") return TokenizerScheme::Whitespace;
    if (name == "han-char") return TokenizerScheme::HanChar;
    throw DataError("unknown tokenizer scheme: " + std::string(name));
}

inline std::string_view tokenizer_name(TokenizerScheme s) {
    return s == TokenizerScheme::Whitespace ? "whitespace" : "han-char";
}

inline bool is_terminal_punct(char32_t cp) {
    return cp == U'?' || cp == U'？' || cp == U'.' || cp == U'!' || cp == U'。';
}

// A token plus its byte span in the source text (spans feed match traces).
struct Token {
    std::string text;
    std::size_t offset = 0;
    std::size_t length = 0;
};

inline std::vector<Token> tokenize_spans(std::string_view text, TokenizerScheme scheme) {
    std::vector<Token> out;
    if (scheme == TokenizerScheme::HanChar) {
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t start = i;
            char32_t cp = uni::decode_at(text, i);
            if (uni::is_space(cp)) continue;
            out.push_back({std::string(text.substr(start, i - start)), start, i - start});
        }
        return out;
    }

    std::size_t i = 0;
    std::size_t tok_start = std::string_view::npos;
    auto flush = [&](std::size_t end) {
        if (tok_start == std::string_view::npos) return;
        out.push_back({std::string(text.substr(tok_start, end - tok_start)), tok_start,
                       end - tok_start});
        tok_start = std::string_view::npos;
    };
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = uni::decode_at(text, i);
        if (uni::is_space(cp)) {
            flush(start);
        } else if (is_terminal_punct(cp)) {
            flush(start);
            out.push_back({std::string(text.substr(start, i - start)), start, i - start});
        } else if (tok_start == std::string_view::npos) {
            tok_start = start;
        }
    }
    flush(text.size());
    return out;
}

inline std::vector<std::string> tokenize(std::string_view text, TokenizerScheme scheme) {
    std::vector<std::string> out;
    for (auto& t : tokenize_spans(text, scheme)) out.push_back(std::move(t.text));
    return out;
}

inline std::size_t token_count(std::string_view text, TokenizerScheme scheme) {
    return tokenize_spans(text, scheme).size();
}

}  // namespace polarqa
