#pragma once

// UTF-8 codec plus the small slice of Unicode the toolkit needs:
// NFC normalization, simple lowercasing, whitespace and digit classes.
// Tables live in unicode_data.hpp (generated, see scripts/).

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polarqa/unicode_data.hpp"

namespace polarqa::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at s[i]; advances i past it.
// Invalid bytes decode to U+FFFD one byte at a time.
inline char32_t decode_at(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + len > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        unsigned char b = byte(i + k);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // overlong / out-of-range / surrogate
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++i;
        return kReplacement;
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

inline void encode_to(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::u32string decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode_at(s, i));
    return out;
}

inline std::string encode(const std::u32string& s) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char32_t cp : s) encode_to(cp, out);
    return out;
}

namespace detail {

template <typename Entry, std::size_t N>
const Entry* find_cp(const Entry (&table)[N], char32_t cp) {
    auto it = std::lower_bound(std::begin(table), std::end(table), cp,
                               [](const Entry& e, char32_t c) { return e.cp < c; });
    if (it != std::end(table) && it->cp == cp) return &*it;
    return nullptr;
}

// Hangul syllable composition constants (UAX #15).
inline constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
inline constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
inline constexpr int kNCount = kVCount * kTCount;
inline constexpr int kSCount = kLCount * kNCount;

}  // namespace detail

inline int combining_class(char32_t cp) {
    const auto* e = detail::find_cp(unicode_data::kCcc, cp);
    return e ? e->ccc : 0;
}

inline bool is_space(char32_t cp) {
    for (char32_t w : unicode_data::kWhitespace)
        if (w == cp) return true;
    return false;
}

inline bool is_decimal_digit(char32_t cp) {
    const auto& t = unicode_data::kDecimalDigit;
    auto it = std::lower_bound(std::begin(t), std::end(t), cp,
                               [](const unicode_data::Range& r, char32_t c) { return r.hi < c; });
    return it != std::end(t) && it->lo <= cp;
}

inline char32_t to_lower(char32_t cp) {
    const auto* e = detail::find_cp(unicode_data::kLower, cp);
    return e ? e->lower : cp;
}

inline void canonical_decompose(char32_t cp, std::u32string& out) {
    using namespace detail;
    if (cp >= kSBase && cp < kSBase + kSCount) {
        int idx = static_cast<int>(cp - kSBase);
        out.push_back(kLBase + idx / kNCount);
        out.push_back(kVBase + (idx % kNCount) / kTCount);
        if (idx % kTCount) out.push_back(kTBase + idx % kTCount);
        return;
    }
    if (const auto* e = find_cp(unicode_data::kDecomp, cp)) {
        for (std::uint32_t k = 0; k < e->len; ++k)
            out.push_back(unicode_data::kDecompPool[e->offset + k]);
        return;
    }
    out.push_back(cp);
}

inline bool compose_pair(char32_t a, char32_t b, char32_t& out) {
    using namespace detail;
    if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
        out = kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
        return true;
    }
    if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 && b > kTBase &&
        b < kTBase + kTCount) {
        out = a + (b - kTBase);
        return true;
    }
    const auto* first = std::begin(unicode_data::kComp);
    const auto* last = std::end(unicode_data::kComp);
    auto it = std::lower_bound(first, last, std::pair<char32_t, char32_t>{a, b},
                               [](const unicode_data::CompEntry& e, const auto& key) {
                                   return e.first != key.first ? e.first < key.first
                                                               : e.second < key.second;
                               });
    if (it != last && it->first == a && it->second == b) {
        out = it->composed;
        return true;
    }
    return false;
}

inline std::u32string nfc32(std::u32string_view in) {
    std::u32string d;
    d.reserve(in.size());
    for (char32_t cp : in) canonical_decompose(cp, d);

    // canonical ordering: stable sort each run of nonzero-ccc marks
    for (std::size_t i = 0; i < d.size();) {
        if (combining_class(d[i]) == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < d.size() && combining_class(d[j]) != 0) ++j;
        std::stable_sort(d.begin() + static_cast<std::ptrdiff_t>(i),
                         d.begin() + static_cast<std::ptrdiff_t>(j),
                         [](char32_t a, char32_t b) {
                             return combining_class(a) < combining_class(b);
                         });
        i = j;
    }

    if (d.empty()) return d;
    std::u32string out;
    out.reserve(d.size());
    out.push_back(d[0]);
    std::ptrdiff_t starter = combining_class(d[0]) == 0 ? 0 : -1;
    int last_cc = combining_class(d[0]);
    for (std::size_t i = 1; i < d.size(); ++i) {
        char32_t c = d[i];
        int cc = combining_class(c);
        bool adjacent = starter >= 0 && static_cast<std::size_t>(starter) + 1 == out.size();
        if (starter >= 0 && (adjacent || last_cc < cc)) {
            char32_t composed;
            if (compose_pair(out[static_cast<std::size_t>(starter)], c, composed)) {
                out[static_cast<std::size_t>(starter)] = composed;
                continue;
            }
        }
        out.push_back(c);
        if (cc == 0) starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
        last_cc = cc;
    }
    return out;
}

inline std::string nfc(std::string_view utf8) { return encode(nfc32(decode(utf8))); }

// Per-code-point lowercase; enough to make keyword matching case-insensitive.
inline std::string lower(std::string_view utf8) {
    std::u32string s = decode(utf8);
    for (char32_t& cp : s) cp = to_lower(cp);
    return encode(s);
}

inline std::string trim(std::string_view utf8) {
    std::size_t begin = 0;
    std::size_t end = utf8.size();
    std::size_t i = 0;
    while (i < utf8.size()) {
        std::size_t next = i;
        char32_t cp = decode_at(utf8, next);
        if (!is_space(cp)) break;
        i = next;
    }
    begin = i;
    // scan from the front to find the last non-space boundary
    std::size_t last_end = begin;
    i = begin;
    while (i < utf8.size()) {
        std::size_t next = i;
        char32_t cp = decode_at(utf8, next);
        if (!is_space(cp)) last_end = next;
        i = next;
    }
    end = last_end;
    return std::string(utf8.substr(begin, end - begin));
}

inline bool contains_decimal_digit(std::string_view utf8) {
    std::size_t i = 0;
    while (i < utf8.size())
        if (is_decimal_digit(decode_at(utf8, i))) return true;
    return false;
}

}  // namespace polarqa::uni
