#!/usr/bin/env python3
"""Regenerate include/polarqa/unicode_data.hpp from the host Python unicodedata.

The library needs four pieces of Unicode machinery: canonical decomposition,
canonical combining classes, primary composites (for NFC), and a couple of
character classes (whitespace, decimal digits, simple lowercase). Rather than
depending on ICU we bake compact tables into a generated header.

Usage: python3 scripts/gen_unicode_tables.py > include/polarqa/unicode_data.hpp
"""

import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def iter_codepoints():
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def main() -> None:
    decomp_entries = []  # (cp, offset, len) into pool
    pool = []
    ccc_entries = []
    comp_entries = []
    lower_entries = []
    digit_cps = []
    space_cps = []

    for cp in iter_codepoints():
        ch = chr(cp)

        cc = unicodedata.combining(ch)
        if cc:
            ccc_entries.append((cp, cc))

        if not is_hangul_syllable(cp):
            nfd = unicodedata.normalize("NFD", ch)
            if nfd != ch:
                seq = [ord(c) for c in nfd]
                decomp_entries.append((cp, len(pool), len(seq)))
                pool.extend(seq)

            raw = unicodedata.decomposition(ch)
            if raw and not raw.startswith("<"):
                parts = [int(p, 16) for p in raw.split()]
                if len(parts) == 2:
                    a, b = parts
                    # primary composite iff NFC recomposes the pair
                    if unicodedata.normalize("NFC", chr(a) + chr(b)) == ch:
                        comp_entries.append((a, b, cp))

        low = ch.lower()
        if low != ch and len(low) == 1:
            lower_entries.append((cp, ord(low)))

        if unicodedata.category(ch) == "Nd":
            digit_cps.append(cp)
        if ch.isspace():
            space_cps.append(cp)

    comp_entries.sort()

    def ranges(cps):
        out = []
        for cp in cps:
            if out and out[-1][1] + 1 == cp:
                out[-1][1] = cp
            else:
                out.append([cp, cp])
        return out

    digit_ranges = ranges(digit_cps)

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("#pragma once\n\n#include <cstdint>\n\n")
    w("namespace polarqa::unicode_data {\n\n")

    w("struct DecompEntry { char32_t cp; std::uint32_t offset; std::uint8_t len; };\n")
    w("struct CccEntry { char32_t cp; std::uint8_t ccc; };\n")
    w("struct CompEntry { char32_t first; char32_t second; char32_t composed; };\n")
    w("struct LowerEntry { char32_t cp; char32_t lower; };\n")
    w("struct Range { char32_t lo; char32_t hi; };\n\n")

    w("// Full canonical (NFD) expansions, Hangul syllables handled algorithmically.\n")
    w("inline constexpr char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        w("    " + ",".join("0x%X" % c for c in pool[i:i + 12]) + ",\n")
    w("};\n\n")

    w("inline constexpr DecompEntry kDecomp[] = {\n")
    for cp, off, ln in decomp_entries:
        w("    {0x%X,%d,%d},\n" % (cp, off, ln))
    w("};\n\n")

    w("inline constexpr CccEntry kCcc[] = {\n")
    for cp, cc in ccc_entries:
        w("    {0x%X,%d},\n" % (cp, cc))
    w("};\n\n")

    w("// Primary composites only (sorted by first, second).\n")
    w("inline constexpr CompEntry kComp[] = {\n")
    for a, b, c in comp_entries:
        w("    {0x%X,0x%X,0x%X},\n" % (a, b, c))
    w("};\n\n")

    w("inline constexpr LowerEntry kLower[] = {\n")
    for cp, low in lower_entries:
        w("    {0x%X,0x%X},\n" % (cp, low))
    w("};\n\n")

    w("inline constexpr Range kDecimalDigit[] = {\n")
    for lo, hi in digit_ranges:
        w("    {0x%X,0x%X},\n" % (lo, hi))
    w("};\n\n")

    w("inline constexpr char32_t kWhitespace[] = {\n")
    w("    " + ",".join("0x%X" % c for c in space_cps) + ",\n")
    w("};\n\n")

    w("}  // namespace polarqa::unicode_data\n")


if __name__ == "__main__":
    main()
