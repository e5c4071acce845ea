#!/usr/bin/env python3
"""Regenerates src/translit_table.inc.

Each Latin code point in the covered blocks is mapped to the ASCII letters left
after canonical decomposition with combining marks removed. Letters without a
decomposition fall back to SUPPLEMENT; anything else is dropped.
"""
import sys
import unicodedata

BLOCKS = [(0x00C0, 0x024F), (0x1E00, 0x1EFF)]

SUPPLEMENT = {
    "ß": "ss", "ẞ": "SS", "Æ": "AE", "æ": "ae", "Œ": "OE", "œ": "oe",
    "Ø": "O", "ø": "o", "Đ": "D", "đ": "d", "Ð": "D", "ð": "d",
    "Þ": "TH", "þ": "th", "Ł": "L", "ł": "l", "Ħ": "H", "ħ": "h",
    "ı": "i", "Ŀ": "L", "ŀ": "l", "Ŧ": "T", "ŧ": "t", "ĸ": "k",
    "Ŋ": "N", "ŋ": "n", "ſ": "s", "Ĳ": "IJ", "ĳ": "ij", "ŉ": "n",
    "Ƀ": "B", "ƀ": "b", "Ɨ": "I", "ɨ": "i", "Ƶ": "Z", "ƶ": "z",
    "Ɍ": "R", "ɍ": "r", "Ɏ": "Y", "ɏ": "y", "Ƚ": "L", "ƚ": "l",
    "Ǥ": "G", "ǥ": "g", "Ɖ": "D", "Ɗ": "D", "Ƒ": "F", "ƒ": "f",
    "Ɠ": "G", "Ƙ": "K", "ƙ": "k", "Ɲ": "N", "ƞ": "n", "Ƥ": "P",
    "ƥ": "p", "Ƭ": "T", "ƭ": "t", "Ʈ": "T", "Ʋ": "V", "Ƴ": "Y",
    "ƴ": "y", "ȸ": "db", "ȹ": "qp", "Ǆ": "DZ", "ǅ": "Dz", "ǆ": "dz",
    "Ǉ": "LJ", "ǈ": "Lj", "ǉ": "lj", "Ǌ": "NJ", "ǋ": "Nj", "ǌ": "nj",
    "Ǳ": "DZ", "ǲ": "Dz", "ǳ": "dz", "Ƣ": "OI", "ƣ": "oi", "Ȣ": "OU",
    "ȣ": "ou", "Ə": "E", "ə": "e",
}


def ascii_of(ch):
    if ch in SUPPLEMENT:
        return SUPPLEMENT[ch]
    base = "".join(c for c in unicodedata.normalize("NFD", ch)
                   if not unicodedata.combining(c))
    if base and all(c.isascii() and c.isalpha() for c in base):
        return base
    if base and base[0] in SUPPLEMENT:
        return SUPPLEMENT[base[0]]
    return ""


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_translit_table.py. Do not edit.\n")
    out.write("// {first code point, ASCII replacement}; sorted by code point.\n")
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            rep = ascii_of(chr(cp))
            if rep:
                out.write('{0x%04X, "%s"},\n' % (cp, rep))


if __name__ == "__main__":
    main()
