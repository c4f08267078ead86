"""Phonetic encoders and the sentence-level phonetic similarity built on them.

All encoders operate on A-Z only: tokens are transliterated first by unicode
decomposition with combining marks stripped (so "ñande" encodes as "nande").
Characters that do not decompose to an ASCII letter are dropped. This keeps
the classic algorithms well-defined on diacritic-rich orthographies and is
pinned by the codec fixture table in the test suite.

Metaphone follows the published 1990 transformation rules with unlimited code
length; where the original prose is ambiguous the behavior documented inline
is the contract. Double Metaphone lives in :mod:`mteval.dmetaphone` and is
re-exported here; its codes are capped at 4 characters.
"""

from __future__ import annotations

import unicodedata
from enum import Enum

from .dmetaphone import double_metaphone
from .textsim import sequence_ratio, tokenize

__all__ = [
    "PhoneticScheme",
    "soundex",
    "metaphone",
    "double_metaphone",
    "phonetic_key",
    "phonetic_similarity",
    "KEY_SEPARATOR",
]

# single space so token boundaries stay visible to the sequence matcher
KEY_SEPARATOR = " "

_VOWELS = frozenset("AEIOU")

_SOUNDEX_CODES = {
    "B": "1", "F": "1", "P": "1", "V": "1",
    "C": "2", "G": "2", "J": "2", "K": "2", "Q": "2", "S": "2", "X": "2", "Z": "2",
    "D": "3", "T": "3",
    "L": "4",
    "M": "5", "N": "5",
    "R": "6",
}


class PhoneticScheme(Enum):
    """Which per-token code feeds the phonetic key of a sentence."""

    METAPHONE = "metaphone"
    DOUBLE_METAPHONE_PRIMARY = "double_metaphone_primary"
    SOUNDEX_DOUBLE_METAPHONE = "soundex_double_metaphone"
    SOUNDEX_METAPHONE = "soundex_metaphone"


def ascii_letters(token: str) -> str:
    """Uppercase A-Z content of a token after stripping combining marks."""
    decomposed = unicodedata.normalize("NFD", token)
    return "".join(c for c in decomposed.upper() if "A" <= c <= "Z")


def soundex(token: str) -> str:
    """Classic 4-character Soundex code; empty string for letterless input.

    Vowels (and Y) reset the duplicate-collapse state, H and W are
    transparent: same-class consonants separated by H/W are coded once.
    """
    letters = ascii_letters(token)
    if not letters:
        return ""
    code = letters[0]
    last = _SOUNDEX_CODES.get(letters[0], "")
    for ch in letters[1:]:
        if ch in "HW":
            continue
        digit = _SOUNDEX_CODES.get(ch, "")
        if digit and digit != last:
            code += digit
            if len(code) == 4:
                break
        last = digit
    return (code + "000")[:4]


def _collapse_runs(letters: str) -> str:
    # duplicate adjacent letters are dropped, except C (CC has its own rule)
    out = []
    for ch in letters:
        if out and ch == out[-1] and ch != "C":
            continue
        out.append(ch)
    return "".join(out)


def metaphone(token: str) -> str:
    """Metaphone code of a single token, unlimited length."""
    letters = _collapse_runs(ascii_letters(token))
    if not letters:
        return ""

    # initial-cluster exceptions
    if letters[:2] in ("AE", "GN", "KN", "PN", "WR"):
        letters = letters[1:]
    elif letters[0] == "X":
        letters = "S" + letters[1:]
    elif letters[:2] == "WH":
        letters = "W" + letters[2:]

    n = len(letters)
    out = []
    i = 0
    while i < n:
        ch = letters[i]
        prev = letters[i - 1] if i > 0 else ""
        nxt = letters[i + 1] if i + 1 < n else ""
        nxt2 = letters[i + 2] if i + 2 < n else ""
        step = 1

        if ch in _VOWELS:
            if i == 0:
                out.append(ch)
        elif ch == "B":
            # terminal -MB keeps the B silent
            if not (i == n - 1 and prev == "M"):
                out.append("B")
        elif ch == "C":
            if prev == "S" and nxt in ("I", "E", "Y"):
                pass  # -SCE-, -SCI-, -SCY-
            elif nxt == "I" and nxt2 == "A":
                out.append("X")
            elif nxt in ("I", "E", "Y"):
                out.append("S")
            elif nxt == "H":
                out.append("K" if prev == "S" else "X")
                step = 2
            else:
                out.append("K")
        elif ch == "D":
            if nxt == "G" and nxt2 in ("E", "I", "Y"):
                out.append("J")
                step = 2
            else:
                out.append("T")
        elif ch == "F":
            out.append("F")
        elif ch == "G":
            if nxt == "H":
                # GH: silent unless the H is followed by a vowel
                if nxt2 in _VOWELS:
                    out.append("K")
                step = 2
            elif nxt == "N" and (i + 2 == n or letters[i + 1 :] == "NED"):
                pass  # terminal -GN / -GNED
            elif nxt in ("I", "E", "Y"):
                out.append("J")
            else:
                out.append("K")
        elif ch == "H":
            if nxt in _VOWELS:
                out.append("H")
        elif ch == "J":
            out.append("J")
        elif ch == "K":
            if prev != "C":
                out.append("K")
        elif ch in ("L", "M", "N", "R"):
            out.append(ch)
        elif ch == "P":
            if nxt == "H":
                out.append("F")
                step = 2
            else:
                out.append("P")
        elif ch == "Q":
            out.append("K")
        elif ch == "S":
            if nxt == "H":
                out.append("X")
                step = 2
            elif nxt == "I" and nxt2 in ("O", "A"):
                out.append("X")
            else:
                out.append("S")
        elif ch == "T":
            if nxt == "I" and nxt2 in ("O", "A"):
                out.append("X")
            elif nxt == "H":
                out.append("0")
                step = 2
            elif nxt == "C" and nxt2 == "H":
                pass  # -TCH-: the T is silent
            else:
                out.append("T")
        elif ch == "V":
            out.append("F")
        elif ch == "W":
            if nxt in _VOWELS:
                out.append("W")
        elif ch == "X":
            out.append("KS")
        elif ch == "Y":
            if nxt in _VOWELS:
                out.append("Y")
        elif ch == "Z":
            out.append("S")

        i += step
    return "".join(out)


def _token_code(token: str, scheme: PhoneticScheme) -> str:
    if scheme is PhoneticScheme.METAPHONE:
        return metaphone(token)
    if scheme is PhoneticScheme.DOUBLE_METAPHONE_PRIMARY:
        return double_metaphone(token)[0]
    if scheme is PhoneticScheme.SOUNDEX_DOUBLE_METAPHONE:
        return soundex(token) + double_metaphone(token)[0]
    if scheme is PhoneticScheme.SOUNDEX_METAPHONE:
        return soundex(token) + metaphone(token)
    raise ValueError(f"unknown phonetic scheme: {scheme!r}")


def phonetic_key(text: str, scheme: PhoneticScheme) -> str:
    """Per-token phonetic codes of normalized text, joined by the separator."""
    return KEY_SEPARATOR.join(_token_code(tok, scheme) for tok in tokenize(text))


def phonetic_similarity(reference: str, hypothesis: str, scheme: PhoneticScheme) -> float:
    """Sequence ratio of the two phonetic keys, in [0, 1]."""
    return sequence_ratio(
        phonetic_key(reference, scheme), phonetic_key(hypothesis, scheme)
    )
