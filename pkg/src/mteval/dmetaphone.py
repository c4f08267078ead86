"""Double Metaphone phonetic encoder.

A transcription of the published Double Metaphone case analysis, operating on
A-Z input (callers transliterate diacritics away first). Both codes are
capped at 4 characters; the alternate code equals the primary unless an
ambiguity branch fired. Multi-word special cases of the original (e.g.
"VAN ", "SAN ") are retained but cannot trigger on single tokens.
"""

from __future__ import annotations

import unicodedata

_VOWELS = frozenset("AEIOUY")
_SILENT_STARTERS = ("GN", "KN", "PN", "WR", "PS")

CODE_LENGTH = 4


def _letters_only(token: str) -> str:
    decomposed = unicodedata.normalize("NFD", token)
    return "".join(c for c in decomposed.upper() if "A" <= c <= "Z" or c == " ")


def double_metaphone(token: str) -> tuple[str, str]:
    """Return (primary, alternate) Double Metaphone codes for one token."""
    word = _letters_only(token).strip()
    if not word:
        return "", ""

    last = len(word) - 1
    padded = word + " " * 5
    slavo_germanic = (
        "W" in word or "K" in word or "CZ" in word or "WITZ" in word
    )

    def at(k: int) -> str:
        return padded[k] if 0 <= k < len(padded) else ""

    def seg(k: int, n: int) -> str:
        return padded[k : k + n] if k >= 0 else ""

    pri: list[str] = []
    sec: list[str] = []

    def add(p: str, s: str | None = None) -> None:
        if p:
            pri.append(p)
        s = p if s is None else s
        if s:
            sec.append(s)

    pos = 0
    if word[:2] in _SILENT_STARTERS:
        pos = 1
    if word[0] == "X":
        add("S")
        pos = 1

    while pos <= last:
        ch = word[pos]
        step = 1

        if ch in _VOWELS:
            if pos == 0:
                add("A")

        elif ch == "B":
            add("P")
            if at(pos + 1) == "B":
                step = 2

        elif ch == "C":
            if (
                pos > 1
                and at(pos - 2) not in _VOWELS
                and seg(pos - 1, 3) == "ACH"
                and (at(pos + 2) not in ("I", "E") or seg(pos - 2, 6) in ("BACHER", "MACHER"))
            ):
                add("K")
                step = 2
            elif pos == 0 and seg(0, 6) == "CAESAR":
                add("S")
                step = 2
            elif seg(pos, 4) == "CHIA":
                add("K")
                step = 2
            elif seg(pos, 2) == "CH":
                if pos > 0 and seg(pos, 4) == "CHAE":
                    add("K", "X")
                elif (
                    pos == 0
                    and (seg(pos + 1, 5) in ("HARAC", "HARIS") or seg(pos + 1, 3) in ("HOR", "HYM", "HIA", "HEM"))
                    and seg(0, 5) != "CHORE"
                ):
                    add("K")
                elif (
                    seg(0, 4) in ("VAN ", "VON ")
                    or seg(0, 3) == "SCH"
                    or seg(pos - 2, 6) in ("ORCHES", "ARCHIT", "ORCHID")
                    or at(pos + 2) in ("T", "S")
                    or (
                        (at(pos - 1) in ("A", "O", "U", "E") or pos == 0)
                        and at(pos + 2) in ("L", "R", "N", "M", "B", "H", "F", "V", "W", " ")
                    )
                ):
                    add("K")
                elif pos > 0:
                    if seg(0, 2) == "MC":
                        add("K")
                    else:
                        add("X", "K")
                else:
                    add("X")
                step = 2
            elif seg(pos, 2) == "CZ" and seg(pos - 2, 4) != "WICZ":
                add("S", "X")
                step = 2
            elif seg(pos + 1, 3) == "CIA":
                add("X")
                step = 3
            elif seg(pos, 2) == "CC" and not (pos == 1 and word[0] == "M"):
                if at(pos + 2) in ("I", "E", "H") and seg(pos + 2, 2) != "HU":
                    if (pos == 1 and word[0] == "A") or seg(pos - 1, 5) in ("UCCEE", "UCCES"):
                        add("KS")
                    else:
                        add("X")
                    step = 3
                else:
                    add("K")
                    step = 2
            elif seg(pos, 2) in ("CK", "CG", "CQ"):
                add("K")
                step = 2
            elif seg(pos, 2) in ("CI", "CE", "CY"):
                if seg(pos, 3) in ("CIO", "CIE", "CIA"):
                    add("S", "X")
                else:
                    add("S")
                step = 2
            else:
                if seg(pos + 1, 2) in (" C", " Q", " G"):
                    add("K")
                    step = 3
                else:
                    add("K")
                    if at(pos + 1) in ("C", "K", "Q") and seg(pos + 1, 2) not in ("CE", "CI"):
                        step = 2

        elif ch == "D":
            if seg(pos, 2) == "DG":
                if at(pos + 2) in ("I", "E", "Y"):
                    add("J")
                    step = 3
                else:
                    add("TK")
                    step = 2
            elif seg(pos, 2) in ("DT", "DD"):
                add("T")
                step = 2
            else:
                add("T")

        elif ch == "F":
            add("F")
            if at(pos + 1) == "F":
                step = 2

        elif ch == "G":
            if at(pos + 1) == "H":
                if pos > 0 and at(pos - 1) not in _VOWELS:
                    add("K")
                    step = 2
                elif pos < 3:
                    if pos == 0:
                        if at(pos + 2) == "I":
                            add("J")
                        else:
                            add("K")
                        step = 2
                    # non-initial GH right after an initial vowel: silent
                elif (
                    (pos > 1 and at(pos - 2) in ("B", "H", "D"))
                    or (pos > 2 and at(pos - 3) in ("B", "H", "D"))
                    or (pos > 3 and at(pos - 4) in ("B", "H"))
                ):
                    step = 2
                else:
                    if pos > 2 and at(pos - 1) == "U" and at(pos - 3) in ("C", "G", "L", "R", "T"):
                        add("F")
                        step = 2
                    elif pos > 0 and at(pos - 1) != "I":
                        add("K")
                        step = 2
            elif at(pos + 1) == "N":
                if pos == 1 and word[0] in _VOWELS and not slavo_germanic:
                    add("KN", "N")
                else:
                    if seg(pos + 2, 2) != "EY" and not slavo_germanic:
                        add("N", "KN")
                    else:
                        add("KN")
                step = 2
            elif seg(pos + 1, 2) == "LI" and not slavo_germanic:
                add("KL", "L")
                step = 2
            elif pos == 0 and (
                at(pos + 1) == "Y"
                or seg(pos + 1, 2) in ("ES", "EP", "EB", "EL", "EY", "IB", "IL", "IN", "IE", "EI", "ER")
            ):
                add("K", "J")
                step = 2
            elif (
                (seg(pos + 1, 2) == "ER" or at(pos + 1) == "Y")
                and seg(0, 6) not in ("DANGER", "RANGER", "MANGER")
                and at(pos - 1) not in ("E", "I")
                and seg(pos - 1, 3) not in ("RGY", "OGY")
            ):
                add("K", "J")
                step = 2
            elif at(pos + 1) in ("E", "I", "Y") or seg(pos - 1, 4) in ("AGGI", "OGGI"):
                if seg(0, 4) in ("VON ", "VAN ") or seg(0, 3) == "SCH" or seg(pos + 1, 2) == "ET":
                    add("K")
                elif seg(pos + 1, 4) == "IER ":
                    add("J")
                else:
                    add("J", "K")
                step = 2
            else:
                add("K")
                if at(pos + 1) == "G":
                    step = 2

        elif ch == "H":
            if (pos == 0 or at(pos - 1) in _VOWELS) and at(pos + 1) in _VOWELS:
                add("H")
                step = 2
            # otherwise silent (covers HH)

        elif ch == "J":
            if seg(pos, 4) == "JOSE" or seg(0, 4) == "SAN ":
                if (pos == 0 and at(pos + 4) == " ") or seg(0, 4) == "SAN ":
                    add("H")
                else:
                    add("J", "H")
            elif pos == 0:
                add("J", "A")
            elif (
                at(pos - 1) in _VOWELS
                and not slavo_germanic
                and at(pos + 1) in ("A", "O")
            ):
                add("J", "H")
            elif pos == last:
                add("J", "")
            elif at(pos + 1) not in ("L", "T", "K", "S", "N", "M", "B", "Z") and at(pos - 1) not in ("S", "K", "L"):
                add("J")
            if at(pos + 1) == "J":
                step = 2

        elif ch == "K":
            add("K")
            if at(pos + 1) == "K":
                step = 2

        elif ch == "L":
            if at(pos + 1) == "L":
                if (pos == last - 2 and seg(pos - 1, 4) in ("ILLO", "ILLA", "ALLE")) or (
                    (seg(last - 1, 2) in ("AS", "OS") or at(last) in ("A", "O"))
                    and seg(pos - 1, 4) == "ALLE"
                ):
                    add("L", "")
                else:
                    add("L")
                step = 2
            else:
                add("L")

        elif ch == "M":
            add("M")
            if (seg(pos - 1, 3) == "UMB" and (pos + 1 == last or seg(pos + 2, 2) == "ER")) or at(pos + 1) == "M":
                step = 2

        elif ch == "N":
            add("N")
            if at(pos + 1) == "N":
                step = 2

        elif ch == "P":
            if at(pos + 1) == "H":
                add("F")
                step = 2
            else:
                add("P")
                if at(pos + 1) in ("P", "B"):
                    step = 2

        elif ch == "Q":
            add("K")
            if at(pos + 1) == "Q":
                step = 2

        elif ch == "R":
            if (
                pos == last
                and not slavo_germanic
                and seg(pos - 2, 2) == "IE"
                and seg(pos - 4, 2) not in ("ME", "MA")
            ):
                add("", "R")
            else:
                add("R")
            if at(pos + 1) == "R":
                step = 2

        elif ch == "S":
            if seg(pos - 1, 3) in ("ISL", "YSL"):
                pass
            elif pos == 0 and seg(0, 5) == "SUGAR":
                add("X", "S")
            elif seg(pos, 2) == "SH":
                if seg(pos + 1, 4) in ("HEIM", "HOEK", "HOLM", "HOLZ"):
                    add("S")
                else:
                    add("X")
                step = 2
            elif seg(pos, 3) in ("SIO", "SIA") or seg(pos, 4) == "SIAN":
                if not slavo_germanic:
                    add("S", "X")
                else:
                    add("S")
                step = 3
            elif (pos == 0 and at(pos + 1) in ("M", "N", "L", "W")) or at(pos + 1) == "Z":
                add("S", "X")
                if at(pos + 1) == "Z":
                    step = 2
            elif seg(pos, 2) == "SC":
                if at(pos + 2) == "H":
                    if seg(pos + 3, 2) in ("OO", "ER", "EN", "UY", "ED", "EM"):
                        if seg(pos + 3, 2) in ("ER", "EN"):
                            add("X", "SK")
                        else:
                            add("SK")
                    else:
                        if pos == 0 and at(3) not in _VOWELS and at(3) != "W":
                            add("X", "S")
                        else:
                            add("X")
                    step = 3
                elif at(pos + 2) in ("I", "E", "Y"):
                    add("S")
                    step = 3
                else:
                    add("SK")
                    step = 3
            elif pos == last and seg(pos - 2, 2) in ("AI", "OI"):
                add("", "S")
            else:
                add("S")
                if at(pos + 1) in ("S", "Z"):
                    step = 2

        elif ch == "T":
            if seg(pos, 4) == "TION":
                add("X")
                step = 3
            elif seg(pos, 3) in ("TIA", "TCH"):
                add("X")
                step = 3
            elif seg(pos, 2) == "TH" or seg(pos, 3) == "TTH":
                if seg(pos + 2, 2) in ("OM", "AM") or seg(0, 4) in ("VON ", "VAN ") or seg(0, 3) == "SCH":
                    add("T")
                else:
                    add("0", "T")
                step = 2
            else:
                add("T")
                if at(pos + 1) in ("T", "D"):
                    step = 2

        elif ch == "V":
            add("F")
            if at(pos + 1) == "V":
                step = 2

        elif ch == "W":
            if seg(pos, 2) == "WR":
                add("R")
                step = 2
            elif pos == 0 and (at(1) in _VOWELS or seg(0, 2) == "WH"):
                if at(1) in _VOWELS:
                    add("A", "F")
                else:
                    add("A")
            elif (
                (pos == last and at(pos - 1) in _VOWELS)
                or seg(pos - 1, 5) in ("EWSKI", "EWSKY", "OWSKI", "OWSKY")
                or seg(0, 3) == "SCH"
            ):
                add("", "F")
            elif seg(pos, 4) in ("WICZ", "WITZ"):
                add("TS", "FX")
                step = 4
            # otherwise silent

        elif ch == "X":
            if not (pos == last and (seg(pos - 3, 3) in ("IAU", "EAU") or seg(pos - 2, 2) in ("AU", "OU"))):
                add("KS")
            if at(pos + 1) in ("C", "X"):
                step = 2

        elif ch == "Z":
            if at(pos + 1) == "H":
                add("J")
            elif seg(pos + 1, 2) in ("ZO", "ZI", "ZA") or (slavo_germanic and pos > 0 and at(pos - 1) != "T"):
                add("S", "TS")
            else:
                add("S")
            if at(pos + 1) == "Z":
                step = 2

        pos += step

    primary = "".join(pri)[:CODE_LENGTH]
    alternate = "".join(sec)[:CODE_LENGTH]
    return primary, alternate
