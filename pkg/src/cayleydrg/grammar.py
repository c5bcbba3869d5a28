"""Text grammar for group specs and connection-set words.

Group specs:  Z<n> | E(<p>,<k>) | SD(<n>,<m>,<r>) | HEIS(<p>) | AFFSQ(<q>),
combined with infix `x` for direct products, e.g. "Z3 x Z3 x Z5".

Connection sets: comma-separated words over generator names; `^` takes
powers (negative allowed), a `-` prefix inverts a whole word:
"b, a^-1 b a" or "-a^7 b".
"""

from __future__ import annotations

import re

from .groups import (
    FiniteGroup,
    Word,
    affine_square,
    cyclic,
    direct_product,
    elem_abelian,
    heisenberg,
    semidirect,
)

__all__ = ["ParseError", "parse_group_spec", "parse_words"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_ATOM = re.compile(
    r"\s*(?:"
    r"Z(?P<zn>\d+)"
    r"|E\(\s*(?P<ep>\d+)\s*,\s*(?P<ek>\d+)\s*\)"
    r"|SD\(\s*(?P<sn>\d+)\s*,\s*(?P<sm>\d+)\s*,\s*(?P<sr>\d+)\s*\)"
    r"|HEIS\(\s*(?P<hp>\d+)\s*\)"
    r"|AFFSQ\(\s*(?P<aq>\d+)\s*\)"
    r")\s*",
    re.IGNORECASE,
)


def parse_group_spec(text: str) -> FiniteGroup:
    pos = 0
    factors = []
    expect_atom = True
    while pos < len(text):
        if expect_atom:
            m = _ATOM.match(text, pos)
            if not m:
                raise ParseError(f"expected a group atom in {text!r}", pos)
            if m["zn"] is not None:
                factors.append(cyclic(int(m["zn"])))
            elif m["ep"] is not None:
                factors.append(elem_abelian(int(m["ep"]), int(m["ek"])))
            elif m["sn"] is not None:
                factors.append(semidirect(int(m["sn"]), int(m["sm"]), int(m["sr"])))
            elif m["hp"] is not None:
                factors.append(heisenberg(int(m["hp"])))
            else:
                factors.append(affine_square(int(m["aq"])))
            pos = m.end()
            expect_atom = False
        else:
            if text[pos] in "xX":
                pos += 1
                expect_atom = True
            elif text[pos].isspace():
                pos += 1
            else:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
    if expect_atom:
        raise ParseError("dangling product operator" if factors else "empty group spec",
                         len(text))
    g = factors[0]
    for f in factors[1:]:
        g = direct_product(g, f)
    return g


_FACTOR = re.compile(r"(?P<inv>-)?(?P<name>[A-Za-z_]\w*)(?:\^(?P<exp>-?\d+))?$")


def parse_words(text: str) -> list[Word]:
    """Parse a comma-separated list of generator words."""
    words = []
    offset = 0
    for chunk in text.split(","):
        body = chunk.strip()
        if not body:
            raise ParseError("empty word", offset)
        invert_word = False
        if body.startswith("-"):
            invert_word = True
            body = body[1:].strip()
        factors = []
        for piece in body.split():
            m = _FACTOR.match(piece)
            if not m:
                raise ParseError(f"bad factor {piece!r}", offset + chunk.find(piece))
            exp = int(m["exp"]) if m["exp"] is not None else 1
            if m["inv"]:
                exp = -exp
            factors.append((m["name"], exp))
        if invert_word:
            factors = [(nm, -e) for nm, e in reversed(factors)]
        words.append(Word(tuple(factors)))
        offset += len(chunk) + 1
    return words
