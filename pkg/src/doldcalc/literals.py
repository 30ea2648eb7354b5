"""Parsing and printing of the table-style literals used on the command line.

* spectra:  multiset ``{3,4}`` or pairs ``3:1,4:1``
* Dold sequences:  pairs ``15:-2`` or dense tuple ``(3,1,-1,-1)``
* period sets:  ``{1,2}``

Whitespace is ignored everywhere.  The empty string is the empty object.
"""
from __future__ import annotations

import re

from .doldcore import DoldSequence, RootSpectrum

__all__ = [
    "ParseError",
    "format_dold",
    "format_set",
    "format_spectrum",
    "parse_dold",
    "parse_set",
    "parse_spectrum",
]

_INT = re.compile(r"[+-]?\d+")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _ints(body: str, text: str, offset: int) -> list[int]:
    """Comma separated ints; ``offset`` maps positions back into ``text``."""
    if body == "":
        return []
    out = []
    pos = 0
    for chunk in body.split(","):
        if not _INT.fullmatch(chunk):
            raise ParseError(f"expected an integer, got {chunk!r}", text, offset + pos)
        out.append(int(chunk))
        pos += len(chunk) + 1
    return out


def _pairs(body: str, text: str) -> list[tuple[int, int]]:
    out = []
    pos = 0
    for chunk in body.split(","):
        m = re.fullmatch(r"([+-]?\d+):([+-]?\d+)", chunk)
        if not m:
            raise ParseError(f"expected 'index:value', got {chunk!r}", text, pos)
        k = int(m.group(1))
        if k < 1:
            raise ParseError("indices must be positive", text, pos)
        out.append((k, int(m.group(2))))
        pos += len(chunk) + 1
    return out


def _strip(text: str) -> str:
    return re.sub(r"\s+", "", text)


def parse_set(text: str) -> frozenset[int]:
    s = _strip(text)
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError("set literal must look like {1,2}", text, 0)
    vals = _ints(s[1:-1], text, 1)
    if any(v < 1 for v in vals):
        raise ParseError("set elements must be positive", text, 1)
    return frozenset(vals)


def parse_spectrum(text: str) -> RootSpectrum:
    s = _strip(text)
    if s == "":
        return RootSpectrum()
    if s.startswith("{"):
        if not s.endswith("}"):
            raise ParseError("unterminated multiset", text, len(s))
        elems = _ints(s[1:-1], text, 1)
        if any(k < 1 for k in elems):
            raise ParseError("root degrees must be positive", text, 1)
        return RootSpectrum.from_multiset(elems)
    return RootSpectrum(_pairs(s, text))


def parse_dold(text: str) -> DoldSequence:
    s = _strip(text)
    if s == "":
        return DoldSequence()
    if s.startswith("("):
        if not s.endswith(")"):
            raise ParseError("unterminated tuple", text, len(s))
        return DoldSequence.from_dense(_ints(s[1:-1], text, 1))
    return DoldSequence(_pairs(s, text))


def format_set(xs) -> str:
    return "{" + ",".join(str(x) for x in sorted(xs)) + "}"


def format_spectrum(r: RootSpectrum) -> str:
    if any(v < 0 for v in r.values()):
        return ",".join(f"{k}:{v}" for k, v in r.items())
    return format_set(r.multiset())


def format_dold(a: DoldSequence) -> str:
    return "(" + ",".join(str(v) for v in a.to_dense()) + ")"
