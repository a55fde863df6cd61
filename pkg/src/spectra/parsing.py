"""Text formats: ring descriptions, poset files and symbolic set queries.

Ring grammar::

    ring    := "zmod" INT
             | "polyquot" INT "[" INT ("," INT)* "]"
             | "product" factor (";" factor)*
             | "table" (PATH | JSON-object)
    factor  := "(" ring ")" | ring        # nested products need parentheses

Poset files hold one chain per line (``a < b`` or ``a < b < c``), or a
bare label to declare an isolated point; ``#`` starts a comment.  Points
are numbered by first appearance.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidParameter, ParseError
from .poset import SpectralPoset, make_poset
from .rings import FiniteRing, PolyQuotient, Product, Table, ZMod
from .zspec import SymbolicSpectrum, SymPoint, SymSet, integers, poly_code, poly_over

_LABEL = re.compile(r"[^\s<#]+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message, pos=None):
        return ParseError(message, *self.where(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self):
        self.skip()
        m = re.compile(r"[A-Za-z_]+").match(self.text, self.pos)
        if not m:
            raise self.error("expected a keyword")
        self.pos = m.end()
        return m.group(0), m.start()

    def integer(self):
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group(0))

    def until(self, stops):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            self.pos += 1
        return self.text[start:self.pos].strip(), start


def parse_ring(text: str, base_dir=None) -> FiniteRing:
    sc = _Scanner(text)
    ring = _ring(sc, base_dir)
    if not sc.at_end():
        raise sc.error("unexpected trailing input")
    return ring


def _build(sc, pos, factory, *args):
    try:
        return factory(*args)
    except InvalidParameter as exc:
        raise sc.error(str(exc), pos) from None


def _ring(sc, base_dir, nested=False):
    kw, pos = sc.word()
    if kw == "zmod":
        return _build(sc, pos, ZMod, sc.integer())
    if kw == "polyquot":
        p = sc.integer()
        sc.expect("[")
        coeffs = [sc.integer()]
        while sc.peek() == ",":
            sc.pos += 1
            coeffs.append(sc.integer())
        sc.expect("]")
        return _build(sc, pos, PolyQuotient, p, coeffs)
    if kw == "product":
        if nested:
            raise sc.error("nested product needs parentheses", pos)
        factors = [_factor(sc, base_dir)]
        while sc.peek() == ";":
            sc.pos += 1
            factors.append(_factor(sc, base_dir))
        return _build(sc, pos, Product, factors)
    if kw == "table":
        if sc.peek() == "{":
            try:
                obj, end = json.JSONDecoder().raw_decode(sc.text, sc.pos)
            except json.JSONDecodeError as exc:
                raise sc.error(f"bad inline table JSON: {exc.msg}") from None
            sc.pos = end
            return _build(sc, pos, Table.from_dict, obj)
        path, ppos = sc.until(";)")
        if not path:
            raise sc.error("table needs a JSON path", ppos)
        full = Path(path) if base_dir is None or Path(path).is_absolute() else Path(base_dir) / path
        if not full.is_file():
            raise sc.error(f"table file {path!r} not found", ppos)
        try:
            obj = json.loads(full.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None
        return _build(sc, pos, Table.from_dict, obj, path)
    raise sc.error(f"unknown ring presentation {kw!r}", pos)


def _factor(sc, base_dir):
    if sc.peek() == "(":
        sc.pos += 1
        ring = _ring(sc, base_dir)
        sc.expect(")")
        return ring
    return _ring(sc, base_dir, nested=True)


def render_ring(ring: FiniteRing) -> str:
    return ring.describe()


# --------------------------------------------------------------------------
# posets


def parse_poset(text: str) -> SpectralPoset:
    labels = {}
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split("<")
        offset = 0
        names = []
        for part in parts:
            stripped = part.strip()
            col = offset + (len(part) - len(part.lstrip())) + 1
            if not stripped:
                raise ParseError("missing point label", lineno, col)
            if not _LABEL.fullmatch(stripped):
                raise ParseError(f"bad point label {stripped!r}", lineno, col)
            names.append(stripped)
            offset += len(part) + 1
        for name in names:
            labels.setdefault(name, len(labels))
        pairs.extend((labels[a], labels[b]) for a, b in zip(names, names[1:]))
    order = sorted(labels, key=labels.get)
    return make_poset(len(order), pairs, labels=order)


def render_poset(X: SpectralPoset) -> str:
    lines = list(X.labels)
    lines += [f"{X.labels[a]} < {X.labels[b]}" for a, b in X.covers()]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# symbolic spectra


def parse_symbolic(text: str) -> SymbolicSpectrum:
    parts = text.split()
    if parts == ["zspec"]:
        return integers()
    if len(parts) == 2 and parts[0] == "fpspec" and parts[1].isdigit():
        try:
            return poly_over(int(parts[1]))
        except InvalidParameter as exc:
            raise ParseError(str(exc), 1, len(parts[0]) + 2) from None
    raise ParseError(f"expected 'zspec' or 'fpspec P', got {text!r}")


def render_symbolic(spectrum: SymbolicSpectrum) -> str:
    return "zspec" if spectrum.kind == "integers" else f"fpspec {spectrum.p}"


_TERM = re.compile(r"(\d*)(x(?:\^(\d+))?)?")


def parse_poly(text: str, p: int) -> int:
    """``x^2+x+1`` (or an integer code) to the base-``p`` code."""
    text = text.replace(" ", "")
    if text.isdigit():
        return int(text)
    digits = {}
    for term in text.split("+"):
        m = _TERM.fullmatch(term)
        if not term or not m or not (m.group(1) or m.group(2)):
            raise InvalidParameter(f"bad polynomial term {term!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        power = 0 if not m.group(2) else int(m.group(3) or 1)
        digits[power] = (digits.get(power, 0) + coeff) % p
    vec = [0] * (max(digits) + 1)
    for k, c in digits.items():
        vec[k] = c
    return poly_code(vec, p)


def parse_point(spectrum: SymbolicSpectrum, text: str) -> SymPoint:
    t = text.strip()
    if t in ("generic", "(0)"):
        return spectrum.generic
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    q = int(t) if spectrum.kind == "integers" else parse_poly(t, spectrum.p)
    return spectrum.closed(q)


def parse_symset(spectrum: SymbolicSpectrum, text: str) -> SymSet:
    """``{2,3}``, ``{generic,2}``, ``cofin{2}``, ``{2}+generic``,
    ``all-primes`` (every closed point), ``all``, ``generic``."""
    t = text.strip()
    if t == "all":
        return spectrum.whole()
    if t in ("all-primes", "all-points"):
        return spectrum.cofin((), generic=False)
    if t in ("generic", "(0)"):
        return spectrum.fin((), generic=True)
    generic = False
    if t.endswith("+generic"):
        generic = True
        t = t[: -len("+generic")]
    cofinite = t.startswith("cofin")
    if cofinite:
        t = t[len("cofin"):]
    if not (t.startswith("{") and t.endswith("}")):
        raise InvalidParameter(f"bad set expression {text!r}")
    points = []
    for item in filter(None, (s.strip() for s in t[1:-1].split(","))):
        pt = parse_point(spectrum, item)
        if pt.is_generic:
            generic = True
        else:
            points.append(pt.index)
    return SymSet(spectrum, cofinite, tuple(points), generic)


# --------------------------------------------------------------------------
# subjects


@dataclass(frozen=True)
class Subject:
    kind: str  # "ring" | "poset" | "symbolic"
    value: object
    source: str

    def render(self):
        if self.kind == "ring":
            return render_ring(self.value)
        if self.kind == "poset":
            return render_poset(self.value)
        return render_symbolic(self.value)


_RING_WORDS = ("zmod", "polyquot", "product", "table")


def parse_subject(text: str, base_dir=None) -> Subject:
    """A ring description, ``zspec``/``fpspec P``, a poset file path, or
    poset text."""
    stripped = text.strip()
    first = stripped.split(None, 1)[0] if stripped else ""
    if first in _RING_WORDS:
        return Subject("ring", parse_ring(stripped, base_dir), stripped)
    if first in ("zspec", "fpspec"):
        return Subject("symbolic", parse_symbolic(stripped), stripped)
    if "\n" not in text and "<" not in text and stripped:
        path = Path(stripped) if base_dir is None else Path(base_dir) / stripped
        if path.is_file():
            return Subject("poset", parse_poset(path.read_text()), stripped)
        raise ParseError(f"no such poset file {stripped!r}")
    return Subject("poset", parse_poset(text), "<text>")
