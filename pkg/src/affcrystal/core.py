"""Value types: residues, segments, multisegments, multicharges, weights.

All residues live in ``{0, ..., e-1}``.  A segment ``[h;l)`` is the run of
residues ``h, h+1, ..., h+l-1`` taken mod ``e``; the same segment written
by its tail is ``(l;t]`` with ``t = h+l-1 mod e``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class ParseError(ValueError):
    """Malformed textual input.  ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


@dataclass(frozen=True)
class CrystalContext:
    e: int

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise ValueError(f"e must be an integer >= 2, got {self.e!r}")

    def res(self, x: int) -> int:
        return x % self.e

    @property
    def residues(self) -> range:
        return range(self.e)


def _check_e(e: int) -> int:
    if not isinstance(e, int) or e < 2:
        raise ValueError(f"e must be an integer >= 2, got {e!r}")
    return e


@dataclass(frozen=True, order=True)
class Segment:
    e: int
    head: int
    length: int

    def __post_init__(self):
        _check_e(self.e)
        if self.length < 1:
            raise ValueError(f"segment length must be >= 1, got {self.length}")
        object.__setattr__(self, "head", self.head % self.e)

    @classmethod
    def from_tail(cls, e: int, length: int, tail: int) -> "Segment":
        return cls(e, tail - length + 1, length)

    @property
    def tail(self) -> int:
        return (self.head + self.length - 1) % self.e

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple((self.head + k) % self.e for k in range(self.length))

    def __str__(self):
        return f"[{self.head};{self.length})"


class Multisegment:
    """Immutable multiset of segments over ``Z/eZ``.

    Stored as a map ``(head, length) -> multiplicity``; equality and hashing
    use the canonical ordering (length descending, then head ascending).
    """

    __slots__ = ("e", "_m", "_key", "_hash", "_rank")

    def __init__(self, e: int, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        self.e = _check_e(e)
        m: dict[tuple[int, int], int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (head, length), mult in items:
            if length < 1:
                raise ValueError(f"segment length must be >= 1, got {length}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            if mult:
                k = (head % e, length)
                m[k] = m.get(k, 0) + mult
        self._m = m
        self._key = tuple(sorted(m.items(), key=lambda kv: (-kv[0][1], kv[0][0])))
        self._hash = hash((e, self._key))
        self._rank = sum(l * k for (_, l), k in m.items())

    @classmethod
    def empty(cls, e: int) -> "Multisegment":
        return cls(e)

    @classmethod
    def from_segments(cls, e: int, segments: Iterable[Segment | tuple[int, int]]) -> "Multisegment":
        c: Counter = Counter()
        for s in segments:
            if isinstance(s, Segment):
                c[(s.head, s.length)] += 1
            else:
                c[(s[0] % e, s[1])] += 1
        return cls(e, c)

    # -- queries -----------------------------------------------------------

    def mult(self, head: int, length: int) -> int:
        """Multiplicity of ``[head;length)``."""
        return self._m.get((head % self.e, length), 0)

    def mult_tail(self, length: int, tail: int) -> int:
        """Multiplicity of ``(length;tail]``."""
        return self._m.get(((tail - length + 1) % self.e, length), 0)

    def items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Canonically ordered ``((head, length), mult)`` pairs."""
        return self._key

    def segments(self) -> Iterator[Segment]:
        """Every segment, repeated by multiplicity, in canonical order."""
        for (h, l), k in self._key:
            for _ in range(k):
                yield Segment(self.e, h, l)

    def lengths(self) -> list[int]:
        """Distinct lengths, descending."""
        return sorted({l for (_, l) in self._m}, reverse=True)

    @property
    def max_length(self) -> int:
        return max((l for (_, l) in self._m), default=0)

    @property
    def rank(self) -> int:
        return self._rank

    def __len__(self):
        return sum(self._m.values())

    def __bool__(self):
        return bool(self._m)

    # -- arithmetic --------------------------------------------------------

    def changed(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> "Multisegment":
        """Copy with segments ``(head, length)`` added/removed (one each)."""
        m = dict(self._m)
        for h, l in remove:
            k = (h % self.e, l)
            if m.get(k, 0) < 1:
                raise ValueError(f"cannot remove absent segment [{k[0]};{l})")
            m[k] -= 1
        for h, l in add:
            k = (h % self.e, l)
            m[k] = m.get(k, 0) + 1
        return Multisegment(self.e, m)

    def restricted(self, min_length: int) -> "Multisegment":
        """Keep only segments of length >= ``min_length``."""
        return Multisegment(self.e, {k: v for k, v in self._m.items() if k[1] >= min_length})

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.e == other.e and self._key == other._key

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self._rank, tuple((-l, h, -k) for (h, l), k in self._key))

    def __lt__(self, other: "Multisegment"):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Multisegment(e={self.e}, {format_multisegment(self)!r})"

    def __str__(self):
        return format_multisegment(self)

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "segments": [{"head": h, "length": l, "mult": k} for (h, l), k in self._key],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Multisegment":
        try:
            e = int(obj["e"])
            return cls(e, [((int(s["head"]), int(s["length"])), int(s.get("mult", 1))) for s in obj["segments"]])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad multisegment JSON: {exc}") from exc


# -- text format -------------------------------------------------------------

_INT = re.compile(r"-?\d+")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _INT.match(text, pos)
        if m:
            out.append(("int", int(m.group()), pos))
            pos = m.end()
        else:
            out.append(("sym", text[pos], pos))
            pos += 1
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect_sym(self, s):
        t = self.next()
        if t[0] != "sym" or t[1] != s:
            self.fail(f"expected {s!r}", t)
        return t

    def expect_int(self):
        t = self.next()
        if t[0] != "int":
            self.fail("expected integer", t)
        return t[1]


def _parse_segment(p: _Parser, e: int) -> tuple[int, int]:
    t = p.next()
    if t[0] == "sym" and t[1] == "[":
        first = p.expect_int()
        sep = p.next()
        if sep[0] == "sym" and sep[1] == ";":
            length_tok = p.peek()
            length = p.expect_int()
            p.expect_sym(")")
            if length < 1:
                p.fail("segment length must be >= 1", length_tok)
            return first % e, length
        residues = [first]
        while sep[0] == "sym" and sep[1] == ",":
            tok = p.peek()
            r = p.expect_int()
            if (r - residues[-1]) % e != 1:
                p.fail("residue list is not consecutive mod e", tok)
            residues.append(r)
            sep = p.next()
        if sep[0] != "sym" or sep[1] != "]":
            p.fail("expected ',' or ']'", sep)
        return first % e, len(residues)
    if t[0] == "sym" and t[1] == "(":
        length_tok = p.peek()
        length = p.expect_int()
        p.expect_sym(";")
        tail = p.expect_int()
        p.expect_sym("]")
        if length < 1:
            p.fail("segment length must be >= 1", length_tok)
        return (tail - length + 1) % e, length
    p.fail("expected segment", t)


def parse_multisegment(text: str, ctx: CrystalContext | int) -> Multisegment:
    """Parse ``[h;l)``, ``(l;t]``, ``[a,b,...]`` terms joined by ``+``.

    Multiplicities are written ``k*seg`` or ``k seg``.  The empty string
    (or only whitespace) is the empty multisegment.
    """
    e = ctx.e if isinstance(ctx, CrystalContext) else _check_e(ctx)
    p = _Parser(text)
    c: Counter = Counter()
    if p.peek()[0] == "end":
        return Multisegment(e)
    while True:
        mult = 1
        if p.peek()[0] == "int":
            tok = p.next()
            mult = tok[1]
            if mult < 1:
                p.fail("multiplicity must be >= 1", tok)
            if p.peek()[0] == "sym" and p.peek()[1] == "*":
                p.next()
        c[_parse_segment(p, e)] += mult
        t = p.next()
        if t[0] == "end":
            break
        if t[0] != "sym" or t[1] != "+":
            p.fail("expected '+' or end of input", t)
    return Multisegment(e, c)


def format_multisegment(psi: Multisegment) -> str:
    parts = []
    for (h, l), k in psi.items():
        seg = f"[{h};{l})"
        parts.append(seg if k == 1 else f"{k}*{seg}")
    return "+".join(parts)


# -- basic operations --------------------------------------------------------

def rank(psi: Multisegment) -> int:
    return psi.rank


def is_aperiodic(psi: Multisegment) -> bool:
    """True iff at every occurring length some tail residue is absent."""
    tails: dict[int, set[int]] = {}
    for (h, l) in psi._m:
        tails.setdefault(l, set()).add((h + l - 1) % psi.e)
    return all(len(s) < psi.e for s in tails.values())


def rho(psi: Multisegment) -> Multisegment:
    """Segment reversal ``[i;l) -> (l;-i]``; an involution."""
    e = psi.e
    return Multisegment(e, {((-h - l + 1) % e, l): k for (h, l), k in psi.items()})


# -- multicharges ------------------------------------------------------------

@dataclass(frozen=True)
class Multicharge:
    e: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_e(self.e)
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("multicharge of level 0 is not supported")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"multicharge {vals} is not non-decreasing")
        if vals[-1] - vals[0] >= self.e:
            raise ValueError(f"multicharge {vals} has spread >= e={self.e}")

    @property
    def level(self) -> int:
        return len(self.values)

    def kappa(self, i: int) -> int:
        i %= self.e
        return sum(1 for v in self.values if v % self.e == i)

    def counts(self) -> tuple[int, ...]:
        return tuple(self.kappa(i) for i in range(self.e))

    def is_canonical(self) -> bool:
        return all(0 <= v < self.e for v in self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, c):
        return self.values[c]

    def __str__(self):
        return ",".join(str(v) for v in self.values)


def parse_multicharge(text: str, ctx: CrystalContext | int) -> Multicharge:
    e = ctx.e if isinstance(ctx, CrystalContext) else _check_e(ctx)
    body = text.strip().strip("()")
    try:
        vals = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ParseError(f"bad multicharge {text!r}; expected comma-separated integers") from None
    return Multicharge(e, vals)


def canonical_multicharge(counts: Iterable[int], e: int | None = None) -> Multicharge:
    """The multicharge ``(0^k0, 1^k1, ..., (e-1)^k_{e-1})``."""
    counts = tuple(counts)
    e = len(counts) if e is None else e
    if len(counts) != e:
        raise ValueError(f"expected {e} counts, got {len(counts)}")
    if any(k < 0 for k in counts):
        raise ValueError("counts must be non-negative")
    if sum(counts) == 0:
        raise ValueError("all-zero counts: level 0 multicharge is not supported")
    return Multicharge(e, tuple(i for i, k in enumerate(counts) for _ in range(k)))


# -- classical weights -------------------------------------------------------

@dataclass(frozen=True)
class ClassicalWeight:
    coords: tuple[int, ...] = field(default=())

    @classmethod
    def zero(cls, e: int) -> "ClassicalWeight":
        return cls((0,) * e)

    @classmethod
    def simple_root(cls, e: int, j: int) -> "ClassicalWeight":
        c = [0] * e
        c[j % e] += 2
        c[(j + 1) % e] -= 1
        c[(j - 1) % e] -= 1
        return cls(tuple(c))

    @classmethod
    def fundamental(cls, e: int, j: int) -> "ClassicalWeight":
        c = [0] * e
        c[j % e] = 1
        return cls(tuple(c))

    @property
    def e(self) -> int:
        return len(self.coords)

    def __add__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __getitem__(self, i):
        return self.coords[i % len(self.coords)]

    def __str__(self):
        return " ".join(str(c) for c in self.coords)
