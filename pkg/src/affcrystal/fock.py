"""l-partitions, FLOTW multipartitions and the Fock-space crystal ``B_e^v``.

Nodes are 1-based ``(row, column, component)`` triples.  The content of a
node uses the integer entries of the multicharge; the residue is the content
mod ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .core import Multicharge, Multisegment, ParseError


@dataclass(frozen=True, order=True)
class MultiPartition:
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c if x) for c in self.components)
        for c in comps:
            if any(x < 0 for x in c) or any(a < b for a, b in zip(c, c[1:])):
                raise ValueError(f"not a partition: {c}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, level: int) -> "MultiPartition":
        return cls(((),) * level)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def rank(self) -> int:
        return sum(sum(c) for c in self.components)

    def part(self, c: int, row: int) -> int:
        """``lambda^c_row`` (1-based row), zero beyond the last part."""
        comp = self.components[c]
        return comp[row - 1] if 1 <= row <= len(comp) else 0

    def with_node(self, a: int, b: int, c: int) -> "MultiPartition":
        comps = [list(x) for x in self.components]
        comp = comps[c]
        if a == len(comp) + 1 and b == 1:
            comp.append(1)
        else:
            assert comp[a - 1] + 1 == b
            comp[a - 1] = b
        return MultiPartition(tuple(tuple(x) for x in comps))

    def without_node(self, a: int, b: int, c: int) -> "MultiPartition":
        comps = [list(x) for x in self.components]
        assert comps[c][a - 1] == b
        comps[c][a - 1] -= 1
        return MultiPartition(tuple(tuple(x) for x in comps))

    def __str__(self):
        return format_multipartition(self)

    def to_json(self) -> dict:
        return {"components": [list(c) for c in self.components]}

    @classmethod
    def from_json(cls, obj) -> "MultiPartition":
        try:
            return cls(tuple(tuple(int(x) for x in c) for c in obj["components"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad multipartition JSON: {exc}") from exc


def parse_multipartition(text: str) -> MultiPartition:
    """Parse ``6.5.2|5.3.1|-``: components split on ``|``, parts on ``.``, ``-`` for empty."""
    comps = []
    offset = 0
    for chunk in text.split("|"):
        body = chunk.strip()
        if body in ("-", "", "∅"):
            comps.append(())
        else:
            try:
                parts = tuple(int(x) for x in body.split("."))
            except ValueError:
                raise ParseError(f"bad partition {body!r}", text, offset) from None
            if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
                raise ParseError(f"parts of {body!r} must be positive and non-increasing", text, offset)
            comps.append(parts)
        offset += len(chunk) + 1
    return MultiPartition(tuple(comps))


def format_multipartition(lam: MultiPartition) -> str:
    return "|".join(".".join(map(str, c)) if c else "-" for c in lam.components)


@dataclass(frozen=True)
class Node:
    a: int
    b: int
    c: int

    def content(self, v: Multicharge) -> int:
        return self.b - self.a + v.values[self.c]

    def residue(self, v: Multicharge) -> int:
        return self.content(v) % v.e


def _check_level(lam: MultiPartition, v: Multicharge):
    if lam.level != v.level:
        raise ValueError(f"level mismatch: multipartition has {lam.level} components, charge has level {v.level}")


# -- FLOTW -----------------------------------------------------------------

def is_flotw(lam: MultiPartition, v: Multicharge) -> bool:
    _check_level(lam, v)
    e, vals, l = v.e, v.values, v.level
    for j in range(l):
        comp = lam.components[j]
        if j < l - 1:
            shift, nxt = vals[j + 1] - vals[j], j + 1
        else:
            shift, nxt = e + vals[0] - vals[l - 1], 0
        depth = len(lam.components[nxt])
        for i in range(1, max(len(comp), depth - shift) + 1):
            if lam.part(j, i) < lam.part(nxt, i + shift):
                return False
    ends: dict[int, set[int]] = {}
    for c, comp in enumerate(lam.components):
        for i, k in enumerate(comp, start=1):
            ends.setdefault(k, set()).add((k - i + vals[c]) % e)
    return all(len(s) < e for s in ends.values())


def f_v(lam: MultiPartition, v: Multicharge, check: bool = True) -> Multisegment:
    """Part ``lambda^c_i`` becomes the segment of head ``1 - i + v_c`` and that length."""
    _check_level(lam, v)
    if check and not is_flotw(lam, v):
        raise ValueError(f"{lam} is not FLOTW for charge ({v})")
    segs = {}
    for c, comp in enumerate(lam.components):
        for i, k in enumerate(comp, start=1):
            key = ((1 - i + v.values[c]) % v.e, k)
            segs[key] = segs.get(key, 0) + 1
    return Multisegment(v.e, segs)


# -- the crystal B_e^v --------------------------------------------------------

def node_word(lam: MultiPartition, v: Multicharge, i: int) -> list[tuple[Node, str]]:
    """Addable (``A``) and removable (``R``) ``i``-nodes in increasing ``<_v`` order."""
    _check_level(lam, v)
    i %= v.e
    nodes = []
    for c, comp in enumerate(lam.components):
        depth = len(comp)
        for a in range(1, depth + 2):
            cur = lam.part(c, a)
            if a == 1 or lam.part(c, a - 1) > cur:
                nodes.append((Node(a, cur + 1, c), "A"))
            if a <= depth and cur > lam.part(c, a + 1):
                nodes.append((Node(a, cur, c), "R"))
    nodes = [x for x in nodes if x[0].residue(v) == i]
    nodes.sort(key=lambda x: (x[0].content(v), -x[0].c))
    for (n1, _), (n2, _) in zip(nodes, nodes[1:]):
        if n1.c == n2.c and n1.content(v) == n2.content(v):
            raise AssertionError(f"equal-content i-nodes in one component of {lam}")
    return nodes


def _reduced(lam, v, i):
    out = []
    for x in node_word(lam, v, i):
        if x[1] == "A" and out and out[-1][1] == "R":
            out.pop()
        else:
            out.append(x)
    return out


def fock_f(lam: MultiPartition, v: Multicharge, i: int) -> MultiPartition | None:
    """Add the good ``i``-node (rightmost surviving ``A``), or ``None``."""
    adds = [n for n, t in _reduced(lam, v, i) if t == "A"]
    if not adds:
        return None
    n = adds[-1]
    return lam.with_node(n.a, n.b, n.c)


def fock_e(lam: MultiPartition, v: Multicharge, i: int) -> MultiPartition | None:
    """Remove the leftmost surviving ``R``, or ``None``."""
    rems = [n for n, t in _reduced(lam, v, i) if t == "R"]
    if not rems:
        return None
    n = rems[0]
    return lam.without_node(n.a, n.b, n.c)


def fock_eps(lam: MultiPartition, v: Multicharge, i: int) -> int:
    return sum(1 for _, t in _reduced(lam, v, i) if t == "R")


def fock_phi(lam: MultiPartition, v: Multicharge, i: int) -> int:
    return sum(1 for _, t in _reduced(lam, v, i) if t == "A")


def fock_eps_vector(lam: MultiPartition, v: Multicharge) -> tuple[int, ...]:
    return tuple(fock_eps(lam, v, i) for i in range(v.e))


def fock_raising_path(lam: MultiPartition, v: Multicharge, choose=None) -> tuple[int, ...]:
    """Residues ``(i_1, ..., i_n)`` with ``lam = f_{i_1} ... f_{i_n} (empty)`` in ``B_e(v)``."""
    path = []
    cur = lam
    for _ in range(lam.rank):
        options = [i for i in range(v.e) if fock_eps(cur, v, i) > 0]
        if not options:
            break
        i = options[0] if choose is None else choose(options)
        cur = fock_e(cur, v, i)
        path.append(i)
    if cur.rank:
        raise ValueError(f"{lam} is not in the highest-weight component B_e({v})")
    return tuple(path)


def fock_replay(v: Multicharge, path: Iterable[int]) -> MultiPartition | None:
    cur = MultiPartition.empty(v.level)
    for i in reversed(tuple(path)):
        cur = fock_f(cur, v, i)
        if cur is None:
            return None
    return cur


# -- enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` with parts at most ``max_part``, as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        out += [(k,) + rest for rest in partitions(n - k, k)]
    return tuple(out)


def multipartitions(level: int, n: int) -> Iterator[MultiPartition]:
    """All ``level``-partitions of rank exactly ``n``."""
    def sizes(k, total):
        if k == 1:
            yield (total,)
            return
        for s in range(total + 1):
            for rest in sizes(k - 1, total - s):
                yield (s,) + rest
    for sz in sizes(level, n):
        for comps in product(*(partitions(s) for s in sz)):
            yield MultiPartition(comps)


def flotw_by_filter(v: Multicharge, max_rank: int) -> list[MultiPartition]:
    return [lam for n in range(max_rank + 1) for lam in multipartitions(v.level, n) if is_flotw(lam, v)]


@lru_cache(maxsize=256)
def flotw_by_closure(v: Multicharge, max_rank: int) -> tuple[MultiPartition, ...]:
    """Vertices of ``B_e(v)`` up to ``max_rank`` by closure of ``fock_f`` from the empty multipartition."""
    layer = [MultiPartition.empty(v.level)]
    out = list(layer)
    for _ in range(max_rank):
        nxt = {}
        for lam in layer:
            for i in range(v.e):
                mu = fock_f(lam, v, i)
                if mu is not None:
                    nxt.setdefault(mu, None)
        layer = sorted(nxt)
        out += layer
    return tuple(out)


def fock_edges(v: Multicharge, max_rank: int) -> list[tuple[MultiPartition, MultiPartition, int]]:
    edges = []
    for lam in flotw_by_closure(v, max_rank):
        if lam.rank == max_rank:
            continue
        for i in range(v.e):
            mu = fock_f(lam, v, i)
            if mu is not None:
                edges.append((lam, mu, i))
    return edges
