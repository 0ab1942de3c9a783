"""Crystal structures on aperiodic multisegments.

Two families of operators act on ``Psi_e``:

* the *tilde* operators ``f~_i``, ``e~_i`` grow/shrink segments at their tail;
  these give the crystal ``B_e(inf)``;
* the *hat* operators ``f^_i``, ``e^_i`` grow/shrink segments at their head.

They are conjugate under :func:`~affcrystal.core.rho` with ``i -> -i``, and the
hat operators coincide with the ``*``-twisted tilde operators, which is what
makes :func:`star` computable by replaying a raising path.

Operators that can vanish return ``None`` for the crystal zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .core import ClassicalWeight, CrystalContext, Multisegment, is_aperiodic, rho


class CrystalError(RuntimeError):
    """An internal consistency check failed (indicates a logic bug or bad input)."""


def _require_aperiodic(psi: Multisegment):
    if not is_aperiodic(psi):
        raise ValueError(f"multisegment {psi} is not aperiodic")


# -- partial sums -------------------------------------------------------------

def s_value(psi: Multisegment, i: int, l: int) -> int:
    """``S_{l,i} = sum_{k>=l} (m_(k;i-1] - m_(k;i])``."""
    return sum(psi.mult_tail(k, i - 1) - psi.mult_tail(k, i) for k in range(l, psi.max_length + 1))


def s_hat_value(psi: Multisegment, i: int, l: int) -> int:
    """``S^_{l,i} = sum_{k>=l} (m_[i+1;k) - m_[i;k))``."""
    return sum(psi.mult(i + 1, k) - psi.mult(i, k) for k in range(l, psi.max_length + 1))


def _profile(psi: Multisegment, count: Callable[[int], int]) -> list[int]:
    # suffix sums S_1..S_{L+1}; S_{L+1} = 0 so the minimum over l > 0 is attained
    L = psi.max_length
    out = [0] * (L + 2)
    for l in range(L, 0, -1):
        out[l] = out[l + 1] + count(l)
    return out[1:]


def _tail_profile(psi: Multisegment, i: int) -> list[int]:
    return _profile(psi, lambda k: psi.mult_tail(k, i - 1) - psi.mult_tail(k, i))


def _head_profile(psi: Multisegment, i: int) -> list[int]:
    return _profile(psi, lambda k: psi.mult(i + 1, k) - psi.mult(i, k))


def _argmin_first(prof: list[int]) -> int:
    m = min(prof)
    return prof.index(m) + 1


def _argmin_last(prof: list[int]) -> int:
    m = min(prof)
    return len(prof) - prof[::-1].index(m)


# -- tilde operators (tails) ---------------------------------------------------

def tilde_f(psi: Multisegment, i: int) -> Multisegment:
    e = psi.e
    i %= e
    l0 = _argmin_first(_tail_profile(psi, i))
    if l0 == 1:
        return psi.changed(add=[(i, 1)])
    return psi.changed(add=[(i - l0 + 1, l0)], remove=[(i - l0 + 1, l0 - 1)])


def tilde_e(psi: Multisegment, i: int) -> Multisegment | None:
    e = psi.e
    i %= e
    prof = _tail_profile(psi, i)
    if min(prof) == 0:
        return None
    l0 = _argmin_last(prof)
    head = i - l0 + 1
    if l0 == 1:
        return psi.changed(remove=[(head, 1)])
    return psi.changed(add=[(head, l0 - 1)], remove=[(head, l0)])


def epsilon(psi: Multisegment, i: int) -> int:
    return -min(_tail_profile(psi, i % psi.e))


# -- hat operators (heads) -----------------------------------------------------

def hat_f(psi: Multisegment, i: int) -> Multisegment:
    e = psi.e
    i %= e
    l0 = _argmin_first(_head_profile(psi, i))
    if l0 == 1:
        return psi.changed(add=[(i, 1)])
    return psi.changed(add=[(i, l0)], remove=[(i + 1, l0 - 1)])


def hat_e(psi: Multisegment, i: int) -> Multisegment | None:
    e = psi.e
    i %= e
    prof = _head_profile(psi, i)
    if min(prof) == 0:
        return None
    l0 = _argmin_last(prof)
    if l0 == 1:
        return psi.changed(remove=[(i, 1)])
    return psi.changed(add=[(i + 1, l0 - 1)], remove=[(i, l0)])


def epsilon_hat(psi: Multisegment, i: int) -> int:
    return -min(_head_profile(psi, i % psi.e))


# -- RA words ----------------------------------------------------------------

def tail_word(psi: Multisegment, i: int) -> list[tuple[str, int]]:
    """The word ``prod_{l>=1} R^{m_(l;i]} A^{m_(l;i-1]}`` as (letter, length) pairs."""
    word = []
    for l in range(1, psi.max_length + 1):
        word += [("R", l)] * psi.mult_tail(l, i)
        word += [("A", l)] * psi.mult_tail(l, i - 1)
    return word


def head_word(psi: Multisegment, i: int) -> list[tuple[str, int]]:
    """The word ``prod_{l>=1} R^{m_[i;l)} A^{m_[i+1;l)}`` as (letter, length) pairs."""
    word = []
    for l in range(1, psi.max_length + 1):
        word += [("R", l)] * psi.mult(i, l)
        word += [("A", l)] * psi.mult(i + 1, l)
    return word


def reduce_word(word: Iterable[tuple[str, object]]) -> list[tuple[str, object]]:
    """Delete ``RA`` factors until the word has the form ``A^a R^r``."""
    out: list = []
    for letter in word:
        if letter[0] == "A" and out and out[-1][0] == "R":
            out.pop()
        else:
            out.append(letter)
    return out


def word_string(word) -> str:
    return "".join(x[0] for x in word)


@dataclass(frozen=True)
class IStats:
    i: int
    eps: int
    eps_star: int
    phi: int
    wt_i: int
    a: int
    r: int
    a_hat: int
    r_hat: int
    l0: int
    l0_hat: int


def _ar(reduced) -> tuple[int, int, int]:
    a = sum(1 for x in reduced if x[0] == "A")
    r = len(reduced) - a
    # l0 is the length of the rightmost surviving A; the operator grows that
    # segment to length l0 + 1 (the S-sum index l_0 is one more than this)
    l0 = reduced[a - 1][1] if a else 0
    return a, r, l0


def stats(psi: Multisegment, i: int) -> IStats:
    """All ``i``-statistics, cross-checked between RA words and S-sums."""
    i %= psi.e
    a, r, l0 = _ar(reduce_word(tail_word(psi, i)))
    ah, rh, l0h = _ar(reduce_word(head_word(psi, i)))
    tp = _tail_profile(psi, i)
    hp = _head_profile(psi, i)
    if r != -min(tp) or a - r != tp[0]:
        raise CrystalError(f"tail word and S-sum disagree for {psi}, i={i}")
    if rh != -min(hp) or ah - rh != hp[0]:
        raise CrystalError(f"head word and S^-sum disagree for {psi}, i={i}")
    if (l0 + 1 if a else 1) != _argmin_first(tp) or (l0h + 1 if ah else 1) != _argmin_first(hp):
        raise CrystalError(f"RA-word l0 disagrees with S-sum l0 for {psi}, i={i}")
    wt = a - r + ah - rh
    return IStats(i=i, eps=r, eps_star=rh, phi=wt + r, wt_i=wt, a=a, r=r,
                  a_hat=ah, r_hat=rh, l0=l0, l0_hat=l0h)


def weight(psi: Multisegment) -> ClassicalWeight:
    return ClassicalWeight(tuple(
        _tail_profile(psi, i)[0] + _head_profile(psi, i)[0] for i in range(psi.e)
    ))


def epsilon_vector(psi: Multisegment) -> tuple[int, ...]:
    return tuple(epsilon(psi, i) for i in range(psi.e))


def epsilon_star_vector(psi: Multisegment) -> tuple[int, ...]:
    """``eps*_i = r^_i``, read off the head words."""
    return tuple(epsilon_hat(psi, i) for i in range(psi.e))


# -- paths and involutions ---------------------------------------------------

def raising_path(psi: Multisegment, choose: Callable[[list[int]], int] | None = None) -> tuple[int, ...]:
    """Residues ``(i_1, ..., i_n)`` with ``psi = f~_{i_1} ... f~_{i_n} (empty)``.

    By default each step raises at the smallest residue with ``eps_i > 0``;
    ``choose`` picks among the admissible residues instead.
    """
    _require_aperiodic(psi)
    path = []
    cur = psi
    for _ in range(psi.rank):
        options = [i for i in range(psi.e) if epsilon(cur, i) > 0]
        if not options:
            break
        i = options[0] if choose is None else choose(options)
        cur = tilde_e(cur, i)
        path.append(i)
    if cur:
        raise CrystalError(f"raising {psi} stalled at {cur}")
    return tuple(path)


def random_raising_path(psi: Multisegment, rng: random.Random) -> tuple[int, ...]:
    return raising_path(psi, choose=rng.choice)


def replay(e: int, path: Iterable[int], op: Callable[[Multisegment, int], Multisegment]) -> Multisegment:
    """Apply ``op_{i_1} ... op_{i_n}`` to the empty multisegment (``i_n`` first)."""
    cur = Multisegment(e)
    for i in reversed(tuple(path)):
        cur = op(cur, i)
    return cur


@lru_cache(maxsize=1 << 16)
def _star(psi: Multisegment) -> Multisegment:
    return replay(psi.e, raising_path(psi), hat_f)


def star(psi: Multisegment, path: Iterable[int] | None = None) -> Multisegment:
    """Kashiwara involution: replay a tilde raising path through the hat operators."""
    if path is None:
        return _star(psi)
    return replay(psi.e, path, hat_f)


def sharp(psi: Multisegment, path: Iterable[int] | None = None) -> Multisegment:
    """Diagram symmetry ``i <-> -i``: replay the raising path with residues negated."""
    if path is None:
        path = raising_path(psi)
    return replay(psi.e, (-i for i in path), tilde_f)


def tau(psi: Multisegment) -> Multisegment:
    out = sharp(rho(psi))
    if out != rho(sharp(psi)):
        raise CrystalError(f"sharp and rho do not commute on {psi}")
    return out


def tilde_f_star(psi: Multisegment, j: int) -> Multisegment:
    """``f~_j*`` computed from its definition ``* f~_j *`` (no use of hat operators)."""
    return star(tilde_f(star(psi), j))


# -- enumeration ---------------------------------------------------------------

@dataclass(frozen=True)
class CrystalGraph:
    e: int
    vertices: tuple[Multisegment, ...]
    edges: tuple[tuple[Multisegment, Multisegment, int], ...]

    def by_rank(self, n: int) -> list[Multisegment]:
        return [v for v in self.vertices if v.rank == n]


@lru_cache(maxsize=32)
def generate(ctx: CrystalContext | int, max_rank: int) -> CrystalGraph:
    """All vertices of ``B_e(inf)`` up to ``max_rank``, with f~ edges, by BFS from the empty multisegment."""
    e = ctx.e if isinstance(ctx, CrystalContext) else ctx
    if max_rank < 0:
        raise ValueError("max_rank must be >= 0")
    layer = [Multisegment(e)]
    vertices = list(layer)
    edges = []
    for _ in range(max_rank):
        seen: dict[Multisegment, None] = {}
        for psi in layer:
            for i in range(e):
                phi = tilde_f(psi, i)
                edges.append((psi, phi, i))
                seen.setdefault(phi, None)
        layer = sorted(seen)
        vertices += layer
    return CrystalGraph(e, tuple(vertices), tuple(edges))


def vertices(e: int, max_rank: int, min_rank: int = 0) -> list[Multisegment]:
    return [v for v in generate(e, max_rank).vertices if v.rank >= min_rank]
