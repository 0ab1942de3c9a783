"""Admissible multicharges and the inverse of ``f_v``.

A charge ``v`` is admissible for ``psi`` when ``kappa_i(v) >= eps*_i(psi)`` for
every residue; then there is exactly one FLOTW ``lambda`` with
``f_v(lambda) = psi``, which :func:`reconstruct` builds length by length.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .core import Multicharge, Multisegment, canonical_multicharge
from .fock import MultiPartition, f_v, is_flotw
from .infinity import epsilon_star_vector


class InadmissibleCharge(ValueError):
    def __init__(self, v: Multicharge, residue: int, need: int):
        self.residue = residue
        self.need = need
        super().__init__(
            f"charge ({v}) is not admissible: kappa_{residue} = {v.kappa(residue)} < eps*_{residue} = {need}"
        )


class ReconstructionError(RuntimeError):
    pass


def minimal_multicharge(psi: Multisegment) -> Multicharge:
    if not psi:
        raise ValueError("the empty multisegment has no multicharge of positive level")
    return canonical_multicharge(epsilon_star_vector(psi), psi.e)


def violated_bound(v: Multicharge, psi: Multisegment) -> tuple[int, int] | None:
    """First residue ``i`` with ``kappa_i(v) < eps*_i(psi)``, as ``(i, eps*_i)``."""
    for i, need in enumerate(epsilon_star_vector(psi)):
        if v.kappa(i) < need:
            return i, need
    return None


def is_admissible(v: Multicharge, psi: Multisegment) -> bool:
    return violated_bound(v, psi) is None


def enumerate_admissible(psi: Multisegment, max_level: int) -> list[Multicharge]:
    """Canonical admissible charges of level at most ``max_level``, sorted."""
    need = epsilon_star_vector(psi)
    e = psi.e
    out = []
    spare = max_level - sum(need)
    if spare < 0:
        return out
    for extra in product(range(spare + 1), repeat=e):
        if sum(extra) > spare:
            continue
        counts = [n + x for n, x in zip(need, extra)]
        if sum(counts) >= 1:
            out.append(canonical_multicharge(counts, e))
    return sorted(out, key=lambda v: (v.level, v.values))


def _fits(comps: list[list[int]], v: Multicharge, c: int) -> bool:
    # a new bottom row in component c must sit under a filled row of its
    # predecessor (c-1, or the last component shifted by e when c = 0)
    row = len(comps[c]) + 1
    if c > 0:
        pred, prow = c - 1, row - (v.values[c] - v.values[c - 1])
    else:
        pred, prow = v.level - 1, row - (v.e + v.values[0] - v.values[-1])
    return prow < 1 or prow <= len(comps[pred])


def _candidates(comps, v: Multicharge, k: int) -> list[int]:
    """Components whose next row starts at residue ``k`` and can take it, in ``(v_c - i_c, c)`` order."""
    e = v.e
    out = []
    for c in range(v.level):
        depth = len(comps[c]) + 1
        if (1 - depth + v.values[c]) % e == k and _fits(comps, v, c):
            out.append(c)
    out.sort(key=lambda c: (v.values[c] - len(comps[c]) - 1, c))
    return out


def _place_by_class(comps, v, length, mult, order):
    for k in order:
        for _ in range(mult[k]):
            cands = _candidates(comps, v, k)
            if not cands:
                raise ReconstructionError(f"no component can take a part [{k};{length})")
            comps[cands[0]].append(length)


def _place_by_part(comps, v, length, mult):
    left = dict(mult)
    while any(left.values()):
        best = None
        for k, n in left.items():
            if not n:
                continue
            for c in _candidates(comps, v, k):
                key = (v.values[c] - len(comps[c]) - 1, c)
                if best is None or key < best[0]:
                    best = (key, c, k)
                break
        if best is None:
            pending = {k: n for k, n in left.items() if n}
            raise ReconstructionError(f"no component can take the remaining parts of length {length}: {pending}")
        _, c, k = best
        comps[c].append(length)
        left[k] -= 1


def reconstruct(psi: Multisegment, v: Multicharge, head_order: Sequence[int] | None = None,
                stages: list | None = None) -> MultiPartition:
    """The FLOTW multipartition ``lambda`` for ``v`` with ``f_v(lambda) = psi``.

    Parts are added longest length first, each at the bottom of a component
    whose next row starts at the segment's head.  Among those components only
    the ones where the new row keeps the cyclic row condition are eligible,
    and the first in ``(v_c - i_c, c)`` order wins.  By default parts of one
    length are placed one at a time, always taking the smallest eligible
    slot over all pending heads; with ``head_order`` each head class is
    exhausted in turn instead.  Every stage is checked to be FLOTW with the
    right image, and intermediate stages are appended to ``stages`` if given.
    """
    e = psi.e
    if v.e != e:
        raise ValueError("charge and multisegment use different e")
    bound = violated_bound(v, psi)
    if bound is not None:
        raise InadmissibleCharge(v, *bound)
    comps: list[list[int]] = [[] for _ in range(v.level)]
    for length in psi.lengths():
        mult = {h: k for (h, l), k in psi.items() if l == length}
        if head_order is None:
            _place_by_part(comps, v, length, mult)
        else:
            _place_by_class(comps, v, length, mult, [h for h in head_order if h in mult])
        lam = MultiPartition(tuple(tuple(c) for c in comps))
        if not is_flotw(lam, v) or f_v(lam, v, check=False) != psi.restricted(length):
            raise ReconstructionError(f"stage {lam} for length {length} is not the FLOTW preimage")
        if stages is not None:
            stages.append(lam)
    return MultiPartition(tuple(tuple(c) for c in comps))
