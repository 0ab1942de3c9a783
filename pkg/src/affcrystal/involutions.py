"""Generalized Mullineux involution, the multipartition route to ``psi -> psi#``,
and the crystal commutor on ``B_e(v) (x) B_e(v')``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Multicharge, Multisegment, canonical_multicharge, rho
from .correspondence import minimal_multicharge, reconstruct
from .fock import (
    MultiPartition,
    f_v,
    flotw_by_closure,
    fock_e,
    fock_eps,
    fock_eps_vector,
    fock_phi,
    fock_raising_path,
    fock_replay,
    format_multipartition,
    is_flotw,
)
from .infinity import CrystalError, epsilon_star_vector, star


def charge_sharp(v: Multicharge) -> Multicharge:
    """``(v_0..v_{l-1}) -> (-v_{l-1}..-v_0)``, taken in canonical residue form."""
    e = v.e
    return canonical_multicharge([v.kappa(-i) for i in range(e)], e)


def mullineux(lam: MultiPartition, v: Multicharge, path=None) -> MultiPartition:
    """Image of ``lam`` under the skew isomorphism ``B_e(v) -> B_e(v#)`` induced by ``i <-> -i``."""
    if path is None:
        path = fock_raising_path(lam, v)
    w = charge_sharp(v)
    out = fock_replay(w, (-i % v.e for i in path))
    if out is None:
        raise CrystalError(f"negated path of {lam} vanishes in B_e({w})")
    return out


def sharp_pipeline(psi: Multisegment) -> Multisegment:
    """``psi#`` through the minimal admissible charge and the Mullineux map."""
    if not psi:
        return psi
    v = minimal_multicharge(psi)
    lam = reconstruct(psi, v)
    w = charge_sharp(v)
    out = f_v(mullineux(lam, v), w)
    if epsilon_star_vector(out) != w.counts():
        raise CrystalError(f"eps* of {out} does not match the counts of ({w})")
    return out


def star_via_pipeline(psi: Multisegment) -> Multisegment:
    return rho(sharp_pipeline(psi))


# -- commutor ----------------------------------------------------------------

@dataclass(frozen=True)
class HighestWeightVertex:
    """``empty (x) lambda`` in ``B_e(left) (x) B_e(right)``."""

    left_charge: Multicharge
    right_charge: Multicharge
    lam: MultiPartition

    def __post_init__(self):
        v = self.left_charge
        if v.e != self.right_charge.e:
            raise ValueError("left and right charges use different e")
        if not is_flotw(self.lam, self.right_charge):
            raise ValueError(f"{self.lam} is not FLOTW for charge ({self.right_charge})")
        eps = fock_eps_vector(self.lam, self.right_charge)
        for i, x in enumerate(eps):
            if x > v.kappa(i):
                raise ValueError(
                    f"{self.lam} is not highest weight: eps_{i} = {x} > kappa_{i}({v}) = {v.kappa(i)}"
                )

    @property
    def rank(self) -> int:
        return self.lam.rank

    def to_json(self) -> dict:
        return {
            "e": self.left_charge.e,
            "left_charge": list(self.left_charge.values),
            "right_charge": list(self.right_charge.values),
            "lambda": format_multipartition(self.lam),
        }


def hw_vertices(v: Multicharge, w: Multicharge, max_rank: int) -> list[HighestWeightVertex]:
    """All highest-weight vertices ``empty (x) lambda`` with ``rank(lambda) <= max_rank``."""
    kap = v.counts()
    out = []
    for lam in flotw_by_closure(w, max_rank):
        if all(x <= k for x, k in zip(fock_eps_vector(lam, w), kap)):
            out.append(HighestWeightVertex(v, w, lam))
    return out


def commutor(h: HighestWeightVertex) -> HighestWeightVertex:
    """``empty (x) lambda -> empty (x) lambda*`` where ``f_v(lambda*) = f_v'(lambda)*``."""
    psi = f_v(h.lam, h.right_charge)
    lam_star = reconstruct(star(psi), h.left_charge)
    return HighestWeightVertex(h.right_charge, h.left_charge, lam_star)


# -- tensor-product rule (used as an independent oracle) ---------------------

def tensor_e(u: MultiPartition, x: MultiPartition, v: Multicharge, w: Multicharge, i: int):
    """``e~_i(u (x) x)`` in ``B_e(v) (x) B_e(w)``; ``None`` for zero."""
    if fock_phi(u, v, i) < fock_eps(x, w, i):
        y = fock_e(x, w, i)
        return None if y is None else (u, y)
    y = fock_e(u, v, i)
    return None if y is None else (y, x)


def tensor_highest_weight(v: Multicharge, w: Multicharge, max_rank: int) -> list[tuple[MultiPartition, MultiPartition]]:
    """Pairs ``u (x) x`` of total rank <= ``max_rank`` killed by every ``e~_i``, found by brute force."""
    left = flotw_by_closure(v, max_rank)
    right = flotw_by_closure(w, max_rank)
    out = []
    for u, x in product(left, right):
        if u.rank + x.rank > max_rank:
            continue
        if all(tensor_e(u, x, v, w, i) is None for i in range(v.e)):
            out.append((u, x))
    return out
