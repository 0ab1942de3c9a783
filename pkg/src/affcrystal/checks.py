"""Exhaustive invariant suites over small ranks.

Each check takes ``(e, rank)`` and returns a :class:`CheckResult`; the
``selfcheck`` CLI command runs :data:`SUITE`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from typing import Callable

from .core import (
    ClassicalWeight,
    Multicharge,
    Multisegment,
    format_multisegment,
    is_aperiodic,
    parse_multisegment,
    rho,
)
from .correspondence import (
    enumerate_admissible,
    is_admissible,
    minimal_multicharge,
    reconstruct,
    ReconstructionError,
)
from .fock import (
    MultiPartition,
    f_v,
    flotw_by_closure,
    flotw_by_filter,
    fock_e,
    fock_eps,
    fock_f,
    is_flotw,
)
from .infinity import (
    epsilon,
    epsilon_star_vector,
    hat_e,
    hat_f,
    random_raising_path,
    raising_path,
    sharp,
    star,
    stats,
    tau,
    tilde_e,
    tilde_f,
    tilde_f_star,
    vertices,
    weight,
)
from .involutions import (
    charge_sharp,
    commutor,
    hw_vertices,
    mullineux,
    sharp_pipeline,
    star_via_pipeline,
    tensor_highest_weight,
)

MAX_EXAMPLES = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    nfail: int = 0

    @property
    def passed(self) -> bool:
        return self.nfail == 0

    def expect(self, ok: bool, what: Callable[[], str] | str):
        self.checked += 1
        if not ok:
            self.nfail += 1
            if len(self.failures) < MAX_EXAMPLES:
                self.failures.append(what() if callable(what) else what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  e.g. {self.failures[0]}" if self.failures else ""
        return f"{status}  {self.name:<34} {self.checked:>8} checks, {self.nfail} failed{extra}"


def canonical_charges(e: int, levels=(1, 2, 3)) -> list[Multicharge]:
    return [Multicharge(e, c) for l in levels for c in combinations_with_replacement(range(e), l)]


def all_multisegments(e: int, n: int) -> list[Multisegment]:
    """Every multisegment of rank ``n`` (periodic ones included), by direct enumeration."""
    segs = [(h, l) for l in range(1, n + 1) for h in range(e)]
    out = []

    def rec(idx, left, chosen):
        if left == 0:
            out.append(Multisegment(e, chosen))
            return
        if idx == len(segs):
            return
        h, l = segs[idx]
        for k in range(left // l, -1, -1):
            nxt = dict(chosen)
            if k:
                nxt[(h, l)] = k
            rec(idx + 1, left - k * l, nxt)

    rec(0, n, {})
    return out


# -- core --------------------------------------------------------------------

def check_rho(e: int, rank: int) -> CheckResult:
    res = CheckResult("rho involution / invariants")
    for psi in vertices(e, rank):
        r = rho(psi)
        res.expect(rho(r) == psi and r.rank == psi.rank and is_aperiodic(r), lambda: f"{psi}")
    return res


def check_text_roundtrip(e: int, rank: int) -> CheckResult:
    res = CheckResult("text format round trip")
    for psi in vertices(e, rank):
        text = format_multisegment(psi)
        res.expect(parse_multisegment(text, e) == psi and format_multisegment(parse_multisegment(text, e)) == text,
                   lambda: text)
    return res


def check_aperiodic_equivalence(e: int, rank: int) -> CheckResult:
    res = CheckResult("aperiodic: tails vs heads")
    for n in range(min(rank, 6) + 1):
        for psi in all_multisegments(e, n):
            by_head = {}
            for (h, l), _ in psi.items():
                by_head.setdefault(l, set()).add(h)
            heads_ok = all(len(s) < e for s in by_head.values())
            res.expect(heads_ok == is_aperiodic(psi), lambda: f"{psi}")
    return res


# -- B(infinity) ---------------------------------------------------------------

def check_generate(e: int, rank: int) -> CheckResult:
    res = CheckResult("BFS vertices = aperiodic filter")
    for n in range(min(rank, 7) + 1):
        brute = {psi for psi in all_multisegments(e, n) if is_aperiodic(psi)}
        bfs = set(vertices(e, n, min_rank=n))
        res.expect(brute == bfs, lambda: f"rank {n}: {len(bfs)} by BFS vs {len(brute)} by filter")
    return res


def check_operator_pairs(e: int, rank: int) -> CheckResult:
    res = CheckResult("e/f inverse pairs, rho conjugation")
    for psi in vertices(e, rank):
        for i in range(e):
            fi = tilde_f(psi, i)
            res.expect(tilde_e(fi, i) == psi, lambda: f"e~f~ {psi} i={i}")
            ei = tilde_e(psi, i)
            res.expect(ei is None or tilde_f(ei, i) == psi, lambda: f"f~e~ {psi} i={i}")
            hi = hat_f(psi, i)
            res.expect(hat_e(hi, i) == psi, lambda: f"e^f^ {psi} i={i}")
            hei = hat_e(psi, i)
            res.expect(hei is None or hat_f(hei, i) == psi, lambda: f"f^e^ {psi} i={i}")
            res.expect(rho(fi) == hat_f(rho(psi), -i), lambda: f"rho f~ {psi} i={i}")
            conj = tilde_e(rho(psi), -i)
            res.expect(hei == (None if conj is None else rho(conj)), lambda: f"e^ vs rho e~ rho {psi} i={i}")
            res.expect(is_aperiodic(fi) and fi.rank == psi.rank + 1, lambda: f"f~ closure {psi} i={i}")
    return res


def check_statistics(e: int, rank: int) -> CheckResult:
    res = CheckResult("statistics and weights")
    zero = ClassicalWeight.zero(e)
    for psi in vertices(e, rank):
        wt = weight(psi)
        for i in range(e):
            st = stats(psi, i)  # raises on an internal RA/S disagreement
            k = 0
            cur = psi
            while (cur := tilde_e(cur, i)) is not None:
                k += 1
            res.expect(st.eps == k == epsilon(psi, i), lambda: f"eps {psi} i={i}")
            k = 0
            cur = psi
            while (cur := hat_e(cur, i)) is not None:
                k += 1
            res.expect(st.eps_star == k, lambda: f"eps^ {psi} i={i}")
            res.expect(st.phi == st.wt_i + st.eps and st.wt_i == wt[i], lambda: f"phi/wt {psi} i={i}")
            res.expect((st.l0 == 0) == (st.a == 0) and (st.l0_hat == 0) == (st.a_hat == 0),
                       lambda: f"l0 {psi} i={i}")
            res.expect(weight(tilde_f(psi, i)) == wt - ClassicalWeight.simple_root(e, i),
                       lambda: f"wt(f~) {psi} i={i}")
        res.expect(psi.rank > 0 or wt == zero, "wt(empty) != 0")
    return res


def check_star_hat(e: int, rank: int) -> CheckResult:
    res = CheckResult("f~_j* = f^_j and eps* = r^")
    for psi in vertices(e, rank):
        s = star(psi)
        eps_s = tuple(epsilon(s, i) for i in range(e))
        res.expect(eps_s == epsilon_star_vector(psi), lambda: f"eps(psi*) {psi}")
        for i in range(e):
            res.expect(star(hat_f(psi, i)) == tilde_f(s, i), lambda: f"{psi} i={i}")
            res.expect(stats(psi, i).r_hat == eps_s[i], lambda: f"r^ {psi} i={i}")
    return res


def check_involutions(e: int, rank: int) -> CheckResult:
    res = CheckResult("involution identities")
    for psi in vertices(e, rank):
        s, h, r = star(psi), sharp(psi), rho(psi)
        res.expect(star(s) == psi, lambda: f"star^2 {psi}")
        res.expect(sharp(h) == psi, lambda: f"sharp^2 {psi}")
        res.expect(rho(r) == psi, lambda: f"rho^2 {psi}")
        res.expect(s == sharp(r) == rho(h) == tau(psi), lambda: f"star vs tau {psi}")
        res.expect(s.rank == psi.rank and is_aperiodic(s), lambda: f"star keeps rank {psi}")
        res.expect(weight(s) == weight(psi), lambda: f"star keeps weight {psi}")
        if e == 2:
            res.expect(h == psi and s == r, lambda: f"e=2 {psi}")
    return res


def check_path_independence(e: int, rank: int, paths: int = 100, seed: int = 0) -> CheckResult:
    res = CheckResult("star/sharp path independence")
    rng = random.Random(seed)
    for psi in vertices(e, min(rank, 6)):
        s, h = star(psi), sharp(psi)
        for _ in range(paths if psi.rank > 1 else 1):
            p = random_raising_path(psi, rng)
            res.expect(star(psi, p) == s and sharp(psi, p) == h, lambda: f"{psi} path {p}")
    return res


def commutation_checks(e: int, rank: int) -> tuple[CheckResult, CheckResult]:
    """Both commutation statements in one pass over ``chi``, ``i``, ``j``.

    The first result checks that ``f~_i f^_j`` and ``f~_i f~_j*`` fail to commute
    exactly when ``i = j and a_i + a^_i = 1``.  The second checks the reading
    ``f~_i f~_j* = f~_j* f~_i  iff  i != j or a_i + a^_i > 1`` word for word.
    """
    dich = CheckResult("commutation dichotomy")
    lit = CheckResult("commutation, '> 1' form")
    for chi in vertices(e, rank):
        for i in range(e):
            st = stats(chi, i)
            fi = tilde_f(chi, i)
            for j in range(e):
                noncomm = i == j and st.a + st.a_hat == 1
                a, b = tilde_f(hat_f(chi, j), i), hat_f(fi, j)
                dich.expect((a != b) == noncomm, lambda: f"f~f^ {chi} i={i} j={j}")
                if noncomm:
                    dich.expect(a == hat_f(hat_f(chi, i), i) and b == tilde_f(fi, i),
                                lambda: f"squares {chi} i={i}")
                comm = tilde_f(tilde_f_star(chi, j), i) == tilde_f_star(fi, j)
                dich.expect(comm != noncomm, lambda: f"f~f~* {chi} i={i} j={j}")
                lit.expect(comm == (i != j or st.a + st.a_hat > 1),
                           lambda: f"{format_multisegment(chi) or '∅'} i=j={i}, a+a^={st.a + st.a_hat}")
    return dich, lit


def check_commutation(e: int, rank: int) -> CheckResult:
    return commutation_checks(e, rank)[0]


def check_commutation_gt1(e: int, rank: int) -> CheckResult:
    return commutation_checks(e, rank)[1]


# -- Fock space ------------------------------------------------------------------

def check_fock(e: int, rank: int, levels=(1, 2, 3)) -> CheckResult:
    res = CheckResult("Fock crystal / FLOTW / embedding")
    image_by_rank = {}
    for psi in vertices(e, rank):
        image_by_rank.setdefault(psi.rank, []).append(psi)
    for v in canonical_charges(e, levels):
        closure = flotw_by_closure(v, rank)
        res.expect(set(closure) == set(flotw_by_filter(v, rank)), lambda: f"closure != filter for ({v})")
        images = set()
        for lam in closure:
            psi = f_v(lam, v)
            images.add(psi)
            for i in range(e):
                mu = fock_f(lam, v, i)
                if mu is not None:
                    res.expect(is_flotw(mu, v), lambda: f"f_{i} leaves FLOTW: {lam} ({v})")
                    res.expect(f_v(mu, v) == tilde_f(psi, i), lambda: f"embedding {lam} ({v}) i={i}")
                    res.expect(fock_e(mu, v, i) == lam, lambda: f"e f != id {lam} ({v}) i={i}")
                res.expect(fock_eps(lam, v, i) == epsilon(psi, i), lambda: f"eps {lam} ({v}) i={i}")
            if lam.rank:
                m = min(p for c in lam.components for p in c)
                mu = MultiPartition(tuple(tuple(p for p in c if p != m) for c in lam.components))
                res.expect(is_flotw(mu, v), lambda: f"reduction {lam} ({v})")
        kap = v.counts()
        for n, psis in image_by_rank.items():
            expected = {psi for psi in psis if all(x <= k for x, k in zip(epsilon_star_vector(psi), kap))}
            got = {psi for psi in images if psi.rank == n}
            res.expect(expected == got, lambda: f"image at rank {n} for ({v}): {len(got)} vs {len(expected)}")
    return res


# -- correspondence ------------------------------------------------------------

def check_round_trips(e: int, rank: int, levels=(1, 2, 3), permute: bool = True) -> CheckResult:
    res = CheckResult("reconstruct round trips")
    orders = list(permutations(range(e))) if permute else []
    for v in canonical_charges(e, levels):
        for lam in flotw_by_closure(v, rank):
            if not lam.rank:
                continue
            psi = f_v(lam, v)
            res.expect(reconstruct(psi, v) == lam, lambda: f"{lam} ({v})")
            for order in orders:
                try:
                    got = reconstruct(psi, v, head_order=order)
                except ReconstructionError:
                    continue
                res.expect(got == lam, lambda: f"{lam} ({v}) order {order} gave {got}")
    for psi in vertices(e, rank, min_rank=1):
        vmin = minimal_multicharge(psi)
        res.expect(is_admissible(vmin, psi), lambda: f"minimal charge {psi}")
        adm = enumerate_admissible(psi, max(levels))
        res.expect(all(vmin.level <= w.level for w in adm), lambda: f"minimality {psi}")
        for w in adm:
            res.expect(f_v(reconstruct(psi, w), w) == psi, lambda: f"f_v(reconstruct) {psi} ({w})")
    return res


# -- involutions -----------------------------------------------------------------

def check_mullineux(e: int, rank: int, levels=(1, 2, 3)) -> CheckResult:
    res = CheckResult("generalized Mullineux")
    for v in canonical_charges(e, levels):
        w = charge_sharp(v)
        for lam in flotw_by_closure(v, rank):
            mu = mullineux(lam, v)
            res.expect(is_flotw(mu, w) and mu.rank == lam.rank, lambda: f"{lam} ({v})")
            res.expect(mullineux(mu, w) == lam, lambda: f"involution {lam} ({v})")
            res.expect(f_v(mu, w) == sharp(f_v(lam, v)), lambda: f"f_v# {lam} ({v})")
            if e == 2:
                res.expect(mu == lam, lambda: f"e=2 identity {lam} ({v})")
    return res


def check_pipelines(e: int, rank: int) -> CheckResult:
    res = CheckResult("sharp/star pipelines")
    for psi in vertices(e, rank):
        res.expect(sharp_pipeline(psi) == sharp(psi), lambda: f"sharp {psi}")
        res.expect(star_via_pipeline(psi) == star(psi), lambda: f"star {psi}")
    return res


def check_commutor(e: int, rank: int, levels=(1, 2)) -> CheckResult:
    res = CheckResult("crystal commutor")
    charges = canonical_charges(e, levels)
    for v in charges:
        for w in charges:
            hw = hw_vertices(v, w, rank)
            back = hw_vertices(w, v, rank)
            tens = tensor_highest_weight(v, w, rank)
            res.expect(all(u.rank == 0 for u, _ in tens) and sorted(x for _, x in tens) == sorted(h.lam for h in hw),
                       lambda: f"tensor-rule highest weights for ({v})x({w})")
            imgs = [commutor(h) for h in hw]
            for n in range(rank + 1):
                src = sorted(h.lam for h in hw if h.rank == n)
                dst = sorted(g.lam for g in imgs if g.rank == n)
                res.expect(dst == sorted(h.lam for h in back if h.rank == n) and len(set(dst)) == len(src),
                           lambda: f"bijection at rank {n} for ({v}),({w})")
            for h, g in zip(hw, imgs):
                res.expect(commutor(g) == h, lambda: f"sigma'sigma {h.lam} ({v}),({w})")
                psi = f_v(h.lam, w)
                res.expect(weight(f_v(g.lam, v)) == weight(psi), lambda: f"weight {h.lam}")
                if e == 2:
                    res.expect(g.lam == reconstruct(rho(psi), v), lambda: f"e=2 formula {h.lam}")
    return res


SUITE: list[tuple[str, Callable[[int, int], CheckResult]]] = [
    ("rho", check_rho),
    ("text", check_text_roundtrip),
    ("aperiodic", check_aperiodic_equivalence),
    ("generate", check_generate),
    ("operators", check_operator_pairs),
    ("statistics", check_statistics),
    ("star_hat", check_star_hat),
    ("involutions", check_involutions),
    ("paths", lambda e, n: check_path_independence(e, n, paths=20)),
    ("commutation", check_commutation),
    ("fock", check_fock),
    ("round_trips", check_round_trips),
    ("mullineux", check_mullineux),
    ("pipelines", check_pipelines),
    ("commutor", check_commutor),
]


def selfcheck(e: int, rank: int) -> list[CheckResult]:
    return [fn(e, rank) for _, fn in SUITE]
