"""Command-line front end.

Multisegments, multipartitions and charges are passed as quoted strings in
the text grammars (``"[0;2)+[1;1)"``, ``"6.5.2|5.3.1|-"``, ``"0,0,1"``).  With
``--json`` one JSON object is read from standard input instead and the
answer is printed as JSON.  Exit codes: 0 success, 1 input error, 2 failed
selfcheck.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import selfcheck
from .core import (
    Multicharge,
    Multisegment,
    ParseError,
    format_multisegment,
    parse_multicharge,
    parse_multisegment,
    rho,
)
from .correspondence import enumerate_admissible, reconstruct
from .fock import MultiPartition, f_v, format_multipartition, parse_multipartition
from .graph import fock_graph, infinity_graph
from .infinity import CrystalError, epsilon_star_vector, epsilon_vector, sharp, star, tau, weight
from .involutions import HighestWeightVertex, charge_sharp, commutor, mullineux


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--e", type=int, default=default, help="cyclic quiver length e >= 2")
    p.add_argument("--json", action="store_true", default=default,
                   help="read one JSON object from stdin, answer in JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="affcrystal", parents=[_common(False)],
                     description="Kashiwara involution and related crystal combinatorics in affine type A.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    shared = _common(True)

    for name, what in [("star", "Kashiwara involution"), ("tau", "Zelevinsky involution"),
                       ("rho", "segment reversal"), ("sharp", "diagram symmetry i <-> -i")]:
        p = sub.add_parser(name, parents=[shared], help=f"image under the {what}")
        p.add_argument("ms", nargs="?", help="multisegment")
    for name, what in [("eps", "eps_i"), ("epsstar", "eps*_i"), ("wt", "wt_i")]:
        p = sub.add_parser(name, parents=[shared], help=f"the vector of {what}")
        p.add_argument("ms", nargs="?", help="multisegment")

    p = sub.add_parser("fv", parents=[shared], help="multisegment f_v(lambda) of a FLOTW multipartition")
    p.add_argument("mp", nargs="?")
    p.add_argument("--charge")
    p = sub.add_parser("fvinv", parents=[shared], help="FLOTW multipartition lambda with f_v(lambda) = psi")
    p.add_argument("ms", nargs="?")
    p.add_argument("--charge")
    p = sub.add_parser("charges", parents=[shared], help="admissible charges of a multisegment")
    p.add_argument("ms", nargs="?")
    p.add_argument("--max-level", type=int, default=None)
    p = sub.add_parser("mullineux", parents=[shared], help="generalized Mullineux image in B_e(v#)")
    p.add_argument("mp", nargs="?")
    p.add_argument("--charge")
    p = sub.add_parser("commutor", parents=[shared], help="crystal commutor on a highest-weight vertex")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--lambda", dest="lam")
    p = sub.add_parser("graph", parents=[shared], help="export a crystal graph")
    p.add_argument("--kind", choices=["infty", "fock"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--charge")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p = sub.add_parser("selfcheck", parents=[shared], help="run every invariant suite")
    p.add_argument("--rank", type=int, default=4)
    return parser


# -- input helpers ------------------------------------------------------------

def _need(value, what):
    if value is None:
        raise InputError(f"missing {what}")
    return value


def _e(args, obj=None) -> int:
    e = args.e
    if obj is not None and "e" in obj:
        if e is not None and e != obj["e"]:
            raise InputError(f"--e {e} disagrees with e = {obj['e']} in the JSON input")
        e = obj["e"]
    if e is None:
        raise InputError("--e is required")
    if not isinstance(e, int) or e < 2:
        raise InputError(f"e must be an integer >= 2, got {e!r}")
    return e


def _read_json():
    try:
        obj = json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", pos=exc.pos) from None
    if not isinstance(obj, dict):
        raise InputError("JSON input must be an object")
    return obj


def _charge(e: int, value) -> Multicharge:
    value = _need(value, "--charge")
    if isinstance(value, (list, tuple)):
        return Multicharge(e, tuple(int(x) for x in value))
    return parse_multicharge(value, e)


def _ms(args):
    if args.json:
        obj = _read_json()
        e = _e(args, obj)
        return Multisegment.from_json({**obj, "e": e}), obj
    return parse_multisegment(_need(args.ms, "multisegment argument"), _e(args)), None


def _mp(args):
    if args.json:
        obj = _read_json()
        return MultiPartition.from_json(obj), obj
    return parse_multipartition(_need(args.mp, "multipartition argument")), None


def _vec(xs) -> str:
    return " ".join(str(x) for x in xs)


# -- commands -------------------------------------------------------------------

_MAPS = {"star": star, "tau": tau, "rho": rho, "sharp": sharp}


def _cmd_map(args, out):
    psi, _ = _ms(args)
    img = _MAPS[args.command](psi)
    out(json.dumps(img.to_json()) if args.json else format_multisegment(img))


def _cmd_stat(args, out):
    psi, _ = _ms(args)
    if args.command == "eps":
        vec = epsilon_vector(psi)
    elif args.command == "epsstar":
        vec = epsilon_star_vector(psi)
    else:
        vec = weight(psi).coords
    out(json.dumps({"e": psi.e, args.command: list(vec)}) if args.json else _vec(vec))


def _cmd_fv(args, out):
    lam, obj = _mp(args)
    e = _e(args, obj)
    v = _charge(e, obj.get("charge") if obj else args.charge)
    psi = f_v(lam, v)
    out(json.dumps(psi.to_json()) if args.json else format_multisegment(psi))


def _cmd_fvinv(args, out):
    psi, obj = _ms(args)
    v = _charge(psi.e, obj.get("charge") if obj else args.charge)
    lam = reconstruct(psi, v)
    out(json.dumps({"e": psi.e, "charge": list(v.values), **lam.to_json()}) if args.json
        else format_multipartition(lam))


def _cmd_charges(args, out):
    psi, obj = _ms(args)
    level = obj.get("max_level", args.max_level) if obj else args.max_level
    level = _need(level, "--max-level")
    found = enumerate_admissible(psi, level)
    if args.json:
        out(json.dumps({"e": psi.e, "charges": [list(v.values) for v in found]}))
    else:
        for v in found:
            out(str(v))


def _cmd_mullineux(args, out):
    lam, obj = _mp(args)
    e = _e(args, obj)
    v = _charge(e, obj.get("charge") if obj else args.charge)
    mu = mullineux(lam, v)
    if args.json:
        out(json.dumps({"e": e, "charge": list(charge_sharp(v).values), **mu.to_json()}))
    else:
        out(format_multipartition(mu))


def _cmd_commutor(args, out):
    if args.json:
        obj = _read_json()
        e = _e(args, obj)
        left, right, lam = obj.get("left_charge"), obj.get("right_charge"), obj.get("lambda")
    else:
        e = _e(args)
        left, right, lam = args.left, args.right, args.lam
    v = _charge(e, _need(left, "--left"))
    w = _charge(e, _need(right, "--right"))
    lam = _need(lam, "--lambda")
    lam = MultiPartition.from_json(lam) if isinstance(lam, dict) else parse_multipartition(lam)
    img = commutor(HighestWeightVertex(v, w, lam))
    out(json.dumps(img.to_json()) if args.json else format_multipartition(img.lam))


def _cmd_graph(args, out):
    e = _e(args)
    if args.kind == "infty":
        text = infinity_graph(e, args.rank, args.format)
    else:
        text = fock_graph(_charge(e, args.charge), args.rank, args.format)
    out(text.rstrip("\n"))


def _cmd_selfcheck(args, out):
    e = _e(args)
    results = selfcheck(e, args.rank)
    for r in results:
        out(r.line())
    failed = [r for r in results if not r.passed]
    out(f"{len(results) - len(failed)}/{len(results)} suites passed (e={e}, rank<={args.rank})")
    return 2 if failed else 0


_COMMANDS = {
    **{k: _cmd_map for k in _MAPS},
    "eps": _cmd_stat, "epsstar": _cmd_stat, "wt": _cmd_stat,
    "fv": _cmd_fv, "fvinv": _cmd_fvinv, "charges": _cmd_charges,
    "mullineux": _cmd_mullineux, "commutor": _cmd_commutor,
    "graph": _cmd_graph, "selfcheck": _cmd_selfcheck,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    def out(line):
        print(line, file=stdout)

    try:
        return _COMMANDS[args.command](args, out) or 0
    except (InputError, ValueError, CrystalError) as exc:
        # ParseError and InadmissibleCharge are ValueErrors carrying a position / the violated bound
        print(f"error: {exc}", file=stderr)
        return 1


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)


if __name__ == "__main__":
    main()
