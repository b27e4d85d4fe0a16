"""Command-line front end.

Polynomials come from the positional arguments or, if there are none, from
stdin (one per line). ``--format json`` prints one versioned document per
invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import verify as V
from .canon import T3, T3_PLUS_XP, normalize
from .errors import CentralPolyError, ParseError
from .exterior import GrassmannElement
from .field import Field, check_characteristic
from .freealg import evaluate
from .generic import find_certificate, generic_image, literal_verdict
from .parse import parse_grassmann, parse_poly
from .tspace import YES, builtin_generators, default_block_bound, member, span_at_type
from .witness import check_m, check_mprime, m_fact_witness, mprime_witness

FORMAT_VERSION = 1


@dataclass
class SessionConfig:
    p: int = 0
    unitary: bool = False
    n: int = None
    cap: int = None
    fmt: str = "text"
    seed: int = 0

    def __post_init__(self):
        self.p = check_characteristic(self.p)
        if self.n is not None and self.n < 1:
            raise ValueError("truncation must be >= 1")

    @property
    def field(self) -> Field:
        return Field(self.p)


def _inputs(args):
    if args.poly:
        return list(args.poly)
    return [line.strip() for line in sys.stdin if line.strip() and not line.startswith("#")]


def _assignment_str(assignment: dict) -> str:
    return ", ".join(f"x{i} -> {g}" for i, g in sorted(assignment.items()))


# commands ------------------------------------------------------------------

def cmd_normalize(text: str, cfg: SessionConfig, mod_identities=False) -> dict:
    f = parse_poly(text, cfg.field, cfg.unitary)
    nf = normalize(f, T3_PLUS_XP if mod_identities else T3)
    return {
        "input": text,
        "normal_form": str(nf),
        "modulus": nf.modulus,
        "terms": [{"element": str(u), "coefficient": cfg.field.fmt(c), "class": cls}
                  for u, c, cls in nf.classify_terms()],
    }


def _certificate_dict(cert):
    if cert is None:
        return None
    return {
        "assignment": {f"x{i}": str(g) for i, g in sorted(cert.assignment.items())},
        "value": str(cert.value),
        "probe": f"e{cert.probe}",
        "commutator": str(cert.commutator),
    }


def cmd_verdict(text: str, cfg: SessionConfig, central=True, literal=False) -> dict:
    f = parse_poly(text, cfg.field, cfg.unitary)
    if literal:
        n = cfg.n if cfg.n is not None else f.degree() + 2
        return {"input": text, "verdict": literal_verdict(f, n), "method": f"literal G({n})",
                "certificate": None}
    img = generic_image(f)
    verdict = img.verdict
    cert = None
    if central and not img.is_central:
        cert = find_certificate(f, central=True, image=img)
    elif not central and not img.is_identity:
        cert = find_certificate(f, central=False, image=img)
    return {"input": text, "verdict": verdict, "method": "generic", "image": str(img),
            "certificate": _certificate_dict(cert)}


def _parse_type(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace("(", "").replace(")", "").split(",") if t.strip())
    except ValueError:
        raise ParseError(f"bad type vector {text!r}", 0) from None


def cmd_member(text: str, set_name: str, type_text, cfg: SessionConfig, bound=None) -> dict:
    gens = _generator_set(set_name, cfg, type_text, bound)
    f = parse_poly(text, cfg.field, gens.unitary)
    t = _parse_type(type_text) if type_text else f.type_vector()
    basis = span_at_type(gens, t, cap=cfg.cap)
    res = member(f, basis)
    out = {"input": text, "set": gens.name, "type": list(t), "cap": basis.cap,
           "dimension": basis.dimension, "verdict": res.verdict}
    if res.verdict == YES:
        used = [(c, pv) for c, pv in zip(res.coordinates, res.provenance) if c]
        out["combination"] = [{"coefficient": cfg.field.fmt(cfg.field(c)), "row": pv} for c, pv in used]
    return out


def _generator_set(name, cfg, type_text=None, bound=None):
    names = [s.strip() for s in name.split("+")]
    total = sum(_parse_type(type_text)) if type_text else 2 * (cfg.p or 1)
    bound = bound if bound is not None else default_block_bound(total, cfg.p)
    out = None
    for s in names:
        unitary = cfg.unitary if s.upper() in ("S", "T3") else None
        g = builtin_generators(s, cfg.p, bound, unitary=unitary)
        out = g if out is None else out + g
    return out


def cmd_span(set_name: str, type_text: str, cfg: SessionConfig, bound=None) -> dict:
    gens = _generator_set(set_name, cfg, type_text, bound)
    basis = span_at_type(gens, _parse_type(type_text), cap=cfg.cap)
    out = basis.export()
    out.update({"set": gens.name, "cap": basis.cap, "dimension": basis.dimension})
    return out


def _single_ss(text, cfg):
    f = parse_poly(text, cfg.field, False)
    nf = normalize(f)
    if len(nf.terms) != 1 or next(iter(nf.terms.values())) != cfg.field.one:
        raise ParseError(f"{text!r} is not a single SS element", 0)
    return next(iter(nf.terms))


def cmd_witness(text: str, cfg: SessionConfig, m=None, n=None, type_text=None) -> dict:
    u = _single_ss(text, cfg)
    n = n or u.nvars()
    if cfg.unitary:
        r = _parse_type(type_text) if type_text else u.type_vector(n)
        if m is None:
            m = max((i for i in u.beginning_vars() if not cfg.p or r[i - 1] % cfg.p), default=1)
        check_mprime(u, m, n, r, cfg.p)
        wit = mprime_witness(u, m, n, r, cfg.p)
        family = f"M'_{{{m},{n}}}{tuple(r)}"
    else:
        m = m or max(u.beginning_vars(), default=1)
        check_m(u, m, n, cfg.p)
        wit = m_fact_witness(u, m, n, cfg.p)
        family = f"M_{{{m},{n}}}"
    return {"element": str(u), "family": family, "generators": wit.generators,
            "assignment": {f"x{i}": str(g) for i, g in sorted(wit.assignment.items())},
            "value": str(wit.value), "odd_part": str(wit.value.odd_part())}


def cmd_evaluate(text: str, at: list, cfg: SessionConfig) -> dict:
    f = parse_poly(text, cfg.field, cfg.unitary)
    assignment = {}
    for item in at:
        name, _, val = item.partition("=")
        name = name.strip()
        if not name.startswith("x") or not name[1:].isdigit():
            raise ParseError(f"bad assignment {item!r}; use xI=<grassmann element>", 0)
        assignment[int(name[1:])] = parse_grassmann(val, cfg.field, cfg.unitary, cfg.n or 0)
    missing = f.variables() - set(assignment)
    if missing:
        raise ParseError(f"no value given for {', '.join(f'x{i}' for i in sorted(missing))}", 0)
    value = evaluate(f, assignment) if f.variables() else GrassmannElement(
        {0: f.constant_term()} if f.constant_term() else {}, cfg.field, cfg.unitary)
    return {"input": text, "assignment": _assignment_str(assignment), "value": str(value),
            "odd_part": str(value.odd_part())}


# rendering -----------------------------------------------------------------

def _render_text(command, results):
    lines = []
    for r in results:
        if command == "normalize":
            lines.append(r["normal_form"])
            for t in r["terms"]:
                lines.append(f"  {t['coefficient']}  {t['element']}  [{t['class']}]")
        elif command in ("is-central", "is-identity"):
            lines.append(r["verdict"])
            cert = r.get("certificate")
            if cert:
                lines.append("  assignment: " + ", ".join(f"{k} -> {v}" for k, v in cert["assignment"].items()))
                lines.append(f"  value: {cert['value']}")
                if command == "is-central":
                    lines.append(f"  [value, {cert['probe']}] = {cert['commutator']}")
        elif command == "member":
            lines.append(f"{r['verdict']} ({r['set']} at type {tuple(r['type'])}, cap {r['cap']}, "
                         f"dimension {r['dimension']})")
            for c in r.get("combination", []):
                lines.append(f"  {c['coefficient']} * ({c['row']})")
        elif command == "span":
            lines.append(f"{r['set']} at type {tuple(r['type'])}: dimension {r['dimension']}, cap {r['cap']}")
            for row, pv in zip(r["rows"], r["provenance"]):
                lines.append(f"  {row}    <- {pv}")
        elif command == "witness":
            lines.append(f"{r['element']} in {r['family']}: {r['generators']} generators")
            for k, v in r["assignment"].items():
                lines.append(f"  {k} -> {v}")
            lines.append(f"  value: {r['value']}")
        elif command == "evaluate":
            lines.append(r["value"])
    return "\n".join(lines)


def _emit(command, results, cfg, out):
    if cfg.fmt == "json":
        json.dump({"version": FORMAT_VERSION, "command": command, "results": results}, out, indent=2)
        out.write("\n")
    else:
        text = _render_text(command, results)
        if text:
            out.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="characteristic: 0 or an odd prime (default 0)")
    common.add_argument("--unitary", action="store_true", help="work in the unitary algebra G")
    common.add_argument("--n", type=int, default=None, help="truncation / number of variables")
    common.add_argument("--cap", type=int, default=None, help="substitution degree cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="centralpoly",
                                 description="Central polynomials of Grassmann algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="normal form modulo T3")
    s.add_argument("poly", nargs="*")
    s.add_argument("--mod-identities", action="store_true",
                   help="also reduce modulo x^p (the identities of G0)")

    for name in ("is-central", "is-identity"):
        s = sub.add_parser(name, parents=[common], help="identity / central / neither verdict")
        s.add_argument("poly", nargs="*")
        s.add_argument("--literal", action="store_true",
                       help="evaluate symbolically in the truncation given by --n")

    s = sub.add_parser("member", parents=[common], help="membership in a generated T-space")
    s.add_argument("poly", nargs="*")
    s.add_argument("--set", required=True, help="S, S1, T3, TG0, CPG0, CPG or a sum like S+TG0")
    s.add_argument("--type", default=None, help="multidegree, e.g. 1,1")
    s.add_argument("--bound", type=int, default=None, help="largest w_n block count")

    s = sub.add_parser("span", parents=[common], help="print a T-space basis at one type")
    s.add_argument("--set", required=True)
    s.add_argument("--type", required=True)
    s.add_argument("--bound", type=int, default=None)

    s = sub.add_parser("witness", parents=[common], help="separating substitution for an SS element")
    s.add_argument("poly", nargs="*")
    s.add_argument("--m", type=int, default=None)
    s.add_argument("--type", default=None)

    s = sub.add_parser("evaluate", parents=[common], help="evaluate at Grassmann elements")
    s.add_argument("poly", nargs="*")
    s.add_argument("--at", action="append", default=[], help="xI=<element>, repeatable")

    s = sub.add_parser("verify", parents=[common], help="run property suites")
    s.add_argument("suite", choices=sorted(V.SUITES) + ["all"])
    s.add_argument("--max-degree", type=int, default=None)
    return ap


def _verify(args, cfg, out) -> int:
    kwargs = {"seed": cfg.seed}
    if args.p is not None:
        kwargs.update(p=cfg.p, primes=(cfg.p,))
    if args.n is not None:
        kwargs.update(max_n=args.n)
    if args.max_degree is not None:
        kwargs.update(max_degree=args.max_degree)
    reports = V.run_suite(args.suite, **kwargs)
    if cfg.fmt == "json":
        json.dump({"version": FORMAT_VERSION, "command": "verify",
                   "results": [r.as_dict() for r in reports]}, out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            for line in r.lines():
                out.write(line + "\n")
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = SessionConfig(args.p or 0, args.unitary, args.n, args.cap, args.format, args.seed)
        if args.command == "verify":
            return _verify(args, cfg, out)
        if args.command == "span":
            _emit("span", [cmd_span(args.set, args.type, cfg, args.bound)], cfg, out)
            return 0
        results = []
        for text in _inputs(args):
            if args.command == "normalize":
                results.append(cmd_normalize(text, cfg, args.mod_identities))
            elif args.command in ("is-central", "is-identity"):
                results.append(cmd_verdict(text, cfg, args.command == "is-central", args.literal))
            elif args.command == "member":
                results.append(cmd_member(text, args.set, args.type, cfg, args.bound))
            elif args.command == "witness":
                results.append(cmd_witness(text, cfg, args.m, args.n, args.type))
            elif args.command == "evaluate":
                results.append(cmd_evaluate(text, args.at, cfg))
        _emit(args.command, results, cfg, out)
        return 0
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (CentralPolyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
