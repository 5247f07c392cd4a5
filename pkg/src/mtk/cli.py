"""Instance file I/O and the `mtk` command line.

Instance files are JSON with optional top-level keys "hypergraph",
"complex", "matroids", "weights", "parts", and "provenance".
Rationals travel as strings "p/q"; vertices are 0-based.

Exit codes: 0 pass, 1 violation found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import coloring, polytopes, topology, verify
from .constructions import Instance, canned
from .core import Complex, Hypergraph, iter_bits, mask_of
from .errors import MtkError, ParseError, Unsupported, ValidationError
from .extval import INF
from .matroid import (
    ExplicitMatroid,
    GenPartitionMatroid,
    GraphicMatroid,
    Matroid,
    MatroidSystem,
    UniformMatroid,
)
from .polytopes import PolytopeRef, RatVec


def parse_instance(path: str) -> Instance:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}")
    return instance_from_dict(raw, origin=path)


def instance_from_dict(raw: dict, origin: str = "<dict>") -> Instance:
    if not isinstance(raw, dict):
        raise ParseError(f"{origin}: top level must be an object")
    hypergraph = None
    complex_ = None
    system = None
    parts = None
    weights = {}
    if "hypergraph" in raw:
        h = raw["hypergraph"]
        _need(h, "hypergraph", ("n", "edges"), origin)
        try:
            hypergraph = Hypergraph(h["n"], [mask_of(e) for e in h["edges"]])
        except (ValueError, TypeError) as e:
            raise ValidationError(f"{origin}: hypergraph: {e}")
    if "complex" in raw:
        c = raw["complex"]
        _need(c, "complex", ("n", "maximal_faces"), origin)
        try:
            complex_ = Complex(c["n"], [mask_of(f) for f in c["maximal_faces"]])
        except (ValueError, TypeError) as e:
            raise ValidationError(f"{origin}: complex: {e}")
    if "matroids" in raw:
        ms = [
            _matroid_from_dict(m, f"{origin}: matroids[{i}]")
            for i, m in enumerate(raw["matroids"])
        ]
        try:
            system = MatroidSystem(ms)
        except ValueError as e:
            raise ValidationError(f"{origin}: matroids: {e}")
    if "parts" in raw:
        parts = tuple(mask_of(p) for p in raw["parts"])
    for key, vals in raw.get("weights", {}).items():
        try:
            weights[key] = RatVec([Fraction(s) for s in vals])
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"{origin}: weights[{key}]: {e}")
    return Instance(
        provenance=raw.get("provenance", origin),
        hypergraph=hypergraph,
        parts=parts,
        complex_=complex_,
        system=system,
        weights=weights,
    )


def _need(obj, name, keys, origin):
    for k in keys:
        if k not in obj:
            raise ParseError(f"{origin}: {name} missing field {k!r}")


def _matroid_from_dict(m: dict, origin: str) -> Matroid:
    kind = m.get("kind")
    try:
        if kind == "uniform":
            return UniformMatroid(m["rank"], m["n"])
        if kind == "gen_partition":
            parts = [mask_of(p) for p in m["parts"]]
            n = 0
            for p in parts:
                n = max(n, p.bit_length())
            return GenPartitionMatroid(m.get("n", n), parts, m["caps"])
        if kind == "graphic":
            return GraphicMatroid(m["vertices"], [tuple(e) for e in m["edges"]])
        if kind == "explicit":
            return ExplicitMatroid(
                Complex(m["n"], [mask_of(f) for f in m["maximal"]])
            )
    except KeyError as e:
        raise ParseError(f"{origin}: missing field {e}")
    except ValueError as e:
        raise ValidationError(f"{origin}: {e}")
    raise ParseError(f"{origin}: unknown matroid kind {kind!r}")


def matroid_to_dict(m: Matroid) -> dict:
    if isinstance(m, UniformMatroid):
        return {"kind": "uniform", "n": m.n, "rank": m.r}
    if isinstance(m, GenPartitionMatroid):
        return {
            "kind": "gen_partition",
            "n": m.n,
            "parts": [sorted(iter_bits(p)) for p in m.parts],
            "caps": list(m.caps),
        }
    if isinstance(m, GraphicMatroid):
        return {
            "kind": "graphic",
            "vertices": m.vertices,
            "edges": [list(e) for e in m.edge_list],
        }
    maximal = m.to_complex().maximal_faces
    return {
        "kind": "explicit",
        "n": m.n,
        "maximal": [sorted(iter_bits(f)) for f in maximal],
    }


def instance_to_dict(inst: Instance) -> dict:
    out: dict = {"provenance": inst.provenance}
    if inst.hypergraph is not None:
        out["hypergraph"] = {
            "n": inst.hypergraph.n,
            "edges": inst.hypergraph.edge_sets(),
        }
    if inst.complex_ is not None:
        out["complex"] = {
            "n": inst.complex_.n,
            "maximal_faces": [
                sorted(iter_bits(f)) for f in inst.complex_.maximal_faces
            ],
        }
    if inst.system is not None:
        out["matroids"] = [matroid_to_dict(m) for m in inst.system]
    if inst.parts is not None:
        out["parts"] = [sorted(iter_bits(p)) for p in inst.parts]
    if inst.weights:
        out["weights"] = {k: v.format() for k, v in inst.weights.items()}
    return out


# -- commands ---------------------------------------------------------------


def _main_complex(inst: Instance) -> Complex:
    if inst.complex_ is not None:
        return inst.complex_
    if inst.system is not None:
        return inst.system.intersection_complex()
    if inst.hypergraph is not None:
        from .core import independence_complex

        return independence_complex(inst.hypergraph)
    raise ValidationError("instance holds no complex, system, or hypergraph")


def _fmt_val(v) -> str:
    if v == INF:
        return "inf"
    return str(v)


def cmd_invariants(args) -> int:
    inst = parse_instance(args.file)
    c = _main_complex(inst)
    what = args.what.split(",") if args.what else ["eta_h", "chi", "chi_star"]
    h = inst.weights.get("h")
    out = {}
    for item in what:
        if item == "eta_h":
            out["eta_h"] = _fmt_val(topology.eta_h(c))
        elif item == "chi":
            out["chi"] = str(coloring.chi(c))
        elif item == "chi_star":
            hh = list(h) if h is not None else [Fraction(1)] * c.n
            out["chi_star"] = str(coloring.chi_star(c, hh))
        elif item == "chi_list":
            out["chi_list"] = str(coloring.chi_list_number(c))
        elif item == "expansions":
            rec = topology.expansions(c, tuple(h) if h is not None else None)
            out["delta_r"] = str(rec.delta_r)
            out["delta_eta"] = str(rec.delta_eta)
            out["delta"] = str(rec.delta)
            out["delta_h"] = str(rec.delta_h)
        elif item == "homology":
            prof = topology.reduced_homology(c)
            out["betti"] = list(prof.betti)
            out["torsion"] = list(prof.torsion)
        elif item == "numbers" and inst.system is not None:
            w = inst.weights.get("w", RatVec.ones(inst.system.n))
            nums = polytopes.matroidal_numbers(inst.system, w)
            out["nu_w"] = str(nums.nu)
            out["nu_star_w"] = str(nums.nu_star)
            out["tau_star_w"] = str(nums.tau_star)
            out["tau_w"] = str(nums.tau)
        elif item == "hyper_numbers" and inst.hypergraph is not None:
            w = inst.weights.get("w")
            nums = polytopes.hyper_numbers(inst.hypergraph, w)
            out["hyper_nu_w"] = str(nums.nu)
            out["hyper_nu_star_w"] = str(nums.nu_star)
            out["hyper_tau_star_w"] = str(nums.tau_star)
            out["hyper_tau_w"] = str(nums.tau)
            out["w_star"] = str(nums.w_star)
        elif item == "matdim":
            from .matroid import matdim_exact, matdim_upper

            out["matdim_upper"] = str(matdim_upper(c)[0])
            if c.n <= 6:
                out["matdim_exact"] = str(matdim_exact(c))
        else:
            raise Unsupported(f"unknown invariant {item!r}")
    if args.report == "jsonl":
        print(json.dumps(out, sort_keys=True))
    else:
        for k in sorted(out):
            print(f"{k:>14}: {out[k]}")
    return 0


def cmd_verify(args) -> int:
    overrides = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.max_k is not None:
        overrides["max_k"] = args.max_k
    try:
        records = verify.run_suite(args.suite, seed=args.seed, **overrides)
    except KeyError:
        print(f"unknown suite {args.suite!r}; known: all, "
              + ", ".join(sorted(verify.SUITES)), file=sys.stderr)
        return 2
    except TypeError as e:
        print(f"bad option for suite {args.suite!r}: {e}", file=sys.stderr)
        return 2
    violated = 0
    for r in records:
        if args.report == "jsonl":
            print(r.to_json())
        else:
            print(
                f"{r.verdict:>12}  {r.claim:<40} {r.instance:<34} "
                f"{r.lhs} {r.relation} {r.rhs}"
            )
        if r.verdict == "violated":
            violated += 1
    summary = f"{len(records)} records, {violated} violated"
    if args.report != "jsonl":
        print(summary)
    return 1 if violated else 0


def cmd_gen(args) -> int:
    params = {}
    for kv in args.param or []:
        key, _, val = kv.partition("=")
        params[key] = int(val)
    inst = canned(args.name, **params)
    payload = json.dumps(instance_to_dict(inst), indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


def cmd_ratio(args) -> int:
    inst = parse_instance(args.file)
    if inst.system is None:
        raise ValidationError("ratio needs a matroid system")
    system = inst.system
    c = system.intersection_complex()
    refs = {
        "P": PolytopeRef.P(c),
        "Q": PolytopeRef.Q(c),
        "R": PolytopeRef.R(system),
    }
    bname, _, aname = args.pair.partition(":")
    if bname not in refs or aname not in refs:
        print(f"unknown pair {args.pair!r}; use e.g. R:P, R:Q, Q:P", file=sys.stderr)
        return 2
    val = polytopes.ratio(refs[bname], refs[aname])
    print(_fmt_val(val))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mtk",
        description="Exact invariants and theorem checks for matroid systems.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="compute invariants of an instance file")
    p.add_argument("file")
    p.add_argument("--what", default="", help="comma list: eta_h,chi,chi_star,...")
    p.add_argument("--report", choices=("table", "jsonl"), default="table")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--report", choices=("table", "jsonl"), default="table")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="emit a canned instance file")
    p.add_argument("name")
    p.add_argument("--param", action="append", help="k=v (repeatable)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("ratio", help="polytope blow-up ratio for an instance")
    p.add_argument("file")
    p.add_argument("--pair", default="R:P")
    p.set_defaults(fn=cmd_ratio)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, ValidationError, Unsupported) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except MtkError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
