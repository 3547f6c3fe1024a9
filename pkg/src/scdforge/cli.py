"""Command-line front end: construct, verify, and export decompositions.

Documents use the canonical JSON form "scdforge/1": sorted keys, compact
separators, UTF-8, newline-terminated, chains in the deterministic order the
constructions emit.  Subsets serialize as sorted 1-based element lists and
chain-power elements as level lists.  Every construct subcommand re-verifies
its result against an independently built target before emitting anything.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from .chainpow import ChainPowerTarget, ChainProductTarget, chainpower_scd
from .core import (
    Chain,
    Context,
    Decomposition,
    ResourceLimitError,
    bit_string,
    elements_of,
    mask_of,
    set_string,
)
from .gk import gk_decomposition
from .groups import GroupSpec, ParseError, parse_group_spec, quotient_poset
from .prune import quotient_scd
from .reflect import _transpositions, involution_group, reflection_scd
from .verify import VerificationError, rank_profile, verify_decomposition

SCHEMA_ID = "scdforge/1"

_DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["schema", "context", "chains", "stats"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "context": {
            "type": "object",
            "required": ["kind"],
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["boolean", "quotient", "reflection", "chainpower", "product"]},
                "n": {"type": "integer", "minimum": 1},
                "group": {"type": "string"},
                "k": {"type": "integer", "minimum": 2},
                "m": {"type": "integer", "minimum": 1},
                "r": {"type": "integer", "minimum": 1},
                "factors": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "array",
                        "items": {"type": "integer"},
                        "minItems": 3,
                        "maxItems": 3,
                    },
                },
            },
        },
        "chains": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "minItems": 1,
                "items": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "stats": {
            "type": "object",
            "required": ["chain_count", "element_count", "rank_profile"],
            "additionalProperties": False,
            "properties": {
                "chain_count": {"type": "integer", "minimum": 1},
                "element_count": {"type": "integer", "minimum": 1},
                "rank_profile": {"type": "array", "items": {"type": "integer"}},
            },
        },
    },
}


class DecodeError(ValueError):
    """Document rejected; the message carries a JSON pointer."""


_REQUIRED_CONTEXT = {
    "boolean": ("n",),
    "quotient": ("n", "group"),
    "reflection": ("n", "group"),
    "chainpower": ("k", "m", "r"),
    "product": ("factors",),
}


def build_document(decomp: Decomposition) -> dict:
    """Serializable document for a decomposition."""
    ctx = decomp.context
    context = {"kind": ctx.kind}
    for key in ("n", "group", "k", "m", "r"):
        value = getattr(ctx, key)
        if value is not None:
            context[key] = value
    if ctx.factors is not None:
        context["factors"] = [list(t) for t in ctx.factors]
    if ctx.kind in ("boolean", "quotient", "reflection"):
        chains = [[list(elements_of(e)) for e in c.elements] for c in decomp.chains]
    else:
        chains = [[list(e) for e in c.elements] for c in decomp.chains]
    stats = {
        "chain_count": len(decomp.chains),
        "element_count": decomp.element_count(),
        "rank_profile": list(decomp.rank_counts()),
    }
    return {"schema": SCHEMA_ID, "context": context, "chains": chains, "stats": stats}


def encode(doc: dict) -> bytes:
    """Canonical bytes: sorted keys, compact separators, newline-terminated."""
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def _subset_error(pointer: str, message: str):
    raise DecodeError(f"{pointer}: {message}")


def decode(data: bytes | str) -> dict:
    """Parse and validate a document; raises DecodeError with a JSON pointer."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise DecodeError(f"/: not valid JSON ({e.msg} at line {e.lineno})") from None
    validator = jsonschema.Draft202012Validator(_DOCUMENT_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        pointer = "/" + "/".join(str(p) for p in err.absolute_path)
        raise DecodeError(f"{pointer}: {err.message}")
    ctx = doc["context"]
    kind = ctx["kind"]
    for key in _REQUIRED_CONTEXT[kind]:
        if key not in ctx:
            _subset_error("/context", f"kind {kind!r} requires {key!r}")
    if kind in ("boolean", "quotient", "reflection"):
        n = ctx["n"]
        for ci, chain in enumerate(doc["chains"]):
            for ei, elems in enumerate(chain):
                pointer = f"/chains/{ci}/{ei}"
                if any(e < 1 or e > n for e in elems):
                    _subset_error(pointer, f"element out of range 1..{n}")
                if sorted(set(elems)) != elems:
                    _subset_error(pointer, "subset must be a sorted list of distinct elements")
    elif kind == "chainpower":
        k, m = ctx["k"], ctx["m"]
        _check_level_chains(doc["chains"], [(k, m)])
    else:
        triples = [tuple(t) for t in ctx["factors"]]
        if any(k < 2 or m < 1 or r < 1 for k, m, r in triples):
            _subset_error("/context/factors", "factor entries must satisfy k>=2, m>=1, r>=1")
        _check_level_chains(doc["chains"], [(k, m) for k, m, _ in triples])
    return doc


def _check_level_chains(chains, blocks):
    width = sum(m for _, m in blocks)
    for ci, chain in enumerate(chains):
        for ei, elems in enumerate(chain):
            pointer = f"/chains/{ci}/{ei}"
            if len(elems) != width:
                _subset_error(pointer, f"level tuple must have {width} entries")
            i = 0
            for k, m in blocks:
                if any(lv < 0 or lv > k - 1 for lv in elems[i : i + m]):
                    _subset_error(pointer, f"levels must lie in 0..{k - 1}")
                i += m


def decomposition_from_document(doc: dict) -> Decomposition:
    ctx = doc["context"]
    kind = ctx["kind"]
    if kind in ("boolean", "quotient", "reflection"):
        chains = tuple(Chain.from_masks(mask_of(e) for e in chain) for chain in doc["chains"])
        total = ctx["n"]
    else:
        chains = tuple(Chain.from_levels(chain) for chain in doc["chains"])
        if kind == "chainpower":
            total = (ctx["k"] - 1) * ctx["m"]
        else:
            total = sum((k - 1) * m for k, m, _ in ctx["factors"])
    context = Context(
        kind=kind,
        total_rank=total,
        n=ctx.get("n"),
        group=ctx.get("group"),
        k=ctx.get("k"),
        m=ctx.get("m"),
        r=ctx.get("r"),
        factors=tuple(tuple(t) for t in ctx["factors"]) if "factors" in ctx else None,
    )
    return Decomposition(chains, context)


def target_for_context(ctx: dict):
    kind = ctx["kind"]
    if kind == "boolean":
        return quotient_poset(ctx["n"], GroupSpec.trivial(ctx["n"]))
    if kind == "quotient":
        return quotient_poset(ctx["n"], parse_group_spec(ctx["group"], ctx["n"]))
    if kind == "reflection":
        spec = parse_group_spec(ctx["group"], ctx["n"])
        return quotient_poset(ctx["n"], involution_group(ctx["n"], _transpositions(spec)))
    if kind == "chainpower":
        return ChainPowerTarget(ctx["k"], ctx["m"], ctx["r"])
    return ChainProductTarget([tuple(t) for t in ctx["factors"]])


def _render_element(e, ctx: Context) -> str:
    if isinstance(e, int):
        return bit_string(e, ctx.n)
    return "(" + ",".join(str(x) for x in e) + ")"


def _emit(decomp: Decomposition, args) -> None:
    if getattr(args, "text", False):
        print(f"chains={len(decomp.chains)}")
        for c in decomp.chains:
            print(" < ".join(_render_element(e, decomp.context) for e in c.elements))
    else:
        sys.stdout.buffer.write(encode(build_document(decomp)))
        sys.stdout.buffer.flush()


def _verified_emit(decomp: Decomposition, target, args) -> int:
    report = verify_decomposition(target, decomp)
    if not report.ok:
        print(report.summary(), file=sys.stderr)
        return 1
    _emit(decomp, args)
    return 0


def _cmd_gk(args) -> int:
    decomp = gk_decomposition(args.n)
    target = quotient_poset(args.n, GroupSpec.trivial(args.n))
    return _verified_emit(decomp, target, args)


def _cmd_quotient(args) -> int:
    decomp = quotient_scd(args.n, args.group)  # verifies internally
    _emit(decomp, args)
    return 0


def _cmd_reflect(args) -> int:
    decomp = reflection_scd(args.n, args.group)  # verifies internally
    _emit(decomp, args)
    return 0


def _cmd_chainpower(args) -> int:
    decomp = chainpower_scd(args.k, args.m, args.r)
    target = ChainPowerTarget(args.k, args.m, args.r)
    return _verified_emit(decomp, target, args)


def _cmd_orbits(args) -> int:
    group = parse_group_spec(args.group, args.n) if args.group else GroupSpec.trivial(args.n)
    poset = quotient_poset(args.n, group)
    if args.dot:
        print("digraph quotient {")
        print("  rankdir=BT;")
        for o in poset.orbits:
            print(f'  "{set_string(o.rep)}" [label="{set_string(o.rep)} x{o.size}"];')
        for lower, upper in poset.covers():
            print(f'  "{set_string(lower)}" -> "{set_string(upper)}";')
        print("}")
        return 0
    print(f"orbits={poset.size()}")
    for r, bucket in enumerate(poset.orbits_by_rank):
        for o in bucket:
            print(f"rank {r}: {set_string(o.rep)} size={o.size}")
    return 0


def _cmd_profile(args) -> int:
    group = parse_group_spec(args.group, args.n) if args.group else GroupSpec.trivial(args.n)
    profile = rank_profile(quotient_poset(args.n, group))
    print("ranks=" + " ".join(str(c) for c in profile.counts))
    print(f"symmetric={'true' if profile.symmetric else 'false'}")
    print(f"unimodal={'true' if profile.unimodal else 'false'}")
    return 0


def _cmd_verify(args) -> int:
    with open(args.input, "rb") as fh:
        doc = decode(fh.read())
    decomp = decomposition_from_document(doc)
    target = target_for_context(doc["context"])
    report = verify_decomposition(target, decomp)
    stats = doc["stats"]
    stats_ok = (
        stats["chain_count"] == len(decomp.chains)
        and stats["element_count"] == decomp.element_count()
        and tuple(stats["rank_profile"]) == decomp.rank_counts()
    )
    if args.json:
        payload = report.to_dict()
        payload["stats_consistent"] = stats_ok
        sys.stdout.buffer.write(
            (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")
        )
        return 0 if report.ok and stats_ok else 1
    if report.ok and stats_ok:
        print(f"ok: {report.element_count} elements in {len(decomp.chains)} chains")
        return 0
    if not stats_ok:
        print("stats do not match the chains", file=sys.stderr)
    if not report.ok:
        print(report.summary(), file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scdforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="canonical JSON (default)")
        fmt.add_argument("--text", action="store_true", help="plain text chains")

    p = sub.add_parser("gk", help="Greene-Kleitman SCD of B_n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_gk)

    p = sub.add_parser("quotient", help="SCD of B_n modulo powers of disjoint cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", required=True, help='cycles with powers, e.g. "(1 2 3 4)^2 (5 6)"')
    add_format(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("reflect", help="SCD of B_n modulo a product of disjoint transpositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", required=True, help='transpositions, e.g. "(1 4)(2 3)"')
    add_format(p)
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("chainpower", help="SCD of a chain power modulo coordinate rotation")
    p.add_argument("--k", type=int, required=True, help="levels of the chain")
    p.add_argument("--m", type=int, required=True, help="number of coordinates")
    p.add_argument("--r", type=int, default=1, help="rotation step (default 1)")
    add_format(p)
    p.set_defaults(func=_cmd_chainpower)

    p = sub.add_parser("orbits", help="orbit poset of B_n under a group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", default=None)
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("verify", help="re-verify a document")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("profile", help="rank profile of a quotient poset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", default=None)
    p.set_defaults(func=_cmd_profile)

    return parser


def run(argv=None) -> int:
    """Dispatch a command line; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ParseError, DecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


__all__ = [
    "DecodeError",
    "SCHEMA_ID",
    "build_document",
    "build_parser",
    "decode",
    "decomposition_from_document",
    "encode",
    "main",
    "run",
    "target_for_context",
]


if __name__ == "__main__":
    main()
