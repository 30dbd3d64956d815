"""Command-line interface.

Subcommands: analyze, pairs, rank, units, oracle, catalog.  Groups come
from the built-in catalog (``--group catalog:NAME``) or a JSON file with
a cayley table, permutation generators, or a power-commutator
presentation.  Candidate Shoda pairs for large groups are supplied via
``--pairs-file`` using generator words.  Exit codes: 0 success, 2 when a
pair set is incomplete, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import catalog, get_group
from .config import AnalysisConfig
from .cyclotomic import euler_phi
from .errors import ZgError
from .groups import (
    group_from_cayley,
    group_from_pc_presentation,
    group_from_permutations,
    subgroup_closure,
    subnormal_series,
)
from .rank import rank_oracle, rank_total
from .shoda import complete_irredundant_set
from .units import (
    bass_specs_for,
    bass_unit,
    c_central_unit,
    central_character_value,
    is_central_unit,
)


# -- input loading -------------------------------------------------------------


def load_group_spec(spec):
    """Build a FiniteGroup from a parsed group-input JSON object."""
    kind = spec.get("type")
    if kind == "cayley":
        return group_from_cayley(spec["table"], labels=spec.get("labels"))
    if kind == "perm":
        from .groups import perm_from_cycles

        degree = spec["degree"]
        gens = [perm_from_cycles(degree, cycles) for cycles in spec["generators"]]
        return group_from_permutations(degree, gens)
    if kind == "pc":
        powers = {int(k): [tuple(t) for t in v] for k, v in (spec.get("powers") or {}).items()}
        commutators = {
            tuple(int(x) for x in k.split(",")): [tuple(t) for t in v]
            for k, v in (spec.get("commutators") or {}).items()
        }
        return group_from_pc_presentation(spec["orders"], powers=powers, commutators=commutators)
    raise ValueError(f"unknown group input type {kind!r}")


def resolve_group(arg):
    if arg.startswith("catalog:"):
        return get_group(arg.split(":", 1)[1])
    with open(arg, encoding="utf-8") as fh:
        return load_group_spec(json.load(fh))


def parse_word(G, token):
    """Evaluate a generator word like "x3*x4^2" (or an element index)."""
    if isinstance(token, int):
        if not 0 <= token < G.order:
            raise ValueError(f"element index {token} out of range")
        return token
    names = getattr(G, "generator_names", None)
    gens = getattr(G, "pc_generators", None)
    if names is None or gens is None:
        raise ValueError("generator words require a pc-presented group")
    lookup = dict(zip(names, gens))
    out = 0
    for part in token.split("*"):
        if "^" in part:
            name, exp = part.split("^", 1)
            exp = int(exp)
        else:
            name, exp = part, 1
        if name not in lookup:
            raise ValueError(f"unknown generator {name!r} in word {token!r}")
        out = G.mul(out, G.power(lookup[name], exp))
    return out


def parse_subgroup(G, tokens):
    return subgroup_closure(G, [parse_word(G, t) for t in tokens])


def parse_pairs_file(G, doc):
    """Candidate tuples (H, K, chain_steps_or_None) from a pairs file."""
    out = []
    for entry in doc["pairs"]:
        H = parse_subgroup(G, entry["H"])
        K = parse_subgroup(G, entry["K"])
        chain = None
        if entry.get("chain"):
            chain = [parse_subgroup(G, step) for step in entry["chain"]]
        out.append((H, K, chain))
    return out


# -- report assembly -----------------------------------------------------------


def _chain_json(chain):
    if chain is None:
        return None
    return {
        "subgroup_orders": [s.order for s in chain.steps],
        "centralizer_orders": [c.order for c in chain.centralizers],
        "indices": list(chain.indices),
    }


def pair_json(pair):
    return {
        "H_order": pair.H.order,
        "K_order": pair.K.order,
        "index": pair.index,
        "status": pair.status,
        "pci_support": len(pair.pci.coeffs),
        "chain": _chain_json(pair.chain),
    }


def _envelope(config, payload):
    return {"version": __version__, "config": config.to_json(), **payload}


def compute_pairs(G, args, config):
    candidates = None
    if args.pairs_file:
        with open(args.pairs_file, encoding="utf-8") as fh:
            candidates = parse_pairs_file(G, json.load(fh))
    return complete_irredundant_set(
        G,
        candidates=candidates,
        order_cap=config.subgroup_cap,
        depth_cap=config.chain_depth_cap,
        visit_cap=config.chain_visit_cap,
    )


def rank_json(G, pairs, complete):
    report = rank_total(G, pairs, complete=complete)
    return report, {
        "pairs": [
            {
                **pair_json(t.pair),
                "phi": euler_phi(t.index_HK),
                "chain_indices": t.chain_indices,
                "k": t.k,
                "term": t.term,
            }
            for t in report.terms
        ],
        "total": report.total,
        "oracle": report.oracle_total,
        "agree": report.agree,
    }


def rank_text_table(report):
    lines = ["H_order\tK_order\t[H:K]\tindices\tk\tterm"]
    for t in report.terms:
        lines.append(
            f"{t.pair.H.order}\t{t.pair.K.order}\t{t.index_HK}\t"
            f"{'x'.join(map(str, t.chain_indices))}\t{t.k}\t{t.term}"
        )
    lines.append(f"total\t{report.total}\toracle\t{report.oracle_total}\tagree\t{report.agree}")
    return "\n".join(lines)


def units_json(G, pairs, complete):
    rows = []
    seen_cyclic = set()
    for g in range(G.order):
        H = subgroup_closure(G, [g])
        if H.members in seen_cyclic:
            continue
        seen_cyclic.add(H.members)
        try:
            series = subnormal_series(H)
        except ZgError:
            continue
        for spec in bass_specs_for(G, g):
            u = bass_unit(G, spec)
            try:
                cu = c_central_unit(u, series)
            except ZgError:
                continue
            row = {
                "spec": {"g": spec.g, "k": spec.k, "m": spec.m},
                "n_b": None,
                "support": len(cu.value.coeffs),
                "central_unit": is_central_unit(cu.value),
            }
            if complete:
                row["omega"] = [
                    central_character_value(G, p, cu.value).to_json() for p in pairs
                ]
            rows.append(row)
    return {"units": rows}


# -- emission ------------------------------------------------------------------


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list):
        rows.append((prefix, json.dumps(value)))
    else:
        rows.append((prefix, value))


def emit(doc, args, text=None):
    if args.format == "tsv":
        rows = []
        _flatten("", doc, rows)
        out = "\n".join(f"{k}\t{v}" for k, v in rows)
    elif args.format == "text" and text is not None:
        out = text
    else:
        out = json.dumps(doc, indent=2, default=str)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


# -- entry point ---------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zgcentral",
        description="Shoda pairs, central idempotents, and central units of ZG.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_group=True):
        if needs_group:
            p.add_argument("--group", required=True, help="catalog:NAME or a JSON file")
            p.add_argument("--pairs-file", default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=["json", "tsv", "text"], default="json")
        p.add_argument("--subgroup-cap", type=int, default=200)
        p.add_argument("--chain-depth-cap", type=int, default=8)
        p.add_argument("--chain-visit-cap", type=int, default=10**5)
        p.add_argument("--tolerance", type=float, default=1e-6)

    for name in ("analyze", "pairs", "rank", "units", "oracle"):
        add_common(sub.add_parser(name))
    add_common(sub.add_parser("catalog"), needs_group=False)
    return parser


def run(args):
    config = AnalysisConfig(
        subgroup_cap=args.subgroup_cap,
        chain_depth_cap=args.chain_depth_cap,
        chain_visit_cap=args.chain_visit_cap,
        rank_witness_tolerance=args.tolerance,
    )
    if args.command == "catalog":
        entries = [
            {"name": e.name, "order": e.constructor().order} for e in catalog()
        ]
        emit(_envelope(config, {"catalog": entries}), args)
        return 0

    G = resolve_group(args.group)
    if args.command == "oracle":
        emit(_envelope(config, {"oracle": rank_oracle(G)}), args)
        return 0

    pairs, complete = compute_pairs(G, args, config)
    if args.command == "pairs":
        emit(
            _envelope(
                config,
                {"pairs": [pair_json(p) for p in pairs], "complete": complete},
            ),
            args,
        )
        return 0 if complete else 2
    if args.command == "rank":
        if not complete:
            emit(_envelope(config, {"error": "incomplete pair set"}), args)
            return 2
        report, doc = rank_json(G, pairs, complete)
        emit(_envelope(config, doc), args, text=rank_text_table(report))
        return 0
    if args.command == "units":
        doc = units_json(G, pairs, complete)
        emit(_envelope(config, {**doc, "complete": complete}), args)
        return 0 if complete else 2
    # analyze
    payload = {
        "group_order": G.order,
        "pairs": [pair_json(p) for p in pairs],
        "complete": complete,
    }
    if complete:
        report, doc = rank_json(G, pairs, complete)
        payload["rank"] = doc
        payload["summary"] = {
            "rank_total": report.total,
            "oracle": report.oracle_total,
            "agree": report.agree,
        }
        emit(_envelope(config, payload), args)
        return 0
    emit(_envelope(config, payload), args)
    return 2


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ZgError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
