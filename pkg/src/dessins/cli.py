"""Command-line interface: ``dessins <command> ...``.

Exit status: 0 success, 1 a check failed, 2 usage or input error, 3 a
resource cap was exceeded.  Defaults for the global options may be put in a
JSON file named by the DESSINS_CONFIG environment variable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import io
from .errors import CapExceeded, NotSubgroupError, NotTransitiveError, VerificationError
from .groups import ENUMERATION_CAP, LATTICE_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CONFIG_ENV = "DESSINS_CONFIG"


@dataclass
class RunConfig:
    enumeration_cap: int = ENUMERATION_CAP
    lattice_cap: int = LATTICE_CAP
    degree_cap: int = 10**5
    workers: int = 1
    seed: int = 0
    format: str = "text"
    output: str | None = None


def load_config(path: str | None = None) -> RunConfig:
    path = path or os.environ.get(CONFIG_ENV)
    cfg = RunConfig()
    if path:
        data = json.loads(Path(path).read_text())
        for k, v in data.items():
            if not hasattr(cfg, k):
                raise ValueError(f"unknown config key {k!r}")
            setattr(cfg, k, v)
    return cfg


class _Out:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.parts: list[str] = []

    def text(self, s: str = "") -> None:
        self.parts.append(s)

    def json(self, data) -> None:
        self.parts.append(json.dumps(data, indent=2, default=_json_default))

    def flush(self) -> None:
        body = "\n".join(self.parts)
        if body and not body.endswith("\n"):
            body += "\n"
        if self.cfg.output:
            Path(self.cfg.output).write_text(body)
        else:
            sys.stdout.write(body)


def _json_default(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (set, frozenset, tuple)):
        return list(v)
    return str(v)


def _triple(text: str) -> tuple[int, int, int]:
    parts = [int(t) for t in text.replace(" ", "").split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected p,q,r")
    return tuple(parts)


def _constraint(text: str | None):
    """An integer (cycle lengths dividing it) or a cycle type like '3^2 1^1'."""
    if text is None:
        return None
    t = text.strip()
    return int(t) if t.isdigit() else t


# -- commands ----------------------------------------------------------------------


def cmd_analyze(args, cfg: RunConfig, out: _Out) -> int:
    from .dessin import cover_genus
    rows = []
    for D in io.read_dessins(args.dessin):
        if D.degree > cfg.degree_cap:
            raise CapExceeded(f"degree {D.degree} exceeds cap {cfg.degree_cap}")
        G = D.monodromy
        systems = G.minimal_block_systems() if D.degree > 1 else []
        try:
            cg = cover_genus(D)
        except VerificationError:
            cg = None
        rows.append({
            "degree": D.degree,
            "passport": str(D.passport),
            "type": list(D.type),
            "genus": D.genus,
            "monodromy_order": G.order(),
            "transitive": G.is_transitive(),
            "primitive": not systems,
            "minimal_block_systems": [[list(b) for b in B.blocks] for B in systems],
            "automorphism_order": D.automorphisms.order(),
            "regular": D.is_regular(),
            "faithful": D.is_faithful(),
            "cover_genus": cg,
        })
    if cfg.format == "json":
        out.json(rows if len(rows) > 1 else rows[0])
    else:
        for k, r in enumerate(rows):
            if k:
                out.text()
            for key, v in r.items():
                if key == "minimal_block_systems":
                    v = "; ".join(" ".join("{" + ",".join(map(str, b)) + "}" for b in B) for B in v) or "-"
                out.text(f"{key.replace('_', ' ')}: {v}")
    return EXIT_OK


def _census_text(result, out: _Out, header: str | None = None) -> None:
    if header:
        out.text(header)
    for rep in result.reports:
        D = rep.dessin
        out.text(f"# passport {rep.passport}, genus {rep.genus}, |G| = {rep.monodromy_order}, "
                 f"|Aut| = {rep.automorphism_order}, "
                 f"{'primitive' if rep.primitive else 'blocks ' + str(rep.block_counts)}")
        out.text(D.to_text())
    for d in result.disconnected:
        out.text(f"# disconnected: {', '.join(map(str, d.components))}, weight {d.weight}")


def cmd_enumerate(args, cfg: RunConfig, out: _Out) -> int:
    from .enumeration import EnumQuery, enumerate_dessins
    q = EnumQuery(args.degree, _constraint(args.x), _constraint(args.y), _constraint(args.z),
                  transitive=not args.all, budget=args.budget, workers=cfg.workers)
    result = enumerate_dessins(q)
    if cfg.format == "json":
        out.json(result.to_json())
    elif cfg.format == "dot":
        for k, D in enumerate(result.dessins):
            out.text(D.to_dot(name=f"dessin{k}"))
    else:
        _census_text(result, out)
        out.text(f"# {len(result.dessins)} dessins, total weight {result.connected_weight()}"
                 + (f", disconnected weight {result.disconnected_weight()}" if result.disconnected else ""))
    return EXIT_OK


def cmd_census(args, cfg: RunConfig, out: _Out) -> int:
    from .enumeration import census_two_seven_faces, count_one_seven_face
    if args.two_seven:
        res = census_two_seven_faces(workers=cfg.workers, budget=args.budget)
    else:
        res = count_one_seven_face(workers=cfg.workers, budget=args.budget)
    total = sum(len(r.dessins) for r in res.values())
    if cfg.format == "json":
        out.json({"schema": io.SCHEMA_VERSION, "total": total,
                  "by_degree": {n: r.to_json() for n, r in res.items()}})
    else:
        for n, r in res.items():
            _census_text(r, out, f"## degree {n}: {len(r.dessins)}")
        out.text(f"# total {total}")
    return EXIT_OK


def cmd_chartab(args, cfg: RunConfig, out: _Out) -> int:
    from .chartab import dixon_table
    G = io.read_group(args.group)
    T = dixon_table(G, seed=cfg.seed)
    T.verify()
    if cfg.format == "json":
        out.json(T.to_json())
    else:
        out.text(T.pretty())
    return EXIT_OK


def cmd_count(args, cfg: RunConfig, out: _Out) -> int:
    from .chartab import (brute_force_triple_count, dixon_table, frobenius_count,
                          naive_estimate, triple_count_by_type)
    from .moebius import sigma_brute
    G = io.read_group(args.group)
    T = dixon_table(G, seed=cfg.seed)
    if args.classes:
        labels = [s.strip() for s in args.classes.split(",")]
        if len(labels) != 3:
            raise ValueError("expected three class labels")
        X, Y, Z = (G.class_by_label(s) for s in labels)
        f = frobenius_count(G, X, Y, Z, T)
        b = brute_force_triple_count(G, X, Y, Z) if X.size * Y.size <= cfg.enumeration_cap else None
        data = {"classes": labels, "frobenius": f, "naive": str(naive_estimate(G, X, Y, Z)), "brute_force": b}
    else:
        f = triple_count_by_type(G, T, args.type)
        b = sigma_brute(G, args.type) if G.order() <= cfg.enumeration_cap else None
        data = {"type": list(args.type), "frobenius": f, "brute_force": b}
    ok = b is None or b == f
    data["agree"] = ok
    if cfg.format == "json":
        out.json(data)
    else:
        for k, v in data.items():
            out.text(f"{k}: {v}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_moebius(args, cfg: RunConfig, out: _Out) -> int:
    from .moebius import generating_triples_direct, mobius_table
    G = io.read_group(args.group)
    tab = mobius_table(G, args.type, method=args.method, cap=cfg.lattice_cap)
    aut = G.automorphism_count()
    phi = tab.phi
    check = generating_triples_direct(G, args.type) if args.check else None
    ok = check is None or check == phi
    count, rem = divmod(phi, aut)
    if cfg.format == "json":
        data = tab.to_json()
        data.update(automorphisms=aut, regular_dessins=count, direct_phi=check)
        out.json(data)
    else:
        out.text(tab.pretty())
        out.text(f"phi = {phi}")
        if check is not None:
            out.text(f"phi (direct) = {check}")
        out.text(f"|Aut(G)| = {aut}")
        out.text(f"regular dessins = {phi}/{aut} = {Fraction(phi, aut)}")
    return EXIT_OK if ok and not rem else EXIT_FAIL


CONSTRUCTIONS = ("fano-trees", "psl2-7", "psl2-8", "psl2-27", "agl32", "genus17", "census127", "a15")


def cmd_construct(args, cfg: RunConfig, out: _Out) -> int:
    from . import constructions as C
    name = args.name
    group = None
    if name == "fano-trees":
        dessins = list(C.fano_tree_triples())
    elif name == "psl2-7":
        dessins = [C.psl2_natural_triple(7)]
    elif name == "psl2-8":
        dessins = [C.psl2_hurwitz_triple(8)]
    elif name == "psl2-27":
        dessins = [C.psl2_27_triple()]
    elif name == "genus17":
        dessins = C.genus17_triples()
    elif name == "a15":
        dessins = [C.a15_triple()]
    elif name == "census127":
        from .enumeration import count_one_seven_face
        dessins = [D for r in count_one_seven_face(workers=cfg.workers).values() for D in r.dessins]
    elif name == "agl32":
        group, dessins = C.agl32(), []
    else:
        raise ValueError(f"unknown construction {name!r}")
    if group is not None:
        if cfg.format == "json":
            out.json(io.group_to_json(group))
        else:
            out.text(io.group_to_text(group).rstrip("\n"))
    elif cfg.format == "json":
        out.json(io.dessins_to_json(dessins))
    elif cfg.format == "dot":
        for k, D in enumerate(dessins):
            out.text(D.to_dot(name=f"dessin{k}"))
    else:
        out.text(io.dessins_to_text(dessins).rstrip("\n"))
    return EXIT_OK


def _emit_dessin(D, cfg: RunConfig, out: _Out) -> None:
    if cfg.format == "json":
        out.json(D.to_json())
    elif cfg.format == "dot":
        out.text(D.to_dot())
    else:
        out.text(D.to_text().rstrip("\n"))


def cmd_quotient(args, cfg: RunConfig, out: _Out) -> int:
    from .dessin import coset_dessin
    D = io.read_dessin(args.dessin)
    H = io.read_group(args.subgroup)
    G = D.monodromy
    if H.degree != D.degree or not H.is_subgroup_of(G):
        raise NotSubgroupError("subgroup is not contained in the monodromy group")
    _emit_dessin(coset_dessin(D, H, cap=cfg.degree_cap), cfg, out)
    return EXIT_OK


def cmd_cover(args, cfg: RunConfig, out: _Out) -> int:
    from .dessin import regular_cover
    D = io.read_dessin(args.dessin)
    _emit_dessin(regular_cover(D, cap=cfg.degree_cap), cfg, out)
    return EXIT_OK


def cmd_verify_belyi(args, cfg: RunConfig, out: _Out) -> int:
    from .belyi import verify_klein_tree_belyi
    rep = verify_klein_tree_belyi()
    if cfg.format == "json":
        out.json({"passed": rep.passed, "sqrt_neg7_sign": rep.sign, "norm_K": str(rep.norm_K),
                  "checks": [asdict(c) for c in rep.checks]})
    else:
        for line in rep.lines():
            out.text(line)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check(args, cfg: RunConfig, out: _Out) -> int:
    from .checks import run_all
    numbers = None
    if args.only:
        numbers = {int(t) for t in args.only.split(",")}

    def show(r):
        if cfg.format != "json":
            print(r.line(), flush=True)
            if args.verbose or not r.passed:
                for d in r.details:
                    print("      " + d, flush=True)

    results = run_all(numbers, workers=cfg.workers, on_result=show)
    passed = sum(r.passed for r in results)
    if cfg.format == "json":
        out.json({"passed": passed, "total": len(results), "results": [asdict(r) for r in results]})
    else:
        out.text(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default=None, help="Output format.")
    common.add_argument("-o", "--output", default=None, help="Write output to this file.")
    common.add_argument("--workers", type=int, default=None, help="Worker processes for searches.")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized internals.")
    common.add_argument("--enumeration-cap", type=int, default=None)
    common.add_argument("--lattice-cap", type=int, default=None)
    common.add_argument("--degree-cap", type=int, default=None)
    common.add_argument("--config", default=None, help=f"JSON config file (default: ${CONFIG_ENV}).")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="dessins", description="Dessins d'enfants toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="Invariants of a dessin file.")
    s.add_argument("dessin")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("enumerate", parents=[common], help="All dessins of a given degree and constraints.")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--x", help="Order bound (integer) or cycle type of x.")
    s.add_argument("--y")
    s.add_argument("--z")
    s.add_argument("--all", action="store_true", help="Also report non-transitive solutions.")
    s.add_argument("--budget", type=int, default=10**9, help="Search node budget.")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", parents=[common], help="(3,2,7) maps with one or two 7-faces.")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--one-seven", action="store_true")
    g.add_argument("--two-seven", action="store_true")
    s.add_argument("--budget", type=int, default=10**9)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("chartab", parents=[common], help="Character table by Dixon's method.")
    s.add_argument("group")
    s.set_defaults(func=cmd_chartab)

    s = sub.add_parser("count", parents=[common], help="Solutions of xyz = 1 in classes or by type.")
    s.add_argument("group")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--classes", help="Three class labels, e.g. 3A,2A,7A.")
    g.add_argument("--type", type=_triple, help="Orders p,q,r.")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("moebius", parents=[common], help="Möbius inversion over the subgroup lattice.")
    s.add_argument("group")
    s.add_argument("--type", type=_triple, required=True)
    s.add_argument("--method", choices=["brute", "frobenius", "both"], default="brute",
                   help="How σ(H) is computed.")
    s.add_argument("--check", action="store_true", help="Cross-check φ by a direct count.")
    s.set_defaults(func=cmd_moebius)

    s = sub.add_parser("construct", parents=[common], help="Named dessins and groups.")
    s.add_argument("name", choices=CONSTRUCTIONS)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("quotient", parents=[common], help="Quotient of a dessin by a subgroup.")
    s.add_argument("dessin")
    s.add_argument("--subgroup", required=True)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("cover", parents=[common], help="Minimal regular cover.")
    s.add_argument("dessin")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("verify-belyi", parents=[common], help="Exact check of the Fano-tree Belyi map.")
    s.set_defaults(func=cmd_verify_belyi)

    s = sub.add_parser("check", aliases=["paper-check"], parents=[common], help="Run the acceptance ledger.")
    s.add_argument("--only", help="Comma-separated check numbers.")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"error: bad config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for key in ("format", "output", "workers", "seed", "enumeration_cap", "lattice_cap", "degree_cap"):
        v = getattr(args, key, None)
        if v is not None:
            setattr(cfg, key, v)
    out = _Out(cfg)
    try:
        code = args.func(args, cfg, out)
    except CapExceeded as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, KeyError, OSError, NotTransitiveError, NotSubgroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
