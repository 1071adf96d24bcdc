"""Command-line front door: one subcommand per library operation, plus result
caching for the searches and golden-comparison for the audit."""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from importlib import resources

from . import auditor, families, numth, search, seqcore, sring
from .errors import HadalabError
from .seqcore import BinarySeq

CONFIG_KEYS = ("format", "cache", "workers", "output", "golden")


@dataclass
class RunConfig:
    subcommand: str
    args: argparse.Namespace
    fmt: str = "text"
    cache_dir: str = None
    workers: int = 1
    output: str = None
    golden: str = None
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.workers < 1:
            self.workers = 1
        for name, v in self.bounds.items():
            self.bounds[name] = min(v, search.HARD_BOUNDS[name])


def _parse_config_file(path):
    """key = value lines; '#' starts a comment; bound may repeat."""
    out = {"bound": []}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("bad config line: %r" % raw.strip())
            key, val = line.split("=", 1)
            key, val = key.strip(), val.strip()
            if key == "bound":
                out["bound"].append(val)
            elif key in CONFIG_KEYS:
                out[key] = val
            else:
                raise ValueError("unknown config key: %r" % key)
    return out


def _parse_bounds(items):
    bounds = {}
    for item in items or ():
        if "=" not in item:
            raise ValueError("--bound expects NAME=VALUE, got %r" % item)
        name, val = item.split("=", 1)
        if name not in search.DEFAULT_BOUNDS:
            raise ValueError(
                "unknown bound %r (known: %s)"
                % (name, ", ".join(sorted(search.DEFAULT_BOUNDS)))
            )
        bounds[name] = int(val)
    return bounds


def _add_common_flags(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("text", "json", "graph"), default=d,
                   help="output format (graph = DOT, lattice only)")
    p.add_argument("--cache", default=d, metavar="DIR",
                   help="search-result cache directory (default: "
                        "HADALAB_CACHE environment variable)")
    p.add_argument("--no-cache", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="disable the search-result cache")
    p.add_argument("--workers", type=int, default=d, metavar="N",
                   help="worker processes for searches and audits")
    p.add_argument("--bound", action="append", metavar="NAME=VALUE", default=d,
                   help="override a search bound (repeatable)")
    p.add_argument("--config", default=d, metavar="FILE",
                   help="key=value file merged under command-line flags")
    p.add_argument("-o", "--output", default=d, metavar="FILE",
                   help="also write the rendered output to FILE")


def build_parser():
    p = argparse.ArgumentParser(
        prog="hadalab",
        description="Binary-sequence algebra: autocorrelation, invariant "
                    "families, Hadamard/Barker searches, and claim audits.",
    )
    _add_common_flags(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common, suppress=True)

    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=(
        lambda **kw: argparse.ArgumentParser(parents=[common], **kw)))

    q = sub.add_parser("autocorr", help="periodic autocorrelation vector")
    q.add_argument("seq")
    q.add_argument("--aperiodic", action="store_true")

    q = sub.add_parser("cosets", help="cyclotomic cosets of a multiplier")
    q.add_argument("n", type=int)
    q.add_argument("a", type=int)

    q = sub.add_parser("lattice", help="cyclic-subgroup lattice of the unit group")
    q.add_argument("n", type=int)

    q = sub.add_parser("code", help="generating codewords of an invariant family")
    q.add_argument("n", type=int)
    q.add_argument("a", type=int)

    q = sub.add_parser("enumerate", help="list the members of an invariant family")
    q.add_argument("n", type=int)
    q.add_argument("a", type=int)
    q.add_argument("--limit", type=int, default=None)

    q = sub.add_parser("member", help="test membership in an invariant family")
    q.add_argument("seq")
    q.add_argument("a", type=int)

    q = sub.add_parser("classify", help="bucket the support cosets of a member "
                                        "by the half-period translate")
    q.add_argument("seq")
    q.add_argument("x", type=int)

    q = sub.add_parser("search-hadamard", help="circulant Hadamard search")
    q.add_argument("n", type=int)
    q.add_argument("--invariant", type=int, default=None, metavar="A",
                   help="restrict to the invariant family of multiplier A")
    q.add_argument("--collapse-negation", action="store_true")

    q = sub.add_parser("search-barker", help="Barker sequence search")
    q.add_argument("n", type=int)
    q.add_argument("--expand-symmetries", action="store_true")

    q = sub.add_parser("orbit", help="decimation orbit of a cyclic class")
    q.add_argument("seq")

    q = sub.add_parser("audit", help="run the claim audits against golden")
    q.add_argument("--suite", choices=("algebra", "sring", "hadamard", "all"),
                   default="all")
    q.add_argument("--golden", default=None, metavar="FILE")

    q = sub.add_parser("families", help="standard two-level sequences")
    q.add_argument("kind", choices=("legendre", "mseq"))
    q.add_argument("arg", type=int)

    return p


def resolve_config(args):
    cfg = {"bound": []}
    if args.config:
        cfg = _parse_config_file(args.config)
    fmt = args.format or cfg.get("format") or "text"
    if fmt not in ("text", "json", "graph"):
        raise ValueError("bad format %r in config" % fmt)
    if args.no_cache:
        cache_dir = None
    else:
        cache_dir = args.cache or cfg.get("cache") or os.environ.get("HADALAB_CACHE")
    workers = args.workers if args.workers is not None else int(cfg.get("workers", 1))
    output = args.output or cfg.get("output")
    golden = getattr(args, "golden", None) or cfg.get("golden")
    bounds = _parse_bounds(cfg["bound"])
    bounds.update(_parse_bounds(args.bound))
    return RunConfig(
        subcommand=args.subcommand, args=args, fmt=fmt, cache_dir=cache_dir,
        workers=workers, output=output, golden=golden, bounds=bounds,
    )


def _jdump(obj):
    return json.dumps(obj, sort_keys=True, indent=1)


# ------------------------------------------------------------- subcommands

def cmd_autocorr(cfg):
    y = BinarySeq.from_text(cfg.args.seq)
    if cfg.args.aperiodic:
        values = [y.n] + [seqcore.aperiodic_autocorr(y, k) for k in range(1, y.n)]
        kind = "aperiodic"
    else:
        values = list(seqcore.autocorr_vector(y).values)
        kind = "periodic"
    if cfg.fmt == "json":
        return _jdump({"n": y.n, "kind": kind, "values": values,
                       "hadamard": seqcore.is_circulant_hadamard(y)})
    return " ".join(str(v) for v in values)


def cmd_cosets(cfg):
    part = numth.cyclotomic_cosets(cfg.args.a, cfg.args.n)
    if cfg.fmt == "json":
        return _jdump({"n": part.n, "a": part.a, "rank": part.rank,
                       "cosets": [list(cs) for cs in part.cosets]})
    return "\n".join(
        "%d: %s" % (cs[0], " ".join(str(e) for e in cs)) for cs in part.cosets
    )


def cmd_lattice(cfg):
    g = sring.lattice(cfg.args.n)
    if cfg.fmt == "graph":
        return g.to_dot()
    if cfg.fmt == "json":
        return _jdump({
            "n": g.n,
            "nodes": [[lab, order, list(els)] for lab, order, els in g.nodes],
            "edges": [list(e) for e in g.edges],
        })
    lines = [
        "node <%d> order %d: %s" % (lab, order, " ".join(str(e) for e in els))
        for lab, order, els in g.nodes
    ]
    lines += ["edge <%d> -> <%d>" % (u, v) for u, v in g.edges]
    return "\n".join(lines)


def cmd_code(cfg):
    fam = sring.invariant_family(cfg.args.n, cfg.args.a)
    words = sring.code(fam)
    if cfg.fmt == "json":
        return _jdump({"n": fam.n, "a": fam.a, "rank": fam.rank,
                       "words": {str(s): w.text() for s, w in words.items()}})
    return "\n".join("%d: %s" % (s, words[s].text()) for s in sorted(words))


def cmd_enumerate(cfg):
    fam = sring.invariant_family(cfg.args.n, cfg.args.a)
    limit = cfg.args.limit
    texts = []
    for i, m in enumerate(sring.enumerate_family(fam)):
        if limit is not None and i >= limit:
            break
        texts.append(m.text())
    if cfg.fmt == "json":
        return _jdump({"n": fam.n, "a": fam.a, "rank": fam.rank,
                       "members": texts})
    return "\n".join(texts)


def cmd_member(cfg):
    y = BinarySeq.from_text(cfg.args.seq)
    fam = sring.invariant_family(y.n, cfg.args.a)
    ok = sring.member(y, fam)
    if cfg.fmt == "json":
        return _jdump({"n": y.n, "a": cfg.args.a, "member": ok})
    return "yes" if ok else "no"


def cmd_classify(cfg):
    y = BinarySeq.from_text(cfg.args.seq)
    c = sring.classify_subwords(y, cfg.args.x)
    if cfg.fmt == "json":
        return _jdump({
            "n": c.n4, "x": c.x, "order": c.p,
            "counts": dict(c.counts),
            "tags": {str(s): t for s, t in c.tags.items()},
        })
    head = "order %d counts A=%d B=%d D=%d E=%d F=%d" % (
        c.p, c.r, c.s, c.t, c.u, c.v)
    body = ["%d: %s" % (s, c.tags[s]) for s in sorted(c.tags)]
    return "\n".join([head] + body)


def _render_search(res, cfg):
    if cfg.fmt == "json":
        return _jdump(res.cache_record())
    lines = list(res.hit_texts())
    extra = "".join(
        " %s=%s" % (k, res.derived[k]) for k in sorted(res.derived)
    )
    lines.append("hits=%d nodes=%d%s" % (len(res.hits), res.nodes_explored, extra))
    return "\n".join(lines)


def _cached_search(cfg, kind, n, input_params, compute):
    cache = search.ResultCache(cfg.cache_dir) if cfg.cache_dir else None
    if cache is not None:
        hit = cache.lookup(kind, n, input_params)
        if hit is not None:
            return hit
    res = compute()
    if cache is not None:
        cache.store(res)
    return res


def cmd_search_hadamard(cfg):
    n = cfg.args.n
    if cfg.args.invariant is not None:
        a = cfg.args.invariant
        res = _cached_search(
            cfg, "hadamard_invariant", n, {"a": a},
            lambda: search.hadamard_in_invariant(
                n, a, workers=cfg.workers,
                rank_bound=cfg.bounds.get("invariant_rank")),
        )
    else:
        coll = bool(cfg.args.collapse_negation)
        res = _cached_search(
            cfg, "hadamard_full", n, {"collapse_negation": coll},
            lambda: search.hadamard_full(
                n, workers=cfg.workers, collapse_negation=coll,
                bound=cfg.bounds.get("hadamard_full")),
        )
    return _render_search(res, cfg)


def cmd_search_barker(cfg):
    n = cfg.args.n
    exp = bool(cfg.args.expand_symmetries)
    res = _cached_search(
        cfg, "barker", n, {"expand_symmetries": exp},
        lambda: search.barker(
            n, workers=cfg.workers, expand_symmetries=exp,
            bound=cfg.bounds.get("barker")),
    )
    return _render_search(res, cfg)


def cmd_orbit(cfg):
    y = BinarySeq.from_text(cfg.args.seq)
    rep = search.orbit_under_decimation(y)
    if cfg.fmt == "json":
        return _jdump({
            "n": rep.n,
            "seed": rep.seed.rep.text(),
            "orbit": [c.rep.text() for c in rep.orbit],
            "stabilizer": list(rep.stabilizer),
            "reversal_hit": rep.reversal_hit,
        })
    lines = ["seed %s" % rep.seed.rep.text()]
    lines += ["orbit %s" % c.rep.text() for c in rep.orbit]
    lines.append("stabilizer %s" % " ".join(str(a) for a in rep.stabilizer))
    lines.append("reversal_hit %s" % ("yes" if rep.reversal_hit else "no"))
    return "\n".join(lines)


def _default_golden():
    with resources.files("hadalab").joinpath("data/audit_golden.json").open() as fh:
        return json.load(fh)


def cmd_audit(cfg):
    suites = ("algebra", "sring", "hadamard") if cfg.args.suite == "all" \
        else (cfg.args.suite,)
    reports = auditor.run_all(workers=cfg.workers, suites=suites)
    golden = auditor.load_golden(cfg.golden) if cfg.golden else _default_golden()
    deviations, _ = auditor.compare_golden(reports, golden)
    gap = auditor.completeness_gap(reports) if cfg.args.suite == "all" else ()
    required_bad = [d for d in deviations if d[3]] or list(gap)

    if cfg.fmt == "json":
        body = _jdump({
            "reports": [r.to_record() for r in reports],
            "deviations": [list(d) for d in deviations],
            "missing_claims": list(gap),
            "ok": not required_bad,
        })
        return body, (1 if required_bad else 0)

    lines = [
        "%-28s %-8s %s" % (r.claim_id, r.status, r.params_key())
        for r in reports
    ]
    for key, got, want, req in deviations:
        lines.append("DEVIATION%s %s: got %s, golden %s"
                     % (" (required)" if req else "", key, got, want))
    for c in gap:
        lines.append("MISSING %s" % c)
    lines.append("claims=%d deviations=%d required_deviations=%d"
                 % (len(reports), len(deviations),
                    len([d for d in deviations if d[3]]) + len(gap)))
    return "\n".join(lines), (1 if required_bad else 0)


def cmd_families(cfg):
    if cfg.args.kind == "legendre":
        tl = families.legendre(cfg.args.arg)
    else:
        tl = families.mseq(cfg.args.arg)
    if cfg.fmt == "json":
        return _jdump({"kind": cfg.args.kind, "arg": cfg.args.arg,
                       "n": tl.n, "seq": tl.seq.text(), "offpeak": tl.offpeak})
    return "%s\noffpeak=%d" % (tl.seq.text(), tl.offpeak)


_COMMANDS = {
    "autocorr": cmd_autocorr,
    "cosets": cmd_cosets,
    "lattice": cmd_lattice,
    "code": cmd_code,
    "enumerate": cmd_enumerate,
    "member": cmd_member,
    "classify": cmd_classify,
    "search-hadamard": cmd_search_hadamard,
    "search-barker": cmd_search_barker,
    "orbit": cmd_orbit,
    "audit": cmd_audit,
    "families": cmd_families,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        if cfg.fmt == "graph" and cfg.subcommand != "lattice":
            parser.error("--format graph is only available for 'lattice'")
        out = _COMMANDS[cfg.subcommand](cfg)
    except HadalabError as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 1
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(out + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
