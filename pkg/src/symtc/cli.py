"""Command line entry point.

Exit codes: 0 success, 2 infeasible (the value is infinite), 3 budget
exceeded, 4 validation or parse failure.  The environment variable
SYMTC_BUDGET overrides the default caps.  All output is canonical JSON;
timing fields live under a separate key so reports are otherwise
byte-reproducible.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

from . import complexity
from .actions import orbit_partition, symmetric_group
from .complexes import base_of
from .constructions import (
    barycentric_subdivide,
    build_tower,
    ordered_power,
    poset_tower,
    projection_pi,
    projection_rho,
    totalize,
)
from .errors import BudgetExceeded, ParseError, SymtcError, ValidationError
from .io import (
    canonical_json,
    complex_to_doc,
    load_json,
    parse_complex,
    parse_poset,
    poset_to_doc,
    save_json,
)
from .posets import face_poset, order_complex
from .search import plain_contiguous, sym_comb_homotopic, sym_contiguous
from .search import plain_comb_homotopic
from .util import thaw
from .verify import validate
from .witnesses import certificate_from_doc

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3
EXIT_INVALID = 4


@dataclass
class RunConfig:
    command: str
    input: str = None
    output: str = None
    cert_dir: str = None
    n: int = 2
    r: int = 0
    max_r: int = 1
    mode: str = "exact"
    invariant: str = None
    plain: bool = False
    budget: int = None
    verbose: bool = False

    def effective_budget(self):
        """--budget wins; otherwise SYMTC_BUDGET; otherwise the defaults."""
        if self.budget is not None:
            return self.budget
        env = os.environ.get("SYMTC_BUDGET")
        return int(env) if env else None

    def budgets(self):
        return complexity.budgets_with(self.effective_budget())

    def echo(self):
        return {
            "command": self.command,
            "input": self.input,
            "n": self.n,
            "r": self.r,
            "max_r": self.max_r,
            "mode": self.mode,
            "invariant": self.invariant,
            "plain": self.plain,
            "budgets": self.budgets(),
        }


@dataclass
class RunReport:
    config: dict
    result: object = None
    certificates: list = field(default_factory=list)
    exhaustion: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_doc(self):
        return {
            "config": self.config,
            "result": self.result,
            "certificates": self.certificates,
            "exhaustion": self.exhaustion,
            "timings": self.timings,
        }


def _emit(cfg, report):
    text = canonical_json(report.to_doc())
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_cert(cfg, name, cert):
    directory = cfg.cert_dir or "."
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    save_json(path, cert.to_doc())
    return path


def _load_complex(cfg):
    return parse_complex(cfg.input)


def _load_poset(cfg):
    return parse_poset(cfg.input)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_sd(cfg):
    K = totalize(_load_complex(cfg))
    for _ in range(cfg.r):
        K = barycentric_subdivide(K)
    report = RunReport(cfg.echo(), result=complex_to_doc(K))
    _emit(cfg, report)
    return EXIT_OK


def cmd_power(cfg):
    K = totalize(_load_complex(cfg))
    power = ordered_power(K, cfg.n, budget=cfg.budgets()["simplices"])
    report = RunReport(cfg.echo(), result=complex_to_doc(power.result))
    _emit(cfg, report)
    return EXIT_OK


def cmd_order_complex(cfg):
    P = _load_poset(cfg)
    report = RunReport(cfg.echo(), result=complex_to_doc(order_complex(P)))
    _emit(cfg, report)
    return EXIT_OK


def cmd_face_poset(cfg):
    K = _load_complex(cfg)
    report = RunReport(cfg.echo(), result=poset_to_doc(face_poset(base_of(K))))
    _emit(cfg, report)
    return EXIT_OK


def cmd_orbits(cfg):
    doc = load_json(cfg.input)
    group = symmetric_group(cfg.n)
    if "elements" in doc:
        P = _load_poset(cfg)
        tower = poset_tower(P, cfg.n, cfg.r, budget=cfg.budgets()["simplices"])
        names = tower.top().elements
    else:
        K = _load_complex(cfg)
        tower = build_tower(K, cfg.n, cfg.r, budget=cfg.budgets()["simplices"])
        names = tower.top().vertices
    parts = orbit_partition(group, names, cfg.r)
    report = RunReport(
        cfg.echo(),
        result=[[thaw(x) for x in part] for part in parts],
    )
    _emit(cfg, report)
    return EXIT_OK


def cmd_sym_contiguous(cfg):
    K = _load_complex(cfg)
    budgets = cfg.budgets()
    tower = build_tower(K, cfg.n, cfg.r, budget=budgets["simplices"])
    maps = [projection_pi(tower, j) for j in range(1, cfg.n + 1)]
    if cfg.plain:
        res = plain_contiguous(
            maps, depth=cfg.r, mode=cfg.mode, budget=budgets["nodes"],
            target_ordered=tower.factor,
        )
    else:
        res = sym_contiguous(
            maps, cfg.n, cfg.r, mode=cfg.mode, budget=budgets["nodes"],
            target_ordered=tower.factor,
        )
    report = RunReport(cfg.echo(), result={"status": res.status},
                       exhaustion=res.record)
    if res.yes:
        res.witness.projection_endpoints = True
        path = _write_cert(cfg, "contiguity-chain.cert.json", res.witness)
        report.certificates.append(path)
    _emit(cfg, report)
    return EXIT_OK if res.status != "no" else EXIT_INFEASIBLE


def cmd_homotopic(cfg):
    P = _load_poset(cfg)
    budgets = cfg.budgets()
    tower = poset_tower(P, cfg.n, cfg.r, budget=budgets["simplices"])
    maps = [projection_rho(tower, j) for j in range(1, cfg.n + 1)]
    if cfg.plain:
        res = plain_comb_homotopic(
            maps, depth=cfg.r, mode=cfg.mode, budget=budgets["nodes"]
        )
    else:
        res = sym_comb_homotopic(
            maps, cfg.n, cfg.r, mode=cfg.mode, budget=budgets["nodes"]
        )
    report = RunReport(cfg.echo(), result={"status": res.status},
                       exhaustion=res.record)
    if res.yes:
        res.witness.projection_endpoints = True
        path = _write_cert(cfg, "homotopy.cert.json", res.witness)
        report.certificates.append(path)
    _emit(cfg, report)
    return EXIT_OK if res.status != "no" else EXIT_INFEASIBLE


def cmd_check_certificate(cfg):
    doc = load_json(cfg.input)
    cert = certificate_from_doc(doc)
    rep = validate(cert)
    report = RunReport(
        cfg.echo(),
        result={"valid": rep.ok, "failures": rep.failures},
    )
    _emit(cfg, report)
    return EXIT_OK if rep.ok else EXIT_INVALID


def replay(path):
    """Re-validate a stored certificate; returns the validation report."""
    return validate(certificate_from_doc(load_json(path)))


def _run_complexity(cfg, fn, instance, kwargs):
    t0 = time.monotonic()
    res = fn(instance, **kwargs)
    report = RunReport(cfg.echo(), result=res.to_doc())
    for i, piece in enumerate(res.cover):
        path = _write_cert(
            cfg, f"{res.invariant}-piece{i}.cert.json", piece.witness
        )
        report.certificates.append(path)
    report.exhaustion = {
        k: v for k, v in res.stats.items() if k != "pieces_tested"
    }
    report.timings = {"wall_seconds": round(time.monotonic() - t0, 6)}
    _emit(cfg, report)
    return EXIT_INFEASIBLE if res.kind == "infinite" else EXIT_OK


def cmd_sc(cfg):
    K = _load_complex(cfg)
    fn = complexity.sc_plain if cfg.plain else complexity.sc_sigma
    return _run_complexity(
        cfg, fn, K,
        {"n": cfg.n, "r": cfg.r, "mode": cfg.mode, "budget": cfg.effective_budget()},
    )


def cmd_cc(cfg):
    P = _load_poset(cfg)
    fn = complexity.cc_plain if cfg.plain else complexity.cc_sigma
    return _run_complexity(
        cfg, fn, P,
        {"n": cfg.n, "r": cfg.r, "mode": cfg.mode, "budget": cfg.effective_budget()},
    )


def cmd_tc_finite(cfg):
    P = _load_poset(cfg)
    t0 = time.monotonic()
    by_homotopy = complexity.tc_sigma_finite(P, n=cfg.n, budget=cfg.effective_budget())
    by_sections = complexity.tc_sigma_finite_sections(
        P, n=cfg.n, budget=cfg.effective_budget()
    )
    agree = by_homotopy.value == by_sections.value
    report = RunReport(
        cfg.echo(),
        result={
            "homotopy_route": by_homotopy.to_doc(),
            "section_route": by_sections.to_doc(),
            "routes_agree": agree,
        },
    )
    report.timings = {"wall_seconds": round(time.monotonic() - t0, 6)}
    _emit(cfg, report)
    if not agree:
        return EXIT_INVALID
    return EXIT_INFEASIBLE if by_homotopy.kind == "infinite" else EXIT_OK


def cmd_stabilize(cfg):
    if cfg.invariant in ("sc-sigma", "sc-plain"):
        instance = _load_complex(cfg)
    else:
        instance = _load_poset(cfg)
    out = complexity.stabilize_over_r(
        cfg.invariant, instance, n=cfg.n, max_r=cfg.max_r, mode=cfg.mode,
        budget=cfg.effective_budget(),
    )
    rows = [r.to_doc() for r in out["rows"]]
    running = out["min"]
    report = RunReport(
        cfg.echo(),
        result={
            "per_r": rows,
            "min": "infinity" if running == complexity.INFINITY else running,
        },
    )
    _emit(cfg, report)
    return EXIT_OK


COMMANDS = {
    "sd": cmd_sd,
    "power": cmd_power,
    "order-complex": cmd_order_complex,
    "face-poset": cmd_face_poset,
    "orbits": cmd_orbits,
    "sym-contiguous": cmd_sym_contiguous,
    "homotopic": cmd_homotopic,
    "check-certificate": cmd_check_certificate,
    "sc": cmd_sc,
    "cc": cmd_cc,
    "tc-finite": cmd_tc_finite,
    "stabilize": cmd_stabilize,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symtc",
        description=(
            "Symmetric simplicial and combinatorial complexity of finite "
            "complexes and posets, with machine-checkable certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **extra):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="input JSON document")
        p.add_argument("--output", help="write the report here (default stdout)")
        p.add_argument("--cert-dir", help="directory for certificate files")
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--r", "--iterations", dest="r", type=int, default=None)
        p.add_argument("--max-r", type=int, default=1)
        p.add_argument("--mode", choices=["exact", "upper", "auto", "bounded"],
                       default="exact")
        p.add_argument("--plain", action="store_true",
                       help="drop the symmetry constraints")
        p.add_argument("--budget", type=int)
        p.add_argument("--seedless", action="store_true",
                       help="accepted for compatibility; search order is "
                            "already deterministic")
        p.add_argument("--verbose", action="store_true")
        if name == "stabilize":
            p.add_argument(
                "--invariant", required=True,
                choices=sorted(complexity.STABILIZE_INVARIANTS),
            )
        return p

    for name in COMMANDS:
        add(name)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # `sd` subdivides once unless --iterations says otherwise
    r = args.r if args.r is not None else (1 if args.command == "sd" else 0)
    cfg = RunConfig(
        command=args.command,
        input=args.input,
        output=args.output,
        cert_dir=getattr(args, "cert_dir", None),
        n=args.n,
        r=r,
        max_r=args.max_r,
        mode=args.mode,
        invariant=getattr(args, "invariant", None),
        plain=args.plain,
        budget=args.budget,
        verbose=args.verbose,
    )
    try:
        return COMMANDS[args.command](cfg)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ValidationError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SymtcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
