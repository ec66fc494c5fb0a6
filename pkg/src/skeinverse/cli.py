#!/usr/bin/env python3
'''
skeinverse • command line
=========================

Purpose
-------
* `compute` – one invariant of one diagram, as a normal form or polynomial.
* `verify`  – the self-check suite: resolution order, Reidemeister moves,
  oracle agreement, homomorphism relations and rewriting confluence.
* `table`   – one row per census diagram per selected invariant.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
3 crossing cap exceeded.

Quick examples
--------------
  $ sv compute --invariant b2 --code "C(1,2,2,1)"
  $ sv compute --invariant jones --code "B(1,1,1)" --format json
  $ sv verify --trials 20 --seed 7
  $ sv table --invariant jones --invariant q
'''
from __future__ import annotations

# ── std-lib ────────────────────────────────────────────────────────────
import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

# ── engine imports ─────────────────────────────────────────────────────
from .core.diagram import (
    CensusEntry,
    LinkDiagram,
    disjoint_union,
    load_census,
    parse_diagram,
)
from .core.errors import CapExceededError, SkeinverseError
from .core.oracle import BRACKET_CAP, Q_CAP, jones_from_bracket, q_oracle
from .core.ring import PRESENTATIONS, LaurentPoly, check_hom, get_hom, load_hom, sample_confluence
from .core.ring.homomorphism import Homomorphism
from .core.skein import INVARIANTS, check_order_independence, check_reidemeister, compute_invariant, jones
from .core.util.random import make_rng

logger = logging.getLogger("skeinverse")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

ORDER_CHECK_MAX = 6            # census diagrams above this skip the order check
REWRITE_SAMPLES = 1000           # random elements per presentation
REWRITE_ORDERS = 10


# ───────────────────────────────────────────────────────────────────────
# Configuration
# ───────────────────────────────────────────────────────────────────────
@dataclass(slots=True)
class RunConfig:
    command: str
    code: str | None = None
    file: str | None = None
    census: str | None = None
    invariants: list[str] = field(default_factory=list)
    spec: str | None = None
    fmt: str = "text"
    seed: int = 0
    trials: int = 10
    max_crossings: int = 8
    n_max: int = 10
    rewrite_samples: int = REWRITE_SAMPLES
    verbose: bool = False

    def validate(self) -> None:
        for name in ("trials", "max_crossings", "n_max", "rewrite_samples"):
            if getattr(self, name) < 1:
                raise SkeinverseError(f"--{name.replace('_', '-')} must be positive")
        if self.n_max < 2:
            raise SkeinverseError("--n-max must be at least 2")
        if self.command == "compute" and not (self.code or self.file):
            raise SkeinverseError("compute needs --code or --file")
        if "b2w" in self.invariants and self.spec is None:
            raise SkeinverseError("--invariant b2w needs --spec (a built-in name or a JSON file)")


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    ap = argparse.ArgumentParser(
        prog="sv",
        description="Skein-relation link invariants in presented rings.",
    )
    ap.add_argument("command", choices=("compute", "verify", "table"))
    ap.add_argument("--invariant", action="append", choices=INVARIANTS,
                    help="Invariant to compute (repeatable for 'table').")
    ap.add_argument("--code", help="Diagram in C(..)/X(..)/B(..)/O n notation.")
    ap.add_argument("--file", help="Text file holding one diagram code.")
    ap.add_argument("--census", help="Census CSV with header name,code (default: bundled census).")
    ap.add_argument("--spec", help="Homomorphism: built-in name or JSON definition file.")
    ap.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=10,
                    help="Random Reidemeister moves per diagram in 'verify'.")
    ap.add_argument("--max-crossings", type=int, default=8,
                    help="Crossing cap for inputs of 'compute' and for move growth in 'verify'.")
    ap.add_argument("--n-max", type=int, default=10, help="Unlink bound for homomorphism checks.")
    ap.add_argument("--rewrite-samples", type=int, default=REWRITE_SAMPLES,
                    help="Random ring elements per presentation in the confluence check of 'verify'.")
    ap.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging on stderr.")
    ns = ap.parse_args(argv)
    default = ["b1"] if ns.command == "compute" else ["jones"]
    return RunConfig(
        command=ns.command,
        code=ns.code,
        file=ns.file,
        census=ns.census,
        invariants=ns.invariant or default,
        spec=ns.spec,
        fmt=ns.fmt,
        seed=ns.seed,
        trials=ns.trials,
        max_crossings=ns.max_crossings,
        n_max=ns.n_max,
        rewrite_samples=ns.rewrite_samples,
        verbose=ns.verbose,
    )


# ───────────────────────────────────────────────────────────────────────
# Input helpers
# ───────────────────────────────────────────────────────────────────────
def _diagrams(cfg: RunConfig) -> list[CensusEntry]:
    if cfg.code is not None:
        return [CensusEntry("input", cfg.code, parse_diagram(cfg.code))]
    if cfg.file is not None:
        text = Path(cfg.file).read_text(encoding="utf-8").strip()
        return [CensusEntry(Path(cfg.file).stem, text, parse_diagram(text))]
    return load_census(cfg.census)


def _hom(cfg: RunConfig) -> Homomorphism | None:
    return load_hom(cfg.spec) if cfg.spec is not None else None


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# ───────────────────────────────────────────────────────────────────────
# compute
# ───────────────────────────────────────────────────────────────────────
def run_compute(cfg: RunConfig) -> int:
    entry = _diagrams(cfg)[0]
    D = entry.diagram
    if D.crossing_count > cfg.max_crossings:
        raise CapExceededError(D.crossing_count, cfg.max_crossings, "compute")
    name = cfg.invariants[0]
    value = compute_invariant(name, D, hom=_hom(cfg))
    lines = [
        f"diagram   : {D.render()}",
        f"invariant : {name}",
        f"c={value.crossings} d={value.bad} mu={value.components} w={value.writhe}",
        value.render(),
    ]
    _emit(cfg, {"diagram": D.as_dict(), "result": value.as_dict()}, lines)
    return EXIT_OK


# ───────────────────────────────────────────────────────────────────────
# table
# ───────────────────────────────────────────────────────────────────────
def run_table(cfg: RunConfig) -> int:
    hom = _hom(cfg)
    rows = []
    for entry in _diagrams(cfg):
        for name in cfg.invariants:
            value = compute_invariant(name, entry.diagram, hom=hom)
            rows.append({"name": entry.name, "invariant": name, "crossings": value.crossings, "value": value.render()})
    lines = [f"{r['name']}\t{r['invariant']}\t{r['crossings']}\t{r['value']}" for r in rows]
    _emit(cfg, {"rows": rows}, ["name\tinvariant\tc\tvalue"] + lines)
    return EXIT_OK


# ───────────────────────────────────────────────────────────────────────
# verify
# ───────────────────────────────────────────────────────────────────────
@dataclass(slots=True)
class Tally:
    run: int = 0
    failed: int = 0
    notes: list[str] = field(default_factory=list)

    def record(self, ok: bool, note: str) -> None:
        self.run += 1
        if not ok:
            self.failed += 1
            self.notes.append(note)

    def as_dict(self) -> dict:
        return {"run": self.run, "failed": self.failed, "failures": list(self.notes)}


def _log_split_unions(entries: list[CensusEntry]) -> None:
    """DEBUG only: Jones of a split union vs the product rule."""
    small = [e for e in entries if 0 < e.diagram.crossing_count <= 3][:3]
    q = LaurentPoly.variable("q")
    delta = -(q ** 2) - q ** -2
    for i, e1 in enumerate(small):
        for e2 in small[i:]:
            union = disjoint_union(e1.diagram, e2.diagram)
            lhs = jones(union).value
            rhs = delta * jones(e1.diagram).value * jones(e2.diagram).value
            logger.debug("split union %s + %s: product rule %s", e1.name, e2.name, "holds" if lhs == rhs else "fails")


def run_verify(cfg: RunConfig) -> int:
    logger.info("Seed for this run: %d", cfg.seed)
    entries = _diagrams(cfg)
    order, moves, oracle, homs, rewriting = Tally(), Tally(), Tally(), Tally(), Tally()

    for idx, entry in enumerate(entries):
        D = entry.diagram
        if D.crossing_count <= ORDER_CHECK_MAX:
            for rep in check_order_independence(D, samples=20, seed=cfg.seed + idx):
                order.record(rep.passed, f"{entry.name}/{rep.invariant}")
        rep = check_reidemeister(D, trials=cfg.trials, seed=cfg.seed + idx, max_crossings=max(cfg.max_crossings, D.crossing_count))
        for mc in rep.checks:
            moves.record(not mc.failed, f"{entry.name}: {mc.move} broke {','.join(mc.failed)}")
        if D.crossing_count <= BRACKET_CAP:
            oracle.record(jones(D).value == jones_from_bracket(D), f"{entry.name}/jones")
        if D.crossing_count <= Q_CAP:
            oracle.record(compute_invariant("q", D).value == q_oracle(D), f"{entry.name}/q")

    checked = [get_hom("jones"), get_hom("q")]
    custom = _hom(cfg)
    if custom is not None:
        checked.append(custom)
    for h in checked:
        report = check_hom(h, n_max=cfg.n_max)
        homs.record(report.passed, f"{h.name} on {report.presentation}")

    rnd = make_rng(cfg.seed)
    for name in PRESENTATIONS:
        report = sample_confluence(name, cfg.rewrite_samples, REWRITE_ORDERS, rnd)
        rewriting.record(report.passed, f"{name}: {len(report.divergent)} divergent")

    if logger.isEnabledFor(logging.DEBUG):
        _log_split_unions(entries)

    sections = {"order": order, "reidemeister": moves, "oracle": oracle, "homomorphisms": homs, "rewriting": rewriting}
    failed = sum(t.failed for t in sections.values())
    lines = ["=== Verification Summary ===", f"Diagrams            : {len(entries)}"]
    for label, t in sections.items():
        lines.append(f"{label:<20}: {t.run} run, {t.failed} failed")
    for t in sections.values():
        lines.extend(f"  FAIL {note}" for note in t.notes)
    lines.append(f"Result              : {'PASS' if failed == 0 else 'FAIL'}")
    payload = {
        "seed": cfg.seed,
        "diagrams": len(entries),
        "passed": failed == 0,
        **{label: t.as_dict() for label, t in sections.items()},
    }
    _emit(cfg, payload, lines)
    return EXIT_OK if failed == 0 else EXIT_FAILED


# ───────────────────────────────────────────────────────────────────────
# CLI glue
# ───────────────────────────────────────────────────────────────────────
def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:           # argparse: usage errors and --help
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if cfg.verbose else logging.INFO,
        format="[%(levelname)s] %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg.validate()
        if cfg.command == "compute":
            return run_compute(cfg)
        if cfg.command == "table":
            return run_table(cfg)
        return run_verify(cfg)
    except CapExceededError as exc:
        logger.error("%s", exc)
        return EXIT_CAP
    except (SkeinverseError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
