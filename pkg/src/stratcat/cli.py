"""Command-line front end.

Exit status: 0 when every verdict passes, 1 when any fails, 2 on parse or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .fincat.spe import verify_spe
from .formula import PairingConvention, ParseError, parse
from .hfset import HFSyntaxError, from_text, to_text
from .internal import (
    ConfigError,
    diagrams_over,
    generic_family,
    load_category,
    load_diagram,
    standard_categories,
    validate_diagram,
    validate_internal_category,
    yoneda_check,
)
from .smallness import SmallnessPredicate, audit_small_maps
from .stratifier import FailureWitness, cycle_json, explain, stratify

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    conv: str = "quine"
    rank: int = 2
    seed: int = 0
    fmt: str = "text"
    corpus: str | None = None
    formula: str | None = None
    cat: str | None = None
    object: str | None = None
    diagram: str | None = None
    max_fibre: int = 2
    pred: str = "fibre:2"
    cap: int | None = None


@dataclass
class Report:
    command: str
    config: dict
    results: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    exit_code: int = EXIT_PASS
    elapsed: float = 0.0
    text: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        # elapsed time is left out so that reports are reproducible byte for byte
        body = {"command": self.command, "config": self.config, "results": self.results, "summary": self.summary}
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# stratify and corpus


def _conv(name: str) -> PairingConvention:
    try:
        return PairingConvention.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _verdict_entry(text: str, conv: PairingConvention) -> dict:
    result = stratify(parse(text), conv)
    if isinstance(result, FailureWitness):
        return {"formula": text, "conv": conv.name, "verdict": "UNSTRAT", "weight": result.weight, "cycle": cycle_json(result)}
    levels = dict(sorted(result.var_levels.items()))
    return {"formula": text, "conv": conv.name, "verdict": "STRAT", "levels": levels}


def _run_stratify(cfg: RunConfig, rep: Report) -> None:
    if cfg.corpus is not None:
        _run_corpus(Path(cfg.corpus), _conv(cfg.conv), rep)
        return
    if cfg.formula is None:
        raise UsageError("stratify needs a formula or --corpus")
    conv = _conv(cfg.conv)
    try:
        entry = _verdict_entry(cfg.formula, conv)
    except ParseError as exc:
        rep.results.append({"formula": cfg.formula, "error": str(exc)})
        rep.text.append(f"parse error: {exc}")
        rep.exit_code = EXIT_ERROR
        return
    rep.results.append(entry)
    rep.summary = {"verdict": entry["verdict"]}
    rep.text.append(entry["verdict"])
    if entry["verdict"] == "STRAT":
        rep.text.append("  " + ", ".join(f"{k}: {v}" for k, v in entry["levels"].items()))
    else:
        rep.text.append(explain(stratify(parse(cfg.formula), conv)))
        rep.exit_code = EXIT_FAIL


def bundled_corpus() -> Path:
    return Path(str(resources.files("stratcat") / "data" / "corpus.txt"))


def _run_corpus(path: Path, default_conv: PairingConvention, rep: Report) -> None:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read corpus {path}: {exc}") from None
    matched = mismatched = errors = 0
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cols = raw.split("\t")
        item = {"line": lineno}
        try:
            if len(cols) not in (2, 3):
                raise ValueError("expected <formula> TAB <STRAT|UNSTRAT> [TAB <QUINE|WK>]")
            text, expected = cols[0].strip(), cols[1].strip().upper()
            if expected not in ("STRAT", "UNSTRAT"):
                raise ValueError(f"unknown expectation {cols[1]!r}")
            conv = PairingConvention.parse(cols[2].strip()) if len(cols) == 3 else default_conv
            entry = _verdict_entry(text, conv)
        except (ParseError, ValueError) as exc:
            errors += 1
            item["error"] = str(exc)
            rep.results.append(item)
            rep.text.append(f"line {lineno}: ERROR {exc}")
            continue
        ok = entry["verdict"] == expected
        matched += ok
        mismatched += not ok
        item.update(formula=text, conv=conv.name, expected=expected, verdict=entry["verdict"], match=ok)
        rep.results.append(item)
        rep.text.append(f"line {lineno}: {'ok' if ok else 'MISMATCH'} {entry['verdict']:<7} [{conv.name}] {text}")
    rep.summary = {"matched": matched, "mismatched": mismatched, "errors": errors}
    rep.text.append(f"{matched} matched, {mismatched} mismatched, {errors} malformed")
    if errors:
        rep.exit_code = EXIT_ERROR
    elif mismatched:
        rep.exit_code = EXIT_FAIL


def run_corpus(path: str | Path | None = None, conv: str = "quine") -> Report:
    """Check every line of a corpus file against its recorded expectation."""
    target = Path(path) if path is not None else bundled_corpus()
    cfg = RunConfig("corpus", conv=conv, corpus=str(target))
    return run(cfg)


# ---------------------------------------------------------------------------
# finite-model commands


def _run_spe(cfg: RunConfig, rep: Report) -> None:
    kwargs = {"instance_cap": cfg.cap} if cfg.cap is not None else {}
    report = verify_spe(cfg.rank, cfg.seed, **kwargs)
    data = report.to_json()
    rep.results = data["entries"]
    counts = {}
    for e in data["entries"]:
        counts[e["status"]] = counts.get(e["status"], 0) + 1
        rep.text.append(f"axiom {e['axiom']:<3} {e['status']:<9} {e['name']} ({e['checks']} checks)")
    rep.summary = {"objects": data["objects"], "statuses": dict(sorted(counts.items()))}
    if not report.all_pass:
        rep.exit_code = EXIT_FAIL


def _hf_arg(text: str, what: str):
    try:
        return from_text(text)
    except HFSyntaxError as exc:
        raise UsageError(f"bad {what}: {exc}") from None


def _run_yoneda(cfg: RunConfig, rep: Report) -> None:
    zoo = standard_categories()
    if cfg.cat is None:
        cats = zoo
    elif cfg.cat in zoo:
        cats = {cfg.cat: zoo[cfg.cat]}
    else:
        cats = {cfg.cat: load_category(cfg.cat)}
    total = failed = 0
    for name, c in sorted(cats.items()):
        vr = validate_internal_category(c)
        if not vr.ok:
            raise UsageError(f"{name} is not an internal category: {vr.failures[0].law}")
        objs = [_hf_arg(cfg.object, "object")] if cfg.object else list(c.C0)
        for u in objs:
            if u not in c.C0:
                raise UsageError(f"{to_text(u)} is not an object of {name}")
        if cfg.diagram:
            F = load_diagram(cfg.diagram, c)
            dr = validate_diagram(F, c)
            if not dr.ok:
                raise UsageError(f"diagram is invalid: {dr.failures[0].law}")
            diagrams = [F]
        else:
            diagrams = list(diagrams_over(c, cfg.max_fibre))
        for k, F in enumerate(diagrams):
            for u in objs:
                r = yoneda_check(c, u, F)
                total += 1
                failed += not r.ok
                rep.results.append({"category": name, "diagram": k, **r.to_json()})
        rep.text.append(f"{name}: {len(diagrams)} diagram(s), {len(objs)} object(s)")
    rep.summary = {"checks": total, "failures": failed}
    rep.text.append(f"{total} Yoneda checks, {failed} failure(s)")
    if failed:
        rep.exit_code = EXIT_FAIL


def _run_internal_full(cfg: RunConfig, rep: Report) -> None:
    try:
        g = generic_family(cfg.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep.results.append(g.to_json())
    rep.summary = {"verdict": "PASS" if g.ok else "FAIL"}
    rep.text.append(
        f"rank {cfg.rank}: |V| = {len(g.V)}, |Funct| = {len(g.funct)}, "
        f"fullness {g.to_json()['fullness']}, ev_gen {g.to_json()['ev_gen']}"
    )
    if not g.ok:
        rep.exit_code = EXIT_FAIL


def _run_smallmaps(cfg: RunConfig, rep: Report) -> None:
    try:
        pred = SmallnessPredicate.parse(cfg.pred)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kwargs = {"cap": cfg.cap} if cfg.cap is not None else {}
    try:
        report = audit_small_maps(pred, cfg.rank, cfg.seed, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = report.to_json()
    rep.results = data["axioms"]
    for a in data["axioms"]:
        rep.text.append(f"({a['axiom']}) {a['status']:<4} {a['statement']} ({a['checks']} instances)")
        w = a["witness"]
        if w:
            for name, m in w["maps"].items():
                rep.text.append(f"      {name}: {m['domain']} -> {m['codomain']}  graph {m['graph']}")
            rep.text.append(f"      {w['offending']} has fibre {w['fibre']} of size {w['fibre_size']} over {w['fibre_over']}")
    rep.summary = {a["axiom"]: a["status"] for a in data["axioms"]}
    if not report.all_pass:
        rep.exit_code = EXIT_FAIL


_DISPATCH = {
    "stratify": _run_stratify,
    "spe-verify": _run_spe,
    "yoneda": _run_yoneda,
    "internal-full": _run_internal_full,
    "smallmaps-audit": _run_smallmaps,
}


def run(config: RunConfig) -> Report:
    """Execute one command; the exit code is stored on the report."""
    rep = Report(config.command, {k: v for k, v in asdict(config).items() if k not in ("command", "fmt")})
    start = time.perf_counter()
    try:
        if config.command == "corpus":
            _run_corpus(Path(config.corpus) if config.corpus else bundled_corpus(), _conv(config.conv), rep)
        else:
            _DISPATCH[config.command](config, rep)
    except (UsageError, ConfigError) as exc:
        rep.results.append({"error": str(exc)})
        rep.summary = {"error": str(exc)}
        rep.text.append(f"error: {exc}")
        rep.exit_code = EXIT_ERROR
    rep.elapsed = time.perf_counter() - start
    return rep


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratcat", description="Stratification checker and finite-model verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.add_argument("--seed", type=int, default=0, help="sampling seed")

    p = sub.add_parser("stratify", help="decide stratifiability of a formula")
    p.add_argument("formula", nargs="?")
    p.add_argument("--conv", default="quine", help="pairing convention: quine or wk")
    p.add_argument("--corpus", help="check a corpus file instead of a single formula")
    common(p)

    p = sub.add_parser("corpus", help="run a corpus file (the bundled one by default)")
    p.add_argument("path", nargs="?")
    p.add_argument("--conv", default="quine", help="convention for lines without a third column")
    common(p)

    p = sub.add_parser("spe-verify", help="check the stratified topos axioms on small objects")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--cap", type=int, help="instance cap per axiom")
    common(p)

    p = sub.add_parser("yoneda", help="check the internal Yoneda bijection")
    p.add_argument("--cat", help="category JSON file or a built-in name; all built-ins by default")
    p.add_argument("--object", help="object in hf notation; every object by default")
    p.add_argument("--diagram", help="diagram JSON file; all small diagrams by default")
    p.add_argument("--max-fibre", type=int, default=2)
    common(p)

    p = sub.add_parser("internal-full", help="check fullness of the internal category of sets")
    p.add_argument("--rank", type=int, default=1)
    common(p)

    p = sub.add_parser("smallmaps-audit", help="audit the small-map axioms for a predicate")
    p.add_argument("--pred", default="fibre:2", help="all, fibre:N, stcan:K or stcan:K:element")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--cap", type=int, help="instances per axiom")
    common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(ns.command, seed=ns.seed, fmt="json" if ns.json else "text")
    for name in ("conv", "rank", "corpus", "formula", "cat", "object", "diagram", "max_fibre", "pred", "cap"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    if ns.command == "corpus":
        cfg.corpus = ns.path
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_PASS
    cfg = config_from_args(ns)
    rep = run(cfg)
    if cfg.fmt == "json":
        print(rep.to_json())
    else:
        print("\n".join(rep.text))
        print(f"[{rep.elapsed:.2f}s]")
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
