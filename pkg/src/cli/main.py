"""Command-line entry point: ``qlw <command> ...`` or ``python -m src <command> ...``.

Every command prints JSON-lines reports on stdout; logs go to stderr and to
the rotating log file under the data directory.
"""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
import time
from collections.abc import Sequence
from logging.handlers import RotatingFileHandler
from pathlib import Path

from pydantic import ValidationError

from src.checker.matrix import check_matrix
from src.cli.error_messages import (
    EXIT_BAD_INPUT,
    EXIT_FAILED,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    exit_code_for,
    get_user_message,
)
from src.cli.manifest import check_files, load_manifest, parse_strategy
from src.cli.reports import ReportWriter, provenance, verdict_payload
from src.cli.sources import load_diagram, load_lattice, resolve_fixture_id
from src.config import get_settings
from src.errors import GreechieError, WorkbenchError
from src.families.fixtures import fixtures
from src.families.generators import generate
from src.families.wagon_wheel import wagon_diagram
from src.greechie import find_loops, serialize, validate
from src.lattice import Lattice, summarize, to_dot
from src.models.enums import SearchMode, VariableOrder, VerdictStatus
from src.models.family import FamilyId
from src.models.report import Report
from src.models.verdict import MatrixRow, Strategy
from src.states import (
    admits_state,
    mge_readoff,
    state_polytope,
    strong_classical,
    strong_quantum,
)
from src.storage.verdicts import VerdictCache
from src.terms.evaluate import expand, unfold
from src.terms.printer import format_inference

logger = logging.getLogger(__name__)

_VERDICT_EXIT = {
    VerdictStatus.HOLDS: EXIT_OK,
    VerdictStatus.FALSIFIED: EXIT_FAILED,
    VerdictStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

# generate --form; "derived" prints terms as built
_FORMS = {"arrows": unfold, "elementary": expand}


def setup_logging(log_level: str, log_path: Path) -> None:
    """Configure logging with file rotation and stderr output.

    Args:
        log_level: Logging level string (DEBUG, INFO, WARNING, ERROR).
        log_path: Rotating log file, normally ``Settings.log_path``.
    """
    level = getattr(logging, log_level.upper(), logging.INFO)
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    formatter = logging.Formatter(
        "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # Exact type check: FileHandler subclasses StreamHandler.
    if not any(type(h) is logging.StreamHandler for h in root_logger.handlers):
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(level)
        console.setFormatter(formatter)
        root_logger.addHandler(console)

    log_path.parent.mkdir(parents=True, exist_ok=True)
    if not any(isinstance(h, RotatingFileHandler) for h in root_logger.handlers):
        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=5 * 1024 * 1024,  # 5 MB
            backupCount=3,
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


# ── Shared helpers ───────────────────────────────────────────────────────────


def _lattice(args: argparse.Namespace) -> Lattice:
    return load_lattice(args.lattice, args.builtin, args.wagon_wheel)


def _strategy(args: argparse.Namespace) -> Strategy:
    settings = get_settings()
    return Strategy(
        mode=SearchMode.SEARCH if args.search else SearchMode.EXHAUSTIVE,
        budget=args.budget or settings.search_budget,
        seed=settings.search_seed if args.seed is None else args.seed,
        variable_order=VariableOrder(args.order),
        workers=args.workers or settings.workers,
    )


async def _matrix(
    lattices: list[Lattice], families: list[FamilyId], strategy: Strategy, use_cache: bool
) -> list[MatrixRow]:
    if not use_cache:
        return await check_matrix(lattices, families, strategy)
    async with VerdictCache(get_settings().cache_path) as cache:
        return await check_matrix(lattices, families, strategy, cache=cache)


def _verdict_report(
    job: str, lattice: Lattice, row: MatrixRow, elapsed: float | None
) -> Report:
    inference = generate(row.family)
    return Report(
        job=job,
        command="check",
        status=row.verdict.status.value,
        payload=verdict_payload(row.verdict, row.family, format_inference(inference)),
        provenance=provenance(lattice, row.strategy, elapsed),
    )


# ── Commands ─────────────────────────────────────────────────────────────────


def cmd_validate(args: argparse.Namespace, writer: ReportWriter) -> int:
    try:
        name, diagram = load_diagram(args.source)
    except GreechieError as exc:
        writer.write(
            Report(
                job=args.source,
                command="validate",
                status="invalid",
                payload={"error": str(exc)},
                provenance=provenance(),
            )
        )
        return EXIT_FAILED
    report = validate(diagram)
    loops = find_loops(diagram, 4)
    payload = {
        "atoms": len(diagram.atoms),
        "blocks": len(diagram.blocks),
        "valid": report.valid,
        "lattice_ok": report.lattice_ok,
        "failed_conditions": [
            c.model_dump(mode="json") for c in report.conditions if not c.passed
        ],
        "loops": [
            {"order": lp.order, "blocks": list(lp.blocks), "atoms": list(lp.junction_atoms)}
            for lp in loops
        ],
    }
    ok = report.lattice_ok
    writer.write(
        Report(
            job=name,
            command="validate",
            status="valid" if ok else "invalid",
            payload=payload,
            provenance=provenance(),
        )
    )
    return EXIT_OK if ok else EXIT_FAILED


def cmd_build(args: argparse.Namespace, writer: ReportWriter) -> int:
    lattice = _lattice(args)
    summary = summarize(lattice)
    writer.write(
        Report(
            job=lattice.name,
            command="build",
            status="built",
            payload=summary.model_dump(mode="json", exclude={"digest"}),
            provenance=provenance(lattice),
        )
    )
    return EXIT_OK


def cmd_check(args: argparse.Namespace, writer: ReportWriter) -> int:
    lattice = _lattice(args)
    family = FamilyId.parse(args.family)
    strategy = _strategy(args)
    started = time.perf_counter()
    rows = asyncio.run(_matrix([lattice], [family], strategy, use_cache=not args.no_cache))
    elapsed = time.perf_counter() - started if args.timing else None
    row = rows[0]
    writer.write(_verdict_report(f"{lattice.name}/{family.key}", lattice, row, elapsed))
    return _VERDICT_EXIT[row.verdict.status]


def cmd_states(args: argparse.Namespace, writer: ReportWriter) -> int:
    lattice = _lattice(args)
    if args.dump_lp:
        Path(args.dump_lp).write_text(state_polytope(lattice).problem.dump(), encoding="utf-8")
    if args.strong_quantum:
        report = strong_quantum(lattice)
        holds, kind, status = report.admits, "strong-quantum", "admits"
    elif args.strong_classical:
        report = strong_classical(lattice)
        holds, kind, status = report.exists, "strong-classical", "exists"
    else:
        report = admits_state(lattice)
        holds, kind, status = report.exists, "exists", "exists"
    writer.write(
        Report(
            job=f"{lattice.name}/{kind}",
            command="states",
            status=status if holds else "none",
            payload=report.model_dump(mode="json"),
            provenance=provenance(lattice),
        )
    )
    return EXIT_OK if holds else EXIT_FAILED


def cmd_derive(args: argparse.Namespace, writer: ReportWriter) -> int:
    lattice = _lattice(args)
    pair = None
    if args.pair:
        pair = (lattice.index(args.pair[0]), lattice.index(args.pair[1]))
    result = mge_readoff(lattice, pair, attempts=args.attempts)
    writer.write(
        Report(
            job=f"{lattice.name}/derive",
            command="derive",
            status="derived",
            payload=result.model_dump(mode="json"),
            provenance=provenance(lattice),
        )
    )
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, writer: ReportWriter) -> int:
    out = writer.stream
    if args.fixtures:
        for fixture in fixtures():
            claims = ", ".join(f"{c.subject}={c.outcome}" for c in fixture.claims)
            out.write(
                f"{fixture.id}\t{len(fixture.diagram.atoms)} atoms\t"
                f"{len(fixture.diagram.blocks)} blocks\t{claims}\n"
            )
    elif args.wagon_wheel is not None:
        out.write(serialize(wagon_diagram(args.wagon_wheel)) + "\n")
    else:
        inference = generate(FamilyId.parse(args.family))
        rewrite = _FORMS.get(args.form)
        if rewrite is not None:
            inference = inference.map_terms(rewrite)
        out.write(format_inference(inference) + "\n")
    out.flush()
    return EXIT_OK


def cmd_export(args: argparse.Namespace, writer: ReportWriter) -> int:
    lattice = _lattice(args)
    text = to_dot(lattice) if args.dot else lattice.dump_table()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        writer.stream.write(text)
        writer.stream.flush()
    return EXIT_OK


def cmd_run(args: argparse.Namespace, writer: ReportWriter) -> int:
    path = Path(args.manifest)
    manifest = load_manifest(path.read_text(encoding="utf-8"))
    base = path.parent
    check_files(manifest, base)
    workers = args.workers or manifest.workers
    settings = get_settings()
    cache_path = Path(manifest.cache) if manifest.cache else settings.cache_path

    async def run_jobs() -> list[tuple[Lattice, MatrixRow, Path | None]]:
        done = []
        cache = None if args.no_cache else VerdictCache(cache_path)
        if cache is not None:
            await cache.initialize()
        try:
            for job in manifest.jobs:
                source = job.lattice
                if source is not None and resolve_fixture_id(source, base) is None:
                    source = str(base / source)
                lattice = load_lattice(source, job.builtin)
                strategy = parse_strategy(job.strategy, workers)
                rows = await check_matrix([lattice], [job.family], strategy, cache=cache)
                output = base / job.output if job.output else None
                done.append((lattice, rows[0], output))
                logger.info("Job %s: %s", job.id, rows[0].verdict.status)
            if cache is not None:
                logger.info("Verdict cache %s holds %d records", cache_path, await cache.count())
        finally:
            if cache is not None:
                await cache.close()
        return done

    results = asyncio.run(run_jobs())
    for job, (lattice, row, output) in zip(manifest.jobs, results, strict=True):
        writer.write(_verdict_report(job.id, lattice, row, None), output)
    return EXIT_OK


# ── Parser ───────────────────────────────────────────────────────────────────


def _add_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--lattice", help="fixture id (short forms like 13-7 work) or diagram file")
    group.add_argument("--builtin", help="O6, MO2, Boolean:N or Chain2")
    group.add_argument("--wagon-wheel", type=int, metavar="N", help="wagon wheel G_N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlw", description=__doc__)
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    parser.add_argument(
        "--timing", action="store_true", help="include elapsed time in reports"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Greechie conditions and loops of a diagram")
    p.add_argument("source", help="diagram file or fixture id")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("build", help="build a lattice and report its properties")
    _add_source(p)
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("check", help="decide one equation family in one lattice")
    _add_source(p)
    p.add_argument("--family", required=True, help="e.g. oml, noa:3, ngo:4, mge:3go")
    p.add_argument("--search", action="store_true", help="randomized counterexample search")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument(
        "--order", choices=[o.value for o in VariableOrder], default=VariableOrder.MOST_CONSTRAINED
    )
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("states", help="state polytope questions")
    _add_source(p)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--strong-quantum", action="store_true")
    kind.add_argument("--strong-classical", action="store_true")
    kind.add_argument("--exists", action="store_true")
    p.add_argument("--dump-lp", metavar="PATH", help="write the state LP in text form")
    p.set_defaults(handler=cmd_states)

    p = sub.add_parser("derive", help="read a failing condensed state equation off a lattice")
    _add_source(p)
    p.add_argument("--pair", nargs=2, metavar=("A", "B"), help="element labels of the pair")
    p.add_argument("--attempts", type=int, default=None)
    p.set_defaults(handler=cmd_derive)

    p = sub.add_parser("generate", help="print a family equation, the fixtures or a wagon wheel")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--family")
    what.add_argument("--fixtures", action="store_true")
    what.add_argument("--wagon-wheel", type=int, metavar="N")
    p.add_argument("--print", action="store_true", help="plain text output (the default)")
    p.add_argument(
        "--form",
        choices=["derived", "arrows", "elementary"],
        default="derived",
        help="keep derived connectives, unfold to arrows, or expand to ' ^ v only",
    )
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("export", help="Hasse diagram or operation table")
    _add_source(p)
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--table", action="store_true")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_export)

    p = sub.add_parser("run", help="run a job manifest")
    p.add_argument("manifest")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(handler=cmd_run)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(args.log_level or settings.log_level, settings.log_path)
    writer = ReportWriter()
    try:
        return args.handler(args, writer)
    except (WorkbenchError, OSError, ValidationError, KeyError) as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        message = get_user_message(exc) if not isinstance(exc, KeyError) else str(exc.args[0])
        print(message, file=sys.stderr)
        return EXIT_BAD_INPUT if isinstance(exc, KeyError) else exit_code_for(exc)
    finally:
        writer.close()
