"""Command-line interface.  Exit codes: 0 pass, 1 check failure, 2 usage or parse error."""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

import click
import numpy as np

from .errors import ConfigurationError, HomHopfError, ParseError, PreconditionError
from .hopf import twist_by_automorphism, twist_by_crossing
from .instance import Instance, _tensor, make_instance, parse_instance, serialize, write_instance
from .library import BUILTINS, FIXTURES, build_builtin
from .linalg import FieldSpec
from .report import CheckReport
from .suite import SuiteReport, builtin_modules, emit_report, run_suite
from .yd import MAX_BRAID_SIDE, braiding_inverse_matrix, braiding_matrix, check_braiding_axioms

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fail_usage(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _load(path: str | None, builtin: str | None, solve: bool = False) -> Instance:
    if (path is None) == (builtin is None):
        _fail_usage("give exactly one of --instance or --builtin")
    try:
        if builtin is not None:
            return build_builtin(builtin)
        return parse_instance(path, solve_antipode=solve)
    except KeyError as exc:
        _fail_usage(str(exc.args[0]))
    except ParseError as exc:
        _fail_usage(f"{path}: {exc}")


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact checker for group-cograded monoidal Hom-Hopf algebras and their Yetter-Drinfeld categories."""


@main.command()
@click.option("--instance", "path", type=click.Path(dir_okay=False), help="Instance file (JSON).")
@click.option("--builtin", help="Check a builtin instance or fixture instead of a file.")
@click.option("--suite", default="all", show_default=True,
              help="all, coalgebra, hopf, crossing, yd, braiding, or a comma-separated list.")
@click.option("--report", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--solve-antipode", is_flag=True, help="Solve for the antipode if the file omits it.")
def check(path, builtin, suite, fmt, solve_antipode):
    """Run axiom suites over an instance."""
    inst = _load(path, builtin, solve_antipode)
    try:
        rep = run_suite(inst, suite)
    except ConfigurationError as exc:
        _fail_usage(str(exc))
    click.echo(emit_report(rep, fmt), nl=False)
    sys.exit(rep.exit_code)


def _read_family(path: str, inst: Instance) -> list[np.ndarray]:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        _fail_usage(f"cannot read automorphism file {path}: {exc}")
    if not isinstance(payload, dict) or "automorphism" not in payload:
        _fail_usage("automorphism file must be an object with key 'automorphism'")
    g, d = inst.group, inst.coalgebra.dims
    try:
        fam = _tensor("automorphism", payload["automorphism"], (g.order,), lambda p: (d[p], d[p]), inst.field.prime)
    except ParseError as exc:
        _fail_usage(str(exc))
    return [fam[(p,)] for p in g.elements]


@main.command()
@click.option("--instance", "path", type=click.Path(dir_okay=False))
@click.option("--builtin")
@click.option("--mode", type=click.Choice(["automorphism", "crossing"]), required=True)
@click.option("--automorphism", "auto_path", type=click.Path(dir_okay=False),
              help="JSON file with key 'automorphism' (rows [p, i, j, v]); required for --mode automorphism.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--name", default=None, help="Name recorded in the output instance.")
def twist(path, builtin, mode, auto_path, out, name):
    """Twist a classical instance into a Hom instance."""
    inst = _load(path, builtin)
    if inst.hopf is None:
        _fail_usage("twisting needs a Hopf instance")
    target = inst.action if inst.action is not None else inst.hopf
    try:
        if mode == "automorphism":
            if auto_path is None:
                _fail_usage("--mode automorphism needs --automorphism FILE")
            result = twist_by_automorphism(target, _read_family(auto_path, inst))
        else:
            if inst.action is None:
                _fail_usage("--mode crossing needs an instance with a crossing")
            result = twist_by_crossing(inst.action)
    except PreconditionError as exc:
        click.echo(f"precondition failed: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    except HomHopfError as exc:
        click.echo(f"twist failed: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    meta = {"twisted_from": inst.name, "mode": mode}
    twisted = make_instance(name or f"{inst.name}-twisted-{mode}", result, metadata=meta)
    write_instance(twisted, out)
    click.echo(f"wrote {out}")


def _matrix_digest(m: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(m, dtype="<i8").tobytes()).hexdigest()


@main.command()
@click.option("--instance", "path", type=click.Path(dir_okay=False))
@click.option("--builtin")
@click.option("--module-a", "a", required=True, help="Module name (declared, or builtin k, H, D<p>).")
@click.option("--module-b", "b", required=True)
@click.option("--module-x", "x", default=None, help="Third module; enables the hexagon checks.")
@click.option("--verify", is_flag=True, help="Check braiding axioms and the inverse.")
@click.option("--report", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--matrix-out", type=click.Path(dir_okay=False), help="Write the braiding matrix as sparse JSON.")
def braid(path, builtin, a, b, x, verify, fmt, matrix_out):
    """Build the braiding c_{A,B} and optionally verify it."""
    inst = _load(path, builtin)
    if inst.tcoalgebra is None:
        _fail_usage("braiding needs a T-coalgebra instance")
    try:
        mods = {m.name: m for m in builtin_modules(inst)}
    except HomHopfError as exc:
        click.echo(f"cannot build modules: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    for nm in filter(None, (a, b, x)):
        if nm not in mods:
            _fail_usage(f"unknown module {nm!r}; available: {', '.join(mods)}")
    m, n = mods[a], mods[b]
    if m.dim * n.dim > MAX_BRAID_SIDE:
        _fail_usage(f"braiding side {m.dim * n.dim} exceeds {MAX_BRAID_SIDE}")
    c = braiding_matrix(m, n)
    if matrix_out:
        rows = [[int(i), int(j), int(c[i, j])] for i, j in zip(*np.nonzero(c))]
        Path(matrix_out).write_text(json.dumps({"shape": list(c.shape), "entries": rows}) + "\n")
    report = CheckReport()
    if verify:
        report = check_braiding_axioms(m, n, mods[x] if x else None)
    summary = {"source": [a, b], "shape": list(c.shape), "sha256": _matrix_digest(c),
               "inverse_sha256": _matrix_digest(braiding_inverse_matrix(m, n))}
    rep = SuiteReport(inst.name, "", ("braiding",) if verify else (), (("braiding", report),) if verify else ())
    if fmt == "json":
        payload = {"braiding": summary}
        if verify:
            payload["report"] = json.loads(emit_report(rep, "json"))
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"c_{{{a},{b}}}: {c.shape[1]} -> {c.shape[0]}  sha256 {summary['sha256']}")
        if verify:
            click.echo(emit_report(rep, "text"), nl=False)
    sys.exit(rep.exit_code)


@main.command("list-builtins")
def list_builtins():
    """List builtin instances and mutation fixtures."""
    for b in BUILTINS.values():
        click.echo(f"{b.name:32} {b.description}")
    for f in FIXTURES.values():
        click.echo(f"{f.name:32} fixture: {f.base} {f.section}{list(f.coordinate)} += {f.delta}; "
                   f"expect {f.equation} in suite {f.suite}")


@main.command("emit-builtin")
@click.option("--name", required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--prime", type=int, default=101, show_default=True)
def emit_builtin(name, out, prime):
    """Write a builtin instance or fixture to a file."""
    try:
        inst = build_builtin(name, FieldSpec(prime))
    except KeyError as exc:
        _fail_usage(str(exc.args[0]))
    except (ValueError, HomHopfError) as exc:
        _fail_usage(str(exc))
    Path(out).write_text(serialize(inst))
    click.echo(f"wrote {out}")


if __name__ == "__main__":  # pragma: no cover
    main()
