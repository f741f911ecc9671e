"""
lierig command line
===================

Every command takes an algebra as a ``.lie`` file path or, when no such file
exists, as a catalog entry name. Reports go to stdout, logs and diagnostics to
stderr.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import functools
import logging
import os
import sys

import click

from lierig.catalog.catalog import default_catalog
from lierig.catalog.verify import verify_catalog
from lierig.config import Settings
from lierig.errors import LierigError, NotALieAlgebraError, ParseError, UnknownEntryError
from lierig.frontend import report
from lierig.frontend.dsl import AlgebraDocument, parse, serialize
from lierig.lie.derivations import make_torus, nonconjugacy_certificate
from lierig.lie.structure import distinguish

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class InputError(click.ClickException):
    exit_code = EXIT_INPUT

    def show(self, file=None):
        click.echo(f"error: {self.format_message()}", err=True)


def _input_errors(func):
    """Turn library exceptions raised by bad input into exit code 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ParseError as e:
            raise InputError(str(e)) from e
        except UnknownEntryError as e:
            raise InputError(str(e)) from e
        except NotALieAlgebraError as e:
            raise InputError(f"not a Lie algebra: {e}") from e
        except LierigError as e:
            raise InputError(str(e)) from e
        except OSError as e:
            raise InputError(f"{e.filename or ''}: {e.strerror or e}") from e

    return wrapper


def load_document(source: str) -> AlgebraDocument:
    """Parse ``source`` as a file, falling back to a catalog entry name."""
    if os.path.exists(source):
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise InputError(f"{source}: not valid UTF-8 ({e.reason} at byte {e.start})") from e
        try:
            return parse(text)
        except ParseError as e:
            raise InputError(f"{source}: {e}") from e
    catalog = default_catalog()
    if source not in catalog.names():
        raise InputError(f"no such file or catalog entry: {source}")
    entry = catalog.resolve(source)
    logger.debug(f"{source} resolved to catalog entry {entry.name}")
    return entry.document


def _emit(ctx, payload: dict, text: str = None):
    fmt = ctx.obj["format"]
    if fmt == "text" and ctx.obj["quiet"]:
        return
    if fmt == "text" and text is not None:
        click.echo(text)
    else:
        click.echo(report.render(payload, fmt))


@click.group()
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True,
              help="Report format on stdout.")
@click.option("--quiet", is_flag=True, help="Only errors on stderr; no text report.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(ctx, fmt, quiet, verbose):
    """Exact verification of rigid solvable real Lie algebras."""
    settings = Settings()
    level = "ERROR" if quiet else "DEBUG" if verbose else settings.log_level
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr, force=True)
    settings.log_status()
    ctx.obj = {"format": fmt, "quiet": quiet, "settings": settings}


@cli.command()
@click.argument("source")
@click.pass_context
@_input_errors
def check(ctx, source):
    """Check the Jacobi identity on every basis triple."""
    doc = load_document(source)
    payload = report.check_payload(doc)
    _emit(ctx, payload)
    ctx.exit(EXIT_OK if payload["lie"] else EXIT_FAILED)


@cli.command()
@click.argument("source")
@click.option("--expect-rigid", is_flag=True, help="Exit 1 unless dim H^2 = 0.")
@click.pass_context
@_input_errors
def h2(ctx, source, expect_rigid):
    """Dimension of H^2(g, g)."""
    doc = load_document(source)
    payload = report.h2_payload(doc)
    _emit(ctx, payload)
    if expect_rigid and not payload["rigid"]:
        ctx.exit(EXIT_FAILED)


@cli.command("report")
@click.argument("source")
@click.option("--expect-rigid", is_flag=True, help="Exit 1 unless dim H^2 = 0.")
@click.pass_context
@_input_errors
def report_command(ctx, source, expect_rigid):
    """Cohomology in degrees 0..2 and the fingerprint."""
    doc = load_document(source)
    payload = report.full_payload(doc)
    _emit(ctx, payload)
    if expect_rigid and not payload["rigid"]:
        ctx.exit(EXIT_FAILED)


@cli.command()
@click.argument("source")
@click.pass_context
@_input_errors
def nilradical(ctx, source):
    """Basis of the nilradical of a solvable algebra."""
    doc = load_document(source)
    _emit(ctx, report.nilradical_payload(doc))


@cli.command()
@click.argument("source_a")
@click.argument("source_b")
@click.option("--expect-distinct", is_flag=True, help="Exit 1 unless the algebras are provably non-isomorphic.")
@click.pass_context
@_input_errors
def compare(ctx, source_a, source_b, expect_distinct):
    """Separate two algebras by the first differing invariant."""
    a, b = load_document(source_a), load_document(source_b)
    verdict = distinguish(a.constants(), b.constants())
    payload = report.compare_payload(a, b, verdict)
    text = str(verdict)
    if verdict.non_isomorphic:
        text += f"\n  {a.name}: {payload['left_value']}\n  {b.name}: {payload['right_value']}"
    _emit(ctx, payload, text)
    if expect_distinct and not verdict.non_isomorphic:
        ctx.exit(EXIT_FAILED)


@cli.group()
def torus():
    """Tori declared in a .lie file."""


def _torus_matrices(doc: AlgebraDocument, name: str):
    matrices = doc.torus(name)
    if matrices is None:
        declared = ", ".join(b.name for b in doc.tori) or "none"
        raise InputError(f"{doc.name} has no torus {name} (declared: {declared})")
    return matrices


@torus.command("verify")
@click.argument("source")
@click.argument("name")
@click.pass_context
@_input_errors
def torus_verify(ctx, source, name):
    """Check that NAME is a torus of derivations and whether it is split."""
    doc = load_document(source)
    payload = report.torus_payload(doc, name, _torus_matrices(doc, name))
    _emit(ctx, payload)
    ctx.exit(EXIT_OK if payload["is_torus"] else EXIT_FAILED)


@torus.command("compare")
@click.argument("source")
@click.argument("first")
@click.argument("second")
@click.pass_context
@_input_errors
def torus_compare(ctx, source, first, second):
    """Certificate that two tori are not conjugate, or 'inconclusive'."""
    doc = load_document(source)
    g = doc.constants()
    t1 = make_torus(g, _torus_matrices(doc, first), first)
    t2 = make_torus(g, _torus_matrices(doc, second), second)
    cert = nonconjugacy_certificate(t1, t2)
    _emit(ctx, report.certificate_payload(doc, first, second, cert))


@cli.group()
def catalog():
    """The built-in catalog of algebras."""


@catalog.command("list")
@click.pass_context
def catalog_list(ctx):
    """Entry names with dimension and provenance."""
    entries = default_catalog().list()
    payload = {
        "entries": [
            {
                "name": e.name,
                "dim": e.dim,
                "stub": e.stub,
                "realized_by": e.realized_by,
                "erratum_of": e.erratum_of,
                "provenance": e.provenance,
            }
            for e in entries
        ]
    }
    lines = []
    for e in entries:
        dim = "-" if e.dim is None else str(e.dim)
        note = ""
        if e.stub:
            note = f" (stub, realized by {e.realized_by})" if e.realized_by else " (stub)"
        elif e.erratum_of:
            note = f" (as printed, see {e.erratum_of})"
        lines.append(f"{e.name:<24} {dim:>2}  {e.provenance}{note}")
    _emit(ctx, payload, "\n".join(lines))


def _verify_lines(result) -> str:
    lines = []
    for e in result.entries:
        status = "ok" if e.ok else "FAIL"
        rigid = "-" if e.rigid is None else ("rigid" if e.rigid else f"h2={e.h2}")
        lines.append(f"{status:<4} {e.name:<24} dim {e.dim}  {rigid}")
        lines.extend(f"       {failure}" for failure in e.failures)
    for r in result.rows:
        status = "ok" if r.ok else "FAIL"
        lines.append(f"{status:<4} row {r.nilradical} (dim {r.dimension}): {', '.join(r.forms)}")
        lines.extend(f"       {failure}" for failure in r.failures)
    audit = result.conjecture_audit
    lines.append(f"diagonal derivations of rigid entries: min {min(audit.values(), default=0)} over {len(audit)}")
    lines.append("catalog verified" if result.ok else "catalog verification FAILED")
    return "\n".join(lines)


@catalog.command("verify")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Worker processes (default LIERIG_WORKERS or 1).")
@click.pass_context
@_input_errors
def catalog_verify(ctx, workers):
    """Recompute every recorded property of the catalog."""
    workers = workers or ctx.obj["settings"].workers
    result = verify_catalog(default_catalog(), workers=workers)
    _emit(ctx, result.as_dict(), _verify_lines(result))
    ctx.exit(EXIT_OK if result.ok else EXIT_FAILED)


@catalog.command("export")
@click.argument("directory", required=False)
@click.pass_context
@_input_errors
def catalog_export(ctx, directory):
    """Write every concrete entry as DIRECTORY/<name>.lie."""
    directory = directory or ctx.obj["settings"].catalog_dir
    if not directory:
        raise InputError("no export directory given and LIERIG_CATALOG_DIR is unset")
    os.makedirs(directory, exist_ok=True)
    written = []
    for entry in default_catalog().concrete():
        path = os.path.join(directory, f"{entry.name}.lie")
        with open(path, "w", encoding="utf-8") as f:
            f.write(serialize(entry.document))
        written.append(path)
    logger.info(f"exported {len(written)} entries to {directory}")
    _emit(ctx, {"directory": directory, "written": written}, f"{len(written)} entries written to {directory}")


def main():
    cli(prog_name="lierig")
