#!/usr/bin/env python3

import functools
import json
import os
import sys
from typing import Any, Callable, Dict, List, Optional

import click
import yaml
from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.config import LoggingSettings, get_settings, load_settings
from src.continuants import build_quad, check_identities, transfer_matrix
from src.continuants.sweeps import (det_sweep, identity_sweep, symbolic_identity_check, transfer_sweep,
                                    zero_transfer_sweep)
from src.continuants.words import check_word_model
from src.errors import AlgebraError, RingParseError
from src.pe2 import (build_ord_table, normalize, ord_of, ord_of_word, parse_word, qsr_condition,
                     stable_range_report, subgroup_lattice_checks, word_matrix)
from src.ring_core import FreeRing, MatrixRing, Ring, make_matrix_ring, maximal_subfield, ring_from_text
from src.unit_translate import (WitnessCertificate, WitnessOrder, artinian_classifier,
                                conjecture_Affn_probe, density_bounds, subfield_kernel_bound)
from src.cli.artifacts import CertificateStore, RunManifest
from src.cli.replay import replay as replay_certificate
from src.cli.report import run_suite
from src.cli.runners import resolve_samples, run as run_command

console = Console()

FORMATS = click.Choice(['json', 'yaml', 'table'])


def setup_logging(verbose: bool = False, settings: Optional[LoggingSettings] = None):
    """Setup logging configuration"""
    settings = settings or LoggingSettings()
    log_level = "DEBUG" if verbose else settings.level
    logger.remove()
    logger.add(sys.stderr, level=log_level, format="<green>{time}</green> | <level>{level}</level> | {message}")
    log_dir = os.path.dirname(settings.file)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
    logger.add(settings.file, rotation=settings.rotation, level="DEBUG")


class RingParam(click.ParamType):
    """A ring descriptor such as gf(4), mat(3,gf(2)) or prod(gf(2),zmod(9))"""
    name = "ring"

    def convert(self, value, param, ctx):
        if isinstance(value, Ring):
            return value
        try:
            return ring_from_text(value)
        except RingParseError as e:
            self.fail(str(e), param, ctx)


RING = RingParam()


def _guard(f: Callable) -> Callable:
    """Turn library errors into a logged message and exit code 1"""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except AlgebraError as e:
            logger.error(f"{type(e).__name__}: {e}")
            console.print(f"[red]Error: {escape(str(e))}[/red]")
            sys.exit(1)
    return wrapper


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--config', '-c', type=click.Path(exists=True), help='Configuration file path')
@click.option('--jobs', '-j', type=int, default=-1, show_default=True, help='Worker processes (-1 uses every core)')
@click.option('--seed', type=int, default=0, show_default=True, help='Seed for sampled runs')
@click.option('--timeout-secs', type=float, default=None, help='Per-task timeout for worker pools')
@click.option('--output-dir', '-o', type=click.Path(), help='Artifact directory (overrides configuration)')
@click.pass_context
def cli(ctx, verbose, config, jobs, seed, timeout_secs, output_dir):
    """continuant-lab - exact experiments with continuants, PE(2,R) and unit translates"""
    ctx.ensure_object(dict)
    settings = load_settings(config)
    if output_dir:
        settings.output.directory = output_dir
    ctx.obj['verbose'] = verbose
    ctx.obj['config'] = config
    ctx.obj['jobs'] = jobs
    ctx.obj['seed'] = seed
    ctx.obj['timeout'] = timeout_secs

    os.makedirs(settings.output.directory, exist_ok=True)
    setup_logging(verbose, settings.logging)


# -- shared helpers

def _manifest(ctx, command: str, ring: Optional[str] = None, /, **args) -> RunManifest:
    return RunManifest(command=command, ring=ring, args=args, seed=args.get('seed', ctx.obj['seed']),
                       shards=args.get('shards', 1), shard_id=args.get('shard_id'), argv=sys.argv[1:])


def _save(manifest: RunManifest, certificate: Optional[WitnessCertificate] = None,
          report: Optional[Dict[str, Any]] = None):
    store = CertificateStore(get_settings().output.directory)
    path = store.save(manifest.finish(), certificate=certificate, report=report)
    console.print(f"[dim]Saved {escape(str(path))}[/dim]")


def _plain(data: Any) -> Any:
    """JSON-compatible copy (tuples to lists, anything else to str)"""
    return json.loads(json.dumps(data, default=str))


def _emit(data: Dict[str, Any], format: str, table: Optional[Callable[[Dict[str, Any]], None]] = None):
    if format == 'json':
        click.echo(json.dumps(_plain(data), indent=2))
    elif format == 'yaml':
        click.echo(yaml.safe_dump(_plain(data), default_flow_style=False, sort_keys=False))
    else:
        (table or _display_mapping)(data)


def _parse_elements(ring: Ring, text: str) -> List[Any]:
    """Comma separated element literals; JSON literals for matrices and tuples"""
    try:
        raw = json.loads(f"[{text}]")
    except json.JSONDecodeError:
        raw = [part.strip() for part in text.split(',') if part.strip()]
    return [ring.parse_value(v) for v in raw]


def _finish(passed: bool):
    if not passed:
        logger.error("Requested check did not pass")
        sys.exit(1)


# -- continuant

@cli.group()
def continuant():
    """Noncommutative continuants and transfer matrices"""


@continuant.command('eval')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--tuple', 'tuple_text', required=True, help='Comma separated elements a(1),...,a(k)')
@click.option('--k', type=int, help='Use the first k elements (default: all)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def continuant_eval(ctx, ring, tuple_text, k, format):
    """Print P, Q, Pop, Qop and the transfer matrix for one tuple"""
    values = _parse_elements(ring, tuple_text)
    k = len(values) if k is None else k
    if not 0 <= k <= len(values):
        raise click.UsageError(f"--k must be between 0 and {len(values)}")
    quad = build_quad([ring.element(v) for v in values[:k]], ring)
    identities = check_identities(quad)
    data = quad.to_dict()
    data['transfer'] = transfer_matrix(quad).to_json()
    data['identities_passed'] = identities.passed
    _save(_manifest(ctx, 'continuant eval', str(ring), tuple=[ring.format_value(v) for v in values[:k]]),
          report=_plain(data))
    _emit(data, format, _display_quad)
    _finish(identities.passed)


@continuant.command('identities')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor (free(...) checks symbolically)')
@click.option('--k', type=int, default=3, show_default=True, help='Tuple length (largest k for free rings)')
@click.option('--samples', '-n', type=int, help='Sampled tuples when the space is too large')
@click.option('--seed', type=int, help='Seed (default: global --seed)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def continuant_identities(ctx, ring, k, samples, seed, format):
    """Check the continuant identity families"""
    seed = ctx.obj['seed'] if seed is None else seed
    if isinstance(ring, FreeRing):
        reports = symbolic_identity_check(k)
        data = {"ring": str(ring), "k_max": k, "passed": all(r.passed for r in reports),
                "reports": [r.to_dict() for r in reports]}
    else:
        sweep = identity_sweep(ring, k, samples=samples, seed=seed)
        data = sweep.to_dict()
    _save(_manifest(ctx, 'continuant identities', str(ring), k=k, samples=samples, seed=seed), report=_plain(data))
    _emit(data, format)
    _finish(data['passed'])


@continuant.command('transfer')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--k', type=int, default=3, show_default=True, help='Tuple length')
@click.option('--samples', '-n', type=int, help='Sampled tuples when the space is too large')
@click.option('--seed', type=int, help='Seed (default: global --seed)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def continuant_transfer(ctx, ring, k, samples, seed, format):
    """Sweep invertibility transfer, zero transfer and (over fields) determinant equality"""
    seed = ctx.obj['seed'] if seed is None else seed
    sweeps = [transfer_sweep(ring, k, samples=samples, seed=seed),
              zero_transfer_sweep(ring, k, samples=samples, seed=seed)]
    if isinstance(ring, MatrixRing) and ring.inner.is_field:
        sweeps.append(det_sweep(ring, k, samples=samples, seed=seed))
    data = {"ring": str(ring), "k": k, "passed": all(s.passed for s in sweeps),
            "sweeps": [s.to_dict() for s in sweeps]}
    _save(_manifest(ctx, 'continuant transfer', str(ring), k=k, samples=samples, seed=seed), report=_plain(data))
    _emit(data, format, _display_sweeps)
    _finish(data['passed'])


@continuant.command('words')
@click.option('--k', type=int, default=10, show_default=True, help='Largest k')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def continuant_words(ctx, k, format):
    """Compare the index-word model of Q_k with the free-ring expansion"""
    checks = [check_word_model(j) for j in range(k + 1)]
    data = {"k": k, "passed": all(c.matches and c.monomial_count == c.fibonacci for c in checks),
            "checks": [c.__dict__ for c in checks]}
    _save(_manifest(ctx, 'continuant words', None, k=k), report=_plain(data))
    _emit(data, format, _display_words)
    _finish(data['passed'])


# -- pe2

@cli.group()
def pe2():
    """Words, normal forms and lengths in PE(2,R)"""


@pe2.command('reduce')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--word', '-w', required=True, help='Generators, e.g. "e(1) e(0) m(1,2) t(2) j"')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def pe2_reduce(ctx, ring, word, format):
    """Reduce a word to normal form"""
    parsed = parse_word(ring, word)
    normal = normalize(ring, parsed)
    data = {"ring": str(ring), "word": parsed.format(ring), "normal": normal.format(ring),
            "e_count": normal.e_count(), "shape_ord": str(ord_of_word(ring, normal))}
    _save(_manifest(ctx, 'pe2 reduce', str(ring), word=word), report=data)
    _emit(data, format)


@pe2.command('ord')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--all', 'all_elements', is_flag=True, help='Length histogram over the whole group')
@click.option('--word', '-w', help='Length of the element a word represents')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def pe2_ord(ctx, ring, all_elements, word, format):
    """Minimal lengths in PE(2,R) by exhaustive search"""
    if all_elements == bool(word):
        raise click.UsageError("give exactly one of --all and --word")
    if all_elements:
        table = build_ord_table(ring)
        data = {"ring": str(ring), "order": table.order, "max_ord": str(table.max_ord),
                "histogram": table.histogram()}
    else:
        parsed = parse_word(ring, word)
        normal = normalize(ring, parsed)
        data = {"ring": str(ring), "word": parsed.format(ring), "normal": normal.format(ring),
                "shape_ord": str(ord_of_word(ring, normal)), "ord": str(ord_of(ring, word_matrix(ring, parsed)))}
    _save(_manifest(ctx, 'pe2 ord', str(ring), all=all_elements, word=word), report=data)
    _emit(data, format)


@pe2.command('groups')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--no-ord', is_flag=True, help='Skip the length table')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def pe2_groups(ctx, ring, no_ord, format):
    """Orders, index [PE_1 : PE_2], perfectness and simplicity"""
    data = subgroup_lattice_checks(ring, with_ord=not no_ord).to_dict()
    _save(_manifest(ctx, 'pe2 groups', str(ring), with_ord=not no_ord), report=data)
    _emit(data, format)


@pe2.command('stable-range')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def pe2_stable_range(ctx, ring, format):
    """Stable range one, Q_3 witnesses and the length bound"""
    report = stable_range_report(ring)
    data = report.to_dict()
    _save(_manifest(ctx, 'pe2 stable-range', str(ring)), report=data)
    _emit(data, format)
    _finish(report.consistent is not False)


@pe2.command('qsr')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--n', type=int, required=True, help='Number of a-entries minus one')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def pe2_qsr(ctx, ring, n, format):
    """Invertible Q_{2n+1} completions for every a in R^(n+1)"""
    report = qsr_condition(ring, n)
    data = report.to_dict()
    _save(_manifest(ctx, 'pe2 qsr', str(ring), n=n), report=data)
    _emit(data, format)
    _finish(report.consistent is not False)


# -- gui

@cli.group()
def gui():
    """Unit-translate properties of finite rings"""


@gui.command('check')
@click.option('--ring', '-r', type=RING, required=True, help='Ring descriptor')
@click.option('--k', type=int, help='Property index (tuples of k-1 elements)')
@click.option('--values', help='One tuple as comma separated element literals')
@click.option('--exhaustive', is_flag=True, help='Refuse to fall back to sampling')
@click.option('--samples', '-n', type=int, help='Sample this many tuples')
@click.option('--seed', type=int, help='Seed (default: global --seed)')
@click.option('--shards', type=int, default=1, show_default=True, help='Split the tuple stream')
@click.option('--shard-id', type=int, help='Run one shard only (default: all, merged)')
@click.option('--order', type=click.Choice([o.value for o in WitnessOrder]),
              default=WitnessOrder.SUBFIELD_FIRST.value, show_default=True, help='Witness scan order')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_check(ctx, ring, k, values, exhaustive, samples, seed, shards, shard_id, order, format):
    """Search for common unit translates and emit a certificate"""
    if exhaustive and samples is not None:
        raise click.UsageError("--exhaustive and --samples are exclusive")
    seed = ctx.obj['seed'] if seed is None else seed
    if values is not None:
        parsed = _parse_elements(ring, values)
        args = {"ring": str(ring), "values": [ring.format_value(v) for v in parsed], "order": order,
                "seed": seed}
    else:
        if k is None:
            raise click.UsageError("--k is required without --values")
        args = {"ring": str(ring), "k": k, "order": order, "seed": seed, "shards": shards,
                "shard_id": shard_id, "samples": resolve_samples(str(ring), k, exhaustive, samples)}
    cert = run_command('gui check', args, jobs=ctx.obj['jobs'], timeout=ctx.obj['timeout'])
    _save(_manifest(ctx, 'gui check', str(ring), **args), certificate=cert)
    _emit(cert.to_dict(), format, _display_certificate)
    _finish(cert.passed)


@gui.command('bone')
@click.option('--n', type=click.IntRange(2, 5), required=True, help='Matrix size over F_2')
@click.option('--samples', '-n', 'samples', type=int, help='Random C per rank instead of all')
@click.option('--seed', type=int, help='Seed (default: global --seed)')
@click.option('--shard-bits', type=int, help='Top bits of C fixed per slice')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_bone(ctx, n, samples, seed, shard_bits, format):
    """All pairs (B, C) in M_n F_2 at k = 3"""
    seed = ctx.obj['seed'] if seed is None else seed
    args = {"n": n, "samples": samples, "seed": seed, "shard_bits": shard_bits}
    cert = run_command('gui bone', args, jobs=ctx.obj['jobs'], timeout=ctx.obj['timeout'])
    _save(_manifest(ctx, 'gui bone', cert.ring, **args), certificate=cert)
    _emit(cert.to_dict(), format, _display_certificate)
    _finish(cert.passed)


@gui.command('bounds')
@click.option('--n', type=int, required=True, help='Matrix size')
@click.option('--q', type=int, required=True, help='Field size')
@click.option('--kernel-samples', type=int, default=100, show_default=True,
              help='Random v checked against the subfield kernel bound (n >= 2)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_bounds(ctx, n, q, kernel_samples, format):
    """Density of GL(n,q), the measure threshold and the subfield kernel bound"""
    import numpy as np

    report = density_bounds(n, q)
    data = report.to_dict()
    passed = report.consistent
    if n >= 2 and kernel_samples > 0:
        subfield = maximal_subfield(n, q)
        rng = np.random.default_rng(ctx.obj['seed'])
        checks = [subfield_kernel_bound(subfield.ring.random_value(rng), subfield) for _ in range(kernel_samples)]
        data['kernel_checked'] = len(checks)
        data['kernel_max_singular'] = max(len(c.singular) for c in checks)
        data['kernel_holds'] = all(c.holds for c in checks)
        passed = passed and data['kernel_holds']
    _save(_manifest(ctx, 'gui bounds', str(make_matrix_ring(n, ring_from_text(f"gf({q})"))), n=n, q=q,
                    kernel_samples=kernel_samples), report=data)
    _emit(data, format)
    _finish(passed)


@gui.command('classify')
@click.option('--ring', '-r', type=RING, required=True, help='Finite semisimple ring presentation')
@click.option('--no-confirm', is_flag=True, help='Skip the exhaustive confirmation')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_classify(ctx, ring, no_confirm, format):
    """Decide the property at 3 from the simple factors"""
    report = artinian_classifier(ring, confirm=not no_confirm)
    data = report.to_dict()
    _save(_manifest(ctx, 'gui classify', str(ring), confirm=not no_confirm), report=data)
    _emit(data, format)
    _finish(report.consistent is not False)


@gui.command('probe')
@click.option('--ring', '-r', type=RING, required=True, help='Base ring S')
@click.option('--n', type=int, required=True, help='Matrix size')
@click.option('--samples', '-n', 'samples', type=int, help='Sampled tuples')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_probe(ctx, ring, n, samples, format):
    """Experimental: look for failures at 3 in M_n S"""
    report = conjecture_Affn_probe(ring, n, samples=samples, seed=ctx.obj['seed'])
    data = report.to_dict()
    _save(_manifest(ctx, 'gui probe', str(ring), n=n, samples=samples), certificate=report.certificate,
          report={"status": report.status})
    _emit(data, format)


@gui.command('families')
@click.option('--n', type=int, required=True, help='Matrix size')
@click.option('--q', type=int, help='Field size for the first-row family')
@click.option('--base', type=RING, help='Base ring S for the annihilated first-row family')
@click.option('--a', 'a_text', help='Element a of S (default: first suitable)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def gui_families(ctx, n, q, base, a_text, format):
    """Reproduce an explicit failing family and certify it"""
    if base is not None:
        a = None if a_text is None else base.format_value(_parse_elements(base, a_text)[0])
        command, args = 'gui families atwh', {"base": str(base), "n": n, "a": a}
    elif q is not None:
        command, args = 'gui families antn', {"n": n, "q": q}
    else:
        raise click.UsageError("give --q or --base")
    cert = run_command(command, args)
    _save(_manifest(ctx, command, cert.ring, **args), certificate=cert)
    _emit(cert.to_dict(), format, _display_certificate)
    _finish(not cert.passed)


# -- report and replay

@cli.command()
@click.option('--suite', type=click.Choice(['paper-core', 'smoke']), default='paper-core', show_default=True)
@click.option('--claims', help='Comma separated claim ids (default: all)')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def report(ctx, suite, claims, format):
    """Re-check every headline result and write a report bundle"""
    claim_ids = [c.strip() for c in claims.split(',')] if claims else None
    bundle = run_suite(suite, seed=ctx.obj['seed'], jobs=ctx.obj['jobs'], claim_ids=claim_ids)
    json_path, csv_path = bundle.write(get_settings().output.directory)
    console.print(f"[dim]Saved {escape(str(json_path))} and {escape(str(csv_path))}[/dim]")
    if format == 'table':
        _display_bundle(bundle)
    else:
        _emit(bundle.to_dict(), format)
    _finish(bundle.passed)


@cli.command()
@click.option('--certificate', type=click.Path(exists=True), required=True, help='Stored certificate')
@click.option('--format', '-f', type=FORMATS, default='table', help='Output format')
@click.pass_context
@_guard
def replay(ctx, certificate, format):
    """Re-verify a stored certificate"""
    result = replay_certificate(certificate, jobs=ctx.obj['jobs'], timeout=ctx.obj['timeout'])
    _emit(result.to_dict(), format)
    _finish(result.matches)


# -- display

def _display_mapping(data: Dict[str, Any]):
    table = Table(title="Result")
    table.add_column("Key", style="cyan")
    table.add_column("Value", style="white")
    for key, value in data.items():
        text = value if isinstance(value, str) else json.dumps(_plain(value))
        table.add_row(escape(str(key)), escape(text))
    console.print(table)


def _display_certificate(data: Dict[str, Any]):
    passed = data['verdict'] in ('witness', 'sampled-pass', 'exhaustive-pass')
    colour = "green" if passed else "red"
    stats = data.get('stats') or {}
    lines = [
        f"[bold]Ring:[/bold] {escape(data['ring'])}    [bold]k:[/bold] {data['k']}",
        f"[bold]Verdict:[/bold] [{colour}]{data['verdict']}[/{colour}]",
        f"[bold]Tested:[/bold] {stats.get('tested', 0)}    [bold]Witnessed:[/bold] {stats.get('witnessed', 0)}"
        f"    [bold]Elapsed:[/bold] {stats.get('elapsed_ms', 0)} ms",
    ]
    if data.get('values') is not None:
        lines.append(f"[bold]Values:[/bold] {escape(json.dumps(data['values']))}")
    if data.get('witness') is not None:
        lines.append(f"[bold]Witness:[/bold] {escape(json.dumps(data['witness']))}")
    console.print(Panel("\n".join(lines), title=escape(data['command']), border_style=colour))


def _display_quad(data: Dict[str, Any]):
    table = Table(title=f"Continuants over {escape(data['ring'])}, k={data['k']}")
    for column in ["j", "P", "Q", "Pop", "Qop"]:
        table.add_column(column, style="cyan" if column == "j" else "white")
    for j, row in enumerate(zip(data['P'], data['Q'], data['Pop'], data['Qop'])):
        table.add_row(str(j), *(escape(json.dumps(_plain(x))) for x in row))
    console.print(table)
    console.print(f"Transfer matrix: {escape(json.dumps(_plain(data['transfer'])))}")
    console.print(f"Identities: {'[green]pass[/green]' if data['identities_passed'] else '[red]FAIL[/red]'}")


def _display_sweeps(data: Dict[str, Any]):
    table = Table(title=f"Sweeps over {escape(data['ring'])}, k={data['k']}")
    table.add_column("Check", style="cyan")
    table.add_column("Mode")
    table.add_column("Tested", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Result")
    for s in data['sweeps']:
        table.add_row(s['check'], s['mode'], str(s['tested']), str(s['failures']),
                      "[green]pass[/green]" if s['passed'] else "[red]FAIL[/red]")
    console.print(table)


def _display_words(data: Dict[str, Any]):
    table = Table(title="Index-word model of Q_k")
    for column in ["k", "model", "monomials", "fibonacci", "matches"]:
        table.add_column(column, justify="right")
    for c in data['checks']:
        table.add_row(str(c['k']), str(c['model_size']), str(c['monomial_count']), str(c['fibonacci']),
                      "[green]yes[/green]" if c['matches'] else "[red]no[/red]")
    console.print(table)


def _display_bundle(bundle):
    table = Table(title=f"Suite {bundle.suite}")
    table.add_column("Claim", style="cyan")
    table.add_column("Statement")
    table.add_column("Result")
    table.add_column("Runtime (s)", justify="right")
    for r in bundle.results:
        table.add_row(r.claim_id, escape(r.anchor), "[green]pass[/green]" if r.passed else "[red]FAIL[/red]",
                      f"{r.runtime_s:.2f}")
    console.print(table)
    colour = "green" if bundle.passed else "red"
    console.print(Panel(f"{sum(r.passed for r in bundle.results)}/{len(bundle.results)} claims pass",
                        title="Summary", border_style=colour))


if __name__ == '__main__':
    cli()
