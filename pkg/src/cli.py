#!/usr/bin/env python3
"""
CLI interface for the fully prime spectrum toolkit.
Inspects rings and modules, computes spectra and topologies, and replays the theorem checks.
"""

import functools
import json
import logging
from datetime import datetime
from typing import Any, Dict

import click
from dotenv import load_dotenv

from src.algebra.ideals import two_sided_ideals
from src.algebra.lattice import enumerate_submodules
from src.algebra.module import FiniteModule, build_module
from src.algebra.radicals import radicals
from src.algebra.ring import FiniteRing, build_ring
from src.checks.catalog import load_catalog
from src.checks.harness import verify as run_verify
from src.checks.report import json_default
from src.homs.classify import classify_module
from src.homs.endo import endo_ring
from src.homs.invariance import fully_invariant
from src.spectra.ring_spectrum import ring_spectrum
from src.spectra.spectrum import spec_fp
from src.topology.dot import export_dot, to_dot
from src.topology.irreducible import irreducible_sets
from src.topology.properties import properties
from src.topology.space import VARIANTS, build_topology, ring_topology
from src.topology.specialization import specialization_order
from src.utils.config import OUTPUT_FORMATS, load_config
from src.utils.errors import ModtopError, SizeCapError
from src.utils.logging_setup import setup_logging
from src.utils.specs import is_module_spec, load_spec_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INPUT = 2


def input_errors(func):
    """Report library and file errors on stderr with exit code 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except (ModtopError, OSError) as e:
            logger.error(f"{func.__name__} failed: {e}")
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_INPUT)
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {e}", exc_info=True)
            raise
    return wrapper


def load_subject(spec_file: str, config):
    """Build the ring or module described by a spec file."""
    doc = load_spec_file(spec_file)
    if is_module_spec(doc):
        return build_module(doc, config)
    return build_ring(doc, config)


def inspect_module(module: FiniteModule) -> Dict[str, Any]:
    rads = radicals(module)
    record = {
        "module": module.name,
        "ring": module.ring.name,
        "order": module.order,
        "ring_order": module.ring.order,
        "invariants": module.add_cyclic,
        "submodules": len(enumerate_submodules(module)),
        "fully_invariant": len(fully_invariant(module).fi_list),
        "classify": classify_module(module).to_dict(),
        "max": [k.label for k in rads.max_list],
        "rad": rads.rad.label,
        "soc": rads.soc.label,
    }
    try:
        record["end_ring_order"] = endo_ring(module).order
    except SizeCapError as e:
        logger.warning(f"End ring of {module.name} not built: {e}")
        record["end_ring_order"] = None
    return record


def inspect_ring(ring: FiniteRing) -> Dict[str, Any]:
    return {
        "ring": ring.name,
        "order": ring.order,
        "invariants": ring.add_cyclic,
        "two_sided_ideals": [i.label for i in two_sided_ideals(ring)],
        **ring_spectrum(ring).to_dict(),
    }


def topology_report(topology) -> Dict[str, Any]:
    record = topology.to_dict()
    if not topology.is_topology:
        record["notes"] = ["closed sets are not closed under finite unions; use --variant fi"]
        return record
    record["properties"] = properties(topology).to_dict()
    record["irreducible"] = irreducible_sets(topology).to_dict()
    record["specialization"] = [list(e) for e in specialization_order(topology).hasse_edges()]
    return record


def render_text(record: Dict[str, Any]) -> str:
    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {json.dumps(v, default=json_default)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {json.dumps(value, default=json_default)}")
    return "\n".join(lines)


def reject_dot(ctx: click.Context):
    if ctx.obj["format"] == "dot":
        raise click.UsageError("--format dot only applies to the topology command")


def emit(ctx: click.Context, record: Dict[str, Any]):
    reject_dot(ctx)
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(record, indent=2, ensure_ascii=False, default=json_default))
    else:
        click.echo(render_text(record))


@click.group()
@click.option('--config', 'config_path', type=click.Path(), default=None,
              help='Path to configuration file (default config/modtop.json)')
@click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS), default=None,
              help='Output format')
@click.option('--cap-module', type=int, default=None, help='Largest module order')
@click.option('--cap-ring', type=int, default=None, help='Largest ring order')
@click.option('--cap-end', type=int, default=None, help='Largest endomorphism ring order')
@click.option('-v', '--verbose', count=True, help='Debug logging')
@click.pass_context
def main(ctx, config_path, output_format, cap_module, cap_ring, cap_end, verbose):
    """Fully prime spectra of finite modules and their Zariski-like topologies."""
    load_dotenv()
    try:
        config = load_config(config_path).override(
            module_cap=cap_module, ring_cap=cap_ring, end_cap=cap_end, output_format=output_format)
    except ModtopError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    setup_logging("DEBUG" if verbose else config.log_level, config.log_file)
    ctx.obj = {"config": config, "format": config.output_format}


@main.command()
@click.argument('spec_file', type=click.Path())
@click.pass_context
@input_errors
def inspect(ctx, spec_file):
    """Structure summary of a ring or module."""
    subject = load_subject(spec_file, ctx.obj["config"])
    if isinstance(subject, FiniteModule):
        emit(ctx, inspect_module(subject))
    else:
        emit(ctx, inspect_ring(subject))


@main.command()
@click.argument('spec_file', type=click.Path())
@click.pass_context
@input_errors
def spectrum(ctx, spec_file):
    """Spec^fp of a module, or Spec of a ring."""
    subject = load_subject(spec_file, ctx.obj["config"])
    if isinstance(subject, FiniteModule):
        emit(ctx, spec_fp(subject).to_dict())
    else:
        emit(ctx, ring_spectrum(subject).to_dict())


@main.command()
@click.argument('spec_file', type=click.Path())
@click.option('--variant', type=click.Choice(VARIANTS), default='full',
              help='Closed sets from all submodules (full) or the fully invariant ones (fi)')
@click.option('--dot', 'dot_file', type=click.Path(), default=None,
              help='Write the Hasse diagram of the specialization order to this file')
@click.pass_context
@input_errors
def topology(ctx, spec_file, variant, dot_file):
    """Closed sets, properties and specialization order of Spec^fp."""
    subject = load_subject(spec_file, ctx.obj["config"])
    space = build_topology(subject, variant) if isinstance(subject, FiniteModule) else ring_topology(subject)
    name = subject.name

    if dot_file or ctx.obj["format"] == "dot":
        space.require_topology()
        order = specialization_order(space)
        if dot_file:
            export_dot(order, space, dot_file, name)
        if ctx.obj["format"] == "dot":
            click.echo(to_dot(order, space, name), nl=False)
            return
    emit(ctx, topology_report(space))


@main.command()
@click.option('--catalog', type=click.Path(), envvar='MODTOP_CATALOG', default=None,
              help='Catalog file (default: built-in catalog)')
@click.option('--filter', 'check_filter', multiple=True, help='Only run this check id (repeatable)')
@click.option('--output', type=click.Path(), default=None, help='Also write the JSON report here')
@click.option('--workers', type=int, default=None, help='Subjects evaluated concurrently')
@click.option('--no-quotients', is_flag=True, help='Do not add the quotients M/L to the catalog')
@click.pass_context
@input_errors
def verify(ctx, catalog, check_filter, output, workers, no_quotients):
    """Replay every check on the catalog; exit 1 on any failure."""
    reject_dot(ctx)
    config = ctx.obj["config"]
    start_time = datetime.now()
    catalog = catalog or config.catalog_path
    entries = load_catalog(catalog) if catalog else None
    report = run_verify(entries, config, check_filter=check_filter or None,
                        quotients=not no_quotients, workers=workers)

    if output:
        report.save(output)
    if ctx.obj["format"] == "json":
        click.echo(report.to_json())
    else:
        click.echo(report.to_text(), nl=False)
    logger.info(f"Total execution time: {datetime.now() - start_time}")

    if not report.ok:
        ctx.exit(EXIT_FAILURES)
    if report.skipped:
        ctx.exit(EXIT_INPUT)
    ctx.exit(EXIT_OK)


if __name__ == "__main__":
    main()
