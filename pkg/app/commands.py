import json
import logging
from dataclasses import replace

import click
from flask import Blueprint, current_app

from app import schemas
from app.generators import GeneratorParameterError, GenSpec, generate
from app.graph import GraphError, write_edge_list
from app.harness import (
    HarnessSettings,
    ManifestError,
    ResultFormatError,
    ds_result_from_dict,
    ds_result_to_dict,
    load_manifest,
    max_ratio,
    read_jsonl,
    reverify,
    run_experiment,
    verify_result,
    write_csv,
    write_jsonl,
)
from app.mds import Config, ConfigError, Phase2Rule, default_c, solve
from app.minors import has_k_t3_depth1_minor
from app.oracle import OracleBudgetExceeded, exact_mds
from shared.constants import FAMILY_VALUES, PHASE2_RULE_VALUES

from .utils import dump_json, load_json, parse_params, read_graph

logger = logging.getLogger(__name__)

graphs = Blueprint("graphs", __name__, cli_group=None)
experiments = Blueprint("experiments", __name__, cli_group=None)

# Exit status for results that parse but break an invariant or a bound.
CHECK_FAILED_EXIT_CODE = 2


def register_commands(app):
    app.register_blueprint(graphs)
    app.register_blueprint(experiments)


def _settings() -> HarnessSettings:
    return HarnessSettings.from_config(current_app.config)


def _load_graph(stream):
    try:
        return read_graph(stream)
    except GraphError as e:
        raise click.ClickException(f"Malformed edge list: {e}")


def _load_json(stream, what: str):
    try:
        return load_json(stream)
    except json.JSONDecodeError as e:
        raise click.ClickException(f"Malformed {what}: {e}")


@graphs.cli.command("generate")
@click.argument("family", type=click.Choice(FAMILY_VALUES))
@click.option(
    "--param",
    "params",
    multiple=True,
    help="Size parameter as name=value, e.g. --param rows=4 --param cols=4.",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--shuffle-ids",
    type=int,
    default=None,
    help="Seed for a random permutation of the vertex IDs.",
)
@click.option("--output", type=click.File("w"), default="-")
def generate_command(family, params, seed, shuffle_ids, output):
    """Write one generated instance in edge-list format."""
    try:
        spec = GenSpec(family, parse_params(params), seed, shuffle_ids)
        g = generate(spec)
    except (ValueError, GeneratorParameterError) as e:
        raise click.ClickException(str(e))
    comment = json.dumps(spec.describe(), sort_keys=True)
    output.write(write_edge_list(g, spec.certified_genus, comment=comment))


@graphs.cli.command("solve")
@click.argument("graph_file", type=click.File("r"))
@click.option("--c", "c", type=int, default=None, help="Density bound; defaults from --genus.")
@click.option(
    "--genus",
    type=int,
    default=None,
    help="Genus bound; defaults to the file's genus= header, or 0.",
)
@click.option("--t", "t", type=int, default=None, help="K_{t,3} exclusion parameter.")
@click.option("--rule", type=click.Choice(PHASE2_RULE_VALUES), default="max", show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--output", type=click.File("w"), default="-")
def solve_command(graph_file, c, genus, t, rule, workers, output):
    """Run the LOCAL pipeline and print the result as JSON."""
    document = _load_graph(graph_file)
    if genus is None:
        genus = document.genus or 0
    try:
        cfg = Config(
            c=default_c(genus) if c is None else c,
            g=genus,
            t=t,
            phase2_rule=Phase2Rule.parse(rule),
        )
    except ConfigError as e:
        raise click.ClickException(str(e))
    result = solve(document.graph, cfg, workers=workers)
    output.write(dump_json(ds_result_to_dict(document.graph, result)) + "\n")


@graphs.cli.command("oracle")
@click.argument("graph_file", type=click.File("r"))
@click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=None,
    help="Search node limit; defaults to MDS_ORACLE_BUDGET.",
)
def oracle_command(graph_file, budget):
    """Compute an exact minimum dominating set."""
    document = _load_graph(graph_file)
    if budget is None:
        budget = current_app.config["MDS_ORACLE_BUDGET"]
    try:
        result = exact_mds(document.graph, budget)
    except OracleBudgetExceeded as e:
        raise click.ClickException(str(e))
    click.echo(dump_json(schemas.OracleResult().dump(result.to_dict())))


@graphs.cli.command("check-minor")
@click.argument("graph_file", type=click.File("r"))
@click.option("--t", "t", type=click.IntRange(min=3), default=3, show_default=True)
def check_minor_command(graph_file, t):
    """Search for K_{t,3} as a depth-1 minor."""
    document = _load_graph(graph_file)
    model = has_k_t3_depth1_minor(document.graph, t)
    report = {
        "t": t,
        "found": model is not None,
        "locally_embeddable": model is None,
        "model": None if model is None else model.to_dict(),
    }
    click.echo(dump_json(schemas.MinorReport().dump(report)))


@graphs.cli.command("verify")
@click.argument("result_file", type=click.File("r"))
@click.argument("graph_file", type=click.File("r"))
@click.pass_context
def verify_command(ctx, result_file, graph_file):
    """Check a stored result against its graph; exit 2 on any failure."""
    document = _load_graph(graph_file)
    try:
        result, gamma = ds_result_from_dict(_load_json(result_file, "result"))
    except (ResultFormatError, ConfigError) as e:
        raise click.ClickException(str(e))
    report = verify_result(document.graph, result, gamma, _settings())
    click.echo(dump_json(report.to_dict()))
    if not report.passed:
        logger.warning("Verification failed", extra={"failures": report.failures})
        ctx.exit(CHECK_FAILED_EXIT_CODE)


@experiments.cli.command("experiment")
@click.argument("manifest_file", type=click.File("r"))
@click.option("--out", "out_prefix", required=True, help="Writes <out>.csv and <out>.jsonl.")
@click.option(
    "--jobs",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes; defaults to MDS_JOBS.",
)
@click.option(
    "--oracle-limit",
    type=click.IntRange(min=0),
    default=None,
    help="Largest instance handed to the exact oracle; defaults to MDS_ORACLE_LIMIT.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Offset added to every seed.")
def experiment_command(manifest_file, out_prefix, jobs, oracle_limit, seed):
    """Run a corpus manifest and write CSV and JSONL records."""
    try:
        name, specs, choice = load_manifest(_load_json(manifest_file, "manifest"))
    except ManifestError as e:
        raise click.ClickException(str(e))
    if seed:
        specs = [
            GenSpec(spec.family, spec.params, spec.seed + seed, spec.shuffle_ids)
            for spec in specs
        ]
    settings = _settings()
    if oracle_limit is not None:
        settings = replace(settings, oracle_limit=oracle_limit)
    if jobs is None:
        jobs = current_app.config["MDS_JOBS"]
    records = run_experiment(specs, choice, settings, jobs=jobs)

    with open(f"{out_prefix}.csv", "w", newline="") as csv_file:
        write_csv(records, csv_file)
    with open(f"{out_prefix}.jsonl", "w") as jsonl_file:
        write_jsonl(records, jsonl_file)

    failed = sum(1 for record in records if not record.passed)
    ratio = max_ratio(records)
    ratio_text = "n/a" if ratio is None else f"{ratio:.3f}"
    click.echo(
        f"{name}: {len(records)} instance(s), {failed} failed, max ratio {ratio_text}"
    )


@experiments.cli.command("reverify")
@click.argument("records_file", type=click.File("r"))
@click.pass_context
def reverify_command(ctx, records_file):
    """Re-run stored JSONL records and compare every check flag."""
    try:
        records = read_jsonl(records_file)
    except ResultFormatError as e:
        raise click.ClickException(str(e))
    mismatches = reverify(records, _settings())
    for mismatch in mismatches:
        click.echo(
            f"{json.dumps(mismatch.descriptor, sort_keys=True)} "
            f"{mismatch.field_name}: stored={mismatch.stored} now={mismatch.recomputed}"
        )
    click.echo(f"{len(records)} record(s) re-verified, {len(mismatches)} mismatch(es)")
    if mismatches:
        ctx.exit(CHECK_FAILED_EXIT_CODE)
