"""
Command-line interface.

Braid words are printed in application order: ``2 -1`` means sigma_2 is
applied first, then sigma_1 inverse.
"""

import functools
import json
import logging
from pathlib import Path
from typing import Optional

import click

from bruhat.bruhat_graph import directed_ball, full_bruhat_graph, path_of_factorization, restrict_to_subgroup
from bruhat.dot_export import to_dot
from cli.formatting import (
    factorization_to_json,
    format_element,
    format_factorization,
    format_table,
    format_word,
    parse_element,
    parse_factorization,
    parse_generator_list,
    parse_word,
)
from cli.group_library import GroupLibrary
from core.reflections import reflection_length, subgroup_closure
from hurwitz.braid_synthesis import extract_insertion_permutation, transitivity_braid
from hurwitz.factorization import apply_braid, hurwitz_orbit, sorted_orbit
from hurwitz.straightening import straighten
from parabolic.parabolic_analysis import red_enumerate
from parabolic import verification
from utils.config_manager import ConfigManager, get_config, set_config
from utils.error_handler import ContractError, CoxeterError, handle_error
from utils.logger import setup_logger

logger = logging.getLogger(__name__)


def reports_errors(func):
    """Turn CoxeterErrors into a message on stderr and exit status 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CoxeterError as e:
            message = handle_error(e, logger)
            click.echo(f"Error: {message}", err=True)
            raise SystemExit(2)

    return wrapper


def _load(ctx: click.Context, group: str):
    return ctx.obj["library"].load(group)


def _echo_json(data):
    click.echo(json.dumps(data, indent=2))


@click.group(name="coxhurwitz")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON configuration file merged over the defaults.")
@click.option("--log-file", type=click.Path(dir_okay=False), help="Also log to this file (rotating).")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config_path: Optional[str], log_file: Optional[str]):
    """Coxeter groups, Hurwitz orbits and braid witnesses."""
    if config_path:
        set_config(ConfigManager(Path(config_path)))
    level_name = "DEBUG" if verbose else str(get_config().get("logging.level", "INFO")).upper()
    setup_logger("", log_file=Path(log_file) if log_file else None, level=getattr(logging, level_name, logging.INFO))
    ctx.ensure_object(dict)
    ctx.obj.setdefault("library", GroupLibrary())


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("-f", "--factorization", "factorization_text", required=True,
              help="Reflections as ';'-separated words.")
@click.option("--budget", type=int, default=None, help="Maximum orbit size.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
@reports_errors
def orbit(ctx, group, factorization_text, budget, as_json):
    """Hurwitz orbit of a factorization."""
    system = _load(ctx, group)
    f = parse_factorization(system, factorization_text)
    members = sorted_orbit(hurwitz_orbit(f, budget=budget))

    if as_json:
        _echo_json({
            "group": system.name,
            "input": factorization_to_json(f),
            "size": len(members),
            "orbit": [factorization_to_json(g) for g in members],
        })
        return
    click.echo(f"Group: {system.name}")
    click.echo(f"Input: {format_factorization(f)}")
    click.echo(f"Product: {format_element(f.product)}")
    click.echo(f"Orbit size: {len(members)}")
    click.echo(format_table(
        ([k + 1, format_factorization(g)] for k, g in enumerate(members)),
        headers=["#", "factorization"]
    ))


@cli.command("straighten")
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("-f", "--factorization", "factorization_text", required=True,
              help="Reduced factorization as ';'-separated words.")
@click.option("-x", "--start", "start_text", default="e", show_default=True, help="Start vertex as a word.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
@reports_errors
def straighten_command(ctx, group, factorization_text, start_text, as_json):
    """Move a factorization to one whose path from x is a valley."""
    system = _load(ctx, group)
    f = parse_factorization(system, factorization_text)
    x = parse_element(system, start_text)
    result = straighten(f, x)

    if as_json:
        _echo_json({
            "group": system.name,
            "input": factorization_to_json(f),
            "x": list(x.canonical_word()),
            "factorization": factorization_to_json(result.factorization),
            "pivot": result.pivot,
            "witness": result.witness.to_list(),
            "lengths": list(result.path.lengths),
        })
        return
    click.echo(f"Factorization: {format_factorization(result.factorization)}")
    click.echo(f"Pivot: {result.pivot}")
    click.echo(f"Witness: {result.witness.to_string()}")
    click.echo(f"Lengths: {' '.join(str(n) for n in result.path.lengths)}")


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("-f", "--factorization", "factorization_text", required=True,
              help="Reduced factorization of c as ';'-separated words.")
@click.option("-c", "--coxeter-word", "c_text", required=True,
              help="Word of c with distinct letters, e.g. '1 2 3'.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
@reports_errors
def braid(ctx, group, factorization_text, c_text, as_json):
    """Braid carrying a factorization of c to (s_1, ..., s_n)."""
    system = _load(ctx, group)
    f = parse_factorization(system, factorization_text)
    c_word = parse_word(c_text)
    result = transitivity_braid(f, c_word)
    image = apply_braid(f, result)
    pi = extract_insertion_permutation(straighten(f).factorization, c_word)

    if as_json:
        _echo_json({
            "group": system.name,
            "input": factorization_to_json(f),
            "c": list(c_word),
            "insertion_permutation": list(pi.values),
            "braid": result.to_list(),
            "result": factorization_to_json(image),
        })
        return
    click.echo(f"Insertion permutation: {pi}")
    click.echo(f"Braid: {result.to_string()}")
    click.echo(f"Result: {format_factorization(image)}")


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("-w", "--word", "word_text", required=True, help="Element as a word.")
@click.option("--subgroup", "subgroup_text", default=None,
              help="Generating reflections of W' as ';'-separated words.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
@reports_errors
def redfac(ctx, group, word_text, subgroup_text, as_json):
    """Reduced reflection factorizations of w (in T or in T')."""
    system = _load(ctx, group)
    w = parse_element(system, word_text)
    scope = None
    if subgroup_text:
        scope = subgroup_closure(parse_generator_list(system, subgroup_text))
        if not scope.contains(w):
            raise ContractError("w lies in the subgroup", format_element(w))
    members = sorted_orbit(red_enumerate(w, scope))
    lt = reflection_length(w)

    if as_json:
        _echo_json({
            "group": system.name,
            "w": list(w.canonical_word()),
            "reflection_length": lt,
            "subgroup": None if scope is None else [list(t.canonical_word()) for t in scope.generators],
            "size": len(members),
            "factorizations": [factorization_to_json(g) for g in members],
        })
        return
    click.echo(f"w = {format_element(w)}, length {w.length()}, reflection length {lt}")
    click.echo(f"Count: {len(members)}")
    for g in members:
        click.echo(f"  {format_factorization(g)}")


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("--thm1", is_flag=True, help="Hurwitz orbit of (s1..sn) equals Red_T(c); braid witnesses.")
@click.option("--thm2", is_flag=True, help="Red_T(w) = Red_T'(w) on standard parabolic subgroups.")
@click.option("--lemma21", is_flag=True, help="l_T(w) = l(w) iff a reduced word has distinct letters.")
@click.option("--subgraph", is_flag=True, help="Bruhat graphs of two-reflection subgroups.")
@click.option("--straighten", "straighten_flag", is_flag=True, help="Randomized straightening suite.")
@click.option("--distance", is_flag=True, help="l_T against Bruhat graph distance.")
@click.option("--dihedral", is_flag=True, help="Dihedral Hurwitz orbits (group independent).")
@click.option("--all", "run_all", is_flag=True, help="Every battery applicable to the group.")
@click.option("--samples", type=int, default=None, help="Samples for --straighten.")
@click.option("--seed", type=int, default=None, help="Seed for --straighten.")
@click.option("--limit", type=int, default=None, help="Distinct two-reflection subgroups for --subgraph.")
@click.pass_context
@reports_errors
def check(ctx, group, thm1, thm2, lemma21, subgraph, straighten_flag, distance, dihedral,
          run_all, samples, seed, limit):
    """Run verification batteries; exit status 1 on any failure."""
    system = _load(ctx, group)
    finite = system.is_finite()
    selected = {
        "thm1": thm1, "thm2": thm2, "lemma21": lemma21, "subgraph": subgraph,
        "straighten": straighten_flag, "distance": distance, "dihedral": dihedral,
    }
    if run_all:
        selected = {name: True for name in selected}
    if not any(selected.values()):
        raise click.UsageError("Select at least one battery (e.g. --thm1 or --all).")

    needs_finite = {"thm1", "thm2", "lemma21", "subgraph", "distance"}
    graph = None
    reports = []
    for name, enabled in selected.items():
        if not enabled:
            continue
        if name in needs_finite and not finite:
            click.echo(f"[SKIP] {name}: {system.name} is infinite")
            continue
        if name in ("subgraph", "distance") and graph is None:
            graph = full_bruhat_graph(system)
        if name == "thm1":
            reports.append(verification.check_transitivity(system))
        elif name == "thm2":
            reports.append(verification.check_parabolic_restriction(system))
        elif name == "lemma21":
            reports.append(verification.check_length_equality(system))
        elif name == "subgraph":
            reports.append(verification.check_subgroup_graphs(system, limit=limit, graph=graph))
        elif name == "distance":
            reports.append(verification.check_bruhat_distance(system, graph=graph))
        elif name == "straighten":
            reports.append(verification.check_straightening(system, samples=samples, seed=seed))
        elif name == "dihedral":
            reports.append(verification.check_dihedral_orbits())

    for report in reports:
        click.echo(report.summary())
        for failure in report.failures[:10]:
            click.echo(f"    {failure}")
    if not all(r.passed for r in reports):
        ctx.exit(1)


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("--radius", type=int, default=None,
              help="Maximum vertex length (default: whole group, finite only).")
@click.option("--dot", "dot_path", default="-", show_default=True, help="Output path, '-' for stdout.")
@click.option("--subgroup", "subgroup_text", default=None,
              help="Restrict to the subgroup generated by these ';'-separated reflections.")
@click.pass_context
@reports_errors
def graph(ctx, group, radius, dot_path, subgroup_text):
    """Export the oriented Bruhat graph as DOT."""
    system = _load(ctx, group)
    if radius is None:
        if not system.is_finite():
            raise click.UsageError(f"{system.name} is infinite; give --radius.")
        bruhat = full_bruhat_graph(system)
    else:
        bruhat = directed_ball(system, radius)
    if subgroup_text:
        bruhat = restrict_to_subgroup(bruhat, subgroup_closure(parse_generator_list(system, subgroup_text)))

    text = to_dot(bruhat, name=system.name)
    if dot_path == "-":
        click.echo(text, nl=False)
    else:
        with open(dot_path, "w") as f:
            f.write(text)
        click.echo(
            f"Wrote {dot_path} ({bruhat.number_of_nodes()} vertices, {bruhat.number_of_edges()} edges)"
        )


@cli.command()
@click.pass_context
def groups(ctx):
    """List bundled group files."""
    entries = ctx.obj["library"].list_groups()
    click.echo(format_table(
        ([g["name"], g["description"]] for g in entries),
        headers=["name", "description"]
    ))


@cli.command()
@click.option("-g", "--group", required=True, help="Group file or bundled group name.")
@click.option("-f", "--factorization", "factorization_text", required=True,
              help="Reflections as ';'-separated words.")
@click.option("-x", "--start", "start_text", default="e", show_default=True, help="Start vertex as a word.")
@click.pass_context
@reports_errors
def path(ctx, group, factorization_text, start_text):
    """Vertices and length pattern of the path of a factorization."""
    system = _load(ctx, group)
    f = parse_factorization(system, factorization_text)
    p = path_of_factorization(parse_element(system, start_text), f.reflections)
    click.echo(format_table(
        ([k, format_element(v), n] for k, (v, n) in enumerate(zip(p.vertices, p.lengths))),
        headers=["#", "vertex", "length"]
    ))
    click.echo("Pattern: " + " ".join(d.value for d in p.direction_pattern))
