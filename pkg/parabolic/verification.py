"""
Verification batteries for transitivity, reduced factorization sets,
Bruhat subgraphs and straightening.

Each battery returns a CheckReport rather than raising, so that the CLI can
run several and report all failures.
"""

from dataclasses import dataclass, field
from itertools import combinations
import logging
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from bruhat.bruhat_graph import (
    bruhat_distance,
    classify_shape,
    full_bruhat_graph,
    graphs_agree,
    path_of_factorization,
    restrict_to_subgroup,
    subgroup_bruhat_graph,
)
from core.coxeter_system import CoxeterSystem, Element
from core.reflections import enumerate_reflections, reflection_length, subgroup_closure
from core.standard_types import standard_system
from hurwitz.factorization import Factorization, apply_braid, hurwitz_orbit, sigma_power_chain
from hurwitz.straightening import straighten
from hurwitz.braid_synthesis import transitivity_braid
from parabolic.parabolic_analysis import (
    distinct_letter_reduced_word,
    red_enumerate,
    standard_parabolic_subgroups,
    theorem2_check,
)
from utils.config_manager import get_config
from utils.error_handler import CoxeterError

logger = logging.getLogger(__name__)


@dataclass
class CheckReport:
    """Outcome of one verification battery."""

    name: str
    passed: bool = True
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    def fail(self, message: str):
        self.passed = False
        self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.cases} cases"
        if self.failures:
            text += f", {len(self.failures)} failures"
        return text


def _finish(report: CheckReport) -> CheckReport:
    if report.passed:
        logger.info(report.summary())
    else:
        logger.warning(report.summary())
    return report


def simple_factorization(system: CoxeterSystem, c_word: Optional[Sequence[int]] = None) -> Factorization:
    """(s_1, ..., s_n) for the given distinct-letter word (all generators by default)."""
    if c_word is None:
        c_word = range(1, system.rank + 1)
    return Factorization([system.generator(i) for i in c_word], system)


def check_transitivity(system: CoxeterSystem, with_braids: bool = True) -> CheckReport:
    """
    Hurwitz orbit of (s_1, ..., s_n) against brute-force Red_T(c), and a
    verified transitivity braid for every member.
    """
    report = CheckReport(f"transitivity {system.name}")
    c_word = tuple(range(1, system.rank + 1))
    start = simple_factorization(system, c_word)
    try:
        orbit = hurwitz_orbit(start)
        red = red_enumerate(start.product)
    except CoxeterError as e:
        report.fail(f"{type(e).__name__}: {e}")
        return _finish(report)

    report.cases = len(red)
    report.details.update(orbit_size=len(orbit), red_size=len(red))
    if orbit != red:
        report.fail(f"orbit size {len(orbit)} differs from |Red_T(c)| = {len(red)}")

    if with_braids:
        for f in red:
            try:
                braid = transitivity_braid(f, c_word)
                if apply_braid(f, braid) != start:
                    report.fail(f"braid {braid.to_string()} does not carry {f} to {start}")
            except CoxeterError as e:
                report.fail(f"{f}: {type(e).__name__}: {e}")
    return _finish(report)


def check_parabolic_restriction(system: CoxeterSystem, subgroups=None) -> CheckReport:
    """Red_T(w) = Red_T'(w) for every element w of every given subgroup."""
    report = CheckReport(f"reduced factorizations stay in parabolic subgroups of {system.name}")
    if subgroups is None:
        subgroups = [sub for _, sub in standard_parabolic_subgroups(system)]
    for sub in subgroups:
        for w in sub.elements:
            report.cases += 1
            try:
                if not theorem2_check(sub, w):
                    report.fail(
                        f"w = {w.label()} in <{', '.join(t.label() for t in sub.generators)}>"
                    )
            except CoxeterError as e:
                report.fail(f"{w.label()}: {type(e).__name__}: {e}")
    return _finish(report)


def check_subgroup_graphs(
    system: CoxeterSystem,
    limit: Optional[int] = None,
    graph=None
) -> CheckReport:
    """
    For two-reflection subgroups W', the Bruhat graph of W' built from its
    canonical simple system equals the induced subgraph on W'.

    Pairs generating an already checked subgroup are skipped, so ``limit``
    counts distinct subgroups.
    """
    report = CheckReport(f"reflection subgroup Bruhat graphs of {system.name}")
    if graph is None:
        graph = full_bruhat_graph(system)
    reflections = enumerate_reflections(system).reflections
    seen = set()
    for t1, t2 in combinations(reflections, 2):
        if limit is not None and report.cases >= limit:
            break
        try:
            sub = subgroup_closure([t1, t2])
        except CoxeterError as e:
            report.cases += 1
            report.fail(f"<{t1.label()}, {t2.label()}>: {type(e).__name__}: {e}")
            continue
        if sub.element_keys() in seen:
            continue
        seen.add(sub.element_keys())
        report.cases += 1
        try:
            if not graphs_agree(subgroup_bruhat_graph(sub), restrict_to_subgroup(graph, sub)):
                report.fail(f"<{t1.label()}, {t2.label()}>")
        except CoxeterError as e:
            report.fail(f"<{t1.label()}, {t2.label()}>: {type(e).__name__}: {e}")
    return _finish(report)


def check_length_equality(system: CoxeterSystem) -> CheckReport:
    """l_T(w) = l(w) iff w has a reduced word without repeated letters."""
    report = CheckReport(f"reflection length equals length ({system.name})")
    for w in system.enumerate_elements():
        report.cases += 1
        equal = reflection_length(w) == w.length()
        distinct = distinct_letter_reduced_word(w) is not None
        if equal != distinct:
            report.fail(f"{w.label()}: l_T = l is {equal}, distinct-letter word exists is {distinct}")
    return _finish(report)


def check_bruhat_distance(system: CoxeterSystem, graph=None) -> CheckReport:
    """Deletion-search l_T(w) against the undirected distance from e."""
    report = CheckReport(f"reflection length against Bruhat distance ({system.name})")
    if graph is None:
        graph = full_bruhat_graph(system)
    for w in system.enumerate_elements():
        report.cases += 1
        lt = reflection_length(w)
        d = bruhat_distance(graph, w)
        if lt != d:
            report.fail(f"{w.label()}: l_T = {lt}, distance = {d}")
    return _finish(report)


def random_reduced_factorization(
    system: CoxeterSystem,
    rng: np.random.Generator,
    reflections: Sequence[Element],
    size: int,
    max_length: int = 12,
    attempts: int = 50
) -> Factorization:
    """
    Random reduced factorization grown one reflection at a time.

    A reflection is appended only if it raises the reflection length of
    the product by one and keeps the product within ``max_length``.
    """
    entries: List[Element] = []
    product = system.identity
    for k in range(size):
        for _ in range(attempts):
            t = reflections[int(rng.integers(len(reflections)))]
            candidate = product * t
            if candidate.length() <= max_length and reflection_length(candidate) == k + 1:
                entries.append(t)
                product = candidate
                break
        else:
            break
    return Factorization(entries, system, product=product)


def check_straightening(
    system: CoxeterSystem,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    max_start_length: Optional[int] = None,
    reflection_depth: int = 5
) -> CheckReport:
    """
    Randomized straightening: valley shape, verified witness, preserved
    product, and pivot 0 from the identity.
    """
    config = get_config()
    if samples is None:
        samples = config.get_int("checks.straighten_samples")
    if seed is None:
        seed = config.get("checks.seed", 0)
    if max_start_length is None:
        max_start_length = config.get_int("checks.max_start_length")

    report = CheckReport(f"straightening ({system.name}, {samples} samples)")
    rng = np.random.default_rng(seed)
    if system.is_finite():
        reflections = enumerate_reflections(system).reflections
    else:
        reflections = enumerate_reflections(system, depth=reflection_depth).reflections

    for _ in range(samples):
        size = int(rng.integers(1, system.rank + 2))
        f = random_reduced_factorization(system, rng, reflections, size)
        x = system.random_element(rng, int(rng.integers(0, max_start_length + 1)))
        report.cases += 1
        try:
            for start in (x, system.identity):
                result = straighten(f, start)
                g = result.factorization
                if apply_braid(f, result.witness) != g:
                    report.fail(f"{f} from {start.label()}: witness does not reproduce result")
                if g.product != f.product:
                    report.fail(f"{f} from {start.label()}: product changed")
                if start.is_identity and result.pivot != 0:
                    report.fail(f"{f} from e: pivot {result.pivot}")
                shape = classify_shape(path_of_factorization(start, g.reflections))
                if not shape.is_valley or shape.pivot != result.pivot:
                    report.fail(f"{f} from {start.label()}: shape {shape}, pivot {result.pivot}")
        except CoxeterError as e:
            report.fail(f"{f} from {x.label()}: {type(e).__name__}: {e}")
    return _finish(report)


def check_dihedral_orbits(m_values: Iterable[int] = range(2, 9), infinite_steps: int = 10) -> CheckReport:
    """
    In I2(m) the orbit of (s1, s2) has m elements and is every reflection
    pair with product s1 s2; in I2(inf) the sigma_1 chain never repeats.
    """
    report = CheckReport("dihedral Hurwitz orbits")
    for m in m_values:
        report.cases += 1
        system = standard_system(f"I2({m})")
        start = simple_factorization(system)
        orbit = hurwitz_orbit(start)
        reflections = enumerate_reflections(system).reflections
        pairs = {
            Factorization((a, b), system, check=False)
            for a in reflections for b in reflections
            if a * b == start.product
        }
        if len(orbit) != m or set(orbit) != pairs:
            report.fail(f"I2({m}): orbit size {len(orbit)}, {len(pairs)} pairs with product s1s2")

    report.cases += 1
    system = standard_system("I2(inf)")
    start = simple_factorization(system)
    chain = sigma_power_chain(start, range(-infinite_steps, infinite_steps + 1))
    distinct = set(chain.values())
    report.details["infinite_chain_size"] = len(distinct)
    if len(distinct) != len(chain) or any(g.product != start.product for g in chain.values()):
        report.fail(f"I2(inf): {len(distinct)} distinct tuples in a chain of {len(chain)}")
    return _finish(report)
