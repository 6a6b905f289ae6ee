"""Whole-graph reports tying structure, characterization and oracle together.

analyze() is the entry point behind the CLI.  It collects cycle flags and
structural tables, applies the closed-form engines per connected component
(combining weight spaces as direct sums), runs the enumeration oracle when
the graph fits the budget, and cross-checks everything that was computed
two ways.  Characterization preconditions that fail make a section
inapplicable with a reason; they never raise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .generators import GeneratorConfig, generate_family
from .graphs import Graph, components, contains_cycle_of_length, induced_subgraph
from .linalg import SubspaceBasis, row_space, subspace_contains, subspace_equal, sum_spaces
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumerationBudget,
    SetFamily,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    set_weight,
    weight_space_from_family,
)
from .structure import SimplicialPartition, StructureSummary, simplicial_partition, structure_summary
from .weightspace import (
    SpecialForm,
    dimension_checks,
    recognize_well_covered,
    well_covered_weight_basis,
    well_dominated_weight_basis,
)

CYCLE_FLAG_LENGTHS = (3, 4, 5, 6, 7)


# -- component-wise wrappers -----------------------------------------------------


@dataclass(frozen=True)
class GlobalCharacterization:
    """A weight-space basis assembled across components as a direct sum."""

    basis: SubspaceBasis
    component_forms: tuple[SpecialForm, ...]
    notes: tuple[str, ...]


def _embed_vector(vec, comp_sorted: list[int], n: int) -> list[Fraction]:
    wide = [Fraction(0)] * n
    for local, value in enumerate(vec):
        wide[comp_sorted[local]] = Fraction(value)
    return wide


def _combine_components(g: Graph, engine, budget: EnumerationBudget) -> GlobalCharacterization:
    spaces: list[SubspaceBasis] = []
    forms: list[SpecialForm] = []
    notes: list[str] = []
    for comp in components(g):
        comp_sorted = sorted(comp)
        sub, _ = induced_subgraph(g, comp)
        outcome = engine(sub, budget)
        embedded = [_embed_vector(row, comp_sorted, g.n) for row in outcome.basis.rows]
        spaces.append(row_space(embedded, g.n))
        forms.append(outcome.special_form)
        notes.extend(f"component at {comp_sorted[0]}: {note}" for note in outcome.notes)
    return GlobalCharacterization(sum_spaces(spaces, g.n), tuple(forms), tuple(notes))


def _require_family(g: Graph, lengths: tuple[int, ...]) -> None:
    if g.n == 0:
        raise ValueError("the empty graph has no components to characterize")
    for k in lengths:
        if contains_cycle_of_length(g, k):
            raise ValueError(f"characterization requires no {k}-cycle, but one is present")


def characterized_wcw_basis(
    g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> GlobalCharacterization:
    """Equal-weight space of maximal independent sets, any number of components."""
    _require_family(g, (4, 5, 6))
    return _combine_components(g, well_covered_weight_basis, budget)


def characterized_wwd_basis(
    g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> GlobalCharacterization:
    """Equal-weight space of minimal dominating sets, any number of components."""
    _require_family(g, (4, 5, 6))
    return _combine_components(g, well_dominated_weight_basis, budget)


@dataclass(frozen=True)
class GlobalRecognition:
    well_covered: bool
    well_dominated: bool
    component_clauses: tuple[str, ...]


def recognized_status(g: Graph) -> GlobalRecognition:
    """Recognition for graphs without 4- and 5-cycles, component by component."""
    _require_family(g, (4, 5))
    clauses: list[str] = []
    holds_all = True
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        outcome = recognize_well_covered(sub)
        clauses.append(outcome.clause if outcome.holds else "unrecognized")
        holds_all = holds_all and outcome.holds
    return GlobalRecognition(holds_all, holds_all, tuple(clauses))


# -- report sections --------------------------------------------------------------


@dataclass(frozen=True)
class RecognitionSection:
    applicable: bool
    reason: str | None
    well_covered: bool | None
    well_dominated: bool | None
    component_clauses: tuple[str, ...]


@dataclass(frozen=True)
class CharacterizationSection:
    applicable: bool
    reason: str | None
    special_forms: tuple[str, ...]
    wcw: SubspaceBasis | None
    wwd: SubspaceBasis | None
    notes: tuple[str, ...]


@dataclass(frozen=True)
class OracleSection:
    independent_available: bool
    dominating_available: bool
    skip_reasons: tuple[str, ...]
    maximal_independent_count: int | None
    minimal_dominating_count: int | None
    domination: int | None
    independent_domination: int | None
    independence: int | None
    upper_domination: int | None
    well_covered: bool | None
    well_dominated: bool | None
    wcw: SubspaceBasis | None
    wwd: SubspaceBasis | None


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass(frozen=True)
class AnalysisReport:
    vertex_count: int
    edge_count: int
    connected: bool
    component_members: tuple[tuple[int, ...], ...]
    cycles_present: dict[int, bool]
    structure: StructureSummary
    partition: SimplicialPartition | None
    recognition: RecognitionSection
    characterization: CharacterizationSection
    oracle: OracleSection
    checks: tuple[CheckResult, ...]

    @property
    def failed_checks(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status == "fail")

    def to_json_dict(self) -> dict:
        s = self.structure
        part = self.partition
        return {
            "schema_version": 1,
            "graph": {
                "vertex_count": self.vertex_count,
                "edge_count": self.edge_count,
                "connected": self.connected,
                "components": [list(c) for c in self.component_members],
            },
            "cycles_present": {str(k): self.cycles_present[k] for k in CYCLE_FLAG_LENGTHS},
            "structure": {
                "fringe": sorted(s.fringe),
                "anchored_fringe": sorted(s.anchored_fringe),
                "zero_forced_fringe": sorted(s.zero_forced_fringe),
                "ear_partners": {str(v): list(s.ear_partners[v]) for v in sorted(s.ear_partners)},
                "confined_neighbors": {str(v): sorted(s.confined[v]) for v in sorted(s.confined)},
                "simplicial": sorted(s.simplicial),
                "simplicial_partition": None
                if part is None
                else {
                    "centers": [c for c, _ in sorted(zip(part.centers, part.cells))],
                    "cells": [sorted(cell) for _, cell in sorted(zip(part.centers, part.cells))],
                },
            },
            "recognition": {
                "applicable": self.recognition.applicable,
                "reason": self.recognition.reason,
                "well_covered": self.recognition.well_covered,
                "well_dominated": self.recognition.well_dominated,
                "component_clauses": list(self.recognition.component_clauses),
            },
            "characterization": {
                "applicable": self.characterization.applicable,
                "reason": self.characterization.reason,
                "special_forms": list(self.characterization.special_forms),
                "wcw": None if self.characterization.wcw is None else self.characterization.wcw.to_json_dict(),
                "wwd": None if self.characterization.wwd is None else self.characterization.wwd.to_json_dict(),
                "notes": list(self.characterization.notes),
            },
            "oracle": {
                "independent_available": self.oracle.independent_available,
                "dominating_available": self.oracle.dominating_available,
                "skip_reasons": list(self.oracle.skip_reasons),
                "maximal_independent_count": self.oracle.maximal_independent_count,
                "minimal_dominating_count": self.oracle.minimal_dominating_count,
                "domination": self.oracle.domination,
                "independent_domination": self.oracle.independent_domination,
                "independence": self.oracle.independence,
                "upper_domination": self.oracle.upper_domination,
                "well_covered": self.oracle.well_covered,
                "well_dominated": self.oracle.well_dominated,
                "wcw": None if self.oracle.wcw is None else self.oracle.wcw.to_json_dict(),
                "wwd": None if self.oracle.wwd is None else self.oracle.wwd.to_json_dict(),
            },
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks
            ],
        }


# -- report assembly ---------------------------------------------------------------


def _inapplicability_reason(g: Graph, lengths: tuple[int, ...]) -> str | None:
    if g.n == 0:
        return "empty graph"
    present = [k for k in lengths if contains_cycle_of_length(g, k)]
    if present:
        return "contains " + ", ".join(f"a {k}-cycle" for k in present)
    return None


def _oracle_section(g: Graph, budget: EnumerationBudget) -> OracleSection:
    skip_reasons: list[str] = []
    ind: SetFamily | None = None
    dom: SetFamily | None = None
    try:
        ind = enumerate_maximal_independent_sets(g, budget)
    except BudgetExceededError as exc:
        skip_reasons.append(f"maximal independent sets: {exc}")
    try:
        dom = enumerate_minimal_dominating_sets(g, budget)
    except BudgetExceededError as exc:
        skip_reasons.append(f"minimal dominating sets: {exc}")
    ind_sizes = ind.sizes() if ind is not None else ()
    dom_sizes = dom.sizes() if dom is not None else ()
    return OracleSection(
        independent_available=ind is not None,
        dominating_available=dom is not None,
        skip_reasons=tuple(skip_reasons),
        maximal_independent_count=None if ind is None else len(ind),
        minimal_dominating_count=None if dom is None else len(dom),
        domination=min(dom_sizes) if dom_sizes else None,
        independent_domination=min(ind_sizes) if ind_sizes else None,
        independence=max(ind_sizes) if ind_sizes else None,
        upper_domination=max(dom_sizes) if dom_sizes else None,
        well_covered=None if ind is None else len(set(ind_sizes)) <= 1,
        well_dominated=None if dom is None else len(set(dom_sizes)) <= 1,
        wcw=None if ind is None else weight_space_from_family(ind),
        wwd=None if dom is None else weight_space_from_family(dom),
    )


def _dimension_check_results(g: Graph, budget: EnumerationBudget) -> list[CheckResult]:
    wwd_failures: list[str] = []
    wcw_failures: list[str] = []
    flagged: list[str] = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        report = dimension_checks(sub, budget)
        anchor = min(comp)
        if report.special_form is not SpecialForm.GENERAL:
            flagged.append(f"component at {anchor} is {report.special_form.value}")
            continue
        if not report.anchored_count_matches:
            wwd_failures.append(
                f"component at {anchor}: dimension {report.wwd_dimension} vs "
                f"{report.anchored_fringe_size} anchored fringe vertices "
                f"({'; '.join(report.diagnostics)})"
            )
        if not report.fringe_independence_matches:
            wcw_failures.append(
                f"component at {anchor}: dimension {report.wcw_dimension} vs "
                f"fringe independence {report.fringe_independence}"
            )
    flag_note = "; ".join(flagged)
    return [
        CheckResult(
            "wwd_dimension_equals_anchored_fringe",
            "fail" if wwd_failures else "pass",
            "; ".join(wwd_failures) if wwd_failures else flag_note,
        ),
        CheckResult(
            "wcw_dimension_equals_fringe_independence",
            "fail" if wcw_failures else "pass",
            "; ".join(wcw_failures) if wcw_failures else flag_note,
        ),
    ]


def analyze(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> AnalysisReport:
    """Full report: structure, recognition, weight spaces, oracle, cross-checks."""
    cycles = {k: contains_cycle_of_length(g, k) if g.n else False for k in CYCLE_FLAG_LENGTHS}
    structure = structure_summary(g, budget)
    partition = simplicial_partition(g)

    recognition_reason = _inapplicability_reason(g, (4, 5))
    if recognition_reason is None:
        status = recognized_status(g)
        recognition = RecognitionSection(
            True, None, status.well_covered, status.well_dominated, status.component_clauses
        )
    else:
        recognition = RecognitionSection(False, recognition_reason, None, None, ())

    characterization_reason = _inapplicability_reason(g, (4, 5, 6))
    if characterization_reason is None:
        wcw = characterized_wcw_basis(g, budget)
        wwd = characterized_wwd_basis(g, budget)
        characterization = CharacterizationSection(
            True,
            None,
            tuple(form.value for form in wcw.component_forms),
            wcw.basis,
            wwd.basis,
            wcw.notes + wwd.notes,
        )
    else:
        characterization = CharacterizationSection(
            False, characterization_reason, (), None, None, ()
        )

    oracle = _oracle_section(g, budget)
    checks = _build_checks(g, characterization, recognition, oracle, budget)
    return AnalysisReport(
        vertex_count=g.n,
        edge_count=g.edge_count,
        connected=g.is_connected,
        component_members=tuple(tuple(sorted(c)) for c in components(g)),
        cycles_present=cycles,
        structure=structure,
        partition=partition,
        recognition=recognition,
        characterization=characterization,
        oracle=oracle,
        checks=tuple(checks),
    )


def _build_checks(
    g: Graph,
    characterization: CharacterizationSection,
    recognition: RecognitionSection,
    oracle: OracleSection,
    budget: EnumerationBudget,
) -> list[CheckResult]:
    checks: list[CheckResult] = []

    if oracle.domination is not None and oracle.independence is not None:
        chain_ok = (
            oracle.domination
            <= oracle.independent_domination
            <= oracle.independence
            <= oracle.upper_domination
        )
        checks.append(
            CheckResult(
                "domination_chain",
                "pass" if chain_ok else "fail",
                f"{oracle.domination} <= {oracle.independent_domination} <= "
                f"{oracle.independence} <= {oracle.upper_domination}",
            )
        )
    else:
        checks.append(CheckResult("domination_chain", "skip", "oracle unavailable"))

    for name, recognized, enumerated in (
        ("well_covered_recognition_matches_oracle", recognition.well_covered, oracle.well_covered),
        ("well_dominated_recognition_matches_oracle", recognition.well_dominated, oracle.well_dominated),
    ):
        if recognized is None or enumerated is None:
            checks.append(CheckResult(name, "skip", "recognition or oracle unavailable"))
        else:
            checks.append(
                CheckResult(
                    name,
                    "pass" if recognized == enumerated else "fail",
                    f"recognized {recognized}, enumerated {enumerated}",
                )
            )

    for name, characterized, enumerated in (
        ("wcw_matches_oracle", characterization.wcw, oracle.wcw),
        ("wwd_matches_oracle", characterization.wwd, oracle.wwd),
    ):
        if characterized is None or enumerated is None:
            checks.append(CheckResult(name, "skip", "characterization or oracle unavailable"))
        else:
            equal = subspace_equal(characterized, enumerated)
            checks.append(
                CheckResult(
                    name,
                    "pass" if equal else "fail",
                    f"dimensions {characterized.dimension} vs {enumerated.dimension}",
                )
            )

    wcw_basis = characterization.wcw if characterization.wcw is not None else oracle.wcw
    wwd_basis = characterization.wwd if characterization.wwd is not None else oracle.wwd
    if wcw_basis is None or wwd_basis is None:
        checks.append(CheckResult("wwd_contained_in_wcw", "skip", "bases unavailable"))
    else:
        contained = subspace_contains(wcw_basis, wwd_basis)
        checks.append(
            CheckResult(
                "wwd_contained_in_wcw",
                "pass" if contained else "fail",
                f"dimensions {wwd_basis.dimension} <= {wcw_basis.dimension}",
            )
        )

    if characterization.applicable:
        checks.extend(_dimension_check_results(g, budget))
    else:
        skip_detail = characterization.reason or ""
        checks.append(CheckResult("wwd_dimension_equals_anchored_fringe", "skip", skip_detail))
        checks.append(CheckResult("wcw_dimension_equals_fringe_independence", "skip", skip_detail))
    return checks


# -- randomized property sweep (CLI `proptest`) --------------------------------------


@dataclass(frozen=True)
class SweepReport:
    graphs_checked: int
    family_instances: int
    failures: tuple[str, ...]
    skips: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def run_property_sweep(
    cfg: GeneratorConfig, budget: EnumerationBudget = DEFAULT_BUDGET
) -> SweepReport:
    """Generate a seeded family and assert the invariants each graph supports.

    Every graph: forbidden cycles really absent, cardinality and weighted
    domination chains hold.  Connected graphs without 4- and 5-cycles:
    recognition agrees with the oracle on both properties.  Additionally
    6-cycle-free: characterized weight spaces equal the oracle spaces and
    nest correctly.
    """
    weight_rng = random.Random(cfg.seed ^ 0x5DEECE66D)
    failures: list[str] = []
    skips: list[str] = []
    checked = 0
    family_instances = 0
    forbidden = set(cfg.forbidden_cycles)
    for index, g in enumerate(generate_family(cfg)):
        checked += 1
        label = f"graph {index} (n={g.n}, m={g.edge_count})"
        for k in sorted(forbidden):
            if g.n and contains_cycle_of_length(g, k):
                failures.append(f"{label}: generator emitted a {k}-cycle")
        weights = [Fraction(weight_rng.randint(0, 12), weight_rng.randint(1, 4)) for _ in range(g.n)]
        try:
            ind = enumerate_maximal_independent_sets(g, budget)
            dom = enumerate_minimal_dominating_sets(g, budget)
        except BudgetExceededError as exc:
            skips.append(f"{label}: {exc}")
            continue
        if not (min(dom.sizes()) <= min(ind.sizes()) <= max(ind.sizes()) <= max(dom.sizes())):
            failures.append(f"{label}: domination chain violated")
        ind_weights = [set_weight(weights, s) for s in ind.sets]
        dom_weights = [set_weight(weights, s) for s in dom.sets]
        if not (min(dom_weights) <= min(ind_weights) <= max(ind_weights) <= max(dom_weights)):
            failures.append(f"{label}: weighted domination chain violated")
        if g.n == 0 or not {4, 5} <= forbidden:
            continue
        if g.is_connected:
            family_instances += 1
        recognized = recognized_status(g).well_covered
        wc = len(set(ind.sizes())) == 1
        wd = len(set(dom.sizes())) == 1
        if recognized != wc:
            failures.append(f"{label}: recognition says {recognized}, oracle says {wc}")
        if wc != wd:
            failures.append(f"{label}: well-covered {wc} but well-dominated {wd}")
        if not {4, 5, 6} <= forbidden:
            continue
        wcw = characterized_wcw_basis(g, budget).basis
        wwd = characterized_wwd_basis(g, budget).basis
        if not subspace_equal(wcw, weight_space_from_family(ind)):
            failures.append(f"{label}: characterized equal-weight space (independent) is wrong")
        if not subspace_equal(wwd, weight_space_from_family(dom)):
            failures.append(f"{label}: characterized equal-weight space (dominating) is wrong")
        if not subspace_contains(wcw, wwd):
            failures.append(f"{label}: dominating weight space not inside independent one")
    return SweepReport(checked, family_instances, tuple(failures), tuple(skips))


__all__ = [
    "AnalysisReport",
    "CharacterizationSection",
    "CheckResult",
    "GlobalCharacterization",
    "GlobalRecognition",
    "OracleSection",
    "RecognitionSection",
    "SweepReport",
    "analyze",
    "characterized_wcw_basis",
    "characterized_wwd_basis",
    "recognized_status",
    "run_property_sweep",
]
