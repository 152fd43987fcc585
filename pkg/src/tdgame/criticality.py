"""Criticality profiles, closed forms for cycles and paths, and the
structural characterizations of 2- and 3-critical graphs and joins."""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .game import IsolatedVertex, Player, Solver
from .graph6 import emit_g6
from .graphs import (
    Graph,
    dominating_vertices,
    enumerate_labeled_graphs,
    generate,
    is_one_plus_clique,
    join,
    labeled_graph_count,
    open_twins,
)

JOBS_ENV = "TDGAME_JOBS"


@dataclass(frozen=True)
class CriticalityProfile:
    base_value: int
    spectrum: tuple[int, ...]
    is_critical: bool
    class_k: int | None

    def is_k_critical(self, k: int) -> bool:
        return self.is_critical and self.class_k == k


def profile(g: Graph, solver: Solver | None = None) -> CriticalityProfile:
    """gamma_tg(G) and gamma_tg(G|v) for every vertex v."""
    solver = solver or Solver(g)
    base = solver.value(0, Player.DOMINATOR)
    spectrum = tuple(solver.value(1 << v, Player.DOMINATOR) for v in range(g.n))
    critical = all(s < base for s in spectrum)
    return CriticalityProfile(base, spectrum, critical, base if critical else None)


def closed_form_cycle(n: int) -> tuple[int, bool]:
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    value = (2 * n + 1) // 3
    if n % 6 == 4:
        value -= 1
    return value, n % 6 in (0, 1, 3)


def closed_form_path(n: int) -> tuple[int, bool]:
    if n < 2:
        raise ValueError(f"paths need n >= 2, got {n}")
    value = 2 * n // 3 if n % 6 == 5 else -(-2 * n // 3)
    return value, n % 6 in (2, 4)


def char_2critical(g: Graph) -> bool:
    return g.n >= 2 and g.is_complete()


def char_3critical(g: Graph) -> bool:
    """Open twin-free, no dominating vertex, and every vertex of degree at most
    n-3 has a non-neighbor of degree n-2."""
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertex(isolated)
    if open_twins(g) or dominating_vertices(g):
        return False
    n = g.n
    degs = g.degrees()
    near = [u for u in range(n) if degs[u] == n - 2]
    for v in range(n):
        if degs[v] <= n - 3 and not any(u != v and not g.has_edge(u, v) for u in near):
            return False
    return True


def char_join_3critical(g1: Graph, g2: Graph) -> bool:
    def ok(g: Graph) -> bool:
        if is_one_plus_clique(g):
            return True
        return not g.isolated_vertices() and char_3critical(g)

    return ok(g1) and ok(g2)


@dataclass(frozen=True)
class VerificationReport:
    instance_id: str
    predicted: str
    computed: str

    @property
    def agree(self) -> bool:
        return self.predicted == self.computed

    def tsv(self) -> str:
        return f"{self.instance_id}\t{self.predicted}\t{self.computed}\t{str(self.agree).lower()}"


REPORT_HEADER = "instance_id\tpredicted\tcomputed\tagree"

FAMILIES = {
    "cycle_values": ("cycle", closed_form_cycle, "value"),
    "cycle_criticality": ("cycle", closed_form_cycle, "critical"),
    "cycles": ("cycle", closed_form_cycle, "both"),
    "path_values": ("path", closed_form_path, "value"),
    "path_criticality": ("path", closed_form_path, "critical"),
    "paths": ("path", closed_form_path, "both"),
}


def _fmt(value: int, critical: bool, what: str) -> str:
    if what == "value":
        return str(value)
    if what == "critical":
        return str(critical).lower()
    return f"{value},{str(critical).lower()}"


def verify_family(family: str, n_range: Iterable[int]) -> list[VerificationReport]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    kind, closed_form, what = FAMILIES[family]
    reports = []
    for n in n_range:
        value, critical = closed_form(n)
        solver = Solver(generate(kind, n))
        if what == "value":
            got_value, got_critical = solver.value(0), critical
        else:
            prof = profile(solver.graph, solver)
            got_value, got_critical = prof.base_value, prof.is_critical
        reports.append(
            VerificationReport(
                f"{kind}:{n}", _fmt(value, critical, what), _fmt(got_value, got_critical, what)
            )
        )
    return reports


@dataclass
class CharacterizationSummary:
    kind: str
    n_max: int
    scanned: int = 0
    predicate_true: dict[int, int] = field(default_factory=dict)
    profile_true: dict[int, int] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: CharacterizationSummary) -> None:
        self.scanned += other.scanned
        for src, dst in ((other.predicate_true, self.predicate_true), (other.profile_true, self.profile_true)):
            for n, c in src.items():
                dst[n] = dst.get(n, 0) + c
        self.counterexamples.extend(other.counterexamples)

    def reports(self) -> list[VerificationReport]:
        """One row per order (or factor-size pair), then one per counterexample."""
        rows = []
        for key in sorted(set(self.predicate_true) | set(self.profile_true)):
            rows.append(
                VerificationReport(
                    f"{self.kind}:{key}",
                    str(self.predicate_true.get(key, 0)),
                    str(self.profile_true.get(key, 0)),
                )
            )
        for ce in sorted(self.counterexamples):
            rows.append(VerificationReport(f"counterexample:{ce}", "agree", "disagree"))
        return rows


CHAR_KINDS = {"two_critical": (char_2critical, 2), "three_critical": (char_3critical, 3)}


def _check_chunk(kind: str, n: int, start: int, stop: int) -> CharacterizationSummary:
    predicate, k = CHAR_KINDS[kind]
    out = CharacterizationSummary(kind, n)
    out.predicate_true[n] = out.profile_true[n] = 0
    for g in enumerate_labeled_graphs(n, min_degree=1, start=start, stop=stop):
        out.scanned += 1
        claimed = predicate(g)
        actual = profile(g).is_k_critical(k)
        out.predicate_true[n] += claimed
        out.profile_true[n] += actual
        if claimed != actual:
            out.counterexamples.append(emit_g6(g))
    return out


def _all_small_graphs(n_max: int) -> list[Graph]:
    return [g for n in range(1, n_max + 1) for g in enumerate_labeled_graphs(n)]


def _check_join_chunk(n_max: int, first: list[int]) -> CharacterizationSummary:
    graphs = _all_small_graphs(n_max)
    out = CharacterizationSummary("join", n_max)
    for i in first:
        g1 = graphs[i]
        for g2 in graphs:
            key = f"{g1.n}+{g2.n}"
            g = join(g1, g2)
            claimed = char_join_3critical(g1, g2)
            actual = profile(g).is_k_critical(3)
            out.scanned += 1
            out.predicate_true[key] = out.predicate_true.get(key, 0) + claimed
            out.profile_true[key] = out.profile_true.get(key, 0) + actual
            if claimed != actual:
                out.counterexamples.append(f"{emit_g6(g1)}+{emit_g6(g2)}")
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _run(tasks: list[tuple], fn, jobs: int) -> Iterator[CharacterizationSummary]:
    if jobs <= 1:
        for t in tasks:
            yield fn(*t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, *zip(*tasks))


def verify_characterization(kind: str, n_max: int, jobs: int | None = None) -> CharacterizationSummary:
    """Exhaustively compare a structural predicate with exact profiles.

    ``two_critical``/``three_critical`` scan every labeled graph with minimum
    degree 1 on at most ``n_max`` vertices; ``join`` scans every ordered pair
    of labeled graphs with at most ``n_max`` vertices each.
    """
    jobs = default_jobs() if jobs is None else jobs
    summary = CharacterizationSummary(kind, n_max)
    if kind == "join":
        count = sum(labeled_graph_count(n) for n in range(1, n_max + 1))
        parts = max(1, jobs * 4)
        tasks = [(n_max, list(range(p, count, parts))) for p in range(parts)]
        results = _run(tasks, _check_join_chunk, jobs)
    elif kind in CHAR_KINDS:
        tasks = []
        for n in range(1, n_max + 1):
            total = labeled_graph_count(n)
            step = max(1, total // max(1, jobs * 4))
            tasks += [(kind, n, s, min(s + step, total)) for s in range(0, total, step)]
        results = _run(tasks, _check_chunk, jobs)
    else:
        raise ValueError(f"unknown characterization {kind!r}")
    for part in results:
        summary.merge(part)
    summary.counterexamples.sort()
    return summary
