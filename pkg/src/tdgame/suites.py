"""Named verification suites behind ``tdgame verify``."""

from __future__ import annotations

from dataclasses import dataclass

from .criticality import VerificationReport, closed_form_cycle, closed_form_path, verify_characterization, verify_family
from .game import Player, gamma_tg
from .graphs import ENUMERATION_CAP, generate
from .strategies import (
    dominator_cycle_script,
    dominator_first_move_path,
    noncritical_witness_path,
    potential_f,
    simulate_worst_case,
    staller_extremity_script,
)

SOLVER_CAP = 24


@dataclass
class SuiteResult:
    reports: list[VerificationReport]
    summary: str


def _range(lo: int | None, hi: int | None, default: tuple[int, int], floor: int, cap: int) -> range:
    lo = default[0] if lo is None else lo
    hi = default[1] if hi is None else hi
    if lo < floor:
        raise ValueError(f"minimum order is {floor}")
    if hi > cap:
        raise ValueError(f"maximum {hi} exceeds cap {cap}")
    return range(lo, hi + 1)


def _agree_summary(reports: list[VerificationReport]) -> str:
    bad = sum(not r.agree for r in reports)
    return f"{bad} disagreements / {len(reports)} instances"


def _family(name: str, ns: range) -> SuiteResult:
    reports = verify_family(name, ns)
    return SuiteResult(reports, _agree_summary(reports))


def _characterization(kind: str, n_max: int, jobs: int, unit: str) -> SuiteResult:
    summary = verify_characterization(kind, n_max, jobs=jobs)
    text = f"{len(summary.counterexamples)} counterexamples / {summary.scanned} {unit} scanned"
    return SuiteResult(summary.reports(), text)


def strategy_cycle(ns: range) -> list[VerificationReport]:
    reports = []
    for n in ns:
        g = generate("cycle", n)
        if n >= 6 and n % 6 in (0, 1, 3):
            bound = (2 * n - 1) // 3
            got = simulate_worst_case(g, [0], dominator_cycle_script(0), Player.DOMINATOR)
            reports.append(
                VerificationReport(f"cycle:{n}|0:dominator", f"<={bound}", f"<={bound}" if got <= bound else str(got))
            )
        elif n % 6 in (2, 4, 5):
            base, _ = closed_form_cycle(n)
            worst = min(
                simulate_worst_case(g, [v], staller_extremity_script, Player.STALLER) for v in range(n)
            )
            reports.append(
                VerificationReport(f"cycle:{n}|*:staller", f">={base}", f">={base}" if worst >= base else str(worst))
            )
    return reports


def strategy_path_fmove(ns: range) -> list[VerificationReport]:
    reports = []
    for n in ns:
        if n < 8 or n % 6 not in (2, 4):
            continue
        g = generate("path", n)
        k = (n - 2) // 6 if n % 6 == 2 else (n - 4) // 6
        expected_f = 4 * k + 1 if n % 6 == 2 else 4 * k + 2
        for v in range(n):
            d = dominator_first_move_path(n, v)
            dominated = 1 << v | g.adj[d]
            f = potential_f(n, 1, dominated).f_value
            value = gamma_tg(g, [v])
            computed = f"f={f},gamma<=f" if value <= f else f"f={f},gamma={value}"
            reports.append(VerificationReport(f"path:{n}|{v}", f"f={expected_f},gamma<=f", computed))
    return reports


def witnesses(ns: range) -> list[VerificationReport]:
    reports = []
    for n in ns:
        if n < 3 or n % 6 in (2, 4):
            continue
        g = generate("path", n)
        w = noncritical_witness_path(n)
        base, _ = closed_form_path(n)
        got, exact = gamma_tg(g, [w]), gamma_tg(g)
        reports.append(
            VerificationReport(f"path:{n}|{w}", f">={base}", f">={exact}" if got >= exact else str(got))
        )
    return reports


SUITES = {
    "cycles": lambda lo, hi, jobs: _family("cycles", _range(lo, hi, (3, 12), 3, SOLVER_CAP)),
    "paths": lambda lo, hi, jobs: _family("paths", _range(lo, hi, (2, 12), 2, SOLVER_CAP)),
    "char2": lambda lo, hi, jobs: _characterization(
        "two_critical", _range(1, hi, (1, 5), 1, ENUMERATION_CAP)[-1], jobs, "labeled graphs"
    ),
    "char3": lambda lo, hi, jobs: _characterization(
        "three_critical", _range(1, hi, (1, 6), 1, ENUMERATION_CAP)[-1], jobs, "labeled graphs"
    ),
    "join": lambda lo, hi, jobs: _characterization("join", _range(1, hi, (1, 4), 1, 4)[-1], jobs, "ordered pairs"),
    "strategy-cycle": lambda lo, hi, jobs: _plain(strategy_cycle(_range(lo, hi, (4, 12), 3, 18))),
    "strategy-path-fmove": lambda lo, hi, jobs: _plain(strategy_path_fmove(_range(lo, hi, (8, 16), 2, SOLVER_CAP))),
    "witnesses": lambda lo, hi, jobs: _plain(witnesses(_range(lo, hi, (3, 16), 3, SOLVER_CAP))),
}


def _plain(reports: list[VerificationReport]) -> SuiteResult:
    return SuiteResult(reports, _agree_summary(reports))


def run_suite(name: str, lo: int | None = None, hi: int | None = None, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](lo, hi, jobs)
