"""Scripted strategies on paths and cycles, the path potential function, and
a worst-case harness that certifies a script's bound against every reply."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable
from dataclasses import dataclass
from functools import partial

from .game import GameState, Player, Unwinnable, optimal_moves
from .graphs import Graph, generate, members, popcount, to_mask


class LayoutUnknown(ValueError):
    """The graph is not a path or cycle in the standard labeling."""


class NotStallersTurn(ValueError):
    pass


class ScriptError(RuntimeError):
    def __init__(self, state: GameState, move: object):
        self.state = state
        self.move = move
        super().__init__(
            f"script played illegal move {move!r} with dominated={members(state.dominated)}"
            f" and {state.to_move.value} to move"
        )


def layout(g: Graph) -> str:
    if g == generate("path", g.n):
        return "path"
    if g.n >= 3 and g == generate("cycle", g.n):
        return "cycle"
    raise LayoutUnknown("expected a path 0-1-...-(n-1) or the cycle closing it")


# ---------------------------------------------------------------------------
# runs and anti-runs


@dataclass(frozen=True)
class Segment:
    kind: str  # "run" or "antirun"
    start: int
    length: int

    def vertices(self, n: int) -> list[int]:
        return [(self.start + i) % n for i in range(self.length)]

    def ends(self, n: int) -> tuple[int, int]:
        return self.start, (self.start + self.length - 1) % n


def segments(s: GameState) -> list[Segment]:
    """Maximal runs and anti-runs of length >= 2, ordered by start vertex."""
    g = s.graph
    n = g.n
    cyclic = layout(g) == "cycle"
    status = [bool(s.dominated >> v & 1) for v in range(n)]

    def kind(flag: bool) -> str:
        return "run" if flag else "antirun"

    if cyclic and len(set(status)) == 1:
        return [Segment(kind(status[0]), 0, n)] if n >= 2 else []
    # on a cycle start scanning at a status change so no block is split
    origin = next(v for v in range(n) if status[v] != status[v - 1]) if cyclic else 0
    out = []
    i = 0
    while i < n:
        v0 = (origin + i) % n
        length = 1
        while i + length < n and status[(origin + i + length) % n] == status[v0]:
            length += 1
        if length >= 2:
            out.append(Segment(kind(status[v0]), v0, length))
        i += length
    return sorted(out, key=lambda seg: seg.start)


def staller_extremity_move(s: GameState) -> int | None:
    """A segment extremity that dominates exactly one new vertex.

    Runs are preferred to anti-runs, then the lowest vertex index.  On a path
    the two end vertices count as extremities too (tried last), since a leaf
    can never dominate more than one vertex.  Returns ``None`` when nothing
    qualifies (Staller is stalled).
    """
    if s.to_move is not Player.STALLER:
        raise NotStallersTurn("Staller's strategy queried on Dominator's turn")
    n = s.graph.n
    segs = segments(s)
    for kind in ("run", "antirun"):
        ends = {e for seg in segs if seg.kind == kind for e in seg.ends(n)}
        good = [e for e in sorted(ends) if popcount(s.newly_dominated(e)) == 1]
        if good:
            return good[0]
    if layout(s.graph) == "path":
        good = [e for e in (0, n - 1) if popcount(s.newly_dominated(e)) == 1]
        if good:
            return good[0]
    return None


# ---------------------------------------------------------------------------
# scripts: callables (state, aux, last_opponent_move) -> (move, aux)

Script = Callable[[GameState, Hashable, "int | None"], "tuple[int, Hashable]"]


def lowest_legal(s: GameState) -> int:
    return next(v for v, a in enumerate(s.graph.adj) if a & ~s.dominated)


def staller_extremity_script(s: GameState, aux: Hashable = None, last: int | None = None) -> tuple[int, Hashable]:
    move = staller_extremity_move(s)
    return (lowest_legal(s) if move is None else move), aux


staller_extremity_script.needs_last = False  # type: ignore[attr-defined]


def optimal_script(s: GameState, aux: Hashable = None, last: int | None = None) -> tuple[int, Hashable]:
    return min(optimal_moves(s)), aux


optimal_script.needs_last = False  # type: ignore[attr-defined]


@dataclass(frozen=True)
class CycleDominatorState:
    played: int = 0
    u_set: int = 0


def unplayable(g: Graph, played: int, dominated: int) -> int:
    """Vertices already played or with every neighbor already dominated."""
    stuck = to_mask(v for v, a in enumerate(g.adj) if not a & ~dominated)
    return played | stuck


def dominator_cycle_strategy(
    s: GameState,
    aux: CycleDominatorState,
    given_v: int,
    last_staller_move: int | None,
) -> tuple[int, CycleDominatorState]:
    """Dominator's response on C_n|v, with ``given_v`` playing the role of v_1.

    Opens with v_4.  After Staller plays v_i, answers v_{i+4} in the direction
    of a vertex she newly dominated when that vertex is unplayed and legal,
    otherwise the lowest-index legal move.  Returns the move and the updated
    bookkeeping.
    """
    g = s.graph
    n = g.n
    if layout(g) != "cycle" or n < 6 or n % 6 not in (0, 1, 3):
        raise ValueError(f"cycle strategy needs C_n with n >= 6 and n mod 6 in {{0,1,3}}, got n={n}")
    if s.to_move is not Player.DOMINATOR:
        raise ValueError("Dominator's strategy queried on Staller's turn")
    played = aux.played
    if last_staller_move is None:
        if played:
            raise ValueError("Staller's last move is required after the opening")
        move = (given_v + 3) % n
    else:
        i = last_staller_move
        before = 1 << given_v
        for p in members(played):
            before |= g.adj[p]
        fresh = g.adj[i] & ~before
        played |= 1 << i
        targets = []
        if fresh >> ((i + 1) % n) & 1:
            targets.append((i + 4) % n)
        if fresh >> ((i - 1) % n) & 1:
            targets.append((i - 4) % n)
        move = next(
            (t for t in targets if not played >> t & 1 and s.newly_dominated(t)),
            None,
        )
        if move is None:
            move = lowest_legal(s)
    played |= 1 << move
    after = s.dominated | g.adj[move]
    return move, CycleDominatorState(played, unplayable(g, played, after))


def dominator_cycle_script(given_v: int) -> Script:
    return partial(_cycle_script, given_v=given_v)


def _cycle_script(s, aux, last, *, given_v):
    return dominator_cycle_strategy(s, aux or CycleDominatorState(), given_v, last)


# ---------------------------------------------------------------------------
# worst-case certification


def simulate_worst_case(
    g: Graph,
    given: Iterable[int] | int,
    script: Script,
    scripted_side: Player,
    first: Player = Player.DOMINATOR,
    aux: Hashable = None,
) -> int:
    """Game length when ``scripted_side`` follows ``script`` and the opponent
    extremizes against it.

    For a scripted Dominator this is the longest game Staller can force (an
    upper-bound certificate); for a scripted Staller the shortest game
    Dominator can force (a lower-bound certificate).
    """
    if g.isolated_vertices():
        raise Unwinnable(g.isolated_vertices())
    full = g.full
    adj = g.adj
    pick = max if scripted_side is Player.DOMINATOR else min
    needs_last = getattr(script, "needs_last", True)
    memo: dict[tuple, int] = {}

    def rec(dom: int, mover: Player, aux: Hashable, last: int | None) -> int:
        if dom == full:
            return 0
        key = (dom, mover, aux, last if needs_last else None)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if mover is scripted_side:
            state = GameState(g, dom, mover)
            move, aux2 = script(state, aux, last)
            if not (isinstance(move, int) and 0 <= move < g.n and adj[move] & ~dom):
                raise ScriptError(state, move)
            val = 1 + rec(dom | adj[move], mover.other, aux2, move)
        else:
            val = 1 + pick(rec(dom | a, mover.other, aux, m) for m, a in enumerate(adj) if a & ~dom)
        memo[key] = val
        return val

    start = given if isinstance(given, int) else to_mask(given)
    return rec(start, first, aux, None)


# ---------------------------------------------------------------------------
# path partition and potential


def x_index(j: int) -> int:
    return 2 * (j - 1)


def y_index(j: int) -> int:
    return 2 * j - 1


def path_name(v: int) -> tuple[str, int]:
    """Inverse of x_index/y_index: ``('x', j)`` or ``('y', j)``."""
    return ("x", v // 2 + 1) if v % 2 == 0 else ("y", (v + 1) // 2)


@dataclass(frozen=True)
class PathBlocks:
    n: int
    x_blocks: tuple[tuple[int, ...], ...]
    y_blocks: tuple[tuple[int, ...], ...]

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.x_blocks + self.y_blocks


def _chunks(items: list[int], count: int) -> tuple[tuple[int, ...], ...]:
    head = [tuple(items[3 * i:3 * i + 3]) for i in range(count - 1)]
    return tuple(head + [tuple(items[3 * (count - 1):])])


def path_blocks(n: int) -> PathBlocks:
    if n < 2:
        raise ValueError(f"paths need n >= 2, got {n}")
    xs = [x_index(j) for j in range(1, (n + 1) // 2 + 1)]
    ys = [y_index(j) for j in range(1, n // 2 + 1)]
    pb = PathBlocks(n, _chunks(xs, -(-n // 6)), _chunks(ys, -(-(n - 1) // 6)))
    assert all(1 <= len(b) <= 3 for b in pb.blocks)
    return pb


def count_tdt(blocks: PathBlocks, dominated: int) -> tuple[int, int, int]:
    t = [0, 0, 0, 0]
    for block in blocks.blocks:
        t[sum(1 for v in block if not dominated >> v & 1)] += 1
    return t[1], t[2], t[3]


@dataclass(frozen=True)
class PotentialReport:
    m: int
    t1: int
    t2: int
    t3: int

    @property
    def f_value(self) -> int:
        return 2 * self.m - 1 + 2 * self.t3 + -(-3 * self.t2 // 2) + self.t1


def potential_f(n: int, m: int, dominated: Iterable[int] | int) -> PotentialReport:
    mask = dominated if isinstance(dominated, int) else to_mask(dominated)
    return PotentialReport(m, *count_tdt(path_blocks(n), mask))


def _opening_2mod6(k: int, letter: str, j: int) -> tuple[str, int]:
    explicit = {
        ("y", 3 * k + 1): ("y", 3 * k - 1),
        ("x", 3 * k + 1): ("y", 3 * k - 1),
        ("y", 3 * k - 1): ("x", 3 * k + 1),
        ("x", 3 * k - 1): ("y", 3 * k),
    }
    if (letter, j) in explicit:
        return explicit[(letter, j)]
    i = -(-j // 3)
    r = j % 3
    if r == 0:
        return ("x", 3 * i - 1) if letter == "y" else ("y", 3 * i - 2)
    if r == 1:
        return ("x", 3 * i) if letter == "y" else ("y", 3 * i - 1)
    return ("x", 3 * k + 1)


def _opening_4mod6(k: int, letter: str, j: int) -> tuple[str, int]:
    if j > 3 * k:
        return ("y", 3 * k + 1) if letter == "y" else ("x", 3 * k + 2)
    i = -(-j // 3)
    r = j % 3
    if r == 0:
        return ("x", 3 * i - 1) if letter == "y" else ("y", 3 * i - 2)
    if r == 1:
        return ("x", 3 * i) if letter == "y" else ("y", 3 * i - 1)
    return ("x", 3 * k + 2)


def dominator_first_move_path(n: int, v: int) -> int:
    """Dominator's opening on P_n|v for n = 6k+2 or 6k+4.

    For n in {2, 4} the lowest-index optimal move from the exact solver is
    returned instead of a table entry.
    """
    if n % 6 not in (2, 4) or n < 2:
        raise ValueError(f"first-move table needs n mod 6 in {{2,4}}, got n={n}")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} not on P_{n}")
    if n < 8:
        return min(optimal_moves(GameState.start(generate("path", n), [v])))
    letter, j = path_name(v)
    if n % 6 == 2:
        to_letter, to_j = _opening_2mod6((n - 2) // 6, letter, j)
    else:
        to_letter, to_j = _opening_4mod6((n - 4) // 6, letter, j)
    return x_index(to_j) if to_letter == "x" else y_index(to_j)


def noncritical_witness_path(n: int) -> int:
    """A vertex v of P_n with gamma_tg(P_n|v) >= gamma_tg(P_n)."""
    if n < 3:
        raise ValueError(f"witness needs n >= 3, got {n}")
    r = n % 6
    if r in (2, 4):
        raise ValueError(f"P_{n} is critical, no witness exists")
    if n in (5, 6):
        return 2
    if n >= 7 and r in (0, 1):
        return 3
    return 0


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class TraceStep:
    move_no: int
    player: Player
    vertex: int
    newly_dominated: int
    f_value: int | None = None

    def line(self) -> str:
        tail = "" if self.f_value is None else f", {self.f_value}"
        return f"{self.move_no}, {self.player.value}, {self.vertex}, {self.newly_dominated}{tail}"


def play_trace(
    g: Graph,
    given: Iterable[int] | int,
    dominator: Script,
    staller: Script,
    first: Player = Player.DOMINATOR,
) -> list[TraceStep]:
    """Play one game with both sides scripted; paths get the potential after
    each Dominator move."""
    state = GameState.start(g, given, first)
    try:
        is_path = layout(g) == "path" and g.n >= 2
    except LayoutUnknown:
        is_path = False
    auxes: dict[Player, Hashable] = {Player.DOMINATOR: None, Player.STALLER: None}
    scripts = {Player.DOMINATOR: dominator, Player.STALLER: staller}
    steps: list[TraceStep] = []
    last = None
    dominator_moves = 0
    while not state.is_terminal:
        mover = state.to_move
        move, auxes[mover] = scripts[mover](state, auxes[mover], last)
        fresh = popcount(state.newly_dominated(move)) if 0 <= move < g.n else 0
        if not fresh:
            raise ScriptError(state, move)
        state = GameState(g, state.dominated | g.adj[move], mover.other)
        f = None
        if mover is Player.DOMINATOR:
            dominator_moves += 1
            if is_path:
                f = potential_f(g.n, dominator_moves, state.dominated).f_value
        steps.append(TraceStep(len(steps) + 1, mover, move, fresh, f))
        last = move
    return steps


def format_trace(steps: list[TraceStep]) -> str:
    return "".join(step.line() + "\n" for step in steps)
