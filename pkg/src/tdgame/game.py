"""Exact values of the total domination game.

A position is fully described by the set of vertices already totally
dominated and the player to move: a vertex that was played once can never
dominate anything new, so the history of played vertices is irrelevant.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, members, to_mask


class Player(enum.Enum):
    DOMINATOR = "Dominator"
    STALLER = "Staller"

    @property
    def other(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


class IsolatedVertex(ValueError):
    """The graph has vertices with no neighbor, so they can never be totally dominated."""

    def __init__(self, vertices: Iterable[int]):
        self.vertices = sorted(vertices)
        super().__init__(f"isolated vertices {self.vertices} can never be totally dominated")


class Unwinnable(IsolatedVertex):
    """The game cannot terminate on this graph."""


class IllegalMove(ValueError):
    pass


class InvalidSet(ValueError):
    pass


class TerminalState(ValueError):
    pass


def check_total_dominatable(g: Graph) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertex(isolated)


def _as_mask(g: Graph, given: Iterable[int] | int) -> int:
    mask = given if isinstance(given, int) else to_mask(given)
    if mask < 0 or mask & ~g.full:
        raise InvalidSet(f"given set is not a subset of V(G) for n={g.n}")
    return mask


@dataclass(frozen=True)
class GameState:
    graph: Graph
    dominated: int
    to_move: Player = Player.DOMINATOR

    @classmethod
    def start(cls, g: Graph, given: Iterable[int] | int = (), to_move: Player = Player.DOMINATOR) -> GameState:
        return cls(g, _as_mask(g, given), to_move)

    @property
    def dominated_set(self) -> frozenset[int]:
        return frozenset(members(self.dominated))

    @property
    def is_terminal(self) -> bool:
        return self.dominated == self.graph.full

    def newly_dominated(self, v: int) -> int:
        """Bitmask of vertices that playing ``v`` would dominate for the first time."""
        return self.graph.adj[v] & ~self.dominated


def legal_moves(s: GameState) -> frozenset[int]:
    dom = s.dominated
    return frozenset(v for v, a in enumerate(s.graph.adj) if a & ~dom)


def apply_move(s: GameState, v: int) -> GameState:
    if not 0 <= v < s.graph.n or not s.graph.adj[v] & ~s.dominated:
        raise IllegalMove(f"vertex {v} dominates nothing new in this position")
    return GameState(s.graph, s.dominated | s.graph.adj[v], s.to_move.other)


class Solver:
    """Memoized minimax for one graph.

    The table is keyed by (dominated mask, Dominator-to-move flag) and is
    shared by every query against the same graph, so a full criticality
    spectrum costs little more than one solve.
    """

    def __init__(self, graph: Graph):
        isolated = graph.isolated_vertices()
        if isolated:
            raise Unwinnable(isolated)
        self.graph = graph
        self._full = graph.full
        self._adj = graph.adj
        self._memo: dict[int, int] = {}

    def value(self, dominated: int, to_move: Player = Player.DOMINATOR) -> int:
        if dominated & ~self._full:
            raise InvalidSet("dominated set not within V(G)")
        return self._value(dominated, to_move is Player.DOMINATOR)

    def _value(self, dom: int, dominator: bool) -> int:
        key = dom << 1 | dominator
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if dom == self._full:
            best = 0
        else:
            children = {dom | a for a in self._adj if a & ~dom}
            if dominator:
                best = 1 + min(self._value(c, False) for c in children)
            else:
                best = 1 + max(self._value(c, True) for c in children)
        self._memo[key] = best
        return best

    def table_size(self) -> int:
        return len(self._memo)


@lru_cache(maxsize=16)
def solver_for(g: Graph) -> Solver:
    return Solver(g)


def game_value(s: GameState) -> int:
    return solver_for(s.graph).value(s.dominated, s.to_move)


def gamma_tg(g: Graph, given: Iterable[int] | int = ()) -> int:
    """Moves remaining in the D-game on G|given under optimal play."""
    return solver_for(g).value(_as_mask(g, given), Player.DOMINATOR)


def gamma_tg_staller(g: Graph, given: Iterable[int] | int = ()) -> int:
    """Moves remaining in the S-game on G|given under optimal play."""
    return solver_for(g).value(_as_mask(g, given), Player.STALLER)


def optimal_moves(s: GameState) -> frozenset[int]:
    if s.is_terminal:
        raise TerminalState("no moves remain in a finished game")
    target = game_value(s)
    return frozenset(v for v in legal_moves(s) if 1 + game_value(apply_move(s, v)) == target)
