"""Exact solver and verification workbench for the total domination game."""

from .criticality import (
    CriticalityProfile,
    VerificationReport,
    char_2critical,
    char_3critical,
    char_join_3critical,
    closed_form_cycle,
    closed_form_path,
    profile,
    verify_characterization,
    verify_family,
)
from .game import (
    GameState,
    IllegalMove,
    InvalidSet,
    IsolatedVertex,
    Player,
    Solver,
    TerminalState,
    Unwinnable,
    apply_move,
    check_total_dominatable,
    game_value,
    gamma_tg,
    gamma_tg_staller,
    legal_moves,
    optimal_moves,
)
from .graph6 import emit_g6, parse_g6
from .graphs import (
    Graph,
    GraphError,
    dominating_vertices,
    enumerate_labeled_graphs,
    generate,
    join,
    join_factors,
    make_graph,
    open_twins,
    union,
)

__version__ = "0.1.0"
