"""Block colouring configurations.

A block has seven vertices a..g (indices 0..6) and eight internal edges; a
colouring assigns +1 (white) or -1 (black) to each.  A colouring is viable
when the same-colour edges form a matching (otherwise three equal vertices
lie on a path) and each colour class has at least three vertices (otherwise
the union of the block's two 5-circuits has a two-vertex colour class).
Grouping viable colourings by colour switching and block reversal leaves
exactly four classes.
"""

from __future__ import annotations

from dataclasses import dataclass

LETTERS = "abcdefg"
A, B, C, D, E, F, G = range(7)

BLOCK_EDGE_LETTERS = [("a", "b"), ("a", "e"), ("b", "c"), ("c", "d"),
                      ("d", "e"), ("c", "f"), ("e", "g"), ("f", "g")]
BLOCK_EDGES = [(A, B), (A, E), (B, C), (C, D), (D, E), (C, F), (E, G), (F, G)]

# block automorphisms as index permutations of a..g
REVERSE = (B, A, E, D, C, G, F)   # swaps a<->b, c<->e, f<->g
TWIST = (G, F, C, D, E, B, A)     # swaps a<->g, b<->f

# the configuration ids are fixed by which colouring the analysis starts
# from: see CONFIG_BLACKS below (reviewed data, checked by the tests)
CONFIG_BLACKS = {
    1: frozenset("acg"),
    2: frozenset("ace"),
    3: frozenset("bdg"),
    4: frozenset("ceg"),  # twist of configuration 2
}


def apply_perm(coloring: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """Colour of perm[i] moves to position i... inverse-free because both
    block automorphisms are involutions."""
    return tuple(coloring[perm[i]] for i in range(7))


def switch(coloring: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-c for c in coloring)


def viable_coloring(coloring: tuple[int, ...]) -> bool:
    """No three equal-coloured vertices on an internal path and no colour
    class smaller than three."""
    whites = sum(1 for c in coloring if c > 0)
    if whites < 3 or whites > 4:
        return False
    mono_deg = [0] * 7
    for u, v in BLOCK_EDGES:
        if coloring[u] == coloring[v]:
            mono_deg[u] += 1
            mono_deg[v] += 1
            if mono_deg[u] > 1 or mono_deg[v] > 1:
                return False
    return True


def coloring_from_blacks(blacks: frozenset[str]) -> tuple[int, ...]:
    return tuple(-1 if LETTERS[i] in blacks else 1 for i in range(7))


@dataclass(frozen=True)
class Configuration:
    id: int
    drawn: tuple[int, ...]                 # the representative colouring
    members: frozenset[tuple[int, ...]]    # full switch/reverse orbit


def enumerate_configurations() -> list[Configuration]:
    """The viable colourings grouped by colour switch and reversal."""
    survivors = [tuple(c)
                 for bits in range(1 << 7)
                 for c in [tuple(1 if (bits >> i) & 1 else -1 for i in range(7))]
                 if viable_coloring(c)]
    orbits: list[set[tuple[int, ...]]] = []
    seen: set[tuple[int, ...]] = set()
    for c in survivors:
        if c in seen:
            continue
        orbit = {c, switch(c), apply_perm(c, REVERSE), switch(apply_perm(c, REVERSE))}
        seen |= orbit
        orbits.append(orbit)
    configs = []
    for cid, blacks in CONFIG_BLACKS.items():
        drawn = coloring_from_blacks(blacks)
        orbit = next((o for o in orbits if drawn in o), None)
        if orbit is None:
            raise RuntimeError(f"configuration {cid} colouring not viable; enumeration bug")
        configs.append(Configuration(cid, drawn, frozenset(orbit)))
    leftovers = [o for o in orbits if not any(set(o) & set(c.members) for c in configs)]
    if leftovers:
        raise RuntimeError(f"unexpected extra colouring classes: {leftovers}")
    return configs
