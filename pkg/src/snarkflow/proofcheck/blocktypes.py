"""The block-type catalog: membership patterns a block can carry.

A type is a block colouring together with an S-membership flag for each of
the seven block vertices and a constraint (in / out / free) for the four
adjacent vertices of the neighbouring blocks.  Candidates are enumerated
over full local assignments and filtered by local rules:

  R1  crossing edges have a white end in S and a black end outside;
  R2  two-element swap sets (opposite-coloured internal edges) must not
      contradict the maximality or the structure of the chosen S;
  R3  no S-component may be confined to the extended block away from the
      hub, and no component of the complement may be confined at all;
  R4  colour-pattern scans (these are part of configuration viability at
      this local level; the cross-block scans live in the pair checks).

The surviving (membership x constraint projection) table is the catalog;
names are attached from a reviewed signature table and the whole result is
frozen as JSON package data with a checksum.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from importlib import resources

from .configurations import (BLOCK_EDGES, LETTERS, REVERSE, TWIST,
                             apply_perm, enumerate_configurations, switch)

# local indices: block vertices 0..6 (a..g), then the extended vertices
BL, GL, AR, FR = 7, 8, 9, 10   # b_{i-1}, g_{i-1}, a_{i+1}, f_{i+1}
HUB = 11                       # h, always inside S
EXT_NAMES = ("b-", "g-", "a+", "f+")

# edges of the extended block; the hub edge is (D, HUB)
EXT_EDGES = BLOCK_EDGES + [(0, BL), (5, GL), (1, AR), (6, FR), (3, HUB)]

IN, OUT, FREE = "in", "out", "free"


class CatalogError(RuntimeError):
    pass


@dataclass(frozen=True)
class BlockType:
    id: str
    configuration: int
    coloring: tuple[int, ...]            # +-1 per block vertex a..g
    membership: tuple[bool, ...]         # in-S flag per block vertex
    outside: tuple[str, ...]             # constraint per (b-, g-, a+, f+)
    step2: tuple[tuple[str, str], ...] = ()   # (direction, amount "2"|"5/2")
    step3: str | None = None             # "sender" | "forwarder" | None

    @property
    def reversed_id(self) -> str:
        return self.id[:-2] if self.id.endswith("^T") else self.id + "^T"

    def pattern(self) -> tuple[tuple[int, ...], tuple[bool, ...]]:
        return self.coloring, self.membership


def reverse_assignment(mem: tuple[bool, ...], ext: tuple[bool, ...]) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """Reversal relabels the block and swaps the two interface sides."""
    rmem = tuple(mem[REVERSE[i]] for i in range(7))
    rext = (ext[2], ext[3], ext[0], ext[1])  # b- <-> a+, g- <-> f+
    return rmem, rext


def twist_assignment(mem: tuple[bool, ...], ext: tuple[bool, ...]) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """Twisting relabels the block and also swaps left and right interfaces
    (a and g change roles, as do b and f)."""
    tmem = tuple(mem[TWIST[i]] for i in range(7))
    text = (ext[3], ext[2], ext[1], ext[0])  # b- <-> f+, g- <-> a+
    return tmem, text


def reverse_constraints(ext: tuple[str, ...]) -> tuple[str, ...]:
    return (ext[2], ext[3], ext[0], ext[1])


def twist_constraints(ext: tuple[str, ...]) -> tuple[str, ...]:
    return (ext[3], ext[2], ext[1], ext[0])


def _neighbors() -> list[list[int]]:
    nbr: list[list[int]] = [[] for _ in range(12)]
    for u, v in EXT_EDGES:
        nbr[u].append(v)
        nbr[v].append(u)
    return nbr


_NBR = _neighbors()


def _r1_ok(col: tuple[int, ...], inside: dict[int, bool]) -> bool:
    """Crossing edges need a white S-end and a black outside end; only block
    vertices carry known colours."""
    for u, v in EXT_EDGES:
        iu, iv = inside[u], inside[v]
        if iu == iv:
            continue
        s_end, o_end = (u, v) if iu else (v, u)
        if s_end < 7 and col[s_end] < 0:
            return False
        if o_end < 7 and col[o_end] > 0:
            return False
    return True


def _components(verts: set[int]) -> list[set[int]]:
    comps = []
    left = set(verts)
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in _NBR[x]:
                if y in left:
                    left.remove(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _confinement_ok(inside: dict[int, bool]) -> bool:
    """R3.  S-components must reach the hub or an extended vertex; no
    complement component may be closed inside the extended block."""
    s_verts = {x for x in range(11) if inside[x]}
    for comp in _components(s_verts):
        if any(x >= 7 for x in comp):
            continue
        if 3 in comp:  # d reaches the hub directly
            continue
        return False
    o_verts = {x for x in range(11) if not inside[x]}
    for comp in _components(o_verts):
        if not any(x >= 7 for x in comp):
            return False
    return True


def _swap_sets(col: tuple[int, ...]):
    """Two-element swap sets: internal edges with opposite colours."""
    for u, v in BLOCK_EDGES:
        if col[u] != col[v]:
            yield (u, v)


def _swaps_ok(col: tuple[int, ...], inside: dict[int, bool]) -> bool:
    """R2 on the enumerated assignment."""
    for u, v in _swap_sets(col):
        iu, iv = inside[u], inside[v]
        if iu != iv:
            continue
        # boundary edges of T = {u, v} and how many land in S
        crossing = 0
        to_s = 0
        for x in (u, v):
            for y in _NBR[x]:
                if y == u or y == v:
                    continue
                crossing += 1
                if inside[y]:
                    to_s += 1
        if crossing == 0 or 2 * to_s != crossing:
            continue
        if not iu:
            # T outside S with half its boundary in S: S u T is a larger set
            # with the same ratio, contradicting the choice of S
            return False
        # T inside S: S - T is optimal too, so it must still satisfy the
        # local rules; removing T must not break R1 or strand a component
        shrunk = dict(inside)
        shrunk[u] = shrunk[v] = False
        if not _r1_ok(col, shrunk) or not _confinement_ok(shrunk):
            return False
    return True


def _candidate_ok(col: tuple[int, ...], inside: dict[int, bool]) -> bool:
    return _r1_ok(col, inside) and _confinement_ok(inside) and _swaps_ok(col, inside)


RULESETS = {
    "paper": ("R1", "R2", "R3"),
    "relaxed": ("R1", "R3"),
}


def _candidate_ok_rules(col, inside, rules) -> bool:
    if "R1" in rules and not _r1_ok(col, inside):
        return False
    if "R3" in rules and not _confinement_ok(inside):
        return False
    if "R2" in rules and not _swaps_ok(col, inside):
        return False
    return True


def enumerate_block_types(configuration, rules: str = "paper") -> list[dict]:
    """Surviving membership patterns for one configuration, both colour
    polarities, with outside constraints projected over the survivors.

    Returns dicts with keys coloring, membership, outside, switched.
    """
    if rules not in RULESETS:
        raise CatalogError(f"unknown rule set {rules!r}")
    sel = RULESETS[rules]
    out = []
    for switched in (False, True):
        col = switch(configuration.drawn) if switched else configuration.drawn
        survivors: dict[tuple[bool, ...], list[tuple[bool, ...]]] = {}
        for mem_bits in range(1 << 7):
            mem = tuple(bool((mem_bits >> i) & 1) for i in range(7))
            for ext_bits in range(1 << 4):
                ext = tuple(bool((ext_bits >> i) & 1) for i in range(4))
                inside = {i: mem[i] for i in range(7)}
                inside.update({BL: ext[0], GL: ext[1], AR: ext[2], FR: ext[3]})
                inside[HUB] = True
                if _candidate_ok_rules(col, inside, sel):
                    survivors.setdefault(mem, []).append(ext)
        for mem, exts in sorted(survivors.items()):
            cons = []
            for pos in range(4):
                vals = {e[pos] for e in exts}
                cons.append(IN if vals == {True} else OUT if vals == {False} else FREE)
            out.append({
                "coloring": col,
                "membership": mem,
                "outside": tuple(cons),
                "switched": switched,
            })
    return out


# ---------------------------------------------------------------------------
# naming and behaviour
#
# Names follow the published catalog.  The behaviour-critical ones (senders,
# forwarders, the excluded type, boundary-sensitive patterns) are pinned by
# the case analysis; the rest are positional conventions within their
# configuration.  "dr"/"sw" distinguish the two colour polarities of the
# configuration's representative colouring.

_NAME_TABLE: dict[int, dict[tuple[str, str], str]] = {
    1: {
        ("dr", "bcdef"): "A_1", ("dr", "abcdef"): "B_1", ("dr", "bcdefg"): "C_1",
        ("dr", "abcdefg"): "D_1", ("dr", "de"): "E_1",
        ("sw", "abcdefg"): "F_1", ("sw", "abcdeg"): "G_1", ("sw", "acdefg"): "H_1",
        ("sw", "abc"): "I_1", ("sw", "cfg"): "J_1", ("sw", "ag"): "K_1",
        ("sw", "a"): "L_1", ("sw", "g"): "M_1", ("sw", ""): "N_1",
    },
    2: {
        ("dr", "abcdefg"): "A_2", ("dr", "bcdfg"): "B_2", ("dr", "d"): "C_2",
        ("sw", "abcdefg"): "D_2", ("sw", "abcde"): "E_2", ("sw", "acdefg"): "F_2",
        ("sw", "acde"): "G_2", ("sw", ""): "H_2",
    },
    3: {
        ("dr", "abcdefg"): "A_3", ("dr", "abcdef"): "B_3", ("dr", "acdefg"): "C_3",
        ("sw", "bdg"): "D_3", ("sw", "bd"): "E_3", ("sw", "dg"): "F_3",
        ("sw", "d"): "G_3", ("dr", "acdef"): "H_3", ("sw", "abcdefg"): "I_3",
        ("sw", "bcdfg"): "J_3", ("sw", "abdeg"): "K_3", ("dr", ""): "L_3",
    },
    # configuration 4 names are generated by twisting configuration 2
}

# step-2 senders of charge 2 (resp. 5/2) to the right; a type whose reverse
# is listed sends the same amount to the left
_RIGHT_SENDERS_2 = ("I_1^T", "J_1", "K_1", "K_1^T", "L_1^T", "M_1",
                    "E_2", "E_3", "F_3", "E_4^T")
_RIGHT_SENDERS_52 = ("G_2^T", "G_4")
_STEP3_SENDERS = ("E_1", "E_1^T")
_FORWARDERS = ("C_2", "C_2^T", "G_3", "G_3^T", "C_4", "C_4^T")


def _mem_key(mem: tuple[bool, ...]) -> str:
    return "".join(LETTERS[i] for i in range(7) if mem[i])


def _behaviour(type_id: str) -> tuple[tuple[tuple[str, str], ...], str | None]:
    rev_id = type_id[:-2] if type_id.endswith("^T") else type_id + "^T"
    step2 = []
    if type_id in _RIGHT_SENDERS_2:
        step2.append(("right", "2"))
    if rev_id in _RIGHT_SENDERS_2:
        step2.append(("left", "2"))
    if type_id in _RIGHT_SENDERS_52:
        step2.append(("right", "5/2"))
    if rev_id in _RIGHT_SENDERS_52:
        step2.append(("left", "5/2"))
    step3 = None
    if type_id in _STEP3_SENDERS:
        step3 = "sender"
    elif type_id in _FORWARDERS:
        step3 = "forwarder"
    return tuple(step2), step3


def build_catalog(rules: str = "paper") -> list[BlockType]:
    """Enumerate, name and orient the full catalog (both orientations of
    every basic type, configuration 4 included)."""
    entries: list[BlockType] = []
    for config in enumerate_configurations():
        raw = enumerate_block_types(config, rules)
        if config.id == 4:
            named = _name_config4(raw)
        else:
            named = {}
            for t in raw:
                key = ("sw" if t["switched"] else "dr", _mem_key(t["membership"]))
                name = _NAME_TABLE[config.id].get(key)
                if name is None:
                    raise CatalogError(
                        f"no name for configuration {config.id} pattern {key}; "
                        f"rule set {rules!r} disagrees with the reviewed table")
                named[name] = t
            if len(named) != len(raw):
                raise CatalogError(f"duplicate names in configuration {config.id}")
        for name, t in sorted(named.items()):
            step2, step3 = _behaviour(name)
            base = BlockType(name, config.id, tuple(t["coloring"]),
                             tuple(t["membership"]), tuple(t["outside"]),
                             step2, step3)
            entries.append(base)
            rmem, _ = reverse_assignment(base.membership, (False,) * 4)
            rcol = apply_perm(base.coloring, REVERSE)
            rstep2, rstep3 = _behaviour(base.reversed_id)
            entries.append(BlockType(base.reversed_id, config.id, rcol, rmem,
                                     reverse_constraints(base.outside), rstep2, rstep3))
    return entries


def _name_config4(raw: list[dict]) -> dict[str, dict]:
    """Configuration-4 entries are the twists of configuration-2 entries and
    inherit their letters (X_4 from X_2)."""
    named: dict[str, dict] = {}
    by_pattern = {(tuple(t["coloring"]), tuple(t["membership"])): t for t in raw}
    for config in enumerate_configurations():
        if config.id != 2:
            continue
        for t in enumerate_block_types(config, "paper"):
            key = ("sw" if t["switched"] else "dr", _mem_key(t["membership"]))
            name2 = _NAME_TABLE[2][key]
            tcol = apply_perm(tuple(t["coloring"]), TWIST)
            tmem, text = twist_assignment(tuple(t["membership"]),
                                          (False,) * 4)
            twisted = by_pattern.get((tcol, tmem))
            if twisted is None:
                raise CatalogError(
                    f"twist of configuration-2 type {name2} missing from configuration 4")
            expected_outside = twist_constraints(tuple(t["outside"]))
            if tuple(twisted["outside"]) != expected_outside:
                raise CatalogError(
                    f"outside constraints of twisted {name2} disagree: "
                    f"{twisted['outside']} vs {expected_outside}")
            named[name2.replace("_2", "_4")] = twisted
    if len(named) != len(raw):
        raise CatalogError("configuration 4 is not exactly the twist of configuration 2")
    return named


# ---------------------------------------------------------------------------
# frozen catalog file

def catalog_to_json(entries: list[BlockType]) -> str:
    doc = [{
        "id": t.id,
        "configuration": t.configuration,
        "coloring": list(t.coloring),
        "membership": list(t.membership),
        "outside": list(t.outside),
        "step2": [{"dir": d, "amount": a} for d, a in t.step2] or None,
        "step3": t.step3,
    } for t in entries]
    return json.dumps(doc, indent=1)


def catalog_from_json(text: str) -> list[BlockType]:
    return [BlockType(
        id=e["id"],
        configuration=int(e["configuration"]),
        coloring=tuple(int(x) for x in e["coloring"]),
        membership=tuple(bool(x) for x in e["membership"]),
        outside=tuple(str(x) for x in e["outside"]),
        step2=tuple((d["dir"], d["amount"]) for d in (e["step2"] or [])),
        step3=e["step3"],
    ) for e in json.loads(text)]


def catalog_checksum(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def load_catalog() -> list[BlockType]:
    """The reviewed catalog shipped as package data."""
    text = resources.files("snarkflow.proofcheck").joinpath("data/catalog.json").read_text()
    return catalog_from_json(text)


def catalog_diff(rules: str = "paper") -> dict:
    """Machine-readable comparison of a fresh enumeration against the frozen
    file: {"missing": [...], "extra": [...], "changed": [...]}."""
    frozen = {t.id: t for t in load_catalog()}
    fresh: dict[str, BlockType] = {}
    try:
        fresh = {t.id: t for t in build_catalog(rules)}
        error = None
    except CatalogError as exc:
        error = str(exc)
    diff = {
        "missing": sorted(set(frozen) - set(fresh)),
        "extra": sorted(set(fresh) - set(frozen)),
        "changed": sorted(i for i in set(frozen) & set(fresh) if frozen[i] != fresh[i]),
    }
    if error:
        diff["error"] = error
    return diff


# ---------------------------------------------------------------------------
# classification of concrete blocks

def block_type_of(lg, b, s, i: int, catalog: list[BlockType] | None = None):
    """Catalog entry matching block i of the given valuation/set pair, plus
    the transform flags.  Raises CatalogError with the raw pattern when the
    block matches nothing (never silently dropped)."""
    from ..families import block_indexing
    bi = block_indexing(lg)
    verts = bi.extended(i)
    col = tuple(int(b[v]) for v in verts[:7])
    if any(c not in (-1, 1) for c in col):
        raise CatalogError(f"block {i} carries non-unit values: {col}")
    mem = tuple(v in s for v in verts[:7])
    ext = tuple(v in s for v in verts[7:])
    if catalog is None:
        catalog = load_catalog()
    for t in catalog:
        if t.coloring != col or t.membership != mem:
            continue
        ok = all(c == FREE or (c == IN) == e for c, e in zip(t.outside, ext))
        if ok:
            return t, {"reverse": t.id.endswith("^T"), "twist": t.configuration == 4,
                       "switch": False}
    raise CatalogError(
        f"block {i} matches no catalog entry: coloring={col} membership={mem} ext={ext}")
