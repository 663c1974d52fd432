"""Free actions on handlebodies, modelled algebraically.

A free orientation-preserving action of a finite group G on a handlebody
is recorded by its quotient genus g together with the tuple of generator
images of the associated surjection from the rank-g free group onto G.
Two actions are equivalent exactly when one image tuple can be carried to
the other by elementary Nielsen moves combined with conjugating every
entry by a single group element, so equivalence and classification reduce
to finite orbit computations in G^g.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Tuple

from .errors import DomainError, InputError
from .groups import (FiniteGroup, automorphism_group, conjugate_tuple,
                     is_generating_tuple, load_group)
from .words import NielsenMove, apply_nielsen_move, elementary_moves

DEFAULT_TUPLE_BOUND = 10**7


@dataclass(frozen=True, eq=False)
class HandlebodyAction:
    group: FiniteGroup
    quotient_genus: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if self.quotient_genus < 0:
            raise DomainError("quotient genus must be nonnegative")
        if len(self.images) != self.quotient_genus:
            raise DomainError("expected %d generator images, got %d"
                              % (self.quotient_genus, len(self.images)))
        for a in self.images:
            if not 0 <= a < self.group.size:
                raise DomainError("image index %d outside group of size %d"
                                  % (a, self.group.size))
        if not is_generating_tuple(self.group, self.images):
            raise DomainError("images do not generate the group "
                              "(the covering space would be disconnected)")


@dataclass(frozen=True)
class EquivalenceWitness:
    """Moves carrying one image tuple to another, then a final conjugation."""

    moves: Tuple[NielsenMove, ...]
    conjugator: int

    def to_json(self) -> dict:
        return {"moves": [m.to_json() for m in self.moves],
                "conjugator": self.conjugator}


def replay_witness(group: FiniteGroup, images: Sequence[int],
                   witness: EquivalenceWitness) -> tuple:
    t = tuple(images)
    for m in witness.moves:
        t = apply_nielsen_move(group, t, m)
    return conjugate_tuple(group, t, witness.conjugator)


def total_genus(action: HandlebodyAction) -> int:
    """Genus of the covering handlebody: 1 + |G|(g - 1).

    The Euler characteristic multiplies by |G| in a free cover, and the
    Euler characteristic of a genus-g handlebody is 1 - g.
    """
    return 1 + action.group.size * (action.quotient_genus - 1)


def _check_compatible(a1: HandlebodyAction, a2: HandlebodyAction) -> None:
    if a1.group.mul != a2.group.mul:
        raise DomainError("actions live over different groups "
                          "(multiplication tables differ)")
    if a1.quotient_genus != a2.quotient_genus:
        raise DomainError("quotient genus mismatch: %d vs %d"
                          % (a1.quotient_genus, a2.quotient_genus))


def actions_equivalent(a1: HandlebodyAction, a2: HandlebodyAction,
                       max_tuples: int = DEFAULT_TUPLE_BOUND
                       ) -> Optional[EquivalenceWitness]:
    """Search for an equivalence between two actions.

    Breadth-first over the orbit of a1.images under elementary Nielsen
    moves and simultaneous conjugation.  Returns a witness (verified by
    replay before returning) or None when a2.images is not in the orbit.
    Simultaneous conjugation commutes with every elementary move, so each
    orbit element is reachable as moves-then-one-conjugation and the
    witness is kept in that normal form.
    """
    _check_compatible(a1, a2)
    group = a1.group
    g = a1.quotient_genus
    if group.size ** g > max_tuples:
        raise DomainError("orbit space |G|^g = %d exceeds bound %d"
                          % (group.size ** g, max_tuples))
    moves = list(elementary_moves(g))
    start = tuple(a1.images)
    target = tuple(a2.images)
    # state -> (parent state, edge); edge is a NielsenMove or ("conj", c)
    seen = {start: None}
    frontier = [start]
    found = start == target
    while frontier and not found:
        nxt = []
        for t in frontier:
            for m in moves:
                u = apply_nielsen_move(group, t, m)
                if u not in seen:
                    seen[u] = (t, m)
                    nxt.append(u)
                    if u == target:
                        found = True
            for c in range(1, group.size):
                u = conjugate_tuple(group, t, c)
                if u not in seen:
                    seen[u] = (t, ("conj", c))
                    nxt.append(u)
                    if u == target:
                        found = True
        frontier = nxt
    if not found:
        return None

    # walk back to the start, then normalise to moves-then-conjugation
    edges = []
    cur = target
    while seen[cur] is not None:
        parent, edge = seen[cur]
        edges.append(edge)
        cur = parent
    edges.reverse()
    out_moves = []
    conj = group.identity
    for edge in edges:
        if isinstance(edge, NielsenMove):
            out_moves.append(edge)
        else:
            conj = group.mul[edge[1]][conj]
    witness = EquivalenceWitness(tuple(out_moves), conj)
    assert replay_witness(group, a1.images, witness) == target
    return witness


@dataclass(frozen=True)
class ActionClass:
    representative: Tuple[int, ...]
    orbit_size: int


def _orbit_of(group: FiniteGroup, start: tuple, moves, workers: int = 1) -> set:
    seen = {start}
    frontier = [start]

    def expand(t):
        out = [apply_nielsen_move(group, t, m) for m in moves]
        out.extend(conjugate_tuple(group, t, c) for c in range(1, group.size))
        return out

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            if pool is None:
                batches = map(expand, frontier)
            else:
                batches = pool.map(expand, frontier, chunksize=64)
            nxt = []
            for batch in batches:
                for u in batch:
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return seen


def classify_actions(group: FiniteGroup, genus: int,
                     max_tuples: int = DEFAULT_TUPLE_BOUND,
                     workers: int = 1,
                     up_to_automorphisms: bool = False) -> list:
    """Partition all generating g-tuples into equivalence classes.

    Returns ActionClass records sorted by representative, where the
    representative is the lexicographically least tuple of its orbit.
    With up_to_automorphisms=True the orbits are further merged under the
    full automorphism group of G; that coarser relation compares actions
    of an abstract group rather than a fixed identified one.
    """
    if genus < 0:
        raise DomainError("genus must be nonnegative")
    if group.size ** genus > max_tuples:
        raise DomainError("tuple space |G|^g = %d exceeds bound %d"
                          % (group.size ** genus, max_tuples))
    if workers < 1:
        raise DomainError("workers must be >= 1")
    moves = list(elementary_moves(genus))
    orbit_of = {}
    orbits = []
    for t in product(range(group.size), repeat=genus):
        if t in orbit_of or not is_generating_tuple(group, t):
            continue
        orbit = _orbit_of(group, t, moves, workers=workers)
        rep = min(orbit)
        orbits.append((rep, orbit))
        for u in orbit:
            orbit_of[u] = rep

    if up_to_automorphisms:
        autos = automorphism_group(group)
        merged = {}
        for rep, orbit in orbits:
            key = min(orbit_of[tuple(phi[a] for a in rep)] for phi in autos)
            merged.setdefault(key, set()).update(orbit)
        orbits = sorted((min(o), o) for o in merged.values())

    return [ActionClass(rep, len(orbit)) for rep, orbit in sorted(orbits)]


# ---------------------------------------------------------------------------
# action files

def load_action(source: dict) -> HandlebodyAction:
    """Action description: a group description plus genus and image list."""
    if not isinstance(source, dict):
        raise InputError("action description must be a JSON object")
    for key in ("group", "genus", "images"):
        if key not in source:
            raise InputError("action description missing %r" % key)
    group = load_group(source["group"])
    genus = source["genus"]
    images = source["images"]
    if not isinstance(genus, int):
        raise InputError("genus must be an integer")
    if not isinstance(images, list) or not all(isinstance(a, int) for a in images):
        raise InputError("images must be a list of element indices")
    try:
        return HandlebodyAction(group, genus, tuple(images))
    except DomainError:
        raise


def load_action_file(path: str) -> HandlebodyAction:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read action file %s: %s" % (path, exc))
    return load_action(data)
