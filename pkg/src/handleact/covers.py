"""From the closed quotient manifold to its regular cover.

For a surjection of the rank-g free group onto G, the cover corresponding
to its kernel is regular and its deck group is G, so the coset table has
one state per group element, with generator x_i acting by right
multiplication by its image.  Rewriting a presentation through the table
(Schreier generators from non-tree edges, conjugated relators traced
through the states) yields a presentation of the cover's fundamental
group; its abelianization is the cover's first homology.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .actions import HandlebodyAction
from .errors import DomainError
from .homology import AbelianGroupStructure, GroupPresentation, h1_from_presentation
from .words import FreeWord, evaluate_word, free_reduce


@dataclass(frozen=True)
class CosetTable:
    """States are group-element indices; state 0 is the trivial coset.

    transitions[i][c] is the state reached from c along generator x_{i+1}
    (right multiplication by its image).  The transversal assigns each
    state a representative word; it is prefix closed, found breadth-first
    with letters ordered x1 < X1 < x2 < X2 < ..., so representatives are
    the shortlex-least words.  tree_edges holds the (state, generator
    index) pairs traversed by the transversal.
    """

    size: int
    transitions: Tuple[Tuple[int, ...], ...]
    transversal: Tuple[FreeWord, ...]
    tree_edges: frozenset

    def to_json(self) -> dict:
        from .words import format_word
        return {"states": self.size,
                "transitions": [list(t) for t in self.transitions],
                "transversal": [format_word(w) for w in self.transversal]}


def build_coset_table(action: HandlebodyAction) -> CosetTable:
    group = action.group
    g = action.quotient_genus
    size = group.size
    transitions = tuple(
        tuple(group.mul[c][action.images[i]] for c in range(size))
        for i in range(g))
    inverse_transitions = [
        tuple(group.mul[c][group.inv[action.images[i]]] for c in range(size))
        for i in range(g)]

    words: Dict[int, tuple] = {0: ()}
    tree = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for i in range(g):
            for letter, target in ((i + 1, transitions[i][c]),
                                   (-(i + 1), inverse_transitions[i][c])):
                if target not in words:
                    words[target] = words[c] + (letter,)
                    # the tree edge is always stored in its forward
                    # (positive-generator) orientation
                    tree.add((c, i) if letter > 0 else (target, i))
                    queue.append(target)
    if len(words) != size:
        raise DomainError("images do not generate; cover is disconnected")
    transversal = tuple(FreeWord(g, words[c]) for c in range(size))
    return CosetTable(size, transitions, transversal, frozenset(tree))


@dataclass(frozen=True)
class CoverPresentation:
    presentation: GroupPresentation
    generator_provenance: Tuple[Tuple[int, int], ...]  # (state, base generator)
    tree_edges_removed: int


def reidemeister_schreier(pres: GroupPresentation,
                          action: HandlebodyAction) -> CoverPresentation:
    """Presentation of the cover's fundamental group.

    One Schreier generator per non-tree edge of the coset table, numbered
    by (state, base generator); one relator per (state, base relator)
    pair, each conjugated relator traced through the table and freely
    reduced.  Relators that reduce to nothing are kept so the counts stay
    |G| times the base counts.
    """
    if pres.generator_count != action.quotient_genus:
        raise DomainError("presentation has %d generators but the action has "
                          "genus %d" % (pres.generator_count, action.quotient_genus))
    group = action.group
    for r in pres.relators:
        if evaluate_word(r, group, action.images) != group.identity:
            raise DomainError("relator %r does not die under the generator "
                              "images; the presentation does not descend to "
                              "the quotient of this cover" % (r,))
    table = build_coset_table(action)
    g = action.quotient_genus

    gen_index: Dict[Tuple[int, int], int] = {}
    provenance: List[Tuple[int, int]] = []
    for c in range(table.size):
        for i in range(g):
            if (c, i) not in table.tree_edges:
                gen_index[(c, i)] = len(provenance) + 1
                provenance.append((c, i))
    rank = len(provenance)
    assert rank == group.size * g - (group.size - 1)

    inverse_images = [group.inv[a] for a in action.images]

    def rewrite(relator: FreeWord, start: int) -> FreeWord:
        out = []
        c = start
        for v in relator.letters:
            if v > 0:
                i = v - 1
                if (c, i) not in table.tree_edges:
                    out.append(gen_index[(c, i)])
                c = table.transitions[i][c]
            else:
                i = -v - 1
                c = group.mul[c][inverse_images[i]]
                if (c, i) not in table.tree_edges:
                    out.append(-gen_index[(c, i)])
        assert c == start
        return FreeWord(rank, free_reduce(out))

    relators = tuple(rewrite(r, c)
                     for c in range(table.size) for r in pres.relators)
    return CoverPresentation(GroupPresentation(rank, relators),
                             tuple(provenance), group.size - 1)


def schreier_generator_word(table: CosetTable, state: int, i: int) -> FreeWord:
    """The Schreier generator (state, x_{i+1}) written in the base group:
    transversal(state) * x_{i+1} * transversal(target)^-1."""
    t = table.transversal[state]
    target = table.transitions[i][state]
    g = t.rank
    return t * FreeWord(g, (i + 1,)) * table.transversal[target].inverse()


def cover_h1(pres: GroupPresentation,
             action: HandlebodyAction) -> AbelianGroupStructure:
    """First homology of the cover defined by the action."""
    return h1_from_presentation(reidemeister_schreier(pres, action).presentation)
