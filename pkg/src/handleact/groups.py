"""Exact arithmetic in finite groups given by explicit multiplication tables.

Elements are integers 0..size-1 with 0 always the identity.  Groups are
built either from a raw multiplication table or as the closure of a set
of permutation generators; in the latter case elements are numbered in
breadth-first discovery order from the identity, so the numbering (and
everything downstream of it) is deterministic.
"""

from __future__ import annotations

import math
import random
from collections import deque
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import DomainError, InputError

# Above this size, associativity of an input table is only spot-checked.
FULL_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 10_000

DEFAULT_CLOSURE_BOUND = 10**6


class FiniteGroup:
    """A finite group as a size x size lookup table.

    Attributes:
        size: number of elements.
        mul: nested tuple; mul[a][b] is the index of the product a*b.
        identity: index of the identity element (always 0).
        inv: tuple; inv[a] is the index of the inverse of a.
        labels: optional display name per element.
    """

    __slots__ = ("size", "mul", "identity", "inv", "labels")

    def __init__(self, mul_table, labels: Optional[Sequence[str]] = None):
        table = tuple(tuple(row) for row in mul_table)
        _validate_table(table)
        self.size = len(table)
        self.mul = table
        self.identity = 0
        self.inv = _inverse_table(table)
        if labels is not None and len(labels) != self.size:
            raise InputError("labels length %d != group size %d" % (len(labels), self.size))
        self.labels = tuple(labels) if labels is not None else None

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "FiniteGroup(size=%d)" % self.size

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def conjugate(self, c: int, a: int) -> int:
        """c * a * c^-1."""
        return self.mul[self.mul[c][a]][self.inv[c]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        acc = self.identity
        for _ in range(k):
            acc = self.mul[acc][a]
        return acc


def _validate_table(table) -> None:
    n = len(table)
    if n == 0:
        raise InputError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise InputError("table row %d has length %d, expected %d" % (i, len(row), n))
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InputError("table entry %r out of range [0, %d)" % (v, n))
    # element 0 must be a two-sided identity
    for j in range(n):
        if table[0][j] != j or table[j][0] != j:
            raise InputError("element 0 is not the identity")
    # Latin square: every row and column is a permutation
    full = set(range(n))
    for i in range(n):
        if set(table[i]) != full:
            raise InputError("row %d is not a permutation of the elements" % i)
        if {table[j][i] for j in range(n)} != full:
            raise InputError("column %d is not a permutation of the elements" % i)
    # inverses must exist (guaranteed for finite Latin squares with identity
    # only once associativity holds, so check explicitly)
    for a in range(n):
        if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(n)):
            raise InputError("element %d has no two-sided inverse" % a)
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        triples = product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(ASSOCIATIVITY_SAMPLES)
        )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InputError("table is not associative: (%d*%d)*%d != %d*(%d*%d)" % (a, b, c, a, b, c))


def _inverse_table(table):
    n = len(table)
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == 0:
                inv[a] = b
                break
    return tuple(inv)


# ---------------------------------------------------------------------------
# permutation generators

def _compose(p, q):
    """Permutation composition: (p . q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def _perm_cycles(p) -> str:
    """Cycle-notation label for a permutation, 'e' for the identity."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(parts) if parts else "e"


def group_from_permutations(perms: Sequence[Sequence[int]],
                            max_size: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Close a set of permutations under composition and build the group.

    Each permutation is an image list on points 0..k-1.  Elements are
    numbered in BFS discovery order from the identity, multiplying on the
    right by the given generators in order.
    """
    if not perms:
        raise InputError("at least one permutation generator required")
    k = len(perms[0])
    gens = []
    for p in perms:
        t = tuple(p)
        if sorted(t) != list(range(k)):
            raise InputError("not a permutation of 0..%d: %r" % (k - 1, p))
        gens.append(t)

    ident = tuple(range(k))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = _compose(cur, g)
            if nxt not in index:
                if len(elements) >= max_size:
                    raise DomainError(
                        "closure exceeds the size bound %d" % max_size)
                index[nxt] = len(elements)
                elements.append(nxt)
                queue.append(nxt)

    n = len(elements)
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = elements[a]
        for b in range(n):
            table[a][b] = index[_compose(pa, elements[b])]
    labels = [_perm_cycles(p) for p in elements]
    return FiniteGroup(table, labels=labels)


def load_group(source: dict, max_size: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Build a group from a parsed description.

    Accepted forms: {"table": [[...]]} with entry (i, j) the index of the
    product i*j and element 0 the identity, or {"permutations": [[...], ...]}
    with 0-based image lists.  An optional "labels" list names the elements
    of a table-form group.
    """
    if not isinstance(source, dict):
        raise InputError("group description must be a JSON object")
    if "table" in source and "permutations" in source:
        raise InputError("group description has both 'table' and 'permutations'")
    if "table" in source:
        return FiniteGroup(source["table"], labels=source.get("labels"))
    if "permutations" in source:
        return group_from_permutations(source["permutations"], max_size=max_size)
    raise InputError("group description needs a 'table' or 'permutations' key")


# ---------------------------------------------------------------------------
# element and subgroup arithmetic

def element_order(group: FiniteGroup, a: int) -> int:
    """Smallest k >= 1 with a^k the identity."""
    k = 1
    acc = a
    while acc != group.identity:
        acc = group.mul[acc][a]
        k += 1
    return k


def group_exponent(group: FiniteGroup) -> int:
    """lcm of the orders of all elements; the least admissible twist order."""
    e = 1
    for a in range(group.size):
        e = math.lcm(e, element_order(group, a))
    return e


def subgroup_closure(group: FiniteGroup, elements: Iterable[int]) -> frozenset:
    """Indices of the subgroup generated by the given elements."""
    seen = {group.identity}
    gens = [a for a in elements]
    queue = deque([group.identity])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = group.mul[cur][g]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def is_generating_tuple(group: FiniteGroup, t: Sequence[int]) -> bool:
    return len(subgroup_closure(group, t)) == group.size


def conjugate_tuple(group: FiniteGroup, t: Sequence[int], c: int) -> tuple:
    """Entrywise c * t_i * c^-1."""
    return tuple(group.conjugate(c, a) for a in t)


# ---------------------------------------------------------------------------
# automorphisms (used only by the exploratory up-to-Aut(G) coarsening)

def _words_for_elements(group: FiniteGroup, gens: Sequence[int]):
    """Expression of every element as a product of the given generators.

    Returns a list of generator-index sequences, or None if gens do not
    generate.
    """
    words = {group.identity: ()}
    queue = deque([group.identity])
    while queue:
        cur = queue.popleft()
        for gi, g in enumerate(gens):
            nxt = group.mul[cur][g]
            if nxt not in words:
                words[nxt] = words[cur] + (gi,)
                queue.append(nxt)
    if len(words) != group.size:
        return None
    return [words[a] for a in range(group.size)]


def _minimal_generating_tuple(group: FiniteGroup):
    for k in range(1, group.size + 1):
        for t in product(range(group.size), repeat=k):
            if is_generating_tuple(group, t):
                return t
    raise AssertionError("every finite group generates itself")


def automorphism_group(group: FiniteGroup) -> list:
    """All automorphisms of the group, each as an image tuple on 0..size-1.

    Brute force over images of a minimal generating tuple; intended for the
    small groups this toolkit works with.
    """
    gens = _minimal_generating_tuple(group)
    words = _words_for_elements(group, gens)
    orders = [element_order(group, g) for g in gens]
    autos = []
    for images in product(range(group.size), repeat=len(gens)):
        if any(element_order(group, im) != o for im, o in zip(images, orders)):
            continue
        phi = []
        for w in words:
            acc = group.identity
            for gi in w:
                acc = group.mul[acc][images[gi]]
            phi.append(acc)
        if len(set(phi)) != group.size:
            continue
        if all(phi[group.mul[a][b]] == group.mul[phi[a]][phi[b]]
               for a in range(group.size) for b in range(group.size)):
            autos.append(tuple(phi))
    return autos
