"""Constructors for the small groups used by the self-test grids.

Everything returns a FiniteGroup with element 0 the identity.  The
complete list of groups of order at most 12 (up to isomorphism) is needed
by the classification cross-check, and a wider pool of order <= 24 feeds
the randomized checks.
"""

from __future__ import annotations

from .groups import FiniteGroup, group_from_permutations


def trivial() -> FiniteGroup:
    return FiniteGroup([[0]], labels=["e"])


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, labels=[str(i) for i in range(n)])


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral needs n >= 3")
    rot = [(i + 1) % n for i in range(n)]
    ref = [(n - i) % n for i in range(n)]
    return group_from_permutations([rot, ref])


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return trivial()
    cycle = [(i + 1) % n for i in range(n)]
    swap = [1, 0] + list(range(2, n))
    return group_from_permutations([swap, cycle])


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return trivial()
    gens = []
    for k in range(n - 2):
        c = list(range(n))
        c[k], c[k + 1], c[k + 2] = c[k + 1], c[k + 2], c[k]
        gens.append(c)
    return group_from_permutations(gens)


def dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m: a^(2m)=1, b^2=a^m, b a b^-1 = a^-1.

    Elements are a^i b^j with 0 <= i < 2m, j in {0, 1}, numbered i + 2m*j.
    dicyclic(2) is the quaternion group.
    """
    if m < 1:
        raise ValueError("dicyclic needs m >= 1")
    order = 4 * m
    two_m = 2 * m

    def mul(x, y):
        i1, j1 = x % two_m, x // two_m
        i2, j2 = y % two_m, y // two_m
        # (a^i1 b^j1)(a^i2 b^j2); move b past a^i2 when j1 = 1
        i = (i1 + (-i2 if j1 else i2)) % two_m
        j = j1 + j2
        if j == 2:
            i = (i + m) % two_m
            j = 0
        return i + two_m * j

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = ["a%d" % i if j == 0 else "a%db" % i
              for j in (0, 1) for i in range(two_m)]
    return FiniteGroup(table, labels=labels)


def quaternion() -> FiniteGroup:
    return dicyclic(2)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element (a, b) is numbered a*|G2| + b."""
    n1, n2 = g1.size, g2.size
    table = [[g1.mul[x // n2][y // n2] * n2 + g2.mul[x % n2][y % n2]
              for y in range(n1 * n2)] for x in range(n1 * n2)]
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = ["(%s, %s)" % (g1.labels[x // n2], g2.labels[x % n2])
                  for x in range(n1 * n2)]
    return FiniteGroup(table, labels=labels)


def abelian(*orders: int) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    if not orders:
        return trivial()
    g = cyclic(orders[0])
    for n in orders[1:]:
        g = direct_product(g, cyclic(n))
    return g


def groups_up_to_order(bound: int) -> list:
    """All isomorphism classes of groups of order <= bound (bound <= 12),
    as (name, group) pairs."""
    if bound > 12:
        raise ValueError("the exhaustive catalog stops at order 12")
    catalog = [
        (1, "Z1", trivial),
        (2, "Z2", lambda: cyclic(2)),
        (3, "Z3", lambda: cyclic(3)),
        (4, "Z4", lambda: cyclic(4)),
        (4, "Z2xZ2", lambda: abelian(2, 2)),
        (5, "Z5", lambda: cyclic(5)),
        (6, "Z6", lambda: cyclic(6)),
        (6, "S3", lambda: symmetric(3)),
        (7, "Z7", lambda: cyclic(7)),
        (8, "Z8", lambda: cyclic(8)),
        (8, "Z4xZ2", lambda: abelian(4, 2)),
        (8, "Z2xZ2xZ2", lambda: abelian(2, 2, 2)),
        (8, "D4", lambda: dihedral(4)),
        (8, "Q8", quaternion),
        (9, "Z9", lambda: cyclic(9)),
        (9, "Z3xZ3", lambda: abelian(3, 3)),
        (10, "Z10", lambda: cyclic(10)),
        (10, "D5", lambda: dihedral(5)),
        (11, "Z11", lambda: cyclic(11)),
        (12, "Z12", lambda: cyclic(12)),
        (12, "Z6xZ2", lambda: abelian(6, 2)),
        (12, "D6", lambda: dihedral(6)),
        (12, "A4", lambda: alternating(4)),
        (12, "Dic3", lambda: dicyclic(3)),
    ]
    return [(name, build()) for order, name, build in catalog if order <= bound]


def sample_pool_up_to_24() -> list:
    """A varied pool of groups of order <= 24 for randomized property checks."""
    pool = groups_up_to_order(12)
    pool += [
        ("Z14", cyclic(14)), ("Z15", cyclic(15)), ("Z16", cyclic(16)),
        ("Z18", cyclic(18)), ("Z20", cyclic(20)), ("Z24", cyclic(24)),
        ("D7", dihedral(7)), ("D8", dihedral(8)), ("D9", dihedral(9)),
        ("D12", dihedral(12)),
        ("S4", symmetric(4)),
        ("Dic4", dicyclic(4)), ("Dic6", dicyclic(6)),
        ("Z4xZ4", abelian(4, 4)), ("Z2xZ12", abelian(2, 12)),
        ("Z3xZ6", abelian(3, 6)), ("A4xZ2", direct_product(alternating(4), cyclic(2))),
    ]
    return pool
