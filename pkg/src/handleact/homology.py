"""Exact integer linear algebra and first homology.

Matrices are plain lists of lists of Python ints (arbitrary precision by
construction).  Smith normal form is computed with full transform
tracking so tests can verify D = U * M * V and the unimodularity of U and
V exactly; pivots are chosen by smallest nonzero magnitude to keep entry
growth down.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .errors import DomainError, InputError
from .words import FreeWord, format_word, parse_word


def _check_matrix(mat) -> Tuple[int, int]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    for r in mat:
        if len(r) != cols:
            raise InputError("matrix is not rectangular")
        for v in r:
            if not isinstance(v, int):
                raise InputError("matrix entries must be integers, got %r" % (v,))
    return rows, cols


def identity_matrix(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matrix_multiply(a, b) -> List[List[int]]:
    ra, ca = _check_matrix(a)
    rb, cb = _check_matrix(b)
    if ca != rb:
        raise DomainError("cannot multiply %dx%d by %dx%d" % (ra, ca, rb, cb))
    return [[sum(a[i][k] * b[k][j] for k in range(ca)) for j in range(cb)]
            for i in range(ra)]


def determinant(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    rows, cols = _check_matrix(mat)
    if rows != cols:
        raise DomainError("determinant needs a square matrix")
    n = rows
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(mat) -> Tuple[list, list, list]:
    """Return (D, U, V) with D = U * mat * V in Smith normal form.

    D is diagonal with each diagonal entry nonnegative and dividing the
    next; U and V are unimodular.
    """
    rows, cols = _check_matrix(mat)
    a = [row[:] for row in mat]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        arow, urow = a[src], u[src]
        for j in range(cols):
            a[dst][j] += q * arow[j]
        for j in range(rows):
            u[dst][j] += q * urow[j]

    def add_col(src, dst, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def pivot_at(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    for k in range(min(rows, cols)):
        while True:
            pos = pivot_at(k)
            if pos is None:
                break
            if pos[0] != k:
                swap_rows(k, pos[0])
            if pos[1] != k:
                swap_cols(k, pos[1])
            # clear the pivot column and row
            dirty = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    add_row(k, i, -(a[i][k] // a[k][k]))
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    add_col(k, j, -(a[k][j] // a[k][k]))
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            p = a[k][k]
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, k, 1)
        if pos is None:
            break

    for k in range(min(rows, cols)):
        if a[k][k] < 0:
            for j in range(cols):
                a[k][j] = -a[k][j]
            for j in range(rows):
                u[k][j] = -u[k][j]
    return a, u, v


# ---------------------------------------------------------------------------
# abelian group structures

@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant factors d_1 | d_2 | ... (each >= 2) plus a free rank."""

    invariant_factors: Tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise DomainError("invariant factors must be >= 2")
            if prev is not None and d % prev != 0:
                raise DomainError("invariant factors must form a divisibility chain")
            prev = d
        if self.free_rank < 0:
            raise DomainError("free rank must be nonnegative")

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank,
                "torsion": list(self.invariant_factors)}

    def __str__(self):
        return self.render()


def cokernel_structure(mat, cols: int) -> AbelianGroupStructure:
    """Structure of Z^cols modulo the row space of the matrix."""
    if not mat:
        return AbelianGroupStructure((), cols)
    d, _, _ = smith_normal_form(mat)
    diag = [d[k][k] for k in range(min(len(d), cols))]
    rank = sum(1 for x in diag if x != 0)
    factors = tuple(x for x in diag if x > 1)
    return AbelianGroupStructure(factors, cols - rank)


# ---------------------------------------------------------------------------
# presentations

@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: Tuple[FreeWord, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for r in self.relators:
            if r.rank != self.generator_count:
                raise DomainError("relator rank %d != generator count %d"
                                  % (r.rank, self.generator_count))

    def relator_matrix(self) -> List[List[int]]:
        """Exponent-sum matrix, one row per relator."""
        return [r.exponent_sums() for r in self.relators]

    def to_json(self) -> dict:
        return {"generators": self.generator_count,
                "relators": [format_word(r) for r in self.relators]}


def load_presentation(source: dict) -> GroupPresentation:
    if not isinstance(source, dict):
        raise InputError("presentation must be a JSON object")
    if "generators" not in source or "relators" not in source:
        raise InputError("presentation needs 'generators' and 'relators' keys")
    g = source["generators"]
    if not isinstance(g, int) or g < 0:
        raise InputError("generator count must be a nonnegative integer")
    relators = tuple(parse_word(text, g) for text in source["relators"])
    return GroupPresentation(g, relators)


def load_presentation_file(path: str) -> GroupPresentation:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read presentation file %s: %s" % (path, exc))
    return load_presentation(data)


def h1_from_presentation(pres: GroupPresentation) -> AbelianGroupStructure:
    """Abelianization of a presented group via Smith normal form."""
    return cokernel_structure(pres.relator_matrix(), pres.generator_count)


def h1_from_surgery(diagram) -> AbelianGroupStructure:
    """First homology of the surgered manifold.

    Filling with coefficient a/b on component i kills
    a*mu_i + b*sum_j lk(i, j)*mu_j in the free abelian group on the
    meridians, so H_1 is the cokernel of the matrix with diagonal a_i and
    off-diagonal b_i * lk(i, j).
    """
    mat = diagram.relation_matrix()
    return cokernel_structure(mat, len(diagram.components))
