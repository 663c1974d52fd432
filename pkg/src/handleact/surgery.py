"""Framed-link surgery diagrams with exact rational coefficients.

A diagram holds only algebraic data: one exact coefficient per component,
an integer linking matrix, and an unknottedness flag per component (the
flag is asserted by the caller, never verified).  The two twist moves
update coefficients and linking numbers exactly; a coefficient a/b with
b = 0 is the unsurgered (infinity) framing and is canonically stored as
(1, 0).

Sign convention: a twist with t > 0 along an unknotted component sends
the infinity coefficient to 1/t; left-hand twists are t < 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple

from .errors import DomainError, InputError
from .homology import determinant


@dataclass(frozen=True, order=True)
class RationalCoefficient:
    """Exact surgery coefficient a/b with gcd(a, b) = 1 and b >= 0."""

    a: int
    b: int = 1

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise DomainError("coefficient 0/0 is not allowed")
        a, b = self.a, self.b
        if b == 0:
            a = 1
        else:
            if b < 0:
                a, b = -a, -b
            g = math.gcd(a, b)
            a, b = a // g, b // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    def twisted(self, t: int, linking: int) -> "RationalCoefficient":
        """Coefficient after a t-twist along a component met `linking` times."""
        return RationalCoefficient(self.a + t * linking * linking * self.b, self.b)

    def self_twisted(self, t: int) -> "RationalCoefficient":
        """Coefficient of the twisted component itself: a/b -> a/(b + t*a)."""
        return RationalCoefficient(self.a, self.b + t * self.a)

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.b == 1:
            return str(self.a)
        return "%d/%d" % (self.a, self.b)

    def to_json(self) -> list:
        return [self.a, self.b]


INFINITY = RationalCoefficient(1, 0)


@dataclass(frozen=True)
class Component:
    label: str
    coeff: RationalCoefficient
    unknotted: bool = False
    annotation: str = ""

    def to_json(self) -> dict:
        d = {"label": self.label, "coeff": self.coeff.to_json(),
             "unknotted": self.unknotted}
        if self.annotation:
            d["annotation"] = self.annotation
        return d


@dataclass(frozen=True)
class SurgeryDiagram:
    components: Tuple[Component, ...]
    linking: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.components)
        if len(self.linking) != n:
            raise DomainError("linking matrix size %d != component count %d"
                              % (len(self.linking), n))
        for i, row in enumerate(self.linking):
            if len(row) != n:
                raise DomainError("linking row %d has length %d, expected %d"
                                  % (i, len(row), n))
            if row[i] != 0:
                raise DomainError("linking matrix diagonal must be zero")
            for j in range(n):
                if row[j] != self.linking[j][i]:
                    raise DomainError("linking matrix must be symmetric")

    def labels(self) -> list:
        return [c.label for c in self.components]

    def index_of(self, label: str) -> int:
        for i, c in enumerate(self.components):
            if c.label == label:
                return i
        raise DomainError("no component labelled %r" % label)

    def relation_matrix(self) -> List[List[int]]:
        """Meridian relation matrix: diagonal a_i, off-diagonal b_i*lk(i,j)."""
        n = len(self.components)
        return [[self.components[i].coeff.a if i == j
                 else self.components[i].coeff.b * self.linking[i][j]
                 for j in range(n)] for i in range(n)]

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components],
                "linking": [list(row) for row in self.linking]}


def diagram_from_json(source: dict) -> SurgeryDiagram:
    if not isinstance(source, dict):
        raise InputError("diagram must be a JSON object")
    if "components" not in source or "linking" not in source:
        raise InputError("diagram needs 'components' and 'linking' keys")
    comps = []
    for i, c in enumerate(source["components"]):
        try:
            a, b = c["coeff"]
            comps.append(Component(str(c.get("label", "C%d" % (i + 1))),
                                   RationalCoefficient(int(a), int(b)),
                                   bool(c.get("unknotted", False)),
                                   str(c.get("annotation", ""))))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("bad component %d: %s" % (i, exc))
    linking = tuple(tuple(int(v) for v in row) for row in source["linking"])
    try:
        return SurgeryDiagram(tuple(comps), linking)
    except DomainError as exc:
        raise InputError(str(exc))


def load_diagram_file(path: str) -> SurgeryDiagram:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read diagram file %s: %s" % (path, exc))
    return diagram_from_json(data)


def rolfsen_twist(diagram: SurgeryDiagram, u: int, t: int) -> SurgeryDiagram:
    """Twist t times along unknotted component u.

    The twisted component's coefficient a/b becomes a/(b + t*a); every
    other component k picks up t*lk(k,u)^2 on its numerator; linking
    numbers among the others change by t*lk(i,u)*lk(j,u).
    """
    n = len(diagram.components)
    if not 0 <= u < n:
        raise DomainError("component index %d out of range" % u)
    if not diagram.components[u].unknotted:
        raise DomainError("component %r is not flagged unknotted"
                          % diagram.components[u].label)
    comps = []
    for k, c in enumerate(diagram.components):
        if k == u:
            comps.append(replace(c, coeff=c.coeff.self_twisted(t)))
        else:
            comps.append(replace(c, coeff=c.coeff.twisted(t, diagram.linking[k][u])))
    lk = [list(row) for row in diagram.linking]
    for i in range(n):
        for j in range(n):
            if i != j and i != u and j != u:
                lk[i][j] += t * diagram.linking[i][u] * diagram.linking[j][u]
    return SurgeryDiagram(tuple(comps), tuple(tuple(row) for row in lk))


def boundary_disc_twist(diagram: SurgeryDiagram, lk_vector: Sequence[int],
                        t: int) -> SurgeryDiagram:
    """Twist in a disc met algebraically lk_vector[k] times by component k.

    Same coefficient and linking updates as rolfsen_twist, but the twisting
    disc belongs to the handlebody side of the splitting, so no component
    is consumed or added and the surgered manifold is unchanged.
    """
    n = len(diagram.components)
    if len(lk_vector) != n:
        raise DomainError("lk_vector length %d != component count %d"
                          % (len(lk_vector), n))
    comps = [replace(c, coeff=c.coeff.twisted(t, lk_vector[k]))
             for k, c in enumerate(diagram.components)]
    lk = [list(row) for row in diagram.linking]
    for i in range(n):
        for j in range(n):
            if i != j:
                lk[i][j] += t * lk_vector[i] * lk_vector[j]
    return SurgeryDiagram(tuple(comps), tuple(tuple(row) for row in lk))


def validate_diagram(source) -> dict:
    """Structural report: counts, coefficients, relation-matrix determinant.

    Accepts a SurgeryDiagram (valid by construction) or raw diagram JSON
    data, in which case invariant violations are reported, not raised.
    """
    if isinstance(source, SurgeryDiagram):
        diagram, violations = source, []
    else:
        try:
            diagram, violations = diagram_from_json(source), []
        except InputError as exc:
            return {"valid": False, "violations": [str(exc)]}
    report = {
        "valid": not violations,
        "violations": violations,
        "component_count": len(diagram.components),
        "labels": diagram.labels(),
        "coefficients": [str(c.coeff) for c in diagram.components],
        "determinant": determinant(diagram.relation_matrix()),
    }
    return report
