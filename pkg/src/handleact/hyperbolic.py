"""Surgery diagrams for the hyperbolic closed extensions.

Here the axis of the Seifert construction is replaced by g-1 circles that
weave through consecutive pairs of handles, so the final diagram is a
closed chain of length 2g-2 (handle circles alternating with weave
circles) plus one extra handle circle clasping the chain.  The chain
complement is the (2g-2)-fold cyclic cover of the Whitehead link
complement; surgery on it is hyperbolic for all but finitely many
coefficient choices, which this module records but does not verify.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .actions import HandlebodyAction
from .errors import DomainError
from .seifert import GENUS_TOO_SMALL, admissible_twist_order
from .surgery import (INFINITY, Component, RationalCoefficient,
                      SurgeryDiagram, boundary_disc_twist, rolfsen_twist)

HYPERBOLICITY_NOTICE = (
    "surgery on this chain yields a hyperbolic manifold for all but "
    "finitely many twist orders; no verification is performed here")

# The figures pin only the unsigned adjacency of the chain: consecutive
# components are recorded with linking number 1 and the clasp circle with
# linking number 0 (a Whitehead-style clasp has algebraic linking zero).
# The signs are a convention, so homology read off this matrix is not
# authoritative.
LINKING_CONVENTION_NOTE = (
    "chain adjacencies use linking number 1 and the clasp uses 0 by "
    "convention; signed linking data is not pinned down, so first homology "
    "from this matrix is not authoritative")


@dataclass(frozen=True)
class HyperbolicDiagramSpec:
    g: int
    n: int
    diagram: SurgeryDiagram
    chain_order: Tuple[str, ...]
    clasp_component: str
    cover_degree: int

    def to_json(self) -> dict:
        return {"g": self.g, "n": self.n,
                "diagram": self.diagram.to_json(),
                "chain": list(self.chain_order),
                "clasp": self.clasp_component,
                "cover_degree": self.cover_degree,
                "linking_note": LINKING_CONVENTION_NOTE,
                "notice": HYPERBOLICITY_NOTICE}


def _labels(g: int):
    handles = ["L%d" % i for i in range(1, g + 1)]
    weaves = ["K%d" % i for i in range(1, g)]
    return handles, weaves


def hyperbolic_diagram(g: int, n: int) -> HyperbolicDiagramSpec:
    """The closed-form chain diagram for given genus and twist order."""
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    if n < 2:
        raise DomainError("twist order must be at least 2 here "
                          "(the handle coefficient -n/(n-1) needs n > 1)")
    handles, weaves = _labels(g)
    comps = [Component(lbl, RationalCoefficient(-n, n - 1), True,
                       "circle around handle %d" % (i + 1))
             for i, lbl in enumerate(handles)]
    comps += [Component(lbl, RationalCoefficient(1, n), True,
                        "weave circle %d" % (i + 1))
              for i, lbl in enumerate(weaves)]
    labels = [c.label for c in comps]
    index = {lbl: k for k, lbl in enumerate(labels)}

    chain = []
    for i in range(g - 1):
        chain.append(handles[i])
        chain.append(weaves[i])
    clasp = handles[g - 1]

    m = len(comps)
    linking = [[0] * m for _ in range(m)]
    for k in range(len(chain)):
        a = index[chain[k]]
        b = index[chain[(k + 1) % len(chain)]]
        if a != b:
            linking[a][b] = linking[b][a] = 1
    spec = HyperbolicDiagramSpec(
        g=g, n=n,
        diagram=SurgeryDiagram(tuple(comps), tuple(tuple(r) for r in linking)),
        chain_order=tuple(chain),
        clasp_component=clasp,
        cover_degree=2 * g - 2,
    )
    return spec


def hyperbolic_twist_script(g: int, n: int) -> dict:
    """Coefficient bookkeeping for the hyperbolic case, staged.

    Each weave circle is untwisted n times (coefficient 1/n), each handle
    circle n-1 times negatively (-1/(n-1)); the final left-hand twists in
    the handle meridian discs meet each handle circle once and the weave
    circles not at all, so those keep coefficient 1/n while the handle
    circles move to -n/(n-1).  As in the Seifert script, only the staged
    coefficients are meaningful; linking starts at zero.
    """
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    if n < 2:
        raise DomainError("twist order must be at least 2 here")
    handles, weaves = _labels(g)
    comps = [Component(lbl, INFINITY, True) for lbl in handles + weaves]
    zero = tuple(tuple(0 for _ in comps) for _ in comps)
    diagram = SurgeryDiagram(tuple(comps), zero)

    for i in range(g, len(comps)):
        diagram = rolfsen_twist(diagram, i, n)
    after_weave = diagram
    for i in range(g):
        diagram = rolfsen_twist(diagram, i, -(n - 1))
    after_handles = diagram
    for i in range(g):
        vec = [1 if k == i else 0 for k in range(g)] + [0] * (g - 1)
        diagram = boundary_disc_twist(diagram, vec, -1)
    return {"after_weave_twists": after_weave,
            "after_handle_twists": after_handles, "final": diagram}


def build_hyperbolic_diagram(action: HandlebodyAction, n: int) -> HyperbolicDiagramSpec:
    """Chain diagram for the hyperbolic extension of one action."""
    g = action.quotient_genus
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    if n < 2:
        raise DomainError("twist order must be at least 2 here "
                          "(the handle coefficient -n/(n-1) needs n > 1)")
    admissible_twist_order(action, n)
    spec = hyperbolic_diagram(g, n)
    scripted = hyperbolic_twist_script(g, n)["final"]
    assert [c.coeff for c in scripted.components] == \
        [c.coeff for c in spec.diagram.components]
    return spec
