"""The Seifert-fibered closed extension of a free handlebody action.

Given an action with quotient genus g >= 2 and a twist order n divisible
by every element order of the group, the quotient handlebody is closed up
by attaching 2-handles along the curves x_i^n (x_1...x_g)^-n.  The
resulting manifold fibers over the 2-sphere with g+1 exceptional fibers;
this module produces its fundamental-group presentation, the induced
homomorphism data, the keychain surgery diagram, and the Seifert
invariants in unnormalized and normalized form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .actions import HandlebodyAction, total_genus
from .errors import DomainError
from .groups import group_exponent
from .homology import GroupPresentation
from .surgery import (INFINITY, Component, RationalCoefficient,
                      SurgeryDiagram, boundary_disc_twist, rolfsen_twist)
from .words import attaching_words, evaluate_word

GENUS_TOO_SMALL = ("quotient genus %d is below 2: free actions there are "
                   "rotations of a ball or of a fibered solid torus and are "
                   "not covered by this construction")


@dataclass(frozen=True)
class SeifertInvariants:
    """Orlik-style tuple {b; (o1, 0); (alpha_1, beta_1), ...}.

    The base is always the 2-sphere with orientable total space ("o1").
    Pairs with alpha = 1 are never stored: they are absorbed into b, which
    keeps the Euler number intact (relevant only for twist order 1, where
    the construction has no exceptional fibers at all).
    """

    b: int
    exceptional: Tuple[Tuple[int, int], ...] = ()
    base_class: str = "o1"
    base_genus: int = 0
    note: str = ""

    def __post_init__(self):
        from math import gcd
        for alpha, beta in self.exceptional:
            if alpha < 2:
                raise DomainError("exceptional fiber needs alpha >= 2, got %d" % alpha)
            if gcd(alpha, beta) != 1:
                raise DomainError("fiber pair (%d, %d) is not coprime" % (alpha, beta))

    def is_normalized(self) -> bool:
        return all(0 < beta < alpha for alpha, beta in self.exceptional)

    def render(self) -> str:
        parts = ["%d" % self.b, "(%s, %d)" % (self.base_class, self.base_genus)]
        parts.extend("(%d, %d)" % p for p in self.exceptional)
        return "{" + "; ".join(parts[:2]) + ("; " if self.exceptional else "") \
            + ", ".join(parts[2:]) + "}"

    def to_json(self) -> dict:
        d = {"b": self.b,
             "base": [self.base_class, self.base_genus],
             "exceptional": [list(p) for p in self.exceptional]}
        if self.note:
            d["note"] = self.note
        return d

    def __str__(self):
        return self.render()


def euler_number(inv: SeifertInvariants) -> Fraction:
    """-(b + sum beta_i/alpha_i), exact."""
    total = Fraction(inv.b)
    for alpha, beta in inv.exceptional:
        total += Fraction(beta, alpha)
    return -total


def normalize_seifert(inv: SeifertInvariants) -> SeifertInvariants:
    """Reduce each beta into (0, alpha), moving the integer parts into b."""
    shift = 0
    pairs = []
    for alpha, beta in inv.exceptional:
        q, r = divmod(beta, alpha)
        if r == 0:
            raise DomainError("pair (%d, %d) is not an exceptional fiber "
                              "(beta divisible by alpha)" % (alpha, beta))
        shift += q
        pairs.append((alpha, r))
    return SeifertInvariants(inv.b + shift, tuple(pairs),
                             inv.base_class, inv.base_genus, inv.note)


def seifert_invariants_closed_form(g: int, n: int,
                                   normalized: bool = False) -> SeifertInvariants:
    """Invariants of the genus-g, twist-n extension.

    Unnormalized: {0; (o1, 0); (n, 1-n) x g, (n, gn-1)}; normalized:
    {-1; (o1, 0); (n, 1) x g, (n, n-1)}.  For n = 1 every filling is
    integral, so the exceptional list is empty and b carries the whole
    Euler number.
    """
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    if n < 1:
        raise DomainError("twist order must be positive, got %d" % n)
    if n == 1:
        return SeifertInvariants(g - 1, (),
                                 note="twist order 1 produces no exceptional fibers")
    if normalized:
        pairs = ((n, 1),) * g + ((n, n - 1),)
        return SeifertInvariants(-1, pairs)
    pairs = ((n, 1 - n),) * g + ((n, g * n - 1),)
    return SeifertInvariants(0, pairs)


# ---------------------------------------------------------------------------
# surgery diagram

AXIS_LABEL = "L"


def _handle_label(i: int) -> str:
    return "L%d" % i


def keychain_diagram(g: int, n: int) -> SurgeryDiagram:
    """Closed form of the final diagram: axis L at (1-gn)/n, handle circles
    L_1..L_g at -n/(n-1), each linking L once and each other not at all.

    The handle circles are fibers of a product fibering of the solid-torus
    complement of L: coaxial circles, each meeting L's meridian disc once,
    pairwise separated, which fixes this linking matrix.
    """
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    comps = [Component(AXIS_LABEL, RationalCoefficient(1 - g * n, n), True,
                       "axis circle; the attaching curves were untwisted along it")]
    for i in range(1, g + 1):
        comps.append(Component(_handle_label(i), RationalCoefficient(-n, n - 1),
                               True, "circle around handle %d" % i))
    linking = [[0] * (g + 1) for _ in range(g + 1)]
    for i in range(1, g + 1):
        linking[0][i] = linking[i][0] = 1
    return SurgeryDiagram(tuple(comps), tuple(tuple(r) for r in linking))


def seifert_twist_script(g: int, n: int) -> dict:
    """Replay the coefficient bookkeeping that produces the keychain diagram.

    Starting from unsurgered circles, the attaching curves are untwisted n
    times along the axis, n-1 times (negatively) along each handle circle,
    and finally one left-hand twist is made in each handle's meridian
    disc.  Only the coefficients along the way are meaningful: the moves
    happen inside a Heegaard description, so the intermediate linking
    numbers carry no ambient meaning and the script works over a zero
    linking matrix.  Returns the staged diagrams.
    """
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    if n < 1:
        raise DomainError("twist order must be positive, got %d" % n)
    comps = [Component(AXIS_LABEL, INFINITY, True, "axis circle")]
    comps += [Component(_handle_label(i), INFINITY, True,
                        "circle around handle %d" % i) for i in range(1, g + 1)]
    zero = tuple(tuple(0 for _ in comps) for _ in comps)
    initial = SurgeryDiagram(tuple(comps), zero)

    after_axis = rolfsen_twist(initial, 0, n)
    after_handles = after_axis
    for i in range(1, g + 1):
        after_handles = rolfsen_twist(after_handles, i, -(n - 1))
    final = after_handles
    for i in range(1, g + 1):
        # the axis passes once through every handle's meridian disc, the
        # i-th handle circle once through its own and not at all through
        # the others
        vec = [1] + [1 if k == i else 0 for k in range(1, g + 1)]
        final = boundary_disc_twist(final, vec, -1)
    return {"initial": initial, "after_axis_twist": after_axis,
            "after_handle_twists": after_handles, "final": final}


# ---------------------------------------------------------------------------
# the full construction

@dataclass(frozen=True)
class SeifertExtensionResult:
    n: int
    presentation: GroupPresentation
    induced_images: Tuple[int, ...]
    diagram: SurgeryDiagram
    invariants_unnormalized: SeifertInvariants
    invariants_normalized: SeifertInvariants
    cover_genus: int


def check_induced_homomorphism(action: HandlebodyAction,
                               presentation: GroupPresentation) -> bool:
    """True when every relator dies under the generator images, i.e. the
    surjection onto the group descends to the closed manifold's group."""
    return all(evaluate_word(r, action.group, action.images) == action.group.identity
               for r in presentation.relators)


def admissible_twist_order(action: HandlebodyAction, n: int) -> int:
    exponent = group_exponent(action.group)
    if n < 1 or n % exponent != 0:
        raise DomainError("twist order n=%d is not a positive multiple of the "
                          "group exponent %d, so the attaching curves would "
                          "not die in the group" % (n, exponent))
    return exponent


def build_seifert_extension(action: HandlebodyAction, n: int) -> SeifertExtensionResult:
    """Run the whole construction for one action and twist order."""
    g = action.quotient_genus
    if g < 2:
        raise DomainError(GENUS_TOO_SMALL % g)
    admissible_twist_order(action, n)

    presentation = GroupPresentation(g, tuple(attaching_words(g, n)))
    if not check_induced_homomorphism(action, presentation):
        raise AssertionError("attaching words survive in the group despite "
                             "an admissible twist order")

    diagram = keychain_diagram(g, n)
    scripted = seifert_twist_script(g, n)["final"]
    assert [c.coeff for c in scripted.components] == [c.coeff for c in diagram.components]

    return SeifertExtensionResult(
        n=n,
        presentation=presentation,
        induced_images=tuple(action.images),
        diagram=diagram,
        invariants_unnormalized=seifert_invariants_closed_form(g, n, normalized=False),
        invariants_normalized=seifert_invariants_closed_form(g, n, normalized=True),
        cover_genus=total_genus(action),
    )
