"""The acceptance grid: every closed-form claim the toolkit reproduces,
bundled as callable checks for the `selftest` command and the test suite.

Each check returns (name, ok, detail).  The classification check compares
against an independent brute-force oracle (union-find over all single
moves applied to all tuples) rather than the breadth-first orbit search
used by the library.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product
from typing import Callable, List, Tuple

from . import catalog
from .actions import (HandlebodyAction, actions_equivalent, classify_actions,
                      replay_witness, total_genus)
from .covers import reidemeister_schreier
from .groups import (FiniteGroup, conjugate_tuple, group_exponent,
                     is_generating_tuple)
from .homology import GroupPresentation, h1_from_presentation, h1_from_surgery
from .hyperbolic import hyperbolic_diagram, hyperbolic_twist_script
from .seifert import (SeifertInvariants, euler_number, keychain_diagram,
                      normalize_seifert, seifert_invariants_closed_form,
                      seifert_twist_script)
from .surgery import RationalCoefficient
from .words import (apply_nielsen_move, attaching_words, elementary_moves,
                    evaluate_word)

DEFAULT_SEED = 117
GRID_G = (2, 3, 4)
GRID_N = (2, 3, 4, 5, 6)


# ---------------------------------------------------------------------------
# independent classification oracle

def brute_force_classification(group: FiniteGroup, genus: int) -> list:
    """Union-find partition of the generating tuples: one union per single
    Nielsen move and per conjugation, applied to every tuple."""
    tuples = [t for t in product(range(group.size), repeat=genus)
              if is_generating_tuple(group, t)]
    parent = {t: t for t in tuples}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    moves = list(elementary_moves(genus))
    for t in tuples:
        for m in moves:
            union(t, apply_nielsen_move(group, t, m))
        for c in range(1, group.size):
            union(t, conjugate_tuple(group, t, c))

    classes = {}
    for t in tuples:
        classes.setdefault(find(t), set()).add(t)
    return sorted((min(orbit), frozenset(orbit)) for orbit in classes.values())


# ---------------------------------------------------------------------------
# the criteria

def check_seifert_invariants() -> Tuple[str, bool, str]:
    start = time.monotonic()
    for g in GRID_G:
        for n in GRID_N:
            unnorm = seifert_invariants_closed_form(g, n, normalized=False)
            norm = seifert_invariants_closed_form(g, n, normalized=True)
            want_u = SeifertInvariants(0, ((n, 1 - n),) * g + ((n, g * n - 1),))
            want_n = SeifertInvariants(-1, ((n, 1),) * g + ((n, n - 1),))
            if unnorm != want_u or norm != want_n:
                return ("seifert-invariants", False,
                        "mismatch at g=%d n=%d" % (g, n))
            if normalize_seifert(unnorm) != want_n:
                return ("seifert-invariants", False,
                        "normalization mismatch at g=%d n=%d" % (g, n))
    elapsed = time.monotonic() - start
    if elapsed >= 1.0:
        return ("seifert-invariants", False, "grid took %.2fs (budget 1s)" % elapsed)
    return ("seifert-invariants", True,
            "grid g=%s n=%s in %.3fs" % (GRID_G, GRID_N, elapsed))


def check_euler_numbers() -> Tuple[str, bool, str]:
    for g in GRID_G:
        for n in GRID_N:
            unnorm = seifert_invariants_closed_form(g, n)
            norm = normalize_seifert(unnorm)
            e1, e2 = euler_number(unnorm), euler_number(norm)
            if e1 != e2:
                return ("euler-number", False,
                        "normalization changed e at g=%d n=%d: %s vs %s"
                        % (g, n, e1, e2))
            if e1 != Fraction(-(g - 1), n):
                return ("euler-number", False,
                        "family value wrong at g=%d n=%d: %s" % (g, n, e1))
    return ("euler-number", True, "e = -(g-1)/n and normalization-invariant")


def check_twist_scripts() -> Tuple[str, bool, str]:
    for g in GRID_G:
        for n in GRID_N:
            stages = seifert_twist_script(g, n)
            axis = stages["after_axis_twist"].components[0].coeff
            if axis != RationalCoefficient(1, n):
                return ("rolfsen-script", False,
                        "axis stage wrong at g=%d n=%d: %s" % (g, n, axis))
            mid = stages["after_handle_twists"]
            if mid.components[0].coeff != RationalCoefficient(1, n):
                return ("rolfsen-script", False,
                        "axis moved during handle twists at g=%d n=%d" % (g, n))
            for c in mid.components[1:]:
                if c.coeff != RationalCoefficient(-1, n - 1):
                    return ("rolfsen-script", False,
                            "handle stage wrong at g=%d n=%d: %s" % (g, n, c.coeff))
            final = stages["final"]
            if final.components[0].coeff != RationalCoefficient(1 - g * n, n):
                return ("rolfsen-script", False,
                        "final axis coefficient wrong at g=%d n=%d" % (g, n))
            for c in final.components[1:]:
                if c.coeff != RationalCoefficient(-n, n - 1):
                    return ("rolfsen-script", False,
                            "final handle coefficient wrong at g=%d n=%d" % (g, n))
            hyp = hyperbolic_twist_script(g, n)["final"]
            for c in hyp.components[g:]:
                if c.coeff != RationalCoefficient(1, n):
                    return ("rolfsen-script", False,
                            "weave circle moved off 1/n at g=%d n=%d" % (g, n))
            for c in hyp.components[:g]:
                if c.coeff != RationalCoefficient(-n, n - 1):
                    return ("rolfsen-script", False,
                            "hyperbolic handle coefficient wrong at g=%d n=%d" % (g, n))
    return ("rolfsen-script", True, "staged coefficients match on the grid")


def check_homology_agreement() -> Tuple[str, bool, str]:
    for g in GRID_G:
        for n in GRID_N:
            pres = GroupPresentation(g, tuple(attaching_words(g, n)))
            from_pres = h1_from_presentation(pres)
            from_diag = h1_from_surgery(keychain_diagram(g, n))
            if from_pres != from_diag:
                return ("homology-two-ways", False,
                        "descriptions disagree at g=%d n=%d: %s vs %s"
                        % (g, n, from_pres, from_diag))
            if from_pres.order() != n ** g * (g - 1):
                return ("homology-two-ways", False,
                        "|H1| wrong at g=%d n=%d: got %s, want %d"
                        % (g, n, from_pres.order(), n ** g * (g - 1)))
    spot = h1_from_presentation(GroupPresentation(2, tuple(attaching_words(2, 2))))
    if spot.invariant_factors != (2, 2) or spot.free_rank != 0:
        return ("homology-two-ways", False, "spot value g=2 n=2 is %s" % spot)
    return ("homology-two-ways", True,
            "presentation and diagram agree; |H1| = n^g (g-1); spot Z/2+Z/2")


def _random_generating_tuple(rng, group, genus):
    for _ in range(500):
        t = tuple(rng.randrange(group.size) for _ in range(genus))
        if is_generating_tuple(group, t):
            return t
    for t in product(range(group.size), repeat=genus):
        if is_generating_tuple(group, t):
            return t
    return None


def check_induced_homomorphism(seed: int = DEFAULT_SEED,
                               cases: int = 200) -> Tuple[str, bool, str]:
    rng = random.Random(seed)
    pool = catalog.sample_pool_up_to_24()
    done = 0
    while done < cases:
        name, group = pool[rng.randrange(len(pool))]
        genus = rng.choice((2, 3))
        images = _random_generating_tuple(rng, group, genus)
        if images is None:
            continue
        n = group_exponent(group) * rng.choice((1, 2, 3))
        for r in attaching_words(genus, n):
            if evaluate_word(r, group, images) != group.identity:
                return ("induced-homomorphism", False,
                        "relator survives for %s genus=%d n=%d images=%s"
                        % (name, genus, n, images))
        done += 1
    return ("induced-homomorphism", True,
            "%d randomized cases, all relators die (seed %d)" % (cases, seed))


def check_cover_ranks() -> Tuple[str, bool, str]:
    groups = [("Z2", catalog.cyclic(2)), ("Z3", catalog.cyclic(3)),
              ("S3", catalog.symmetric(3))]
    for name, group in groups:
        for genus in (2, 3):
            images = _random_generating_tuple(random.Random(0), group, genus)
            action = HandlebodyAction(group, genus, images)
            cover = reidemeister_schreier(GroupPresentation(genus, ()), action)
            want = 1 + group.size * (genus - 1)
            got = cover.presentation.generator_count
            if got != want or got != total_genus(action):
                return ("cover-ranks", False,
                        "%s genus=%d: rank %d, want %d" % (name, genus, got, want))
            if any(not r.is_identity() for r in cover.presentation.relators):
                return ("cover-ranks", False,
                        "%s genus=%d: free cover has relators" % (name, genus))
    return ("cover-ranks", True, "free-cover ranks are 1 + |G|(g-1)")


def check_classification_oracle() -> Tuple[str, bool, str]:
    start = time.monotonic()
    checked = 0
    for bound, genus in ((12, 2), (8, 3)):
        for name, group in catalog.groups_up_to_order(bound):
            mine = classify_actions(group, genus)
            oracle = brute_force_classification(group, genus)
            got = [(c.representative, c.orbit_size) for c in mine]
            want = [(rep, len(orbit)) for rep, orbit in oracle]
            if got != want:
                return ("classification-oracle", False,
                        "partition mismatch for %s at genus %d" % (name, genus))
            checked += 1
    elapsed = time.monotonic() - start
    if elapsed >= 30.0:
        return ("classification-oracle", False,
                "took %.1fs (budget 30s)" % elapsed)
    return ("classification-oracle", True,
            "%d (group, genus) cases match the union-find oracle in %.1fs"
            % (checked, elapsed))


def check_equivalence_relation() -> Tuple[str, bool, str]:
    small = [("Z2", catalog.cyclic(2)), ("Z3", catalog.cyclic(3)),
             ("Z4", catalog.cyclic(4)), ("Z2xZ2", catalog.abelian(2, 2))]
    replayed = 0
    for name, group in small:
        tuples = [t for t in product(range(group.size), repeat=2)
                  if is_generating_tuple(group, t)]
        actions = {t: HandlebodyAction(group, 2, t) for t in tuples}
        oracle = brute_force_classification(group, 2)
        rep_of = {t: rep for rep, orbit in oracle for t in orbit}
        for t1 in tuples:
            for t2 in tuples:
                witness = actions_equivalent(actions[t1], actions[t2])
                same = rep_of[t1] == rep_of[t2]
                if (witness is not None) != same:
                    return ("equivalence-witnesses", False,
                            "%s: %s ~ %s decided %s, oracle says %s"
                            % (name, t1, t2, witness is not None, same))
                if witness is not None:
                    if replay_witness(group, t1, witness) != t2:
                        return ("equivalence-witnesses", False,
                                "%s: witness replay failed for %s -> %s"
                                % (name, t1, t2))
                    replayed += 1
    return ("equivalence-witnesses", True,
            "%d witnesses replayed; relation matches the oracle partition"
            % replayed)


def check_hyperbolic_structure() -> Tuple[str, bool, str]:
    for g in GRID_G:
        for n in GRID_N:
            spec = hyperbolic_diagram(g, n)
            if len(spec.diagram.components) != 2 * g - 1:
                return ("hyperbolic-structure", False,
                        "component count wrong at g=%d n=%d" % (g, n))
            if len(spec.chain_order) != 2 * g - 2 or spec.cover_degree != 2 * g - 2:
                return ("hyperbolic-structure", False,
                        "chain length or cover degree wrong at g=%d" % g)
            for c in spec.diagram.components:
                want = (RationalCoefficient(1, n) if c.label.startswith("K")
                        else RationalCoefficient(-n, n - 1))
                if c.coeff != want:
                    return ("hyperbolic-structure", False,
                            "coefficient of %s wrong at g=%d n=%d" % (c.label, g, n))
            clasp = spec.diagram.index_of(spec.clasp_component)
            if any(spec.diagram.linking[clasp][j] != 0
                   for j in range(len(spec.diagram.components))):
                return ("hyperbolic-structure", False,
                        "clasp circle has nonzero linking at g=%d" % g)
    return ("hyperbolic-structure", True,
            "counts, chain, cover degree and coefficients match on the grid")


ALL_CHECKS: List[Callable[[], Tuple[str, bool, str]]] = [
    check_seifert_invariants,
    check_euler_numbers,
    check_twist_scripts,
    check_homology_agreement,
    check_induced_homomorphism,
    check_cover_ranks,
    check_classification_oracle,
    check_equivalence_relation,
    check_hyperbolic_structure,
]


def run_selftest(seed: int = DEFAULT_SEED) -> dict:
    """Run every check; the result records per-check status and total time."""
    start = time.monotonic()
    results = []
    for check in ALL_CHECKS:
        if check is check_induced_homomorphism:
            name, ok, detail = check_induced_homomorphism(seed=seed)
        else:
            name, ok, detail = check()
        results.append({"name": name, "ok": ok, "detail": detail})
    elapsed = time.monotonic() - start
    return {"criteria": results,
            "passed": sum(1 for r in results if r["ok"]),
            "failed": sum(1 for r in results if not r["ok"]),
            "elapsed_s": round(elapsed, 3)}
