import random
from itertools import product

import pytest

from handleact import catalog
from handleact.actions import (HandlebodyAction, actions_equivalent,
                               classify_actions, load_action, replay_witness,
                               total_genus)
from handleact.errors import DomainError, InputError
from handleact.groups import is_generating_tuple
from handleact.selftest import brute_force_classification


def action(group, images):
    return HandlebodyAction(group, len(images), tuple(images))


def test_total_genus():
    assert total_genus(action(catalog.trivial(), (0, 0))) == 2
    assert total_genus(action(catalog.cyclic(2), (1, 1))) == 3
    s3 = catalog.symmetric(3)
    assert total_genus(action(s3, (1, 2, 0))) == 13


def test_nongenerating_images_rejected():
    with pytest.raises(DomainError):
        HandlebodyAction(catalog.cyclic(2), 2, (0, 0))
    with pytest.raises(DomainError):
        HandlebodyAction(catalog.abelian(2, 2), 2, (1, 1))


def test_image_count_must_match_genus():
    with pytest.raises(DomainError):
        HandlebodyAction(catalog.cyclic(2), 3, (1, 1))


def test_identical_actions_have_empty_witness():
    z2 = catalog.cyclic(2)
    a = action(z2, (1, 0))
    witness = actions_equivalent(a, a)
    assert witness is not None
    assert witness.moves == ()
    assert witness.conjugator == 0


def test_swap_example():
    z2 = catalog.cyclic(2)
    witness = actions_equivalent(action(z2, (1, 0)), action(z2, (0, 1)))
    assert witness is not None
    assert replay_witness(z2, (1, 0), witness) == (0, 1)


def test_invert_example():
    z3 = catalog.cyclic(3)
    witness = actions_equivalent(action(z3, (1, 0)), action(z3, (2, 0)))
    assert witness is not None
    assert replay_witness(z3, (1, 0), witness) == (2, 0)


def test_mismatched_inputs_rejected():
    z2, z3 = catalog.cyclic(2), catalog.cyclic(3)
    with pytest.raises(DomainError):
        actions_equivalent(action(z2, (1, 0)), action(z3, (1, 0)))
    with pytest.raises(DomainError):
        actions_equivalent(action(z2, (1, 0)), action(z2, (1, 0, 1)))


def test_classify_trivial_group():
    classes = classify_actions(catalog.trivial(), 2)
    assert len(classes) == 1
    assert classes[0].representative == (0, 0)
    assert classes[0].orbit_size == 1


def test_classify_z2_and_z3():
    classes = classify_actions(catalog.cyclic(2), 2)
    assert [(c.representative, c.orbit_size) for c in classes] == [((0, 1), 3)]
    classes = classify_actions(catalog.cyclic(3), 2)
    assert [(c.representative, c.orbit_size) for c in classes] == [((0, 1), 8)]


def test_orbit_sizes_sum_to_generating_count():
    for name, group in catalog.groups_up_to_order(8):
        classes = classify_actions(group, 2)
        generating = sum(1 for t in product(range(group.size), repeat=2)
                         if is_generating_tuple(group, t))
        assert sum(c.orbit_size for c in classes) == generating


def test_classify_matches_oracle_spot():
    for name, group in (("S3", catalog.symmetric(3)), ("Q8", catalog.quaternion())):
        mine = [(c.representative, c.orbit_size) for c in classify_actions(group, 2)]
        oracle = [(rep, len(orbit))
                  for rep, orbit in brute_force_classification(group, 2)]
        assert mine == oracle


def test_classify_workers_deterministic():
    s3 = catalog.symmetric(3)
    solo = classify_actions(s3, 2, workers=1)
    pooled = classify_actions(s3, 2, workers=3)
    assert solo == pooled


def test_classify_bound():
    with pytest.raises(DomainError):
        classify_actions(catalog.cyclic(12), 3, max_tuples=100)


def test_equivalence_is_equivalence_relation():
    """Reflexive, symmetric, transitive, checked by exhaustive replay on a
    couple of genuinely small tuple spaces."""
    for group in (catalog.cyclic(2), catalog.cyclic(3)):
        tuples = [t for t in product(range(group.size), repeat=2)
                  if is_generating_tuple(group, t)]
        acts = {t: action(group, t) for t in tuples}
        related = {}
        for t1 in tuples:
            for t2 in tuples:
                related[(t1, t2)] = actions_equivalent(acts[t1], acts[t2]) is not None
        for t1 in tuples:
            assert related[(t1, t1)]
            for t2 in tuples:
                assert related[(t1, t2)] == related[(t2, t1)]
                for t3 in tuples:
                    if related[(t1, t2)] and related[(t2, t3)]:
                        assert related[(t1, t3)]


def test_genus_one_classification_runs():
    # the orbit machinery is defined for genus <= 1 even though the closed
    # constructions reject it; Z/5 has two classes of 1-tuples
    classes = classify_actions(catalog.cyclic(5), 1)
    assert [(c.representative, c.orbit_size) for c in classes] == \
        [((1,), 2), ((2,), 2)]


def test_classify_up_to_automorphisms():
    # the two genus-1 classes of Z/5 merge under Aut(Z/5)
    classes = classify_actions(catalog.cyclic(5), 1, up_to_automorphisms=True)
    assert [(c.representative, c.orbit_size) for c in classes] == [((1,), 4)]


def test_witness_replay_random_pairs():
    rng = random.Random(9)
    for name, group in catalog.groups_up_to_order(8):
        tuples = [t for t in product(range(group.size), repeat=2)
                  if is_generating_tuple(group, t)]
        for _ in range(10):
            t1, t2 = rng.choice(tuples), rng.choice(tuples)
            witness = actions_equivalent(action(group, t1), action(group, t2))
            if witness is not None:
                assert replay_witness(group, t1, witness) == t2


def test_load_action_validation():
    desc = {"group": {"table": [[0, 1], [1, 0]]}, "genus": 2, "images": [1, 1]}
    act = load_action(desc)
    assert act.quotient_genus == 2
    with pytest.raises(InputError):
        load_action({"group": {"table": [[0, 1], [1, 0]]}, "genus": 2})
    with pytest.raises(InputError):
        load_action({"group": {"table": [[0, 1], [1, 0]]}, "genus": "2",
                     "images": [1, 1]})
    with pytest.raises(DomainError):
        load_action({"group": {"table": [[0, 1], [1, 0]]}, "genus": 2,
                     "images": [0, 0]})
