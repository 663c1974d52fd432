import random

import pytest

from handleact import catalog
from handleact.errors import DomainError, InputError
from handleact.words import (FreeWord, NielsenMove, apply_nielsen_move,
                             attaching_words, elementary_moves, evaluate_word,
                             format_word, parse_word, word_multiply)


def w(text, rank=3):
    return parse_word(text, rank)


def test_multiply_cancels():
    assert w("x1") * w("X1") == FreeWord(3)
    assert w("x1 x2") * w("X2 x3") == w("x1 x3")
    u = w("x1 x2")
    assert u.inverse() * u == FreeWord(3)


def test_multiply_rank_mismatch():
    with pytest.raises(DomainError):
        word_multiply(FreeWord(2, (1,)), FreeWord(3, (1,)))


def test_words_always_reduced():
    assert FreeWord(2, (1, -1, 2)).letters == (2,)
    assert FreeWord(2, (1, 2, -2, -1)).letters == ()


def test_multiply_associative_random():
    rng = random.Random(1)

    def rand_word():
        return FreeWord(3, (rng.choice((1, -1)) * rng.randrange(1, 4)
                            for _ in range(rng.randrange(0, 8))))

    for _ in range(300):
        a, b, c = rand_word(), rand_word(), rand_word()
        assert (a * b) * c == a * (b * c)


def test_evaluate_examples():
    z2 = catalog.cyclic(2)
    assert evaluate_word(FreeWord(2), z2, (1, 1)) == 0
    s3 = catalog.symmetric(3)
    a, b = 1, 2
    assert evaluate_word(parse_word("x1 x2", 2), s3, (a, b)) == s3.mul[a][b]
    # even exponent sums per generator die in Z/2
    word = parse_word("x1 x1 X2 X1 X2 X1", 2)
    assert evaluate_word(word, z2, (1, 1)) == 0


def test_evaluate_is_homomorphism():
    rng = random.Random(2)
    for group in (catalog.cyclic(6), catalog.symmetric(3)):
        images = tuple(rng.randrange(group.size) for _ in range(3))
        for _ in range(10_000):
            u = FreeWord(3, (rng.choice((1, -1)) * rng.randrange(1, 4)
                             for _ in range(rng.randrange(0, 6))))
            v = FreeWord(3, (rng.choice((1, -1)) * rng.randrange(1, 4)
                             for _ in range(rng.randrange(0, 6))))
            lhs = evaluate_word(u * v, group, images)
            rhs = group.mul[evaluate_word(u, group, images)][
                evaluate_word(v, group, images)]
            assert lhs == rhs


def test_parse_format_round_trip():
    for text in ("", "x1", "X1", "x1 x1 X2 X1", "x2 x3 X1"):
        word = parse_word(text, 3)
        assert format_word(word) == text
        assert parse_word(format_word(word), 3) == word
    # unreduced text parses to the reduced word
    assert format_word(parse_word("x1 X1 x2", 3)) == "x2"


def test_parse_rejects_bad_tokens():
    with pytest.raises(InputError):
        parse_word("x0", 2)
    with pytest.raises(InputError):
        parse_word("y1", 2)
    with pytest.raises(InputError):
        parse_word("x3", 2)
    with pytest.raises(InputError):
        parse_word("x1^2", 2)


def test_attaching_words_examples():
    words = attaching_words(2, 2)
    assert format_word(words[0]) == "x1 x1 X2 X1 X2 X1"
    assert len(words[0]) == 6
    assert format_word(words[1]) == "x2 X1 X2 X1"
    assert len(words[1]) == 4
    assert format_word(attaching_words(2, 1)[0]) == "x1 X2 X1"


def test_attaching_words_exponent_sums():
    for g in (2, 3, 4):
        for n in (1, 2, 3, 5):
            for i, word in enumerate(attaching_words(g, n)):
                want = [-n] * g
                want[i] += n
                assert word.exponent_sums() == want


def test_attaching_words_preconditions():
    with pytest.raises(DomainError):
        attaching_words(1, 2)
    with pytest.raises(DomainError):
        attaching_words(3, 0)


def test_nielsen_move_examples():
    z3 = catalog.cyclic(3)
    assert apply_nielsen_move(z3, (0, 1), NielsenMove("swap", 1, 2)) == (1, 0)
    assert apply_nielsen_move(z3, (1, 2), NielsenMove("invert", 1)) == (2, 2)
    z2 = catalog.cyclic(2)
    got = apply_nielsen_move(z2, (1, 0), NielsenMove("right-multiply", 1, 2, 1))
    assert got == (1, 0)


def test_nielsen_left_vs_right():
    s3 = catalog.symmetric(3)
    t = (1, 2)
    right = apply_nielsen_move(s3, t, NielsenMove("right-multiply", 1, 2, 1))
    left = apply_nielsen_move(s3, t, NielsenMove("left-multiply", 1, 2, 1))
    assert right == (s3.mul[1][2], 2)
    assert left == (s3.mul[2][1], 2)
    assert right != left  # S3 is nonabelian; the sides differ


def test_nielsen_moves_invertible():
    rng = random.Random(3)
    s3 = catalog.symmetric(3)
    for move in elementary_moves(3):
        for _ in range(20):
            t = tuple(rng.randrange(6) for _ in range(3))
            forward = apply_nielsen_move(s3, t, move)
            assert apply_nielsen_move(s3, forward, move.inverse()) == t


def test_nielsen_move_validation():
    with pytest.raises(DomainError):
        NielsenMove("right-multiply", 1, 1, 1)
    with pytest.raises(InputError):
        NielsenMove("swap", 1, 1)
    with pytest.raises(InputError):
        NielsenMove("twist", 1)
    with pytest.raises(InputError):
        NielsenMove("left-multiply", 1, 2, 3)
    with pytest.raises(DomainError):
        apply_nielsen_move(catalog.cyclic(2), (1, 0), NielsenMove("invert", 3))


def test_move_json_round_trip():
    for move in elementary_moves(3):
        assert NielsenMove.from_json(move.to_json()) == move


def test_word_power():
    u = parse_word("x1 x2", 2)
    assert format_word(u ** 2) == "x1 x2 x1 x2"
    assert format_word(u ** -1) == "X2 X1"
    assert (u ** 0) == FreeWord(2)
