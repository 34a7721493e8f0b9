import random

import pytest
from hypothesis import given, strategies as st

from conftest import small_partitions, typed
from orbitkit.errors import LeviSyntaxError, PreconditionViolated, TypeMismatch
from orbitkit.induction import (
    LeviDatum,
    NilpotentOrbit,
    format_levi,
    induce_classical,
    induce_gl,
    induce_levi,
    induced_wavefront,
    parse_levi,
)
from orbitkit.partition import Partition, collapse, dominates, parse_partition, pointwise_sum, typed_partitions

P = parse_partition


def test_induce_gl():
    assert induce_gl(P("[2,1]"), P("[3]")) == P("[5,1]")
    assert induce_gl(P("[2,2]"), P("[2]")) == P("[4,2]")
    assert induce_gl(P("[3,1]"), Partition()) == P("[3,1]")


def test_induce_classical_examples():
    assert induce_classical(P("[1]"), P("[4,2,2,2]"), "C") == P("[6,2,2,2]")
    assert induce_classical(P("[2]"), Partition(), "C") == P("[4]")
    assert induce_classical(P("[2]"), P("[4,2,2,2]"), "C") == P("[8,2,2,2]")
    # an odd GL block in type B: [3]+[3]+[1] = [7] already type B
    assert induce_classical(P("[3]"), P("[1]"), "B") == P("[7]")


def test_induce_classical_guards():
    with pytest.raises(TypeMismatch):
        induce_classical(P("[1]"), P("[2]"), "B")
    with pytest.raises(ValueError):
        induce_classical(P("[1]"), P("[1]"), "A")


def test_induce_levi_staged():
    levi = LeviDatum((P("[1]"), P("[1]")), NilpotentOrbit("C", P("[2]")))
    assert induce_levi(levi, "C") == P("[6]")
    assert levi.ambient_size("C") == 6
    single = LeviDatum((P("[2,1]"),), NilpotentOrbit("C", P("[4,2,2,2]")))
    assert induce_levi(single, "C") == induce_classical(P("[2,1]"), P("[4,2,2,2]"), "C")


def test_type_a_levi():
    levi = LeviDatum((P("[2,1]"), P("[1]")))
    assert induce_levi(levi, "A") == P("[3,1]")
    assert levi.ambient_size("A") == 4


def test_levi_block_sizes_checked():
    with pytest.raises(ValueError):
        LeviDatum((P("[2,1]"),), None, (4,))


def test_orbit_labels():
    assert NilpotentOrbit("D", P("[4,4]"), "I").is_very_even
    with pytest.raises(ValueError):
        NilpotentOrbit("D", P("[3,1]"), "II")
    with pytest.raises(ValueError):
        NilpotentOrbit("C", P("[2,2]"), "I")
    with pytest.raises(TypeMismatch):
        NilpotentOrbit("B", P("[2]"))


def test_induced_wavefront():
    assert induced_wavefront({P("[2]")}, {P("[4,2,2,2]")}, "C") == {P("[8,2,2,2]")}
    # [2] and [1,1] give different images, [1,1]+[1,1]+[2] = [4,2] vs [2]+[2]+[2] = [6]
    assert induced_wavefront([P("[2]"), P("[1,1]")], [P("[2]")], "C") == {P("[6]"), P("[4,2]")}
    # coinciding images collapse to one element
    assert len(induced_wavefront([P("[2,1]"), P("[2,1]")], [P("[1]")], "B")) == 1
    with pytest.raises(PreconditionViolated):
        induced_wavefront([], [P("[2]")], "C")


@pytest.mark.parametrize("X", ["B", "C", "D"])
@given(data=st.data())
def test_single_block_matches_lemma_notation(X, data):
    q = data.draw(typed(X, 10))
    d = data.draw(st.integers(1, 3))
    assert induce_classical(P(f"[{d}]"), q, X) == collapse(pointwise_sum(P(f"[{2 * d}]"), q), X)


@pytest.mark.parametrize("X", ["B", "C", "D"])
def test_monotone_in_tail(X):
    gl = P("[2,1]")
    for n in range(9):
        ps = list(typed_partitions(n, X))
        for p in ps:
            for q in ps:
                if dominates(p, q):
                    assert dominates(induce_classical(gl, p, X), induce_classical(gl, q, X))


@pytest.mark.parametrize("seed", range(5))
def test_block_order_and_staging(seed):
    rng = random.Random(seed)
    for _ in range(20):
        X = rng.choice("BCD")
        tail = rng.choice([p for p in typed_partitions(rng.randint(0, 6), X)] or [Partition()])
        blocks = [Partition(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3)))) for _ in range(3)]
        orbit = NilpotentOrbit(X, tail) if tail.size or X != "B" else None
        if orbit is None:
            continue
        base = induce_levi(LeviDatum(tuple(blocks), orbit), X)
        shuffled = blocks[:]
        rng.shuffle(shuffled)
        assert induce_levi(LeviDatum(tuple(shuffled), orbit), X) == base
        # induce the last block first into the classical group, then the rest
        inner = induce_classical(blocks[2], tail, X)
        staged = induce_levi(LeviDatum(tuple(blocks[:2]), NilpotentOrbit(X, inner)), X)
        assert staged == base


def test_parse_levi():
    levi, X = parse_levi("GL([2,1])*G([4,2,2,2]):C")
    assert X.value == "C"
    assert levi.gl_blocks == (P("[2,1]"),)
    assert levi.tail.partition == P("[4,2,2,2]")
    assert format_levi(levi, X) == "GL([2,1])*G([4,2,2,2]):C"
    levi, X = parse_levi("GL([1])*GL([1]):A")
    assert induce_levi(levi, X) == P("[2]")


@pytest.mark.parametrize("bad", [
    "GL([2,1])",
    "GL([2,1])*G([4,2]):X",
    "G([2])*GL([1]):C",
    "G([2])*G([2]):C",
    "GL(2,1):C",
    "G([2]):A",
])
def test_parse_levi_errors(bad):
    with pytest.raises(LeviSyntaxError):
        parse_levi(bad)
