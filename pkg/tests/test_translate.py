import random

import pytest

from quipus import (
    InvalidPresentation,
    canonical_form,
    derived_equivalent,
    equivalence_family,
    nakayama_to_quipu,
    normalize,
    parse,
    quipu_to_nakayama,
    render,
    strip_length2,
)
from quipus.enumeration import enumerate_nakayama, iter_presentations
from quipus.presentations import PreconditionError, QuipuShape
from quipus.translate import canonical_quipu, family_set

P = parse

INTRO = [
    "A:13:[1,6,8]:[4,3,5]",
    "A:13:[1,6,8]:[4,3,3]",
    "A:13:[2,6,8]:[3,3,5]",
    "A:13:[2,6,8]:[3,3,3]",
    "A:13:[1,5,9]:[5,3,4]",
    "A:13:[1,4,5,6,8]:[4,2,2,3,5]",
]


@pytest.mark.parametrize(
    "alg, quipu",
    [
        ("A:14:[2,7,11]:[4,5,3]", "Q:[2,2,0,1]:[2,3,1]"),
        ("A:9:[1,3,7]:[3,4,2]", "Q:[1,0,1,1]:[1,2,0]"),
        ("A:7:[]:[]", "Q:[7]:[]"),
    ],
)
def test_nakayama_to_quipu(alg, quipu):
    assert render(nakayama_to_quipu(P(alg))) == quipu


def test_walkthrough_normalizes():
    assert render(normalize(nakayama_to_quipu(P("A:9:[1,3,7]:[3,4,2]")))) == "Q:[1,0,3]:[1,2]"


@pytest.mark.parametrize(
    "quipu, alg",
    [
        ("Q:[1,2,0,1]:[2,1,3]", "A:13:[1,6,8]:[4,3,5]"),
        ("Q:[2,2,0,1]:[2,3,1]", "A:14:[2,7,11]:[4,5,3]"),
        ("Q:[6]:[]", "A:6:[]:[]"),
    ],
)
def test_quipu_to_nakayama(quipu, alg):
    assert render(quipu_to_nakayama(P(quipu))) == alg


@pytest.mark.parametrize("quipu", ["Q:[0,2]:[3]", "Q:[2,0]:[3]"])
def test_untranslatable_ends(quipu):
    with pytest.raises(PreconditionError):
        quipu_to_nakayama(P(quipu))


@pytest.mark.parametrize(
    "alg, stripped",
    [
        ("A:13:[1,4,5,6,8]:[4,2,2,3,5]", "A:13:[1,6,8]:[4,3,5]"),
        ("A:9:[1,3,7]:[3,4,2]", "A:9:[1,3]:[3,4]"),
        ("A:5:[]:[]", "A:5:[]:[]"),
    ],
)
def test_strip_length2(alg, stripped):
    assert render(strip_length2(P(alg))) == stripped


def test_round_trip_from_presentations():
    for n in range(1, 11):
        for p in iter_presentations(n):
            assert quipu_to_nakayama(nakayama_to_quipu(p)) == p


def test_round_trip_from_shapes():
    from oracles import raw_shapes

    for q in raw_shapes(10):
        if q.is_path or (q.k[0] >= 1 and q.k[-1] >= 1):
            assert nakayama_to_quipu(quipu_to_nakayama(q)) == q


def test_family_of_intro_example():
    family = [render(x) for x in equivalence_family(P(INTRO[0]))]
    assert family == [
        "A:13:[1,6,8]:[4,3,5]",
        "A:13:[1,5,9]:[5,3,4]",
        "A:13:[1,6,8]:[4,3,3]",
        "A:13:[3,5,9]:[3,3,4]",
        "A:13:[2,6,8]:[3,3,5]",
        "A:13:[1,5,9]:[5,3,3]",
        "A:13:[2,6,8]:[3,3,3]",
        "A:13:[3,5,9]:[3,3,3]",
    ]
    assert set(INTRO[:5]) <= set(family)


def test_family_of_e8_member():
    family = {render(x) for x in equivalence_family(P("A:8:[1]:[4]"))}
    assert {"A:8:[4]:[4]", "A:8:[1]:[6]", "A:8:[2]:[3]"} <= family


def test_palindromic_family_collapses():
    p = P("A:8:[3]:[3]")
    assert len(equivalence_family(p)) == 8
    assert len(family_set(p)) < 8


def test_family_needs_long_relations():
    with pytest.raises(InvalidPresentation):
        equivalence_family(P("A:9:[1,3,7]:[3,4,2]"))


def test_family_members_share_a_quipu():
    for n in range(1, 11):
        for p in enumerate_nakayama(n, 3):
            family = equivalence_family(p)
            target = canonical_quipu(p)
            assert all(canonical_quipu(x) == target for x in family)
            assert len(set(family)) <= 8


def test_family_members_share_a_quipu_random_large():
    rng = random.Random(3)
    for n in range(11, 17):
        pool = enumerate_nakayama(n, 3)
        for p in rng.sample(pool, min(150, len(pool))):
            target = canonical_quipu(p)
            assert all(canonical_quipu(x) == target for x in equivalence_family(p))


def test_stripping_never_changes_quipu():
    for n in range(1, 10):
        for p in iter_presentations(n, 2):
            assert canonical_quipu(p) == canonical_quipu(strip_length2(p))


def test_intro_example_is_one_class():
    target = canonical_form(P("Q:[1,2,0,1]:[2,1,3]"))
    assert target == QuipuShape((1, 0, 2, 1), (3, 1, 2))
    for a in INTRO:
        assert canonical_quipu(P(a)) == target
        for b in INTRO:
            assert derived_equivalent(P(a), P(b))


def test_e8_and_extended_e7_differ():
    assert not derived_equivalent(P("A:8:[1]:[4]"), P("A:8:[1]:[5]"))


def test_equivalence_relation_on_sample():
    pool = list(iter_presentations(7, 2))
    rng = random.Random(5)
    sample = rng.sample(pool, 20)
    for a in sample:
        assert derived_equivalent(a, a)
        for b in sample:
            assert derived_equivalent(a, b) == derived_equivalent(b, a)
            for c in sample[:10]:
                if derived_equivalent(a, b) and derived_equivalent(b, c):
                    assert derived_equivalent(a, c)


def test_rejects_wide_overlap():
    with pytest.raises(InvalidPresentation):
        derived_equivalent(P("A:8:[1,2]:[4,4]"), P("A:8:[]:[]"))
