import random
import warnings

import pytest

from eadm import (Assessment, MassFunction, Option, OptionSet, QueryError,
                  candidate_differences, credal_member, difference_sets, expectation,
                  extension, extension_verdicts, find_witness, is_admissible,
                  is_consistent)
from eadm.engine import LargeProductWarning
from eadm.oracle import SimplexGrid, sampled_extension

from conftest import (V1, V2, V5, W1, W2, W3, opt, random_assessment,
                      random_option_set, random_pair)

A_ = opt(1, 0)
B_ = opt(0, 1)
CONTRADICTION = Assessment(((OptionSet([A_]), OptionSet([B_])),
                            (OptionSet([B_]), OptionSet([A_]))))


def check_witness(verdict, u, options, assessment):
    p = verdict.witness
    assert sum(p.probs) == 1 and min(p.probs) >= 0
    assert credal_member(p, assessment)
    assert all(expectation(p, u) >= expectation(p, a) for a in options)


def test_difference_sets_example(example):
    _, assessment = example
    assert difference_sets(assessment) == [
        OptionSet([opt(1, 0, -1)]), OptionSet([opt(-1, -1, 9)]),
        OptionSet([opt(-1, 9, -1)]), OptionSet([opt(3, 3, -7), opt(1, -4, 1)])]


def test_difference_sets_trivial():
    assert difference_sets(Assessment()) == []
    pair = (OptionSet([A_]), OptionSet([B_]))
    assert difference_sets(Assessment((pair, pair))) == [OptionSet([A_ - B_])]


def test_candidate_differences(example):
    A, _ = example
    assert candidate_differences(W1, A) == [opt(0, -4, 3), opt(1, -3, 1)]
    assert candidate_differences(W3, A) == [opt(-1, 3, -1), opt(-1, -1, 2)]
    assert candidate_differences(W1, OptionSet([W1])) == []
    with pytest.raises(QueryError):
        candidate_differences(opt(9, 9, 9), A)


def test_is_admissible_example(example):
    A, assessment = example
    v1 = is_admissible(W1, A, assessment)
    assert v1.admissible
    check_witness(v1, W1, A, assessment)
    assert v1.witness_tuple[:3] == (opt(1, 0, -1), opt(-1, -1, 9), opt(-1, 9, -1))

    v3 = is_admissible(W3, A, assessment)
    assert not v3.admissible and v3.witness is None
    assert v3.tuples_visited == 2  # both picks from the two-element set fail

    u = opt(4, 2, 0)
    assert is_admissible(u, OptionSet([u]), Assessment()).admissible


def test_extension_example(example):
    A, assessment = example
    # per-option analysis keeps w1 and w2; see test_acceptance for the summary-line typo
    assert extension(A, assessment) == {W1, W2}


def test_extension_empty_assessment():
    assert extension(OptionSet([A_, B_]), Assessment()) == {A_, B_}
    assert extension(OptionSet([opt(0, 0), opt(1, 1)]), Assessment()) == {opt(1, 1)}


def test_extension_inconsistent():
    assert extension(OptionSet([A_, B_, opt(3, -1)]), CONTRADICTION) == frozenset()


def test_is_consistent():
    assert is_consistent(Assessment())
    assert not is_consistent(CONTRADICTION)


def test_is_consistent_example(example):
    assert is_consistent(example[1])


def test_find_witness(example):
    _, assessment = example
    p = find_witness(assessment)
    assert credal_member(p, assessment)
    p0 = find_witness(Assessment(), n=3)
    assert isinstance(p0, MassFunction) and len(p0) == 3
    assert find_witness(CONTRADICTION) is None
    with pytest.raises(ValueError):
        find_witness(Assessment())


def test_singleton_keep_visits_one_tuple(rng):
    for _ in range(30):
        pairs = []
        for _ in range(rng.randint(1, 3)):
            keep, reject = random_pair(rng, 3)
            keep = OptionSet([next(iter(keep))])
            pairs.append((keep, reject))
        assessment = Assessment(tuple(pairs))
        A = random_option_set(rng, 3, 4)
        for verdict in extension_verdicts(A, assessment).values():
            assert verdict.tuples_visited == 1


def test_large_product_warns(example):
    A, assessment = example
    with pytest.warns(LargeProductWarning):
        is_admissible(W1, A, assessment, max_tuples=1)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        is_admissible(W1, A, assessment, max_tuples=2)


def test_float_mode_matches_exact(example):
    A, assessment = example
    assert extension(A, assessment, exact=False) == {W1, W2}


def test_dimension_mismatch_between_assessment_and_query(example):
    _, assessment = example
    with pytest.raises(ValueError):
        extension(OptionSet([A_]), assessment)


# -- properties over random small instances -------------------------------

def instances(seed, count, n=3):
    rng = random.Random(seed)
    for _ in range(count):
        yield rng, random_option_set(rng, n, 4), random_assessment(rng, n, max_pairs=3)


def test_extension_is_subset_and_empty_iff_inconsistent():
    for _, A, assessment in instances(1, 80):
        ext = extension(A, assessment)
        assert ext <= A.as_frozenset()
        assert (not ext) == (not is_consistent(assessment))


def test_witnesses_are_sound():
    for _, A, assessment in instances(2, 60):
        for u, verdict in extension_verdicts(A, assessment).items():
            if verdict.admissible:
                check_witness(verdict, u, A, assessment)


def test_more_assessment_never_enlarges():
    for rng, A, assessment in instances(3, 60):
        bigger = assessment.add(*random_pair(rng, 3))
        assert extension(A, bigger) <= extension(A, assessment)


def test_agreement_with_assessment():
    for _, _, assessment in instances(4, 60):
        if not is_consistent(assessment):
            continue
        for keep, reject in assessment:
            assert extension(keep.union(reject), assessment) <= keep.as_frozenset()


def test_order_independence():
    for rng, A, assessment in instances(5, 40):
        pairs = [(OptionSet(rng.sample(list(k), len(k))),
                  OptionSet(rng.sample(list(w), len(w)))) for k, w in assessment]
        rng.shuffle(pairs)
        shuffled_A = OptionSet(rng.sample(list(A), len(A)))
        assert extension(shuffled_A, Assessment(tuple(pairs), n=3)) == extension(A, assessment)


def test_translation_invariance():
    for rng, A, assessment in instances(6, 40):
        t = Option(tuple(rng.randint(-3, 3) for _ in range(3)))
        members = list(A)
        moved = OptionSet(a + t for a in members)
        before = {i for i, a in enumerate(members) if a in extension(A, assessment)}
        ext = extension(moved, assessment)
        after = {i for i, a in enumerate(members) if a + t in ext}
        assert before == after


def test_grid_oracle_is_sound_and_usually_exact():
    hits = total = 0
    for _, A, assessment in instances(7, 40):
        exact = extension(A, assessment)
        sampled = sampled_extension(A, assessment, SimplexGrid(3, 120))
        assert sampled <= exact
        total += 1
        hits += sampled == exact
    assert hits >= 0.9 * total
