from fractions import Fraction

import pytest

from quantifiers import (
    Context,
    FiniteDomain,
    Quantifier,
    averaging_quantifier,
    argmax_selection_numeric,
    eval_quantifier,
    eval_selection,
    fix_selection,
    image,
    make_context,
    max_quantifier_numeric,
    preimage_count,
    table_quantifier,
    table_selection,
)
from quantifiers.core import as_rational, as_value, iter_contexts
from quantifiers.errors import (
    DuplicateElement,
    DuplicateMove,
    EmptyDomain,
    IncompleteTable,
    MissingMove,
    MixedOutcomeKinds,
    SignatureMismatch,
    UnknownMove,
    UnknownOutcome,
)


def ctx(mapping, outcomes=None):
    moves = list(mapping)
    outcomes = outcomes if outcomes is not None else sorted(set(mapping.values()), key=str)
    return make_context(moves, outcomes, mapping)


class TestValues:
    def test_ints_become_fractions(self):
        assert as_value(3) == Fraction(3)
        assert isinstance(as_value(3), Fraction)

    def test_fractions_are_normalised(self):
        v = as_value(Fraction(4, -6))
        assert (v.numerator, v.denominator) == (-2, 3)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_value(0.5)
        with pytest.raises(TypeError):
            as_rational(0.5)

    def test_rational_strings(self):
        assert as_rational("3/6") == Fraction(1, 2)
        with pytest.raises(ValueError):
            as_rational("abc")

    def test_vectors(self):
        d = FiniteDomain([(0, 0), (1, 0), (3, 4)])
        assert d.kind == "vector" and d.dimension == 2

    def test_mixed_kinds_rejected(self):
        with pytest.raises(MixedOutcomeKinds):
            FiniteDomain(["a", 1])
        with pytest.raises(MixedOutcomeKinds):
            FiniteDomain([(0, 0), (1, 0, 0)])


class TestDomain:
    def test_empty_rejected(self):
        with pytest.raises(EmptyDomain):
            FiniteDomain([])
        assert len(FiniteDomain([], allow_empty=True)) == 0

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateElement):
            FiniteDomain(["a", "a"])

    def test_order_kept(self):
        assert FiniteDomain(["c", "a", "b"]).elements == ("c", "a", "b")


class TestMakeContext:
    def test_singleton(self):
        p = make_context(["a"], ["r"], [("a", "r")])
        assert p("a") == "r"

    def test_missing_move(self):
        with pytest.raises(MissingMove) as err:
            make_context(["a", "b"], ["r"], [("a", "r")])
        assert err.value.move == "b"

    def test_unknown_outcome(self):
        with pytest.raises(UnknownOutcome) as err:
            make_context(["a"], ["r"], [("a", "s")])
        assert err.value.element == "s"

    def test_duplicate_move(self):
        with pytest.raises(DuplicateMove):
            make_context(["a"], ["r", "s"], [("a", "r"), ("a", "s")])

    def test_unknown_move(self):
        with pytest.raises(UnknownMove):
            make_context(["a"], ["r"], [("a", "r"), ("z", "r")])


class TestImage:
    def test_deduplicated_ground_ordered(self):
        p = make_context("abc", [3, 1], {"a": 1, "b": 3, "c": 3})
        assert image(p).members == (3, 1)

    def test_constant(self):
        p = make_context("abc", [1, 2], {"a": 2, "b": 2, "c": 2})
        assert image(p).members == (2,)

    def test_bijection_covers_ground(self):
        p = make_context("abc", [1, 2, 3], {"a": 3, "b": 1, "c": 2})
        assert image(p).members == (1, 2, 3)


class TestEvaluation:
    def test_max(self):
        p = ctx({"a": 1, "b": 3, "c": 3})
        assert set(eval_quantifier(max_quantifier_numeric(), p)) == {3}

    def test_table_lookup(self):
        X, R = FiniteDomain("ab"), FiniteDomain(["r", "s"])
        table = {p: [p("a")] for p in iter_contexts(X, R)}
        q = table_quantifier(X, R, table)
        key = make_context(X, R, {"a": "s", "b": "r"})
        assert eval_quantifier(q, key).members == ("s",)

    def test_averaging_two_ties(self):
        p = ctx({"a": 0, "b": 2, "c": 2})
        # mean over image {0, 2} is 1; both at distance 1
        assert set(eval_quantifier(averaging_quantifier(), p)) == {0, 2}

    def test_argmax_ties(self):
        p = ctx({"a": 1, "b": 3, "c": 3})
        assert eval_selection(argmax_selection_numeric(), p).members == ("b", "c")

    def test_argmax_constant(self):
        p = ctx({"a": 5, "b": 5, "c": 5})
        assert eval_selection(argmax_selection_numeric(), p).members == ("a", "b", "c")

    def test_fix_identity(self):
        p = make_context([0, 1], [0, 1], {0: 0, 1: 1})
        assert set(eval_selection(fix_selection(), p)) == {0, 1}

    def test_signature_mismatch(self):
        X, R = FiniteDomain("ab"), FiniteDomain([0, 1])
        q = table_quantifier(X, R, {p: [] for p in iter_contexts(X, R)})
        other = make_context("abc", [0, 1], {"a": 0, "b": 0, "c": 0})
        with pytest.raises(SignatureMismatch):
            q(other)

    def test_pure(self):
        p = ctx({"a": 0, "b": 2, "c": 2})
        q = averaging_quantifier()
        assert q(p) == q(p)


class TestTables:
    def test_partial_table_rejected(self):
        X, R = FiniteDomain("ab"), FiniteDomain([0, 1])
        table = {p: [] for p in list(iter_contexts(X, R))[:3]}
        with pytest.raises(IncompleteTable):
            table_quantifier(X, R, table)

    def test_selection_table_keys_by_values(self):
        X, R = FiniteDomain("ab"), FiniteDomain([0, 1])
        table = {p.values: ["a"] for p in iter_contexts(X, R)}
        s = table_selection(X, R, table)
        assert s(make_context(X, R, {"a": 1, "b": 0})).members == ("a",)


class TestPreimageCount:
    def test_count(self):
        p = make_context("abc", ["r", "s"], {"a": "r", "b": "r", "c": "s"})
        assert preimage_count(p, "r") == 2

    def test_not_attained(self):
        p = make_context("ab", ["r", "s"], {"a": "r", "b": "r"})
        assert preimage_count(p, "s") == 0

    def test_full(self):
        p = make_context(range(6), ["r"], [(i, "r") for i in range(6)])
        assert preimage_count(p, "r") == 6

    def test_unknown(self):
        p = make_context("a", ["r"], {"a": "r"})
        with pytest.raises(UnknownOutcome):
            preimage_count(p, "zz")


def test_contexts_are_hashable_and_comparable():
    X, R = FiniteDomain("ab"), FiniteDomain([0, 1])
    all_ = list(iter_contexts(X, R))
    assert len(set(all_)) == 4
    assert isinstance(all_[0], Context)


def test_custom_quantifier_output_checked_against_ground():
    q = Quantifier("bad", lambda p: ["nope"])
    p = make_context("a", ["r"], {"a": "r"})
    with pytest.raises(ValueError):
        q(p)
