import pytest
from hypothesis import given, settings, strategies as st

from adjkit.dexterity import DexterityFunction, all_functions, interchange, parity_pair
from adjkit.errors import CapacityError, DomainError, ParseError
from adjkit.trees import (
    all_trees,
    applicable_rewrites,
    are_tree_equivalent,
    brute_force_classes,
    class_count_recurrence,
    depth,
    format_tree,
    internal_paths,
    orbit_sizes,
    parse_tree,
    tree_from_function,
    tree_interchange,
    wreath_involutions,
)

PUBLISHED = {1: 2, 2: 6, 3: 44, 4: 2064, 5: 4292864}


class TestGrammar:
    def test_example_round_trip(self):
        text = "R(L(R,R),R(L,L))"
        assert format_tree(parse_tree(text)) == text

    def test_leaf(self):
        t = parse_tree("L")
        assert depth(t) == 1 and format_tree(t) == "L"

    def test_arity_violation(self):
        with pytest.raises(ParseError):
            parse_tree("R(L,R,R)")

    def test_ragged_depth(self):
        with pytest.raises(ParseError):
            parse_tree("R(L(R,R),L)")

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_tree("R(L,")

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_round_trip_exhaustive(self, n):
        for t in all_trees(n):
            assert parse_tree(format_tree(t)) == t

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_tree_population(self, n):
        assert len(all_trees(n)) == 2 ** (2**n - 1)


class TestInterchange:
    def test_root_flip(self):
        assert format_tree(tree_interchange(parse_tree("L(L,L)"), ())) == "R(R,R)"

    def test_children_differ_rejected(self):
        with pytest.raises(DomainError):
            tree_interchange(parse_tree("L(L,R)"), ())

    def test_leaf_rejected(self):
        with pytest.raises(DomainError):
            tree_interchange(parse_tree("L(L,L)"), ("unit",))

    def test_depth3_counit_example(self):
        t = parse_tree("R(L(R,R),R(L,L))")
        out = tree_interchange(t, ("counit",))
        assert format_tree(out) == "R(L(R,R),L(R,R))"

    def test_involution_and_grandchildren(self):
        for t in all_trees(3):
            for path, rewritten in applicable_rewrites(t):
                assert tree_interchange(rewritten, path) == t
                # grandchild subtrees move but are individually unchanged
                node = t
                new_node = rewritten
                for step in path:
                    index = 1 if step == "unit" else 2
                    node, new_node = node[index], new_node[index]
                if len(node) == 3 and len(node[1]) == 3:
                    old_grand = {node[1][1], node[1][2], node[2][1], node[2][2]}
                    new_grand = {new_node[1][1], new_node[1][2], new_node[2][1], new_node[2][2]}
                    assert old_grand == new_grand


class TestEquivalence:
    def test_root_pair(self):
        ok, witness = are_tree_equivalent(parse_tree("L(L,L)"), parse_tree("R(R,R)"))
        assert ok and witness == [()]

    def test_singletons(self):
        ok, witness = are_tree_equivalent(parse_tree("L(L,R)"), parse_tree("R(R,L)"))
        assert not ok and witness is None

    def test_reflexive(self):
        t = parse_tree("R(L,L)")
        ok, witness = are_tree_equivalent(t, t)
        assert ok and witness == []

    def test_depth_mismatch(self):
        with pytest.raises(DomainError):
            are_tree_equivalent(parse_tree("L"), parse_tree("L(L,L)"))

    def test_witness_replays(self):
        s = parse_tree("R(L(R,R),R(L,L))")
        t = parse_tree("R(L(R,R),L(R,R))")
        ok, witness = are_tree_equivalent(s, t)
        assert ok
        cur = s
        for path in witness:
            cur = tree_interchange(cur, tuple(path))
        assert cur == t

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_equivalence_relation(self, n):
        trees = all_trees(n)
        for s in trees:
            assert are_tree_equivalent(s, s)[0]
        for s in trees:
            for t in trees:
                forward = are_tree_equivalent(s, t)[0]
                assert forward == are_tree_equivalent(t, s)[0]


class TestCounts:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_triple_agreement(self, n):
        count, reps = brute_force_classes(n)
        assert count == PUBLISHED[n]
        assert class_count_recurrence(n) == PUBLISHED[n]
        assert wreath_involutions(n) == PUBLISHED[n]
        assert len(reps) == count
        assert reps == sorted(reps, key=format_tree)

    def test_recurrence_n5(self):
        assert class_count_recurrence(5) == PUBLISHED[5]

    def test_recurrence_step(self):
        assert class_count_recurrence(4) == 44**2 + 2**7

    def test_brute_force_cap(self):
        with pytest.raises(CapacityError):
            brute_force_classes(5)
        with pytest.raises(CapacityError):
            wreath_involutions(5)

    def test_orbit_structure_depth2(self):
        assert sorted(orbit_sizes(2), reverse=True) == [2, 2, 1, 1, 1, 1]
        assert sum(orbit_sizes(2)) == 8

    def test_recurrence_large_n_is_exact_bigint(self):
        value = class_count_recurrence(16)
        assert value > 2 ** (2**15 - 1)  # dominated by the power term


class TestFromFunction:
    def test_uniform_r2(self):
        assert format_tree(tree_from_function(DexterityFunction.from_string("RR"))) == "R(R,R)"

    def test_uniform_odd3(self):
        t = tree_from_function(DexterityFunction.from_string("RRL"))
        assert format_tree(t) == "R(R(L,L),R(L,L))"

    def test_single_l(self):
        assert format_tree(tree_from_function(DexterityFunction.from_string("LR"))) == "L(R,R)"

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_parity_pairs_map_to_equivalent_trees(self, n):
        for a in all_functions(n):
            for b in all_functions(n):
                if parity_pair(a, b) == "Parity":
                    ok, _ = are_tree_equivalent(tree_from_function(a), tree_from_function(b))
                    assert ok, (str(a), str(b))

    def test_function_interchange_matches_tree_interchange(self):
        a = DexterityFunction.from_string("RRR")
        b = interchange(a, 2)
        t = tree_from_function(a)
        for path in internal_paths(3):
            if len(path) == 1:  # all level-2 internal nodes
                t = tree_interchange(t, path)
        assert t == tree_from_function(b)


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=3), st.randoms())
def test_random_witnesses_replay(n, rng):
    trees = all_trees(n)
    s = rng.choice(trees)
    t = rng.choice(trees)
    ok, witness = are_tree_equivalent(s, t)
    if ok:
        cur = s
        for path in witness:
            cur = tree_interchange(cur, tuple(path))
        assert cur == t
