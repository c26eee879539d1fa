"""Unit tests for bipartitions, extended diagrams, natures and orders."""

import itertools

import pytest

from uglov.diagrams import (
    EMPTY,
    Bipartition,
    NATURE_TRANSITIONS,
    Node,
    add_node,
    addable_nodes,
    bipartition_from_json,
    bipartition_to_json,
    bipartitions_of,
    boundary_sequence,
    compare_lex,
    compare_uglov,
    content,
    format_bipartition,
    is_extended_node,
    make_bipartition,
    nature_at,
    nature_table,
    node_key,
    node_less,
    orders_agree_asymptotic,
    parse_bipartition,
    part,
    partitions_of,
    remove_node,
    removable_nodes,
    residue,
)

P = parse_bipartition


def test_make_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        make_bipartition((1, 2), ())
    with pytest.raises(ValueError):
        make_bipartition((-1,), ())
    assert make_bipartition((3, 2, 0, 0), (0,)) == Bipartition((3, 2), ())


def test_part_indexing():
    lam = (5, 3, 1)
    assert [part(lam, i) for i in range(1, 6)] == [5, 3, 1, 0, 0]


def test_partition_counts():
    # partition numbers p(0)..p(8)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for n, count in enumerate(expected):
        assert len(list(partitions_of(n))) == count
    for n in range(6):
        total = sum(len(list(partitions_of(k)))
                    * len(list(partitions_of(n - k))) for k in range(n + 1))
        assert len(bipartitions_of(n)) == total


def test_content_and_residue():
    assert content(Node(2, 3, 1), (0, 1)) == 1
    assert content(Node(5, 1, 2), (0, 2)) == -2
    assert residue(Node(2, 3, 1), (0, 1), 3) == 1
    assert residue(Node(5, 1, 2), (0, 2), 3) == 1
    assert residue(Node(5, 1, 2), (0, 2), None) == -2


def test_is_extended_node():
    bp = P("3.3.1,2.1")
    assert is_extended_node(bp, Node(2, 2, 1))
    assert is_extended_node(bp, Node(0, 4, 1))  # virtual row 0, b > 3
    assert not is_extended_node(bp, Node(0, 2, 1))  # b <= first part
    assert is_extended_node(bp, Node(4, 0, 1))  # virtual column 0, a > 3
    assert not is_extended_node(bp, Node(3, 0, 1))
    assert not is_extended_node(bp, Node(1, 1, 3))


def test_removable_nodes_examples():
    assert removable_nodes(P("3.3.1,2.1")) == {
        Node(2, 3, 1), Node(3, 1, 1), Node(1, 2, 2), Node(2, 1, 2)}
    assert removable_nodes(P("3.1.1,3.2.2.1.1")) == {
        Node(1, 3, 1), Node(3, 1, 1),
        Node(1, 3, 2), Node(3, 2, 2), Node(5, 1, 2)}
    assert removable_nodes(EMPTY) == set()


def test_addable_nodes_examples():
    assert addable_nodes(EMPTY) == {Node(1, 1, 1), Node(1, 1, 2)}
    assert addable_nodes(P("3.3.1,2.1")) == {
        Node(1, 4, 1), Node(3, 2, 1), Node(4, 1, 1),
        Node(1, 3, 2), Node(2, 2, 2), Node(3, 1, 2)}
    assert addable_nodes(P("1,-")) == {
        Node(1, 2, 1), Node(2, 1, 1), Node(1, 1, 2)}


def test_add_remove_round_trip_exhaustive():
    # Oracle: mu covers bp iff the shapes agree except one part larger by 1.
    for n in range(5):
        for bp in bipartitions_of(n):
            for g in addable_nodes(bp):
                mu = add_node(bp, g)
                assert mu.rank == bp.rank + 1
                assert g in removable_nodes(mu)
                assert remove_node(mu, g) == bp
            for g in removable_nodes(bp):
                nu = remove_node(bp, g)
                assert add_node(nu, g) == bp
            covers = {add_node(bp, g) for g in addable_nodes(bp)}
            brute = {mu for mu in bipartitions_of(n + 1)
                     if all(part(mu.component(c), i) >= part(bp.component(c), i)
                            for c in (1, 2) for i in range(1, n + 2))}
            assert covers == brute


def test_add_remove_preconditions():
    bp = P("2.1,-")
    with pytest.raises(ValueError):
        add_node(bp, Node(1, 2, 1))  # column already filled
    with pytest.raises(ValueError):
        add_node(bp, Node(2, 3, 1))  # would break monotonicity
    with pytest.raises(ValueError):
        remove_node(bp, Node(1, 1, 1))  # not the row end
    with pytest.raises(ValueError):
        remove_node(bp, Node(1, 1, 2))  # empty component


def test_node_order():
    charge = (0, 1)
    # smaller content first; equal content puts component 2 first
    assert node_less(Node(1, 1, 1), Node(1, 2, 1), charge)
    assert node_less(Node(1, 1, 2), Node(1, 2, 1), charge)  # contents 1 = 1
    assert node_key(Node(1, 1, 2), charge) < node_key(Node(1, 2, 1), charge)
    with pytest.raises(ValueError):
        node_less(Node(1, 2, 1), Node(2, 3, 1), charge)  # same slot, distinct


def test_nature_at_examples():
    bp = P("3.3.1,2.1")
    charge = (0, 0)
    ent = nature_at(bp, charge, -1, 1)
    assert (ent.kind, ent.node, ent.virtual) == ("A", Node(3, 2, 1), False)
    ent = nature_at(bp, charge, 1, 2)
    assert (ent.kind, ent.node, ent.virtual) == ("R", Node(1, 2, 2), False)
    ent = nature_at(bp, charge, -4, 1)
    assert (ent.kind, ent.node, ent.virtual) == ("Bv", Node(4, 0, 1), True)


def test_nature_table_empty_bipartition():
    table = nature_table(EMPTY, (0, 0), (-2, 2))
    for j, c, ent in table:
        if j == 0:
            assert ent.kind == "A" and ent.node == Node(1, 1, c)
        elif j < 0:
            assert ent.kind == "Bv" and ent.virtual
        else:
            assert ent.kind == "Bh" and ent.virtual


def test_nature_consistency_exhaustive():
    # A slots are exactly the addable nodes; R slots exactly the removable.
    for n in range(5):
        for bp in bipartitions_of(n):
            for charge in ((0, 0), (0, 1), (-2, 1)):
                seen_a, seen_r = set(), set()
                for j in range(min(charge) - n - 2, max(charge) + n + 3):
                    for c in (1, 2):
                        ent = nature_at(bp, charge, j, c)
                        assert ent.node.c == c
                        assert content(ent.node, charge) == j
                        if ent.kind == "A":
                            seen_a.add(ent.node)
                        elif ent.kind == "R":
                            seen_r.add(ent.node)
                        else:
                            assert is_extended_node(bp, ent.node)
                assert seen_a == addable_nodes(bp)
                assert seen_r == removable_nodes(bp)


def test_nature_transition_table_small():
    for n in range(5):
        for bp in bipartitions_of(n):
            for charge in ((0, 0), (0, 1), (3, 0)):
                lo, hi = min(charge) - n - 2, max(charge) + n + 2
                for c in (1, 2):
                    kinds = [nature_at(bp, charge, j, c).kind
                             for j in range(lo, hi + 1)]
                    for k1, k2 in zip(kinds, kinds[1:]):
                        assert k2 in NATURE_TRANSITIONS[k1]


def test_boundary_sequence_empty():
    seq = boundary_sequence(EMPTY, (0, 0), (-4, -1))
    assert seq == [Node(1, 0, 1), Node(1, 0, 2),
                   Node(2, 0, 1), Node(2, 0, 2),
                   Node(3, 0, 1), Node(3, 0, 2),
                   Node(4, 0, 1), Node(4, 0, 2)]


def test_boundary_sequence_leading_entries():
    # Vertical-boundary slots of (6.1,2.2) at (0,1) in decreasing order.
    seq = boundary_sequence(P("6.1,2.2"), (0, 1), (-3, 5))
    assert seq == [Node(1, 6, 1), Node(1, 2, 2), Node(2, 2, 2),
                   Node(2, 1, 1), Node(3, 0, 2), Node(3, 0, 1),
                   Node(4, 0, 2)]


def test_compare_uglov_examples():
    assert compare_uglov(P("6.1,2.2"), P("6.3,2"), (0, 1)) == -1
    assert compare_uglov(P("6.3,2"), P("6.1,2.2"), (0, 1)) == 1
    assert compare_uglov(P("1,1"), P("2,-"), (0, 1)) == -1
    assert compare_uglov(EMPTY, EMPTY, (0, 1)) == 0


def test_compare_uglov_total_order():
    bps = bipartitions_of(4)
    charge = (0, 1)
    for x, y in itertools.combinations(bps, 2):
        cxy = compare_uglov(x, y, charge)
        assert cxy in (-1, 1)
        assert compare_uglov(y, x, charge) == -cxy
    for x, y, z in itertools.permutations(bps[:8], 3):
        if (compare_uglov(x, y, charge) < 0
                and compare_uglov(y, z, charge) < 0):
            assert compare_uglov(x, z, charge) < 0


def test_orders_agree_asymptotic():
    assert orders_agree_asymptotic(1, (1, 0))
    assert orders_agree_asymptotic(4, (5, 0))
    assert orders_agree_asymptotic(5, (10, 0))
    with pytest.raises(ValueError):
        orders_agree_asymptotic(4, (3, 0))


def test_compare_lex():
    assert compare_lex(P("2,-"), P("1.1,-")) == 1
    assert compare_lex(P("1,1"), P("2,-")) == -1
    assert compare_lex(EMPTY, EMPTY) == 0


def test_parse_format_round_trip():
    for text in ("6.1,2.2", "-,-", "3.3.1,2.1", "-,1", "10.2,-"):
        assert format_bipartition(parse_bipartition(text)) == text
    with pytest.raises(ValueError):
        parse_bipartition("1.2,3")  # not weakly decreasing
    with pytest.raises(ValueError):
        parse_bipartition("1,2,3")


def test_json_round_trip():
    for n in range(4):
        for bp in bipartitions_of(n):
            assert bipartition_from_json(bipartition_to_json(bp)) == bp
