import pytest

from enspin.clifford import Blade
from enspin.spinrep import (
    en_adjacency,
    shared_index_adjacency_ok,
    spin_generators,
    verify_relations,
)


def test_adjacency_small_cases():
    assert en_adjacency(1).edge_list() == []
    assert en_adjacency(2).edge_list() == []
    assert en_adjacency(3).edge_list() == [(1, 3)]
    assert en_adjacency(4).edge_list() == [(1, 3), (2, 4), (3, 4)]
    assert en_adjacency(5).edge_list() == [(1, 3), (2, 4), (3, 4), (4, 5)]


def test_adjacency_edge_count_and_branch():
    for n in range(4, 15):
        diagram = en_adjacency(n)
        assert len(diagram.edge_list()) == n - 1
        assert diagram.adjacent(2, 4) and not diagram.adjacent(2, 3)
        assert diagram.adjacent(1, 3) and not diagram.adjacent(1, 2)
        degrees = {i: 0 for i in range(1, n + 1)}
        for a, b in diagram.edge_list():
            degrees[a] += 1
            degrees[b] += 1
        branch = [i for i, d in degrees.items() if d == 3]
        assert branch == ([4] if n >= 5 else [])


def test_ascii_diagram_mentions_every_node():
    art = en_adjacency(8).ascii()
    for i in (1, 2, 3, 8):
        assert str(i) in art


def test_generator_blades():
    gens = spin_generators(5)
    assert gens.blades[0] == Blade(0b00011)
    assert gens.blades[1] == Blade(0b00111)
    assert gens.blades[2] == Blade(0b00110)
    assert gens.blades[3] == Blade(0b01100)
    assert gens.blades[4] == Blade(0b11000)
    assert len(gens.blades) == 5


def test_generators_need_three_dimensions():
    with pytest.raises(ValueError):
        spin_generators(2)


def test_adjacency_equals_sharing_exactly_one_index():
    for n in range(3, 15):
        assert shared_index_adjacency_ok(n), n


def test_relations_hold_for_all_n_up_to_fourteen():
    for n in range(3, 15):
        report = verify_relations(n)
        assert report.all_pass, (n, report.failures)
        assert all(report.squares.values())
        assert all(report.pairs.values())
        assert report.scaled_ok
        assert len(report.pairs) == n * (n - 1)


def test_relation_report_serialization():
    blob = verify_relations(4).to_json()
    assert blob["all_pass"] and blob["squares_ok"] and blob["pairs_ok"] and blob["scaled_ok"]
    assert blob["failures"] == []


def test_nonadjacent_generators_commute_spot_check():
    # A_1 = v1v2 and A_2 = v1v2v3 share two indices and must commute
    from enspin.clifford import bracket

    gens = spin_generators(6)
    mvs = gens.multivectors()
    assert bracket(mvs[0], mvs[1]).is_zero()
    # A_4 = v3v4 and A_6 = v5v6 are disjoint and must commute
    assert bracket(mvs[3], mvs[5]).is_zero()
    # A_4 and A_5 = v4v5 share one index and must not
    assert not bracket(mvs[3], mvs[4]).is_zero()
