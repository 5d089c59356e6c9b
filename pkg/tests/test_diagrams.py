from collections import deque

import pytest

from ogmirror.diagrams import (
    LabeledBox,
    add_box,
    add_unique_box,
    addable_positions,
    all_diagrams,
    box_count,
    box_label,
    box_moves,
    diagram,
    empty_diagram,
    format_diagram,
    full_columns,
    hasse_edges,
    is_valid,
    parse_diagram,
    remove_box,
    removable_positions,
    staircase,
    staircase_prefix,
)


def test_validity_examples():
    assert not is_valid(3, (1, 1, 2))
    assert is_valid(3, (0, 0, 0))
    assert is_valid(3, (1, 2, 1))


def test_validity_accepts_truncated_rows():
    assert is_valid(4, (1, 2))
    assert is_valid(4, ())


def test_validity_rejects_out_of_staircase():
    assert not is_valid(3, (2, 0, 0))
    assert not is_valid(3, (1, 2, 4))
    assert not is_valid(3, (1, -1, 0))
    assert not is_valid(3, (1, 2, 3, 1))


def test_diagram_pads_and_validates():
    assert diagram(4, (1, 2)) == (1, 2, 0, 0)
    with pytest.raises(ValueError):
        diagram(3, (1, 1, 2))


def test_labels_n4():
    assert box_label(4, 4, 1) == 1
    assert box_label(4, 1, 1) == 5
    assert box_label(4, 2, 2) == 4


def test_full_staircase_labeling_n4():
    # row by row: 5 / 3 4 / 2 3 5 / 1 2 3 4
    grid = [[box_label(4, r, c) for c in range(1, r + 1)] for r in range(1, 5)]
    assert grid == [[5], [3, 4], [2, 3, 5], [1, 2, 3, 4]]


def test_label_out_of_range():
    with pytest.raises(ValueError):
        box_label(4, 2, 3)
    with pytest.raises(ValueError):
        box_label(4, 5, 1)


def test_staircase_families():
    assert staircase(4) == (1, 2, 3, 4)
    assert full_columns(3, 2) == (1, 2, 2)
    assert staircase_prefix(4, 2) == (1, 2, 0, 0)
    assert staircase_prefix(3, 0) == (0, 0, 0)
    with pytest.raises(ValueError):
        staircase_prefix(3, 4)
    with pytest.raises(ValueError):
        full_columns(3, 0)


def test_addable_positions_examples():
    assert addable_positions(4, (1, 2, 1, 0), 3) == [LabeledBox(3, 2, 3)]
    assert addable_positions(4, (1, 2, 1, 0), 5) == []
    assert addable_positions(4, (0, 0, 0, 0), 5) == [LabeledBox(1, 1, 5)]


def test_removable_positions_examples():
    assert removable_positions(4, (1, 2, 1, 0), 4) == [LabeledBox(2, 2, 4)]
    assert removable_positions(4, (1, 2, 1, 0), 3) == []
    for label in range(1, 6):
        assert removable_positions(4, (0, 0, 0, 0), label) == []


def test_add_remove_box_examples():
    assert add_box(4, (1, 2, 3, 3), 4) == (1, 2, 3, 4)
    assert remove_box(4, (1, 2, 1, 0), 4) == (1, 1, 1, 0)
    assert add_box(4, (0, 0, 0, 0), 1) is None


def test_mu2_plus_add_remove_labels():
    # the rank-4 pair example: removable labels 2 and 4, addable labels 1 and 3
    rows = (1, 2, 1, 0)
    removable = [lab for lab in range(1, 6) if remove_box(4, rows, lab) is not None]
    addable = [lab for lab in range(1, 6) if add_box(4, rows, lab) is not None]
    assert removable == [2, 4]
    assert addable == [1, 3]


def test_box_moves_examples():
    assert box_moves(4, ((1, 2, 0, 0), (1, 2, 3, 3))) == [((1, 1, 0, 0), (1, 2, 3, 4))]
    assert box_moves(4, ((1, 2, 1, 0), (1, 2, 3, 3))) == [((1, 1, 1, 0), (1, 2, 3, 4))]
    assert box_moves(4, ((0, 0, 0, 0), (1, 2, 0, 0))) == []


def test_all_diagrams_n3_golden():
    assert all_diagrams(3) == (
        (0, 0, 0),
        (1, 0, 0),
        (1, 1, 0),
        (1, 1, 1),
        (1, 2, 0),
        (1, 2, 1),
        (1, 2, 2),
        (1, 2, 3),
    )


def test_all_diagrams_n2():
    assert all_diagrams(2) == ((0, 0), (1, 0), (1, 1), (1, 2))


@pytest.mark.parametrize("n", range(2, 8))
def test_all_diagrams_count_and_validity(n):
    rows_list = all_diagrams(n)
    assert len(rows_list) == 2**n
    assert len(set(rows_list)) == 2**n
    assert all(is_valid(n, rows) for rows in rows_list)


def test_hasse_edges_n2_chain():
    assert hasse_edges(2) == (
        ((0, 0), (1, 0), 3),
        ((1, 0), (1, 1), 1),
        ((1, 1), (1, 2), 2),
    )


def test_hasse_edges_n4_count():
    assert len(hasse_edges(4)) == 20


@pytest.mark.parametrize("n", range(2, 7))
def test_empty_diagram_has_one_cover(n):
    outgoing = [edge for edge in hasse_edges(n) if edge[0] == empty_diagram(n)]
    assert outgoing == [(empty_diagram(n), diagram(n, (1,)), n + 1)]


@pytest.mark.parametrize("n", range(2, 7))
def test_hasse_reachability_and_grading(n):
    for lower, upper, label in hasse_edges(n):
        assert box_count(upper) == box_count(lower) + 1
        assert add_box(n, lower, label) == upper
    neighbors = {}
    for lower, upper, _ in hasse_edges(n):
        neighbors.setdefault(lower, []).append(upper)
    seen = {empty_diagram(n)}
    queue = deque(seen)
    while queue:
        for upper in neighbors.get(queue.popleft(), []):
            if upper not in seen:
                seen.add(upper)
                queue.append(upper)
    assert seen == set(all_diagrams(n))


def test_add_unique_box_examples():
    assert add_unique_box(3, full_columns(3, 1)) == (1, 2, 1)
    assert add_unique_box(3, staircase_prefix(3, 2)) == (1, 2, 1)
    assert add_unique_box(3, full_columns(3, 2)) == (1, 2, 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_add_unique_box_on_prefixes_and_columns(n):
    for i in range(1, n):
        add_unique_box(n, full_columns(n, i))
        add_unique_box(n, staircase_prefix(n, i))


def test_add_unique_box_rejects_ambiguity():
    # (1,2,1,0) accepts labels 1 and 3
    with pytest.raises(ValueError):
        add_unique_box(4, (1, 2, 1, 0))
    # the full staircase accepts nothing
    with pytest.raises(ValueError):
        add_unique_box(4, staircase(4))


@pytest.mark.parametrize("n", range(2, 7))
def test_at_most_one_position_per_label(n):
    for rows in all_diagrams(n):
        for label in range(1, n + 2):
            assert len(addable_positions(n, rows, label)) <= 1
            assert len(removable_positions(n, rows, label)) <= 1


@pytest.mark.parametrize("n", range(2, 7))
def test_add_then_remove_roundtrip(n):
    for rows in all_diagrams(n):
        for label in range(1, n + 2):
            grown = add_box(n, rows, label)
            if grown is not None:
                assert remove_box(n, grown, label) == rows
            shrunk = remove_box(n, rows, label)
            if shrunk is not None:
                assert add_box(n, shrunk, label) == rows


def test_format_diagram():
    assert format_diagram((1, 2, 1, 0)) == "1,2,1,0"
    assert format_diagram((0, 0)) == "0,0"


def test_parse_diagram_accepts_truncated_and_empty():
    assert parse_diagram(4, "1,1") == (1, 1, 0, 0)
    assert parse_diagram(4, "empty") == (0, 0, 0, 0)
    assert parse_diagram(4, "0,0,0,0") == (0, 0, 0, 0)
    assert parse_diagram(4, "1,2,3,4") == (1, 2, 3, 4)


def test_parse_diagram_error_messages_are_distinct():
    with pytest.raises(ValueError, match="cannot parse"):
        parse_diagram(4, "1,x")
    with pytest.raises(ValueError, match="cannot parse"):
        parse_diagram(2, "1,2,3")
    with pytest.raises(ValueError, match="invalid diagram"):
        parse_diagram(3, "1,1,2")
