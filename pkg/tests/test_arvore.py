import itertools

import pytest

from core.excecoes import InputFormatError
from models.arvore import (check_node, horizontal, infimum, nodes, predecessor_closure, prefix_leq,
                           prefix_leq_definable, strictly_horizontal)

NOS = list(nodes(3))


@pytest.mark.parametrize("sigma, tau", [("0", ""), ("", "1"), ("0", "1"), ("01", "1"), ("00", "0")])
def test_horizontal_examples(sigma, tau):
    assert horizontal(sigma, tau)
    assert not horizontal(tau, sigma)


def test_horizontal_is_a_linear_order():
    for s, t in itertools.product(NOS, repeat=2):
        assert horizontal(s, t) or horizontal(t, s)
        if horizontal(s, t) and horizontal(t, s):
            assert s == t
    for s, t, u in itertools.product(NOS, repeat=3):
        if horizontal(s, t) and horizontal(t, u):
            assert horizontal(s, u)


def test_strictly_horizontal_is_irreflexive():
    assert not any(strictly_horizontal(s, s) for s in NOS)


def test_prefix_order_matches_definable_form():
    for s, t in itertools.product(NOS, repeat=2):
        assert prefix_leq(s, t) == prefix_leq_definable(s, t)


def test_predecessor_closure_and_infimum():
    assert predecessor_closure("010") == {"", "0", "01", "010"}
    assert infimum("0110", "010") == "01"
    assert infimum("1", "0") == ""


def test_nodes_are_listed_by_length():
    assert list(nodes(2)) == ["", "0", "1", "00", "01", "10", "11"]


def test_invalid_node():
    with pytest.raises(InputFormatError):
        check_node("012")
