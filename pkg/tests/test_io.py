from fractions import Fraction

import pytest

from peiffer import io as pio
from peiffer.actions import conjugation_action
from peiffer.catalog import cyclic, symmetric_3
from peiffer.groups import GroupError
from peiffer.lie import LieAction, LieAlgebra, LieError, adjoint_action
from peiffer.xmod import identity_xmod


def test_group_round_trip():
    for G in (cyclic(6), symmetric_3()):
        back = pio.group_from_dict(pio.group_to_dict(G))
        assert back.table == G.table and back.name == G.name


def test_group_load_validates():
    with pytest.raises(GroupError):
        pio.group_from_dict({"order": 2, "table": [[0, 1], [1, 1]]})
    with pytest.raises(GroupError):
        pio.group_from_dict({"order": 3, "table": [[0, 1], [1, 0]]})


def test_action_round_trip():
    psi = conjugation_action(symmetric_3())
    back = pio.action_from_dict(pio.action_to_dict(psi))
    assert back == psi


def test_action_inline_group_consistency():
    psi = conjugation_action(symmetric_3())
    d = pio.action_to_dict(psi)
    with pytest.raises(GroupError):
        pio.action_from_dict(d, acting=cyclic(2))


def test_xmod_round_trip():
    xm = identity_xmod(symmetric_3())
    back = pio.xmod_from_dict(pio.xmod_to_dict(xm))
    assert back.boundary.mapping == xm.boundary.mapping
    assert back.action.table == xm.action.table


def test_lie_round_trip_preserves_rationals():
    L = LieAlgebra(
        2,
        [
            [[0, 0], [0, Fraction(2, 3)]],
            [[0, Fraction(-2, 3)], [0, 0]],
        ],
    )
    d = pio.lie_to_dict(L)
    assert d["brackets"][0]["coeffs"] == ["0", "2/3"]
    back = pio.lie_from_dict(d)
    assert back.brackets == L.brackets


def test_lie_load_fills_antisymmetric_partner():
    d = {"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "1"]}]}
    L = pio.lie_from_dict(d)
    assert L.brackets[1][0] == (Fraction(0), Fraction(-1))


def test_lie_load_validates():
    with pytest.raises(LieError):
        pio.lie_from_dict(
            {"dim": 2, "brackets": [
                {"i": 0, "j": 1, "coeffs": ["0", "1"]},
                {"i": 1, "j": 0, "coeffs": ["0", "1"]},
            ]}
        )


def test_lie_action_round_trip():
    L = LieAlgebra(2, [[[0, 0], [0, 1]], [[0, -1], [0, 0]]])
    act = adjoint_action(L)
    back = pio.lie_action_from_dict(pio.lie_action_to_dict(act))
    assert back == act


def test_dump_json_deterministic(tmp_path):
    data = {"b": 1, "a": [2, 3]}
    t1 = pio.dump_json(data)
    t2 = pio.dump_json(data, str(tmp_path / "x.json"))
    assert t1 == t2
    assert (tmp_path / "x.json").read_text() == t1 + "\n"
