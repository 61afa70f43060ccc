"""JSON serialization for groups, actions, crossed modules and Lie data.

Groups are fully validated on load.  Rationals travel as "p/q" strings so
nothing is lost to floating point.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .actions import Action, check_action_table
from .compat import MutualActions
from .groups import FiniteGroup, GroupError, Hom, validate_table
from .lie import (
    LieAction,
    LieAlgebra,
    LieCrossedModule,
    LieError,
    LieMap,
    LieMutualActions,
    check_lie_action,
    validate_lie,
    vec,
)
from .product import PeifferProduct
from .xmod import CrossedModule


def group_to_dict(G: FiniteGroup) -> dict:
    d = {"order": G.order, "table": [list(row) for row in G.table]}
    if G.name:
        d["name"] = G.name
    return d


def group_from_dict(d: dict) -> FiniteGroup:
    if not isinstance(d, dict) or "table" not in d:
        raise GroupError("group data must be an object with a table")
    table = d["table"]
    if "order" in d and d["order"] != len(table):
        raise GroupError("declared order does not match the table")
    validate_table(tuple(tuple(row) for row in table)).expect("group axioms")
    return FiniteGroup(table, name=d.get("name"))


def action_to_dict(a: Action) -> dict:
    return {
        "acting": group_to_dict(a.acting),
        "target": group_to_dict(a.target),
        "table": [list(row) for row in a.table],
    }


def action_from_dict(d: dict, acting: FiniteGroup | None = None,
                     target: FiniteGroup | None = None) -> Action:
    """Load an action; groups may come inline or be supplied by the caller."""
    if not isinstance(d, dict) or "table" not in d:
        raise GroupError("action data must be an object with a table")
    if acting is None:
        if "acting" not in d:
            raise GroupError("no acting group given")
        acting = group_from_dict(d["acting"])
    elif "acting" in d and group_from_dict(d["acting"]) != acting:
        raise GroupError("inline acting group disagrees with the supplied one")
    if target is None:
        if "target" not in d:
            raise GroupError("no target group given")
        target = group_from_dict(d["target"])
    elif "target" in d and group_from_dict(d["target"]) != target:
        raise GroupError("inline target group disagrees with the supplied one")
    table = tuple(tuple(int(v) for v in row) for row in d["table"])
    check_action_table(acting, target, table).expect("action axioms")
    return Action(acting, target, table, check=False)


def xmod_to_dict(xm: CrossedModule) -> dict:
    return {
        "boundary": list(xm.boundary.mapping),
        "action": {"table": [list(row) for row in xm.action.table]},
        "dom": group_to_dict(xm.X),
        "cod": group_to_dict(xm.A),
    }


def xmod_from_dict(d: dict) -> CrossedModule:
    if not isinstance(d, dict) or not {"boundary", "action", "dom", "cod"} <= set(d):
        raise GroupError("crossed module data needs boundary, action, dom, cod")
    dom = group_from_dict(d["dom"])
    cod = group_from_dict(d["cod"])
    boundary = Hom(dom, cod, d["boundary"], check=True)
    action = action_from_dict(d["action"], acting=cod, target=dom)
    xm = CrossedModule(boundary, action)
    xm.check().expect("crossed module axioms")
    return xm


def peiffer_to_dict(pp: PeifferProduct) -> dict:
    d = {
        "order": pp.product.order,
        "table": [list(row) for row in pp.product.table],
        "lM": list(pp.lM.mapping),
        "lN": list(pp.lN.mapping),
        "compatible": pp.compatible,
    }
    if pp.actions is not None:
        on_m, on_n = pp.actions
        d["actions"] = {
            "on_M": [list(row) for row in on_m.table],
            "on_N": [list(row) for row in on_n.table],
        }
    return d


def _frac_str(x: Fraction) -> str:
    return str(x)


def lie_to_dict(L: LieAlgebra) -> dict:
    entries = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            coeffs = L.brackets[i][j]
            if any(c != 0 for c in coeffs):
                entries.append({"i": i, "j": j, "coeffs": [_frac_str(c) for c in coeffs]})
    d = {"dim": L.dim, "brackets": entries}
    if L.name:
        d["name"] = L.name
    return d


def lie_from_dict(d: dict) -> LieAlgebra:
    if not isinstance(d, dict) or "dim" not in d:
        raise LieError("Lie data must be an object with a dim")
    n = int(d["dim"])
    brackets = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for entry in d.get("brackets", ()):
        i, j = int(entry["i"]), int(entry["j"])
        coeffs = vec(entry["coeffs"])
        if len(coeffs) != n or not (0 <= i < n and 0 <= j < n):
            raise LieError("bracket entry out of range")
        brackets[i][j] = list(coeffs)
        # fill the antisymmetric partner unless the file lists it itself
        if not any(int(e["i"]) == j and int(e["j"]) == i for e in d["brackets"]):
            brackets[j][i] = [-c for c in coeffs]
    L = LieAlgebra(n, brackets, name=d.get("name"), check=False)
    validate_lie(L).expect("Lie axioms")
    return L


def lie_action_to_dict(a: LieAction) -> dict:
    return {
        "acting": lie_to_dict(a.acting),
        "target": lie_to_dict(a.target),
        "rho": [[[_frac_str(x) for x in row] for row in m] for m in a.rho],
    }


def lie_action_from_dict(d: dict, acting: LieAlgebra | None = None,
                         target: LieAlgebra | None = None) -> LieAction:
    if not isinstance(d, dict) or "rho" not in d:
        raise LieError("Lie action data must be an object with rho")
    if acting is None:
        acting = lie_from_dict(d["acting"])
    if target is None:
        target = lie_from_dict(d["target"])
    act = LieAction(acting, target, d["rho"], check=False)
    check_lie_action(act).expect("Lie action axioms")
    return act


def lie_xmod_to_dict(xm: LieCrossedModule) -> dict:
    return {
        "boundary": [[_frac_str(x) for x in row] for row in xm.boundary.matrix],
        "action": {"rho": [[[_frac_str(x) for x in row] for row in m] for m in xm.action.rho]},
        "dom": lie_to_dict(xm.X),
        "cod": lie_to_dict(xm.A),
    }


def lie_xmod_from_dict(d: dict) -> LieCrossedModule:
    if not isinstance(d, dict) or not {"boundary", "action", "dom", "cod"} <= set(d):
        raise LieError("Lie crossed module data needs boundary, action, dom, cod")
    dom = lie_from_dict(d["dom"])
    cod = lie_from_dict(d["cod"])
    boundary = LieMap(dom, cod, d["boundary"], check=True)
    action = lie_action_from_dict(d["action"], acting=cod, target=dom)
    xm = LieCrossedModule(boundary, action)
    xm.check().expect("Lie crossed module axioms")
    return xm


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def dump_json(data, path: str | None = None) -> str:
    text = json.dumps(data, indent=2, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
