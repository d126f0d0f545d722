"""Invariants of modular group algebras F_q G for finite p-groups G.

Groups are given as family specs ("D8", "T:2,5", "Meta:2,3,1,0,5", ...) and
fields as "p" or "p^k". Caps may be passed as a dict of overrides.
"""

import json

from . import _core
from ._core import CapExceeded, ConstructionError, Error, InvalidArgument, ParseError

__all__ = [
    "CapExceeded", "ConstructionError", "Error", "InvalidArgument", "ParseError",
    "group_order", "hh1_dimension", "fingerprint", "compare", "kernel_size",
    "table_names", "table", "group_isomorphism", "algebra_isomorphism",
]


def _caps(caps):
    return json.dumps(caps) if caps else ""


def group_order(spec, caps=None):
    return _core.group_order(spec, _caps(caps))


def hh1_dimension(spec, caps=None):
    return _core.hh1_dimension(spec, _caps(caps))


def fingerprint(spec, field="2", caps=None):
    return json.loads(_core.fingerprint_json(spec, field, _caps(caps)))


def compare(left, right, field="2", caps=None):
    return json.loads(_core.compare_json(left, right, field, _caps(caps)))


def kernel_size(spec, i, j, k, field="2", caps=None):
    """(killed, surviving) for x -> x^(p^k) on Delta^i / Delta^j."""
    return _core.kernel_size(spec, i, j, k, field, _caps(caps))


def table_names():
    return _core.table_names()


def table(name):
    return json.loads(_core.table_json(name))


def group_isomorphism(left, right, caps=None):
    """Verified witness as a dict, or None when no isomorphism exists."""
    w = _core.group_iso_json(left, right, _caps(caps))
    return None if w is None else json.loads(w)


def algebra_isomorphism(left, right, i, j, field="2", caps=None):
    """Witness for Delta^i/Delta^j of F G_left and F G_right, or None."""
    w = _core.algebra_iso_json(left, right, i, j, field, _caps(caps))
    return None if w is None else json.loads(w)
