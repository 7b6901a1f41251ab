"""Exact workbench for generalized inverses in finite rings and rational
matrix algebras.

The heavy lifting happens in the compiled extension ``ringlab._core``;
this package decodes its report documents (the same JSON the command-line
tool prints) into plain dicts and lists.

>>> import ringlab
>>> ringlab.table("Z12", "sqrtJ")
['0', '6']
>>> ringlab.inverse("Z5", "2")["b"]
'3'
"""

from __future__ import annotations

import json as _json

from . import _core
from ._core import FalsificationError, Ring, default_seed

__all__ = [
    "FalsificationError",
    "Ring",
    "classify",
    "default_seed",
    "desk_report",
    "inverse",
    "matrix_inverse",
    "table",
    "verify",
]


def _ring(ring: Ring | str, cap: int) -> Ring:
    return ring if isinstance(ring, Ring) else Ring(ring, cap)


def table(ring: Ring | str, set_name: str, *, cap: int = 65536) -> list[str]:
    """Sorted canonical strings of a structural subset.

    ``set_name`` is one of ``U`` (units), ``N`` (nilpotents), ``J``
    (Jacobson radical), ``sqrtJ`` (elements with a power in J), ``idem``
    (idempotents).
    """
    return _ring(ring, cap).table(set_name)


def inverse(
    ring: Ring | str, element: str, kind: str = "gzhou", *, cap: int = 65536
) -> dict:
    """Inverse certificate for one element, as a dict.

    ``kind`` is one of ``drazin``, ``pdrazin``, ``zhou``, ``gzhou``.  The
    certificate carries the inverse ``b``, the witnesses ``n``, ``p``,
    ``w``, and a ``checks`` map replaying every definitional condition.
    """
    return _json.loads(_ring(ring, cap).inverse_json(element, kind))


def classify(ring: Ring | str, *, cap: int = 65536) -> dict:
    """Per-element table: membership flags, the four inverses, n and p."""
    return _json.loads(_ring(ring, cap).classify_json())


def verify(ring: Ring | str, theorem: str, *, cap: int = 65536, **options) -> dict:
    """Sweep one theorem over a ring and return the report as a dict.

    ``theorem`` is one of ``cline``, ``jacobson``, ``equiv``, ``unique``,
    ``reduction``, ``zhou-cline``, ``zhou-jacobson``.  Keyword options
    mirror the command line: ``exhaustive``, ``samples``, ``seed``,
    ``bound``, ``budget``, ``power_k``, ``jobs``, ``timings``.

    A report with ``fails > 0`` is returned, not raised; raising is
    reserved for :class:`FalsificationError`, the certainties (an inverse
    missing in a finite ring, a uniqueness violation).
    """
    return _json.loads(_ring(ring, cap).verify_json(theorem, **options))


def matrix_inverse(matrix: str, kind: str = "gzhou") -> dict:
    """Inverse certificate over the exact rationals, as a dict.

    ``matrix`` is a square literal like ``"[[0,-1],[1,0]]"`` (entries may
    use ``p/q``).  When no exponent can produce an inverse, the dict says
    ``{"exists": False}`` with the ``conclusive_bound`` that makes the
    negative final.
    """
    return _json.loads(_core.matrix_inverse_json(matrix, kind))


def desk_report(jobs: int = 0) -> dict:
    """Run the bundled verification suite (takes tens of seconds)."""
    return _json.loads(_core.desk_report_json(jobs))
