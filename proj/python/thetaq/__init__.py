"""Exact theta-quotient series, relation mining and identity checks.

Numbers cross the boundary as decimal or "num/den" strings so nothing is
rounded through floats.
"""

import json

from ._thetaq import (
    NotFoundError,
    ValidationError,
    catalog_ids,
    ellipk,
    eval_A,
    recognize,
    recognize_rational,
    singular_modulus,
)
from . import _thetaq

__all__ = [
    "NotFoundError",
    "ValidationError",
    "catalog_ids",
    "ellipk",
    "eval_A",
    "mine",
    "recognize",
    "recognize_rational",
    "series",
    "singular_modulus",
    "verify",
    "verify_all",
]


def series(fn, order, a="1", p="4", b="0", scale="1"):
    """Series as {"denom", "terms": [[k, "num/den"], ...], "hi"}."""
    return json.loads(_thetaq.series_json(fn, str(order), str(a), str(p), str(b), str(scale)))


def mine(a, p, power, v, max_degree, order, digits=60, nome_power=1):
    return json.loads(
        _thetaq.mine_json(str(a), str(p), power, v, max_degree, str(order), digits, nome_power)
    )


def verify(entry, digits=60, order=150, rs=("1", "2", "3"), remine=True):
    return json.loads(
        _thetaq.verify_entry_json(entry, digits, str(order), [str(r) for r in rs], remine)
    )


def verify_all(digits=60, order=150, rs=("1", "2", "3"), remine=True):
    return json.loads(_thetaq.verify_all_json(digits, str(order), [str(r) for r in rs], remine))
