"""Python access to the roothk checks.

Matrix entries and group orders come back as Python ints; the structured
reports are the same JSON documents the ``roothk`` command prints.
"""

import json

from ._core import (
    InvalidSpec,
    RoothkError,
    __version__,
    cartan_matrix,
    enumerate_group_size,
    gram_matrix,
    group_order,
    invariant_dims,
    smith_normal_form,
)
from . import _core


def analyze(family, rank, lattice="root", group_cap=None):
    return json.loads(_core.analyze_json(family, rank, lattice, group_cap))


def lemma_check(max_rank=8):
    return json.loads(_core.lemma_check_json(max_rank))


def sublattices(family, rank):
    return json.loads(_core.sublattices_json(family, rank))


def report(suite="default", group_cap=None):
    return json.loads(_core.report_json(suite, group_cap))


__all__ = [
    "InvalidSpec",
    "RoothkError",
    "__version__",
    "analyze",
    "cartan_matrix",
    "enumerate_group_size",
    "gram_matrix",
    "group_order",
    "invariant_dims",
    "lemma_check",
    "report",
    "smith_normal_form",
    "sublattices",
]
