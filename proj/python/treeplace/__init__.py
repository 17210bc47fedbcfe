"""Replica placement on tree networks.

Instances go in as dicts or JSON text and documents come back as dicts.
"""

import json

from . import _core
from ._core import Error, Infeasible, SolverDefect

__all__ = ["solve", "verify", "oracle", "transform", "inspect", "generate", "fictivize",
           "Error", "Infeasible", "SolverDefect"]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def solve(instance, mode="paper-literal", trace=False):
    return json.loads(_core.solve(_text(instance), mode, trace))


def verify(instance, replicas, mode="paper-literal"):
    return json.loads(_core.verify(_text(instance), list(replicas), mode))


def oracle(instance, mode="paper-literal", max_n=20):
    return json.loads(_core.oracle(_text(instance), mode, max_n))


def transform(instance):
    return json.loads(_core.transform(_text(instance)))


def inspect(instance, mode="paper-literal"):
    # plain-text tables
    return _core.inspect(_text(instance), mode)


def generate(seed=1, internal=5, clients=6, shape="random", W=15, dual_role=False):
    return json.loads(_core.generate(seed, internal, clients, shape, W, dual_role))


def fictivize(dual_role_tree):
    return json.loads(_core.fictivize(_text(dual_role_tree)))
