"""Coxeter group invariants, separating maps and their verification checks."""

import json

from ._coxinv import (
    CoxeterGroup,
    Error,
    RootSystem,
    SeparatingMap,
    canonical_descriptor,
    group,
    root_system,
    run,
    separating_map,
)
from . import _coxinv

__all__ = [
    "CoxeterGroup",
    "Error",
    "RootSystem",
    "SeparatingMap",
    "audit",
    "canonical_descriptor",
    "check_invariance",
    "check_separation",
    "check_transnormal",
    "group",
    "root_system",
    "run",
    "separating_map",
]


def check_invariance(f, g, samples=500, tol=1e-10, seed=0):
    return json.loads(_coxinv._check_invariance(f, g, samples, tol, seed))


def check_separation(f, g, pairs=1000, tol=1e-6, seed=0):
    return json.loads(_coxinv._check_separation(f, g, pairs, tol, seed))


def check_transnormal(f, g, pairs=300, tol=1e-8, seed=0):
    return json.loads(_coxinv._check_transnormal(f, g, pairs, tol, seed))


def audit(f, g, n=50, radius=3, seed=0):
    return json.loads(_coxinv._audit(f, g, n, radius, seed))
