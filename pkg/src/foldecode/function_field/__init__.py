"""Concrete function fields behind one backend contract."""
from __future__ import annotations

import json
from pathlib import Path

from ..errors import PreconditionError
from ..galois import field_new
from .base import (
    DivisorSpec,
    FunctionFieldBackend,
    LocalExpansion,
    Orbit,
    P2Witness,
    Place,
    RRBasis,
)
from .hermitian import CurveFunction, HermitianBackend
from .rational import RationalBackend, RationalFunction

__all__ = [
    "CurveFunction",
    "DivisorSpec",
    "FunctionFieldBackend",
    "HermitianBackend",
    "LocalExpansion",
    "Orbit",
    "P2Witness",
    "Place",
    "RRBasis",
    "RationalBackend",
    "RationalFunction",
    "backend_from_descriptor",
    "load_backend",
]

_KEYS = {"kind", "p", "k", "modulus", "ell", "sigma"}


def backend_from_descriptor(desc: dict) -> FunctionFieldBackend:
    """Build a backend from ``{"kind": "rational"|"hermitian", "p", "k",
    "modulus", "ell", "sigma"}``; unknown keys are rejected."""
    unknown = set(desc) - _KEYS
    if unknown:
        raise PreconditionError(f"unknown descriptor keys: {sorted(unknown)}")
    kind = desc.get("kind")
    if kind == "rational":
        F = field_new(int(desc["p"]), int(desc.get("k", 1)), desc.get("modulus"))
        return RationalBackend(F, desc.get("sigma", "multiply"))
    if kind == "hermitian":
        ell = int(desc["ell"])
        F = None
        if "p" in desc:
            F = field_new(int(desc["p"]), int(desc["k"]), desc.get("modulus"))
        return HermitianBackend(ell, F)
    raise PreconditionError(f"unknown backend kind {kind!r}")


def load_backend(path) -> FunctionFieldBackend:
    return backend_from_descriptor(json.loads(Path(path).read_text()))
