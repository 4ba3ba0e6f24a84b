"""Python access to the valrank library.

Every operation takes a request dictionary and returns a payload dictionary,
mirroring the JSON accepted by the command line tool. A few typed helpers
cover the common calls.
"""

from __future__ import annotations

import json
import warnings
from typing import Any, Iterable, Sequence

from . import _core

__all__ = [
    "ValrankError",
    "ValrankWarning",
    "run",
    "operations",
    "schema",
    "teichmuller_lift",
    "filtration",
    "convex_hull",
    "special_fiber",
    "basis_criterion",
]


class ValrankError(ValueError):
    """Raised for domain and request errors; ``code`` names the error kind."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class ValrankWarning(UserWarning):
    """Advisory raised alongside a valid result."""


def run(op: str, request: dict[str, Any]) -> dict[str, Any]:
    try:
        payload, notes = _core.run(op, json.dumps(request))
    except _core.CoreError as e:
        code, message = e.args
        raise ValrankError(code, message) from None
    for note in notes:
        warnings.warn(note, ValrankWarning, stacklevel=2)
    return json.loads(payload)


def operations() -> list[str]:
    return list(_core.operations())


def schema(op: str) -> str:
    try:
        return _core.schema(op)
    except _core.CoreError as e:
        raise ValrankError(*e.args) from None


def _ring(p: int, k: int, n: int, modulus: Sequence[int] | None) -> dict[str, Any]:
    ring: dict[str, Any] = {"p": p, "k": k, "n": n}
    if modulus is not None:
        ring["h"] = list(modulus)
    return ring


def _backend(p: int | None) -> dict[str, Any]:
    return {"backend": "tadic"} if p is None else {"backend": "padic", "p": p}


def teichmuller_lift(p: int, k: int, n: int, value: str | int, modulus: Sequence[int] | None = None) -> list[int]:
    """Coefficients of the Teichmueller lift of ``value`` in GR(p^k, n)."""
    return run("ring.teich", {"ring": _ring(p, k, n, modulus), "value": str(value)})["lift"]


def filtration(code: dict[str, Any], up_to: int) -> dict[str, Any]:
    """k_i, d_i and divisor valuations for i = 1..up_to; ``code`` is a code request."""
    return run("code.filtration", {"code": code, "up_to": up_to})["filtration"]


def convex_hull(lattices: Iterable[Any], d: int, p: int | None = None) -> list[list[list[str]]]:
    """Canonical matrices of the hull vertices; ``p=None`` selects the t-adic backend."""
    req = {**_backend(p), "d": d, "lattices": list(lattices)}
    return [v["matrix"] for v in run("bt.hull", req)["vertices"]]


def special_fiber(lattices: Iterable[Any], d: int, p: int | None = None) -> dict[str, Any]:
    req = {**_backend(p), "d": d, "lattices": list(lattices)}
    return run("mustafin.fiber", req)


def basis_criterion(matrices: Iterable[Any], d: int | None = None, p: int | None = None) -> dict[str, Any]:
    req: dict[str, Any] = {**_backend(p), "matrices": list(matrices)}
    if d is not None:
        req["d"] = d
    return run("mustafin.criterion", req)
