"""Re-checking certificates from their witness data alone."""

from __future__ import annotations

from math import prod

from .arith import cube_free_part
from .cubic import RANK_ZERO_LIST, Certificate, CertificateKind, from_triple
from .enumeration.filters import bennett_form
from .enumeration.vector import CoefficientVector
from .resolver import SolutionError, verify_solution
from .sieve import sieve_brute


class InvalidCertificate(Exception):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidCertificate(msg)


def _check_solutions(v: CoefficientVector | None, k: int, i: int, pairs) -> None:
    for n, d in pairs:
        try:
            rec = verify_solution(k, i, int(n), int(d))
        except SolutionError as exc:
            raise InvalidCertificate(f"listed solution ({n}, {d}) fails: {exc}") from None
        _require(v is None or rec.vector == v, f"solution ({n}, {d}) has vector {rec.vector}, not {v}")


def revalidate(v: CoefficientVector | None, cert: Certificate, k: int | None = None, i: int | None = None) -> None:
    """Raise :class:`InvalidCertificate` unless ``cert`` holds for ``v``."""
    w = cert.witness
    kind = cert.kind
    if v is not None:
        k, i = v.k, v.i
    if kind is CertificateKind.RANK_ZERO_LIST:
        form = from_triple(v, tuple(int(t) for t in w["triple"]))
        _require(list(form.coefficients) == [int(c) for c in w["form"]], "form does not match triple")
        D = cube_free_part(prod(form.coefficients))
        _require(D == int(w["D"]), f"D recomputes to {D}, not {w['D']}")
        _require(D in RANK_ZERO_LIST, f"D = {D} is not in the rank-zero list")
    elif kind is CertificateKind.THREE_ONES:
        j = int(w["j"])
        _require({j, j + 1, j + 2} <= set(v.indices), f"window at {j} is not housed")
        _require(v[j] == v[j + 1] == v[j + 2] == 1, f"entries at {j}..{j + 2} are not all one")
    elif kind is CertificateKind.BENNETT_WINDOW:
        wnd = int(w["w"])
        _require({wnd, wnd + 1, wnd + 3, wnd + 4} <= set(v.indices), f"window at {wnd} is not housed")
        form = bennett_form(v, wnd)
        D = cube_free_part(prod(form.coefficients))
        _require(D == int(w["D"]) and D in RANK_ZERO_LIST, f"Bennett form invariant {D} not certified")
    elif kind is CertificateKind.MODULAR_SIEVE:
        m = int(w["modulus"])
        _require(sieve_brute(v, m) == 0, f"vector is feasible modulo {m}")
    elif kind in (CertificateKind.SPECIAL_EQUATION, CertificateKind.PAIR_OF_CUBICS, CertificateKind.EDGE_CASE_HTT):
        _require(bool(w.get("trusted")), "resolution relying on an external theorem must be marked trusted")
        _check_solutions(v, k, i, w.get("solutions", []))
    else:  # pragma: no cover
        raise InvalidCertificate(f"unknown kind {kind}")


def is_valid(v: CoefficientVector | None, cert: Certificate, **kw) -> bool:
    try:
        revalidate(v, cert, **kw)
    except InvalidCertificate:
        return False
    return True
