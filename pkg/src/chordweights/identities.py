"""Mechanical verification of the named identities and conjectures.

Every check compares both sides as normalized polynomials, never through
sampled evaluations, so a pass is a proof at that size.  Checks run against a
``Workspace`` bundling the weight cache and the triangles; its weight function
can be substituted, which is how the negative-control test proves the harness
detects errors.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import cfractions as cf
from . import weights as wt
from .diagrams import (
    ChordDiagram,
    enumerate_diagrams,
    four_term_quadruples,
    make_Dn,
    reflect,
    rotate,
)
from .genocchi import KrewerasIntTriangle, normalized_h, seidel
from .kreweras_poly import KrewerasPolyTriangle
from .polyring import IntPoly

_X = IntPoly.x()


@dataclass
class CheckReport:
    """Outcome of one named check; a fail always carries a witness."""

    name: str
    params: dict
    status: str  # "pass" | "fail"
    witness: Optional[dict] = None
    millis: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        obj = {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "millis": round(self.millis, 3),
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


def _report(name: str, params: dict, failures: list[dict], started: float) -> CheckReport:
    millis = (time.perf_counter() - started) * 1000.0
    if failures:
        return CheckReport(name, params, "fail", failures[0], millis)
    return CheckReport(name, params, "pass", None, millis)


def _poly_witness(params: dict, lhs: IntPoly, rhs: IntPoly) -> dict:
    return {**params, "lhs": lhs.to_text(), "rhs": rhs.to_text()}


class Workspace:
    """Shared tables and caches for a verification run.

    ``phi_fn`` maps (diagram, cache) to a polynomial; substituting a corrupted
    implementation here is the supported fault-injection point.
    """

    def __init__(
        self,
        n_max_weights: int = 6,
        n_max_tables: int = 10,
        phi_fn: Optional[Callable[[ChordDiagram, wt.WeightCache], IntPoly]] = None,
        cache: Optional[wt.WeightCache] = None,
    ):
        self.n_max_weights = n_max_weights
        self.n_max_tables = max(n_max_tables, n_max_weights)
        self.cache = cache if cache is not None else wt.WeightCache()
        self.phi_fn = phi_fn if phi_fn is not None else wt._phi
        self.K = KrewerasPolyTriangle(self.n_max_tables)
        self.h = KrewerasIntTriangle(self.n_max_tables + 2)
        self.seidel = seidel(2 * self.n_max_tables + 4)
        self._family: dict[tuple[str, int, int], IntPoly] = {}

    def family(self, kind: str, n: int, k: int = 0) -> IntPoly:
        key = (kind, n, k if kind != "D" else 0)
        if key not in self._family:
            self._family[key] = wt.family_weight(
                kind, n, k, cache=self.cache, phi_fn=self.phi_fn
            )
        return self._family[key]

    def phi(self, d: ChordDiagram) -> IntPoly:
        return self.phi_fn(d, self.cache)


# -- Theorem checks -------------------------------------------------------------


def check_13(n: int, k: int, ws: Optional[Workspace] = None) -> CheckReport:
    """A(n, k-1) - A(n, k) = K(n-1, k), including the boundary conventions."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=max(n, 1))
    started = time.perf_counter()
    params = {"n": n, "k": k}
    lhs = ws.family("A", n, k - 1) - ws.family("A", n, k)
    rhs = ws.K.K(n - 1, k)
    failures = [] if lhs == rhs else [_poly_witness(params, lhs, rhs)]
    return _report("theorem_13", params, failures, started)


def check_14(n: int, k: int, ws: Optional[Workspace] = None) -> CheckReport:
    """B(n, k-1) - B(n, n-k-1) = K(n, k) - K(n, k+1)."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n, "k": k}
    lhs = ws.family("B", n, k - 1) - ws.family("B", n, n - k - 1)
    rhs = ws.K.K(n, k) - ws.K.K(n, k + 1)
    failures = [] if lhs == rhs else [_poly_witness(params, lhs, rhs)]
    return _report("theorem_14", params, failures, started)


def check_conj1(n: int, ws: Optional[Workspace] = None) -> CheckReport:
    """The linear coefficient of D_n is (-1)^(n-1) h_{n-1} (and x divides D_n)."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n}
    dn = ws.family("D", n)
    expected = (-1) ** (n - 1) * normalized_h(n - 1, ws.seidel)
    failures = []
    if dn.coeff(0) != 0 or dn.coeff(1) != expected:
        failures.append(
            {**params, "lhs": dn.to_text(), "rhs": f"{expected}*x mod x^2"}
        )
    return _report("conjecture_1", params, failures, started)


def check_conj2(n: int, ws: Optional[Workspace] = None) -> CheckReport:
    """D_n agrees with the t^n coefficient of the conjectured J-fraction.

    The conjecture is open; a pass means agreement at this size, nothing more.
    """
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n}
    b, lam = cf.conj2_weights()
    lhs = ws.family("D", n)
    rhs = cf.motzkin_sum(n, b, lam)
    failures = [] if lhs == rhs else [_poly_witness(params, lhs, rhs)]
    return _report("conjecture_2", params, failures, started)


def check_remark16(n: int, ws: Optional[Workspace] = None) -> CheckReport:
    """Delta_{i,j} of the all-crossing diagram expands in the B family."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n}
    d = make_Dn(n)
    failures = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = _delta_pair(ws, d, i, j)
            rhs = ws.family("B", n, j - i - 1) - ws.family("B", n, n - 1 - (j - i))
            if lhs != rhs:
                failures.append(_poly_witness({"n": n, "i": i, "j": j}, lhs, rhs))
    return _report("remark_16", params, failures, started)


def check_lemma21(n: int, ws: Optional[Workspace] = None) -> CheckReport:
    """A(n, k-1) + A(n, n-k) = x*D(n-1) + D(n) for every k in [n-1]."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n}
    rhs = _X * ws.family("D", n - 1) + ws.family("D", n)
    failures = []
    for k in range(1, n):
        lhs = ws.family("A", n, k - 1) + ws.family("A", n, n - k)
        if lhs != rhs:
            failures.append(_poly_witness({"n": n, "k": k}, lhs, rhs))
    return _report("lemma_21", params, failures, started)


def check_eq16(n: int, ws: Optional[Workspace] = None) -> CheckReport:
    """T(a,c) = T(a,b) + T(b+1,c) + R(a,b,b+1,c) on the all-crossing diagram."""
    ws = ws or Workspace(n_max_weights=n, n_max_tables=n)
    started = time.perf_counter()
    params = {"n": n}
    d = make_Dn(n)
    failures = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for c in range(b + 1, n + 1):
                lhs = _t_sum(ws, d, a, c)
                rhs = (
                    _t_sum(ws, d, a, b)
                    + _t_sum(ws, d, b + 1, c)
                    + _r_sum(ws, d, a, b, b + 1, c)
                )
                if lhs != rhs:
                    failures.append(
                        _poly_witness({"n": n, "a": a, "b": b, "c": c}, lhs, rhs)
                    )
    return _report("equation_16", params, failures, started)


def _delta_pair(ws: Workspace, d: ChordDiagram, i: int, j: int) -> IntPoly:
    from .diagrams import resolder

    d1, d2 = resolder(d, i - 1, j - 1)
    return ws.phi(d1) - ws.phi(d2)


def _t_sum(ws: Workspace, d: ChordDiagram, lo: int, hi: int) -> IntPoly:
    total = IntPoly.zero()
    for s in range(lo, hi + 1):
        for t in range(s + 1, hi + 1):
            total = total + _delta_pair(ws, d, s, t)
    return total


def _r_sum(ws: Workspace, d: ChordDiagram, a: int, b: int, c: int, dd: int) -> IntPoly:
    total = IntPoly.zero()
    for s in range(a, b + 1):
        for t in range(c, dd + 1):
            total = total + _delta_pair(ws, d, s, t)
    return total


# -- property suites (no paper numbers involved) ---------------------------------


def suite_four_term(n_max: int, ws: Optional[Workspace] = None) -> CheckReport:
    ws = ws or Workspace(n_max_weights=n_max, n_max_tables=n_max)
    started = time.perf_counter()
    params = {"n_max": n_max}
    failures = []
    for n in range(2, n_max + 1):
        for A, B, C, D in four_term_quadruples(n, max_n=max(n_max, 6)):
            rel = ws.phi(A) - ws.phi(B) - ws.phi(C) + ws.phi(D)
            if not rel.is_zero():
                failures.append(
                    {
                        "n": n,
                        "quadruple": [x.to_text() for x in (A, B, C, D)],
                        "residue": rel.to_text(),
                    }
                )
    return _report("four_term_relations", params, failures, started)


def suite_chord_independence(n_max: int, ws: Optional[Workspace] = None) -> CheckReport:
    ws = ws or Workspace(n_max_weights=n_max, n_max_tables=n_max)
    started = time.perf_counter()
    params = {"n_max": n_max}
    failures = []
    for n in range(1, n_max + 1):
        for d in enumerate_diagrams(n, max_n=max(n_max, 6)):
            reference = ws.phi(d)
            for a in range(n):
                got = wt.phi_with_anchor(d, a, wt.WeightCache())
                if got != reference:
                    failures.append(
                        {"diagram": d.to_text(), "anchor": a, "lhs": got.to_text(),
                         "rhs": reference.to_text()}
                    )
    return _report("chord_choice_independence", params, failures, started)


def suite_symmetry(n_max: int, ws: Optional[Workspace] = None) -> CheckReport:
    """phi is invariant under rotation and reflection, computed on raw keys."""
    ws = ws or Workspace(n_max_weights=n_max, n_max_tables=n_max)
    started = time.perf_counter()
    params = {"n_max": n_max}
    failures = []
    for n in range(1, n_max + 1):
        for d in enumerate_diagrams(n, max_n=max(n_max, 6)):
            reference = ws.phi(d)
            raw = wt.WeightCache("exact")
            for other in (reflect(d), rotate(d, 1)):
                got = wt.phi(other, raw)
                if got != reference:
                    failures.append(
                        {"diagram": d.to_text(), "image": other.to_text(),
                         "lhs": got.to_text(), "rhs": reference.to_text()}
                    )
    return _report("dihedral_invariance", params, failures, started)


def suite_shape(n_max: int, ws: Optional[Workspace] = None) -> CheckReport:
    """Monic, degree n, and divisible by x, over the whole small universe."""
    ws = ws or Workspace(n_max_weights=n_max, n_max_tables=n_max)
    started = time.perf_counter()
    params = {"n_max": n_max}
    failures = []
    for n in range(1, n_max + 1):
        for d in enumerate_diagrams(n, max_n=max(n_max, 6)):
            p = ws.phi(d)
            if p.is_zero() or p.degree != n or p.coeff(n) != 1 or p.coeff(0) != 0:
                failures.append({"diagram": d.to_text(), "weight": p.to_text()})
    return _report("weight_shape", params, failures, started)


# -- the full run -----------------------------------------------------------------


def verification_tasks(
    n_max_weights: int,
    n_max_tables: int,
    include_conj2: bool,
    ws: Workspace,
) -> list[Callable[[], CheckReport]]:
    """The full check list as thunks, in the fixed reporting order.

    Tasks are independent given the shared workspace, so they may run
    concurrently; results are ordered by position, never by completion time.
    """
    if n_max_weights < 1 or n_max_tables < 1:
        raise ValueError("budgets must be positive")
    tasks: list[Callable[[], CheckReport]] = []
    for n in range(1, n_max_weights + 1):
        for k in range(0, n):
            tasks.append(lambda n=n, k=k: check_13(n, k, ws))
        for k in range(0, n):
            tasks.append(lambda n=n, k=k: check_14(n, k, ws))
    for n in range(1, n_max_weights + 1):
        tasks.append(lambda n=n: check_conj1(n, ws))
    if include_conj2:
        for n in range(1, n_max_weights + 1):
            tasks.append(lambda n=n: check_conj2(n, ws))
    for n in range(2, min(n_max_weights, 5) + 1):
        tasks.append(lambda n=n: check_remark16(n, ws))
    for n in range(2, n_max_weights + 1):
        tasks.append(lambda n=n: check_lemma21(n, ws))
    for n in range(3, min(n_max_weights, 5) + 1):
        tasks.append(lambda n=n: check_eq16(n, ws))
    property_bound = min(n_max_weights, 4)
    tasks.append(lambda: suite_four_term(property_bound, ws))
    tasks.append(lambda: suite_chord_independence(property_bound, ws))
    tasks.append(lambda: suite_symmetry(property_bound, ws))
    tasks.append(lambda: suite_shape(min(n_max_weights, 5), ws))
    tasks.append(lambda: _tables_report(ws))
    return tasks


def full_report(
    n_max_weights: int = 6,
    n_max_tables: int = 10,
    include_conj2: bool = True,
    ws: Optional[Workspace] = None,
) -> list[CheckReport]:
    """Run every named check plus the property suites, in a fixed order."""
    ws = ws or Workspace(n_max_weights=n_max_weights, n_max_tables=n_max_tables)
    return [task() for task in verification_tasks(n_max_weights, n_max_tables, include_conj2, ws)]


def _tables_report(ws: Workspace) -> CheckReport:
    """Triangle-level identities at the table budget: symmetry, bridges, positivity."""
    from .kreweras_poly import K_diff_identity_check, a1_closed, a_coeff

    started = time.perf_counter()
    params = {"n_max": ws.n_max_tables}
    failures = []
    for n in range(1, ws.n_max_tables + 1):
        for k in range(1, n + 1):
            K = ws.K.K(n, k)
            if K != ws.K.K(n, n + 1 - k):
                failures.append({"identity": "K symmetry", "n": n, "k": k})
            if ws.h.h(n, k) != ws.h.h(n, n - k + 1):
                failures.append({"identity": "h symmetry", "n": n, "k": k})
            if K.coeff(1) != (-1) ** (n - 1) * ws.h.h(n, k):
                failures.append({"identity": "linear bridge", "n": n, "k": k})
            if n >= 3 and a_coeff(n, k, 1, ws.K) != a1_closed(n, k):
                failures.append({"identity": "a1 closed form", "n": n, "k": k})
        if n >= 2 and ws.h.h(n, 1) != normalized_h(n - 1, ws.seidel):
            failures.append({"identity": "row-1 bridge", "n": n})
        if n >= 2 and not all(
            K_diff_identity_check(n, j, ws.K) for j in range(1, n + 1)
        ):
            failures.append({"identity": "K difference identity", "n": n})
    return _report("triangle_identities", params, failures, started)


def reports_to_json(reports: list[CheckReport]) -> list[dict]:
    return [r.to_json_obj() for r in reports]
