"""Acceptance criteria, one PASS/FAIL line each with runtime against budget.

Every criterion rebuilds its objects from scratch so the timings are honest.
Run with ``pytest tests/test_acceptance.py -v``; the lines print even without -s.
"""

from __future__ import annotations

import time

import pytest

from pointed_hopf.algebra import build_algebra, verify_defining_relations
from pointed_hopf.algebra.axioms import Report, check_hopf_axioms
from pointed_hopf.cartan import DatumError, a2_datum, group_algebra_datum, taft_datum, validate_datum
from pointed_hopf.double import DrinfeldDouble, verify_double_datum_map, verify_double_relations, verify_quasitriangular
from pointed_hopf.hopf import DualAlgebra, grouplikes, identify_dual, integrals, verify_dual_relations
from pointed_hopf.identities import identity_suite
from pointed_hopf.linalg import scale, vec_equal
from pointed_hopf.ribbon import NEITHER, RIBBON, kr_criterion, theorem_witness


@pytest.fixture
def announce(capsys):
    def emit(label: str, rep: Report, elapsed: float, budget: float) -> None:
        ok = rep.passed and elapsed < budget
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {elapsed:.2f}s / budget {budget:.0f}s"
        bad = [c.name for c in rep.failures()]
        if bad:
            line += f"; failed: {bad[:3]}"
        with capsys.disabled():
            print("\n" + line)
        assert rep.passed, rep.text()
        assert elapsed < budget, f"{elapsed:.2f}s exceeds {budget}s"

    return emit


def test_criterion_1_taft3(announce):
    t0 = time.perf_counter()
    rep = Report("Taft-3")
    A = build_algebra(taft_datum(3))
    rep.add("dim A = 9", A.dim == 9)
    rep.extend(check_hopf_axioms(A, "full-basis"))
    Ad = DualAlgebra(A)
    D = DrinfeldDouble(A, Ad)
    rep.add("dim D(A) = 81", D.dim == 81)
    qt = verify_quasitriangular(D, full_basis=True)
    rep.extend(qt.report)
    rr = kr_criterion(A, Ad, double=D)
    rep.add("verdict RIBBON", rr.verdict == RIBBON)
    rep.add("criterion witness (h, δ) found", rr.criterion_witness is not None)
    rep.add("ribbon element v found", rr.ribbon_element is not None)
    rep.add("ribbon report consistent", rr.passed)
    if rr.element_report is not None:
        rep.extend(rr.element_report)
    announce("1 Taft-3 Hopf axioms, D(A) quasitriangular, RIBBON with v", rep, time.perf_counter() - t0, 10)


def test_criterion_2_even_taft(announce):
    rep = Report("Taft N=2, N=4")
    worst = 0.0
    for N in (2, 4):
        t0 = time.perf_counter()
        A = build_algebra(taft_datum(N))
        rr = kr_criterion(A)
        rep.add(f"Taft-{N} verdict is not RIBBON", rr.verdict != RIBBON, rr.verdict)
        rep.add(f"Taft-{N} verdict NEITHER", rr.verdict == NEITHER)
        worst = max(worst, time.perf_counter() - t0)
    announce("2 Taft N=2 and N=4 not RIBBON (slowest of the two)", rep, worst, 10)


def test_criterion_3_a2(announce):
    t0 = time.perf_counter()
    rep = Report("A2")
    A = build_algebra(a2_datum())
    rep.add("dim A = 243", A.dim == 243)
    rep.extend(verify_defining_relations(A))
    Ad = DualAlgebra(A)
    dual = verify_dual_relations(Ad)
    names = " ".join(c.name for c in dual.checks)
    rep.add("dual checks cover ξ_i^3 = 0 and ad(ξ_1)^2(ξ_2) = 0", "ξ_1^3 = 0" in names and "ad(ξ_1)^2(ξ_2)" in names)
    rep.extend(dual)
    D = DrinfeldDouble(A, Ad)
    dr = verify_double_relations(D)
    rep.add("double Serre relations checked", any("ad(x" in c.name for c in dr.checks))
    rep.extend(dr)
    rep.extend(verify_double_datum_map(D))
    ir = integrals(A, Ad, random_checks=500)
    rep.extend(ir.report)
    rep.add("integral solution spaces are one-dimensional", set(ir.solution_dims.values()) == {1})
    tw = theorem_witness(A, ir.gamma, ir.g_dist)
    rep.extend(tw.report)
    rr = kr_criterion(A, Ad, ir, double=D)
    rep.add("verdict RIBBON", rr.verdict == RIBBON)
    announce("3 A2: dim 243, dual and double relations, integrals, witness with rho=2, RIBBON",
             rep, time.perf_counter() - t0, 300)


def test_criterion_4_identity_suite(announce):
    t0 = time.perf_counter()
    algs = [build_algebra(taft_datum(N)) for N in (2, 3, 4, 5)] + [build_algebra(a2_datum())]
    rep = identity_suite(algs, n_max=8, N_max=4)
    announce("4 q-Pascal, inversion, ad-power N<=4, power rule", rep, time.perf_counter() - t0, 30)


def test_criterion_5_dual(announce):
    t0 = time.perf_counter()
    rep = Report("dual")
    for d in (taft_datum(3), a2_datum()):
        A = build_algebra(d)
        Ad = DualAlgebra(A)
        rep.extend(identify_dual(Ad).report)
        rep.add(f"|G(A*)| = |G| for {d.name}", len(grouplikes(Ad)) == d.group.order)
    announce("5 A* = u(dual datum) and |G(A*)| = |G| for Taft-3 and A2", rep, time.perf_counter() - t0, 60)


def test_criterion_6_integrals(announce):
    t0 = time.perf_counter()
    rep = Report("integrals")
    A = build_algebra(taft_datum(3))
    ir = integrals(A)
    rep.extend(ir.report)
    t = ir.left_integral
    ok_l = ok_r = True
    for k in range(A.dim):
        a = A.basis(k)
        ok_l = ok_l and vec_equal(A.multiply(a, t), scale(t, A.counit(a)))
        # γ extended by zero off the group part
        want = scale(t, A.scalar(ir.gamma(A.elements[k]))) if k < A.order else {}
        ok_r = ok_r and vec_equal(A.multiply(t, a), want)
    rep.add("Taft-3: a t_l = ε(a) t_l over the full basis", ok_l, count=A.dim)
    rep.add("Taft-3: t_l a = γ(a) t_l over the full basis", ok_r, count=A.dim)
    for key in ("gamma, negative variant ∏χ_β^-(N_β-1)", "gamma, positive variant ∏χ_β^(N_β-1)"):
        rep.add(f"Taft-3 reports {key}", key in ir.predicted)
    B = build_algebra(a2_datum())
    irb = integrals(B, random_checks=500)
    rep.extend(irb.report)
    rep.add("A2: γ and g_dist solved", irb.gamma is not None and irb.g_dist is not None)
    rep.add("A2: γ compared with both sign variants",
            "solved gamma matches negative variant" in irb.predicted and "solved gamma matches positive variant" in irb.predicted)
    announce("6 integrals, γ and g_dist against both sign variants", rep, time.perf_counter() - t0, 60)


def test_criterion_7_degenerate(announce):
    t0 = time.perf_counter()
    rep = Report("degenerate")
    for inv in ((2,), (3,), (2, 2)):
        A = build_algebra(group_algebra_datum(inv))
        rr = kr_criterion(A)
        h, delta = rr.criterion_witness if rr.criterion_witness else (None, None)
        rep.add(f"θ=0 over {inv}: RIBBON", rr.verdict == RIBBON)
        rep.add(f"θ=0 over {inv}: h = 1, δ = ε", h is not None and h.is_identity() and delta.is_identity())
    cases = {
        "χ_i(g_i) = 1": (lambda: validate_datum([3], [[0]], [[1]], [[2]]), "χ_i(g_i) ≠ 1"),
        "broken Cartan condition": (
            lambda: validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[2, -1], [-1, 2]]),
            "Cartan condition",
        ),
        "nonzero λ": (
            lambda: validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[2, 0], [0, 2]],
                                   linking=[[0, 1], [0, 0]]),
            "linking",
        ),
        "nonzero μ": (lambda: validate_datum([3], [[1]], [[1]], [[2]], rootparams=[1]), "root-vector"),
    }
    for name, (make, fragment) in cases.items():
        try:
            make()
            raised = False
        except DatumError as e:
            raised = any(fragment in v for v in e.violations)
        rep.add(f"{name} raises DatumError", raised)
    announce("7 θ=0 RIBBON with h=1, δ=ε; invalid data rejected", rep, time.perf_counter() - t0, 10)
