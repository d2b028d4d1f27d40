"""Reproducible experiment catalogue and report machinery.

Every catalogue entry reruns one construction end to end and compares the
computed numbers against their closed forms at pinned tolerances. Reports
serialize to stable JSON (fixed key order, floats at 17 significant digits)
and the CLI exit code reflects the aggregate pass flag, so the catalogue can
gate CI.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import linalg
from .discord import (
    ClassicalityStatus,
    classify,
    depolarize_classify,
    epsilon_discordant,
)
from .entanglement import (
    GBRegion,
    PTVerdict,
    distill_witness_theta,
    epsilon_entangled_from_void,
    gurvits_barnum,
    partial_transpose,
    peres_check,
    zero_diagonal_witness,
)
from .errors import BadParamsError, UnknownExperimentError
from .geometry import StateLine, epsilon_mix, find_boundary, void_degree
from .states import (
    ClassicalForm,
    DensityMatrix,
    basis_ket,
    bell_state,
    bipartition,
    cq_state,
    maximally_mixed,
    nine_state_mixture,
    swap_subsystems,
    thermal_n,
    zero_plus_mixture,
)

DEFAULT_SEED = 20240809


@dataclass(frozen=True)
class Comparison:
    name: str
    computed: float
    expected: float
    tolerance: float
    provenance: str

    @property
    def passed(self) -> bool:
        return abs(self.computed - self.expected) <= self.tolerance


@dataclass
class Report:
    experiment_id: str
    params: dict
    comparisons: list[Comparison] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    runtime_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons)

    def add(self, name, computed, expected, tolerance, provenance=""):
        self.comparisons.append(
            Comparison(name, float(computed), float(expected), float(tolerance), provenance)
        )

    def add_flag(self, name, ok: bool, provenance=""):
        self.add(name, 1.0 if ok else 0.0, 1.0, 0.0, provenance)

    def to_dict(self) -> dict:
        return {
            "experiment_id": self.experiment_id,
            "params": self.params,
            "computed": {c.name: c.computed for c in self.comparisons},
            "expected": {c.name: c.expected for c in self.comparisons},
            "tolerance": {c.name: c.tolerance for c in self.comparisons},
            "pass": {c.name: c.passed for c in self.comparisons},
            "provenance": {c.name: c.provenance for c in self.comparisons},
            "info": self.info,
            "all_pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _dump(obj, out: list) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _dump(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _dump(v, out)
        out.append("]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_fmt_float(float(obj)))
    elif isinstance(obj, complex):
        out.append("[" + _fmt_float(obj.real) + "," + _fmt_float(obj.imag) + "]")
    elif obj is None:
        out.append("null")
    else:
        out.append(json.dumps(str(obj)))


def report_json(report: Report) -> str:
    """Stable JSON: insertion key order, floats at 17 significant digits."""
    out: list = []
    _dump(report.to_dict(), out)
    return "".join(out)


def report_csv(report: Report) -> str:
    lines = ["experiment_id,comparison,computed,expected,tolerance,pass"]
    for c in report.comparisons:
        lines.append(
            f"{report.experiment_id},{c.name},{_fmt_float(c.computed)},"
            f"{_fmt_float(c.expected)},{_fmt_float(c.tolerance)},{str(c.passed).lower()}"
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# shared construction helpers


def _flip_projector(da: int, db: int) -> DensityMatrix:
    v = (basis_ket([0, 1], [da, db]) + basis_ket([1, 0], [da, db])) / np.sqrt(2.0)
    return DensityMatrix.from_vector(v, (da, db))


def _two_void_state() -> DensityMatrix:
    mat = np.zeros((4, 4), dtype=np.complex128)
    mat[1, 1] = 0.5
    mat[2, 2] = 0.5
    return DensityMatrix(mat, (2, 2))


def _pps_boundary(n: int):
    target = DensityMatrix.from_vector(basis_ket([1] * n, [2] * n), (2,) * n)
    line = StateLine(maximally_mixed((2,) * n), target)
    return find_boundary(line)


def _thermal_boundary(n: int, eta: float):
    rho = thermal_n(eta, n)
    target = DensityMatrix.from_vector(basis_ket([1] * n, [2] * n), (2,) * n)
    return rho, find_boundary(StateLine(rho, target))


def _random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def _seeded_rng(params: dict) -> np.random.Generator:
    return np.random.default_rng(int(params.get("seed", DEFAULT_SEED)))


def _eps(params: dict, default: float = 0.1) -> float:
    eps = float(params.get("eps", default))
    if not 0.0 < eps <= 1.0:
        raise BadParamsError(f"eps {eps} outside (0, 1]")
    return eps


# ---------------------------------------------------------------------------
# catalogue experiments


def _exp_pps_n(params: dict, report: Report) -> None:
    n = int(params.get("N", 4))
    if not 2 <= n <= 14:
        raise BadParamsError(f"N={n} outside supported range [2, 14]")
    bp = _pps_boundary(n)
    t_b = -1.0 / (2**n - 1)
    report.add("t_b", bp.t_b, t_b, 1e-10, "boundary of (1-t)I/2^N + t|1..1><1..1| at -1/(2^N-1)")
    dist = linalg.trace_distance(maximally_mixed((2,) * n), bp.state)
    report.add("delta_to_mixed", dist, 2.0**-n, 1e-10, "closed form 1/2^N")
    report.add("void_degree", bp.void_degree, 1, 0, "exactly one eigenvalue vanishes at the boundary")


def _exp_pps2(params: dict, report: Report) -> None:
    eps = _eps(params)
    _exp_pps_n({"N": 2}, report)
    bp = _pps_boundary(2)
    tau, cert = epsilon_entangled_from_void(bp.state, basis_ket([1, 1], [2, 2]), eps)
    report.add_flag("mix_is_npt", cert.verdict is PTVerdict.NPT, "Peres test on the eps-mixture")
    assert cert.zero_diag_witness is not None
    report.add(
        "zero_diag_value",
        abs(cert.zero_diag_witness.value),
        eps / 2.0,
        1e-10,
        "off-diagonal partner of the vanished diagonal entry is eps/2",
    )
    dist = linalg.trace_distance(tau, bp.state)
    report.add("delta_excess", max(0.0, dist - eps), 0.0, 1e-12, "mixture stays within eps")


def _exp_thermal_common(n: int, eta: float, report: Report, two_qubit_condition: bool) -> None:
    rho, bp = _thermal_boundary(n, eta)
    lam = ((1.0 - eta) / 2.0) ** n
    report.add(
        "t_b",
        bp.t_b,
        -lam / (1.0 - lam),
        1e-10,
        "smallest thermal eigenvalue lam gives boundary -lam/(1-lam)",
    )
    if two_qubit_condition:
        p = abs(bp.t_b)
        report.add(
            "two_qubit_condition",
            (1.0 - eta) ** 2 * (p + 1.0) - 4.0 * p,
            0.0,
            1e-10,
            "(1-eta)^2 (p+1) = 4p at p = |t_b|",
        )
    dist = linalg.trace_distance(rho, bp.state)
    # The series value (lam + lam/(1-lam))/2 drops the removed |lam| term
    # from Tr|rho - |1..1><1..1|| = 2 - 2 lam; the faithful trace distance
    # is exactly lam, so this comparison fails whenever lam^2 is resolvable.
    report.add(
        "delta_thermal_to_boundary_series",
        dist,
        0.5 * (lam + lam / (1.0 - lam)),
        1e-10,
        "quoted series (lam + lam/(1-lam))/2; off by ~lam^2/2 from the definition",
    )
    report.add(
        "delta_thermal_to_boundary",
        dist,
        lam,
        1e-10,
        "|t_b|/2 * Tr|rho - proj| = lam/(2(1-lam)) * (2 - 2 lam) = lam exactly",
    )
    second = (1.0 - bp.t_b) * lam * (1.0 + eta) / (1.0 - eta)
    if second > 10.0 * linalg.ZERO_EIG_TOL:
        report.add("void_degree", bp.void_degree, 1, 0, "one vanished eigenvalue")
    else:
        # many thermal weights fall below the zero threshold here; the void
        # count is not numerically resolvable
        report.info["void_degree"] = bp.void_degree


def _exp_thermal2(params: dict, report: Report) -> None:
    eta = float(params.get("eta", 1.0 / 3.0))
    if not 0.0 < eta < 1.0:
        raise BadParamsError(f"eta {eta} outside (0, 1)")
    _exp_thermal_common(2, eta, report, two_qubit_condition=True)


def _exp_thermal_n(params: dict, report: Report) -> None:
    n = int(params.get("N", 3))
    eta = float(params.get("eta", 0.5))
    if not 2 <= n <= 14:
        raise BadParamsError(f"N={n} outside supported range [2, 14]")
    if not 0.0 < eta < 1.0:
        raise BadParamsError(f"eta {eta} outside (0, 1)")
    _exp_thermal_common(n, eta, report, two_qubit_condition=(n == 2))


def _exp_void2(params: dict, report: Report) -> None:
    eps = _eps(params)
    rho = _two_void_state()
    rho1 = _flip_projector(2, 2)
    tau = epsilon_mix(rho, rho1, eps)
    pt = partial_transpose(tau)
    w = linalg.eigenvalues(pt.mat)
    expected = sorted([0.5, 0.5, eps / 2.0, -eps / 2.0], reverse=True)
    for k, (got, want) in enumerate(zip(w, expected)):
        report.add(f"pt_eigenvalue_{k}", got, want, 1e-10, "spectrum {1/2, 1/2, eps/2, -eps/2}")
    zdw = zero_diagonal_witness(pt.mat)
    assert zdw is not None
    report.info["zero_diag_witness"] = [zdw.row, zdw.col]
    report.add("zero_diag_value", abs(zdw.value), eps / 2.0, 1e-10, "vanished diagonal pairs with eps/2")
    dw = distill_witness_theta(tau)
    assert dw is not None
    report.add("witness_theta", dw.theta, math.pi / 4.0, 1e-12, "optimal angle pi/4 when <11|rho|11>=0")
    report.add("witness_value", dw.value, -eps / 2.0, 1e-10, "closed-form minimum -eps/2")
    report.add("delta_to_base", linalg.trace_distance(tau, rho), eps / 2.0, 1e-12,
               "flip direction sits at distance eps/2 from the 2-void state")


def _exp_propzero(params: dict, report: Report) -> None:
    eps = _eps(params)
    lam = np.zeros(4)
    lam[:3] = 1.0 / 3.0
    rho = DensityMatrix(np.diag(lam).astype(np.complex128), (2, 2))
    tau, cert = epsilon_entangled_from_void(rho, basis_ket([1, 1], [2, 2]), eps)
    report.add_flag("mix_is_npt", cert.verdict is PTVerdict.NPT, "Peres test on the eps-mixture")
    assert cert.zero_diag_witness is not None
    report.add("zero_diag_value", abs(cert.zero_diag_witness.value), eps / 2.0, 1e-10,
               "off-diagonal partner of the vanished diagonal entry")
    pt = partial_transpose(tau)
    report.add("pt_corner_entry", abs(pt.mat[3, 0]), eps / 2.0, 1e-12,
               "<11|PT|00> = <01|rho|10> = eps/2 by the entrywise transpose relation")
    report.add("delta_excess", max(0.0, linalg.trace_distance(tau, rho) - eps), 0.0, 1e-12,
               "mixture stays within eps")
    report.add_flag("distill_witness_negative",
                    cert.distill_witness is not None and cert.distill_witness.value < 0.0,
                    "single-copy witness certifies distillability")


def _exp_example5(params: dict, report: Report) -> None:
    eps = _eps(params, 0.3)
    rho = zero_plus_mixture()
    w = linalg.eigenvalues(rho.mat)
    for k, want in enumerate([0.75, 0.25, 0.0, 0.0]):
        report.add(f"eigenvalue_{k}", w[k], want, 1e-10, "spectrum {3/4, 1/4, 0, 0}")
    psi_minus = bell_state("psi-")
    phi_plus_pt = partial_transpose(DensityMatrix.from_vector(bell_state("phi+"), (2, 2)))
    val = float(np.real(psi_minus.conj() @ phi_plus_pt.mat @ psi_minus))
    report.add("psi_minus_expectation_phi_plus", val, -0.5, 1e-12,
               "<psi-|PT(phi+ projector)|psi-> = -1/2")
    tau = epsilon_mix(rho, DensityMatrix.from_vector(bell_state("phi+"), (2, 2)), eps)
    pt = partial_transpose(tau)
    val_eps = float(np.real(psi_minus.conj() @ pt.mat @ psi_minus))
    report.add("psi_minus_expectation_mix", val_eps, -eps / 2.0, 1e-10,
               "base state kills the psi- matrix element, leaving -eps/2")
    eff_tol = min(linalg.PSD_TOL, (eps / 2.0) / (4.0 * max(1.0, float(np.linalg.norm(pt.mat)))))
    report.add_flag("mix_is_npt", peres_check(tau, eff_tol).verdict is PTVerdict.NPT,
                    "negative psi- expectation forces an NPT verdict")
    report.add_flag("classified_discordant", classify(rho).status is ClassicalityStatus.DISCORDANT,
                    "dephasing in the unique marginal eigenbasis moves the state")


_CQ_MAPS = ("I*I", "I*X", "X*H", "X*XH")


def _cq_local_map(kind: str) -> np.ndarray:
    eye = np.eye(2, dtype=np.complex128)
    x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    h = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
    table = {"I*I": (eye, eye), "I*X": (eye, x), "X*H": (x, h), "X*XH": (x, x @ h)}
    a, b = table[kind]
    return np.kron(a, b)


def _exp_cq(params: dict, report: Report) -> None:
    eps = _eps(params)
    rest = (0.5, 0.3, 0.2)
    rho1 = _flip_projector(2, 2)
    for k in range(4):
        lam = list(rest)
        lam.insert(k, 0.0)
        rho = cq_state(lam)
        u = _cq_local_map(_CQ_MAPS[k])
        rotated = DensityMatrix(u @ rho.mat @ u.conj().T, (2, 2))
        tau = epsilon_mix(rotated, rho1, eps)
        pt = partial_transpose(tau)
        zdw = zero_diagonal_witness(pt.mat)
        ok = zdw is not None
        report.add_flag(f"zero_diag_found_{k}", ok, f"local map {_CQ_MAPS[k]} relabels the zero weight to |00>")
        if ok:
            report.add(f"zero_diag_value_{k}", abs(zdw.value), eps / 2.0, 1e-10,
                       "witness entry eps/2 after relabeling")
        eff_tol = min(linalg.PSD_TOL, (eps / 2.0) / (4.0 * max(1.0, float(np.linalg.norm(pt.mat)))))
        report.add_flag(f"mix_is_npt_{k}", peres_check(tau, eff_tol).verdict is PTVerdict.NPT,
                        "zero-diagonal witness forces NPT")
    generic = cq_state((0.4, 0.3, 0.2, 0.1))
    report.add_flag("cq_classical_wrt_a", classify(generic).status is ClassicalityStatus.CLASSICAL_WRT_A,
                    "the family is classical with respect to A by construction")
    report.add_flag("swapped_discordant",
                    classify(swap_subsystems(generic)).status is ClassicalityStatus.DISCORDANT,
                    "interchanging the subsystems makes the state discordant")


def _exp_qutrit9(params: dict, report: Report) -> None:
    eps = _eps(params, 0.5)
    rho0 = nine_state_mixture()
    report.add_flag("base_is_ppt", peres_check(rho0).verdict is PTVerdict.PPT,
                    "separable mixture of product vectors")
    tau = epsilon_mix(rho0, _flip_projector(3, 3), eps)
    pt = partial_transpose(tau)
    zdw = zero_diagonal_witness(pt.mat)
    assert zdw is not None
    report.add("zero_diag_row", zdw.row, 4, 0, "|11> is the first vanished diagonal entry (index 4)")
    report.add("zero_diag_col", zdw.col, 0, 0, "paired with |00> (index 0)")
    report.add("zero_diag_value", abs(zdw.value), eps / 2.0, 1e-12, "entry value eps/2")
    report.add("pt_entry_11_00", abs(pt.mat[4, 0]), eps / 2.0, 1e-12,
               "<11|PT|00> = <01|rho|10> = eps/2")
    eff_tol = min(linalg.PSD_TOL, (eps / 2.0) / (4.0 * max(1.0, float(np.linalg.norm(pt.mat)))))
    report.add_flag("mix_is_npt", peres_check(tau, eff_tol).verdict is PTVerdict.NPT,
                    "Peres test on the qutrit mixture")


def _exp_gb_ball(params: dict, report: Report) -> None:
    d = int(params.get("d", 4))
    dims = {4: (2, 2), 6: (2, 3), 9: (3, 3)}.get(d)
    if dims is None:
        raise BadParamsError(f"d={d} not in {{4, 6, 9}}")
    count = int(params.get("count", 100))
    rng = _seeded_rng(params)
    ppt_failures = 0
    ball_failures = 0
    eye = np.eye(d, dtype=np.complex128)
    for _ in range(count):
        g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        h = (g + g.conj().T) / 2.0
        delta = h - (np.trace(h).real / d) * eye
        radius = float(rng.uniform(0.2, 0.95)) / d
        delta *= radius / linalg.trace_norm(delta)
        rho = DensityMatrix(eye / d + delta, dims)
        if gurvits_barnum(rho) is not GBRegion.INSIDE_TRACE_BALL:
            ball_failures += 1
        if peres_check(rho).verdict is not PTVerdict.PPT:
            ppt_failures += 1
    report.add("ball_membership_failures", ball_failures, 0, 0,
               "sampled states are inside the trace ball by construction")
    report.add("ppt_failures", ppt_failures, 0, 0,
               "trace-ball states are separable, hence PPT")
    if d == 4:
        phi_plus = DensityMatrix.from_vector(bell_state("phi+"), (2, 2))
        report.add_flag("phi_plus_outside", gurvits_barnum(phi_plus) is GBRegion.OUTSIDE,
                        "maximally entangled state sits far outside both balls")
        delta = phi_plus.mat - eye / 4.0
        report.add("phi_plus_trace_radius", linalg.trace_norm(delta), 1.5, 1e-12,
                   "eigenvalues {3/4, -1/4, -1/4, -1/4} give Tr|.| = 3/2")
        report.add("phi_plus_frobenius_radius", float(np.linalg.norm(delta)),
                   math.sqrt(3.0) / 2.0, 1e-12, "sqrt(9/16 + 3/16) = sqrt(3)/2")


def _exp_fundlemma(params: dict, report: Report) -> None:
    eps = _eps(params)
    # a = 0 case: flat minimum at theta = pi/4, value -eps/2
    tau = epsilon_mix(_two_void_state(), _flip_projector(2, 2), eps)
    dw = distill_witness_theta(tau)
    assert dw is not None
    report.add("theta_star_flat", dw.theta, math.pi / 4.0, 1e-12, "a=0 puts the optimum at pi/4")
    report.add("value_flat", dw.value, -eps / 2.0, 1e-10, "closed form -b at a=0 with b=eps/2")
    pt = partial_transpose(tau)
    direct = float(np.real(dw.psi.conj() @ pt.mat @ dw.psi))
    report.add("closed_form_matches_quadratic_flat", dw.value - direct, 0.0, 1e-10,
               "stored value equals <Psi|PT|Psi>")
    # a > 0 case: boundary thermal state, witness still strictly negative
    _, bp = _thermal_boundary(2, 0.5)
    tau2, cert = epsilon_entangled_from_void(bp.state, basis_ket([1, 1], [2, 2]), eps)
    dw2 = cert.distill_witness
    assert dw2 is not None
    pt2 = partial_transpose(tau2)
    direct2 = float(np.real(dw2.psi.conj() @ pt2.mat @ dw2.psi))
    report.add("closed_form_matches_quadratic", dw2.value - direct2, 0.0, 1e-10,
               "back-rotated witness evaluates to the stored value")
    report.add_flag("value_negative", dw2.value < 0.0, "witness certifies distillability")
    report.add_flag("npt", cert.verdict is PTVerdict.NPT, "Peres agrees with the witness")


def _random_separable_void(rng: np.random.Generator, da: int, db: int):
    ua = _random_unitary(rng, da)
    ub = _random_unitary(rng, db)
    d = da * db
    weights = rng.uniform(0.2, 1.0, size=d - 1)
    weights /= weights.sum()
    mat = np.zeros((d, d), dtype=np.complex128)
    k = 0
    for i in range(da):
        for j in range(db):
            if i == 0 and j == 0:
                continue
            v = np.kron(ua[:, i], ub[:, j])
            mat += weights[k] * np.outer(v, v.conj())
            k += 1
    zero_vec = np.kron(ua[:, 0], ub[:, 0])
    return DensityMatrix(mat, (da, db)), zero_vec


_PROP_REAL_DIMS = ((2, 2), (2, 3), (3, 3), (2, 4))
_PROP_REAL_EPS = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


def _exp_prop_real(params: dict, report: Report) -> None:
    count = int(params.get("count", 200))
    rng = _seeded_rng(params)
    npt_failures = 0
    witness_failures = 0
    max_delta_excess = 0.0
    for idx in range(count):
        da, db = _PROP_REAL_DIMS[idx % len(_PROP_REAL_DIMS)]
        rho_b, zero_vec = _random_separable_void(rng, da, db)
        for eps in _PROP_REAL_EPS:
            tau, cert = epsilon_entangled_from_void(rho_b, zero_vec, eps)
            if cert.verdict is not PTVerdict.NPT:
                npt_failures += 1
            if cert.distill_witness is None or cert.distill_witness.value >= 0.0:
                witness_failures += 1
            max_delta_excess = max(
                max_delta_excess, linalg.trace_distance(tau, rho_b) - eps
            )
    report.add("npt_failures", npt_failures, 0, 0,
               "every seeded void state is entangled in every direction of the grid")
    report.add("witness_failures", witness_failures, 0, 0,
               "single-copy witness is strictly negative throughout")
    report.add("max_delta_excess", max(0.0, max_delta_excess), 0.0, 1e-12,
               "mixtures never leave the eps ball")
    report.info["instances"] = count
    report.info["eps_grid"] = list(_PROP_REAL_EPS)


def _random_nondegenerate_mu(rng: np.random.Generator, da: int, db: int) -> np.ndarray:
    """Weights whose row sums (the A-marginal spectrum) are well separated."""
    mu = rng.uniform(0.5, 1.5, size=(da, db))
    sums = mu.sum(axis=1)
    targets = np.array([1.0 + 2.0 * i for i in range(da)]) + rng.uniform(-0.2, 0.2, size=da)
    mu *= (targets / sums)[:, None]
    return mu / mu.sum()


def _normal_form_diagonal(rng: np.random.Generator, da: int, db: int) -> ClassicalForm:
    """All-diagonal classical form relabeled so mu00 is the global minimum."""
    mu = _random_nondegenerate_mu(rng, da, db)
    i0, j0 = np.unravel_index(np.argmin(mu), mu.shape)
    mu[[0, i0], :] = mu[[i0, 0], :]
    mu[:, [0, j0]] = mu[:, [j0, 0]]
    return ClassicalForm(mu)


def _exp_discord_identity(params: dict, report: Report) -> None:
    count = int(params.get("count", 200))
    ts = tuple(float(t) for t in params.get("ts", (0.1, 0.5, 0.9)))
    rng = _seeded_rng(params)
    dims_cycle = ((2, 2), (2, 3), (3, 3))
    classical_bad = 0
    discordant_bad = 0
    depolarize_mismatches = 0
    for idx in range(count):
        da, db = dims_cycle[idx % len(dims_cycle)]
        if idx % 2 == 0:
            form = ClassicalForm(
                _random_nondegenerate_mu(rng, da, db),
                _random_unitary(rng, da),
                tuple(_random_unitary(rng, db) for _ in range(da)),
            )
            from .states import realize_classical

            rho = realize_classical(form)
            expected = ClassicalityStatus.CLASSICAL_WRT_A
        else:
            form = _normal_form_diagonal(rng, da, db)
            rho_eps, _ = epsilon_discordant(form, _flip_projector(da, db), 0.2)
            v = np.kron(_random_unitary(rng, da), _random_unitary(rng, db))
            rho = DensityMatrix(v @ rho_eps.mat @ v.conj().T, (da, db))
            expected = ClassicalityStatus.DISCORDANT
        base = classify(rho)
        if base.status is not expected:
            if expected is ClassicalityStatus.CLASSICAL_WRT_A:
                classical_bad += 1
            else:
                discordant_bad += 1
        for t in ts:
            if depolarize_classify(rho, t).status is not base.status:
                depolarize_mismatches += 1
    report.add("classical_misclassified", classical_bad, 0, 0,
               "realized classical forms classify as classical")
    report.add("discordant_misclassified", discordant_bad, 0, 0,
               "constructed discordant mixtures classify as discordant")
    report.add("depolarize_mismatches", depolarize_mismatches, 0, 0,
               "mixing with I/d never changes the verdict for t > 0")
    report.info["instances"] = count
    report.info["t_grid"] = list(ts)


def _exp_eps_discord(params: dict, report: Report) -> None:
    eps = _eps(params)
    x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    h = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
    form = ClassicalForm(np.array([[0.1, 0.2], [0.4, 0.3]]), None, (np.eye(2, dtype=np.complex128), x @ h))
    rho1 = _flip_projector(2, 2)
    rho_eps, cert = epsilon_discordant(form, rho1, eps)
    report.add_flag("residual_mixture_npt", cert is not None and cert.verdict is PTVerdict.NPT,
                    "normalized residual mixture fails the Peres test")
    report.add_flag("mixture_discordant",
                    classify(rho_eps).status is ClassicalityStatus.DISCORDANT,
                    "dephasing test on the nondegenerate marginal eigenbasis")
    rho0, cert0 = epsilon_discordant(form, rho1, 0.0)
    report.add_flag("eps_zero_classical",
                    cert0 is None and classify(rho0).status is ClassicalityStatus.CLASSICAL_WRT_A,
                    "eps = 0 returns the classical state itself")
    uniform = ClassicalForm(np.full((2, 2), 0.25))
    _, cert_mixed = epsilon_discordant(uniform, rho1, eps)
    report.add_flag("maximally_mixed_branch_npt",
                    cert_mixed is not None and cert_mixed.verdict is PTVerdict.NPT,
                    "the all-equal-weights branch certifies against rho1 alone")


_CATALOGUE: dict[str, tuple[Callable[[dict, Report], None], str]] = {
    "pps2": (_exp_pps2, "two-qubit pseudo-pure boundary, distance and eps-entangled mixture"),
    "thermal2": (_exp_thermal2, "two-qubit thermal boundary and its closed-form condition"),
    "void2": (_exp_void2, "2-void state: partial-transpose spectrum and witnesses"),
    "propzero": (_exp_propzero, "diagonal eigenbasis with one vanished weight: eps-entanglement"),
    "example5": (_exp_example5, "discordant mixture of |00> and |++>: spectrum and witness values"),
    "cq": (_exp_cq, "classical-quantum family: all four vanished-weight positions"),
    "qutrit9": (_exp_qutrit9, "two-qutrit mixture of eight product states: PPT base, NPT mixture"),
    "gb-ball": (_exp_gb_ball, "separable trace ball around the maximally mixed state"),
    "fundlemma": (_exp_fundlemma, "single-copy distillation witness closed form"),
    "prop-real": (_exp_prop_real, "random separable void states: eps-entangled pipeline sweep"),
    "discord-identity": (_exp_discord_identity, "depolarization invariance of the classicality verdict"),
    "eps-discord": (_exp_eps_discord, "constructive eps-discordant neighborhood of a classical state"),
    "pps-n": (_exp_pps_n, "N-qubit pseudo-pure boundary and distance closed forms"),
    "thermal-n": (_exp_thermal_n, "N-qubit thermal boundary and distance closed forms"),
}


def catalogue() -> dict[str, str]:
    """Experiment ids mapped to one-line descriptions."""
    return {key: desc for key, (_, desc) in _CATALOGUE.items()}


def run_experiment(experiment_id: str, params: Optional[dict] = None) -> Report:
    """Run one catalogue experiment and return its Report."""
    if experiment_id not in _CATALOGUE:
        raise UnknownExperimentError(
            f"unknown experiment {experiment_id!r}; known: {', '.join(sorted(_CATALOGUE))}"
        )
    func, _ = _CATALOGUE[experiment_id]
    params = dict(params or {})
    report = Report(experiment_id=experiment_id, params=params)
    start = time.perf_counter()
    func(params, report)
    report.runtime_ms = int(round((time.perf_counter() - start) * 1000.0))
    return report


def certify_report(op, tol: float = linalg.PSD_TOL, candidate_basis=None) -> Report:
    """Consolidated certificate for a user-supplied operator: positivity,
    void degree, Peres verdict, ball membership and classicality, with
    internal-consistency comparisons as the pass criteria."""
    report = Report(experiment_id="certify", params={"tol": tol})
    start = time.perf_counter()
    mat = linalg.as_matrix(op)
    dims = tuple(getattr(op, "dims", None) or (mat.shape[0],))
    report.info["dims"] = list(dims)
    report.info["trace"] = float(np.trace(mat).real)
    psd = linalg.is_psd(mat, tol)
    report.info["psd"] = bool(psd)
    if psd:
        report.info["void_degree"] = void_degree(mat)
    else:
        zdw = zero_diagonal_witness(mat, tol)
        if zdw is not None:
            report.info["zero_diag_witness"] = [zdw.row, zdw.col, complex(zdw.value)]
        report.info["min_eigenvalue"] = linalg.min_eigenvalue(mat)
    if len(dims) > 2:
        op = bipartition(op, 1)
        dims = op.dims
        report.info["bipartition"] = list(dims)
    if len(dims) == 2 and isinstance(op, DensityMatrix):
        cert = peres_check(op, tol)
        report.info["peres_verdict"] = cert.verdict.value
        report.info["min_pt_eigenvalue"] = cert.min_pt_eigenvalue
        pt = partial_transpose(op)
        rayleigh = float(np.real(cert.witness_vector.conj() @ pt.mat @ cert.witness_vector))
        report.add("witness_matches_min_pt_eigenvalue", rayleigh - cert.min_pt_eigenvalue,
                   0.0, 1e-9, "eigenvector quadratic form reproduces the extreme eigenvalue")
        region = gurvits_barnum(op)
        report.info["gurvits_barnum"] = region.value
        if region is not GBRegion.OUTSIDE:
            report.add_flag("ball_implies_ppt", cert.verdict is PTVerdict.PPT,
                            "states inside the separable balls must be PPT")
        verdict = classify(op, candidate_basis=candidate_basis)
        report.info["classicality"] = verdict.status.value
        report.info["classicality_residual"] = verdict.residual
        if verdict.reason:
            report.info["classicality_reason"] = verdict.reason
    report.runtime_ms = int(round((time.perf_counter() - start) * 1000.0))
    return report
