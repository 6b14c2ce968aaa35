"""Verification suites that emit one self-describing record per check.

Each suite is a pure function of its arguments (seeded), so the records
are reproducible byte for byte.  The command-line front end and the test
suite consume the same records.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import cosmic, fields, fock, lie, sampling, su2
from .biglog import BigLogNumber
from .gaussian import GaussianRational
from .spinor import ETA, Dyad, FourVector, Spinor, induced_lorentz, sigma_dot, spinor_to_null
from .tetrad import dyad_to_null_tetrad, null_to_real_tetrad, tetrad_metric

PASS = "pass"
FAIL = "fail"
INFO = "info"
DISCREPANCY = "DISCREPANCY"
VERDICTS = (PASS, FAIL, INFO, DISCREPANCY)

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)

NULL_TOL = 1e-12
EQUIVARIANCE_TOL = 1e-10
KG_RATIO_WINDOW = (3.6, 4.4)
KG_WAVE = (Fraction(1), Fraction(1, 3), Fraction(2, 3), Fraction(2, 3))
CLAIMED_DIMENSION = 12
JACOBI_CAP = 100
ORACLE_CAP = 20
ORACLE_NMAX = 5
MAXWELL_CAP = 100
DOUBLE_COVER_CAP = 100
SUM_RULE_MAX = 30
ORACLE_MAX_N = 12
NUMBER_NMAX = 4
NUMBER_CAP = 100


@dataclass(frozen=True)
class Record:
    name: str
    value: Any
    verdict: str
    inputs: dict = field(default_factory=dict)
    expected: Any = None
    tolerance: Any = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": jsonable(self.inputs),
            "value": jsonable(self.value),
            "expected": jsonable(self.expected),
            "tolerance": jsonable(self.tolerance),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(", ", ": "))

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL


def jsonable(x):
    """Deterministic JSON-compatible form; exact numbers become strings."""
    if x is None or isinstance(x, (bool, str, int)):
        return x
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, BigLogNumber):
        return x.sci(6)
    if isinstance(x, (GaussianRational, complex)):
        return str(x)
    if isinstance(x, FourVector):
        return [jsonable(c) for c in x]
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _sweep(seed: int, n: int, backend: str) -> dict:
    return {"seed": seed, "cases": n, "backend": backend}


def _maxdev(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex))))


# --- spinors and tetrads -----------------------------------------------------------------


def canonical_dyad() -> Dyad:
    return Dyad(Spinor.exact(1, 0), Spinor.exact(0, 1))


def tetrad_records(seed: int = 0, sweep: int = 1000, backend: str = FLOAT) -> list[Record]:
    exact = backend == EXACT
    out = []
    nt = dyad_to_null_tetrad(canonical_dyad())
    rt = null_to_real_tetrad(nt)
    legs = {"l": nt.l, "n": nt.n, "m": nt.m, "mbar": nt.mbar}
    expected_legs = {"l": (1, 0, 0, 1), "n": (1, 0, 0, -1), "m": (0, 1, -1j, 0), "mbar": (0, 1, 1j, 0)}
    ok = all(complex(a) == b for k, v in expected_legs.items() for a, b in zip(legs[k], v))
    out.append(Record("tetrad.canonical_null", legs, _verdict(ok), {"dyad": "(1,0),(0,1)"}, expected_legs))
    gram = tetrad_metric(rt)
    out.append(Record("tetrad.canonical_gram", gram, _verdict(bool(np.all(gram == ETA))), {"dyad": "(1,0),(0,1)"}, ETA, 0))

    gen = sampling.rng(seed)
    worst, good = 0.0, 0
    for _ in range(sweep):
        k = spinor_to_null(sampling.random_spinor(gen, exact))
        n2 = k.norm2()
        if exact:
            good += n2 == 0
        else:
            dev = abs(n2) / max(1.0, abs(k[0]) ** 2)
            worst = max(worst, dev)
            good += dev < NULL_TOL
    out.append(
        Record(
            "spinor.null_map",
            {"pass": f"{good}/{sweep}", "max_scaled_norm": 0 if exact else worst},
            _verdict(good == sweep),
            _sweep(seed, sweep, backend),
            "k.k = 0",
            0 if exact else NULL_TOL,
        )
    )

    gen = sampling.rng(seed + 1)
    worst, good = 0.0, 0
    for _ in range(sweep):
        a = sampling.random_sl2c(gen, exact)
        u = sampling.random_spinor(gen, exact)
        lam = induced_lorentz(a)
        lhs = lam.dot(spinor_to_null(u).as_array())
        rhs = spinor_to_null(u.transform(a)).as_array()
        if exact:
            good += bool(np.all(lhs == rhs))
        else:
            dev = _maxdev(lhs, rhs) / max(1.0, abs(rhs[0]))
            worst = max(worst, dev)
            good += dev < EQUIVARIANCE_TOL
    out.append(
        Record(
            "spinor.equivariance",
            {"pass": f"{good}/{sweep}", "max_deviation": worst},
            _verdict(good == sweep),
            _sweep(seed + 1, sweep, backend),
            "Lambda(A) k(u) = k(A u)",
            0 if exact else EQUIVARIANCE_TOL,
        )
    )

    n_cover = min(sweep, DOUBLE_COVER_CAP)
    gen = sampling.rng(seed + 2)
    good = 0
    for _ in range(n_cover):
        a = sampling.random_sl2c(gen, exact=True)
        good += bool(np.all(induced_lorentz(a) == induced_lorentz(-a)))
    out.append(
        Record(
            "spinor.double_cover",
            {"pass": f"{good}/{n_cover}"},
            _verdict(good == n_cover),
            _sweep(seed + 2, n_cover, EXACT),
            "Lambda(-A) = Lambda(A)",
            0,
        )
    )

    gen = sampling.rng(seed + 3)
    worst, good, eq_worst, eq_good = 0.0, 0, 0.0, 0
    for _ in range(sweep):
        d = sampling.random_dyad(gen, exact)
        g = tetrad_metric(null_to_real_tetrad(dyad_to_null_tetrad(d)))
        a = sampling.random_sl2c(gen, exact)
        lam = induced_lorentz(a)
        before = dyad_to_null_tetrad(d)
        after = dyad_to_null_tetrad(d.transform(a))
        if exact:
            good += bool(np.all(g == ETA))
            eq_good += all(np.all(lam.dot(x.as_array()) == y.as_array()) for x, y in zip(before.legs(), after.legs()))
        else:
            scale = max(1.0, max(abs(complex(c)) for leg in before.legs() for c in leg) ** 2)
            dev = _maxdev(g, ETA) / scale
            worst = max(worst, dev)
            good += dev < EQUIVARIANCE_TOL
            edev = max(_maxdev(lam.dot(x.as_array()), y.as_array()) for x, y in zip(before.legs(), after.legs())) / scale
            eq_worst = max(eq_worst, edev)
            eq_good += edev < EQUIVARIANCE_TOL
    tol = 0 if exact else EQUIVARIANCE_TOL
    out.append(
        Record(
            "tetrad.orthonormality",
            {"pass": f"{good}/{sweep}", "max_deviation": worst},
            _verdict(good == sweep),
            _sweep(seed + 3, sweep, backend),
            "gram = diag(1,-1,-1,-1)",
            tol,
        )
    )
    out.append(
        Record(
            "tetrad.equivariance",
            {"pass": f"{eq_good}/{sweep}", "max_deviation": eq_worst},
            _verdict(eq_good == sweep),
            _sweep(seed + 3, sweep, backend),
            "tetrad(A d) = Lambda(A) tetrad(d)",
            tol,
        )
    )
    return out


# --- Fock space and Lie closure ----------------------------------------------------------


def sl2_generators() -> list[fock.QuadraticOperator]:
    """``a1+ a2``, ``a2+ a1``, ``a1+ a1 - a2+ a2``."""
    q = fock.QuadraticOperator
    return [q.hop(1, 2), q.hop(2, 1), q.hop(1, 1) - q.hop(2, 2)]


def null_spatial_generators() -> list[fock.QuadraticOperator]:
    """Spatial components of the quantised null legs ``l = t + z`` and ``n = t - z``."""
    ops = fock.quantize_tetrad()
    ls = [ops[f"t{mu}"] + ops[f"z{mu}"] for mu in (1, 2, 3)]
    ns = [ops[f"t{mu}"] - ops[f"z{mu}"] for mu in (1, 2, 3)]
    return ls + ns


def _structure_entries(sc: lie.StructureConstants) -> list:
    """Nonzero ``c[i][j][k]`` with ``i < j`` as ``[i, j, k, value]``."""
    out = []
    for i in range(sc.dim):
        for j in range(i + 1, sc.dim):
            for k, v in enumerate(sc.c[i][j]):
                if v:
                    out.append([i, j, k, v])
    return out


def _report_value(rep: lie.AlgebraReport) -> dict:
    return {
        "dimension": rep.dimension,
        "center": rep.center_dimension,
        "derived": rep.derived_dimension,
        "killing_signature": list(rep.killing_signature),
        "ideals": [[i.dimension, i.centroid_type, list(i.killing_signature)] for i in rep.ideals],
        "sl2c_pair": rep.is_sl2c_pair,
    }


def lie_records(seed: int = 0, sweep: int = 100, structure: bool = True) -> list[Record]:
    out = []
    cl = lie.lie_closure(sl2_generators())
    out.append(Record("lie.sl2_selftest", cl.dimension, _verdict(cl.dimension == 3), {"generators": "a1+a2, a2+a1, n1-n2"}, 3, 0))

    n_jac = min(sweep, JACOBI_CAP)
    gen = sampling.rng(seed)
    good = 0
    for _ in range(n_jac):
        p, q, r = (sampling.random_quadratic(gen) for _ in range(3))
        c = fock.commutator
        good += (c(p, c(q, r)) + c(q, c(r, p)) + c(r, c(p, q))).is_zero()
    out.append(Record("lie.jacobi", {"pass": f"{good}/{n_jac}"}, _verdict(good == n_jac), _sweep(seed, n_jac, EXACT), 0, 0))

    n_or = min(sweep, ORACLE_CAP)
    gen = sampling.rng(seed + 1)
    cols = fock.interior_columns(ORACLE_NMAX)
    good = 0
    for _ in range(n_or):
        p, q = sampling.random_quadratic(gen), sampling.random_quadratic(gen)
        mp, mq = fock.matrix_representation(p, ORACLE_NMAX), fock.matrix_representation(q, ORACLE_NMAX)
        good += fock.matrix_representation(fock.commutator(p, q), ORACLE_NMAX).equal_on(mp @ mq - mq @ mp, cols)
    out.append(
        Record(
            "lie.matrix_oracle",
            {"pass": f"{good}/{n_or}", "summary": "symbolic = matrix: " + _verdict(good == n_or)},
            _verdict(good == n_or),
            {**_sweep(seed + 1, n_or, EXACT), "n_max": ORACLE_NMAX, "max_occupation": ORACLE_NMAX - 2},
            "[P,Q] symbolic = matrix commutator",
            0,
        )
    )

    ops = fock.quantize_tetrad()
    cl = lie.lie_closure(list(ops.values()))
    rep = lie.identify_algebra(cl.structure, seed)
    value = _report_value(rep)
    value["description"] = rep.describe()
    if structure:
        value["structure_constants"] = _structure_entries(cl.structure)
    ok = cl.dimension == CLAIMED_DIMENSION and rep.is_sl2c_pair
    out.append(
        Record(
            "lie.tetrad_closure",
            value,
            PASS if ok else DISCREPANCY,
            {"generators": 16, "bracket": "commutator", "ordering": "symmetric", "claimed": CLAIMED_DIMENSION},
            {"dimension": CLAIMED_DIMENSION, "ideals": "6 + 6, sl(2,C) + sl(2,C)"},
            0,
        )
    )

    cl_h = lie.lie_closure(list(ops.values()), bracket=lie.hermitian_bracket)
    rep_h = lie.identify_algebra(cl_h.structure, seed)
    out.append(
        Record(
            "lie.tetrad_closure_hermitian",
            {**_report_value(rep_h), "description": rep_h.describe()},
            PASS if cl_h.dimension == CLAIMED_DIMENSION and rep_h.is_sl2c_pair else DISCREPANCY,
            {"generators": 16, "bracket": "i*commutator", "ordering": "symmetric", "claimed": CLAIMED_DIMENSION},
            {"dimension": CLAIMED_DIMENSION},
            0,
        )
    )

    cl_p = lie.lie_closure(null_spatial_generators())
    rep_p = lie.identify_algebra(cl_p.structure, seed)
    out.append(
        Record(
            "lie.null_spatial_probe",
            {**_report_value(rep_p), "description": rep_p.describe()},
            _verdict(rep_p.is_sl2c_pair),
            {"generators": "l_i, n_i for i = 1..3", "bracket": "commutator"},
            {"dimension": CLAIMED_DIMENSION, "sl2c_pair": True},
            0,
        )
    )

    for name, sc, want in (
        ("lie.reference_sl2c_pair", lie.sl2c_pair_structure(), True),
        ("lie.reference_so3", lie.so3_structure(), False),
        ("lie.reference_abelian", lie.abelian_structure(2), False),
    ):
        r = lie.identify_algebra(sc, seed)
        out.append(Record(name, _report_value(r), _verdict(r.is_sl2c_pair == want), {"dimension": sc.dim}, {"sl2c_pair": want}, 0))

    out.extend(number_operator_records(seed, sweep))
    return out


def number_operator_records(seed: int = 0, sweep: int = 100) -> list[Record]:
    out = []
    n_op = fock.number_operator()
    t0 = fock.quantize_tetrad()["t0"]
    ratio = fock.TETRAD_NUMBER_RATIO
    out.append(Record("fock.t0_number", str(t0), _verdict(t0 == n_op * ratio), {"ordering": "symmetric"}, f"{ratio} * N", 0))
    vac = fock.FockState.vacuum(NUMBER_NMAX).expectation(n_op)
    out.append(Record("fock.vacuum_number", vac.real, _verdict(n_op.vacuum_expectation() == 2 and abs(vac - 2) < 1e-12), {}, 2, 0))
    m = fock.matrix_representation(n_op, NUMBER_NMAX)
    herm = m.to_complex()
    ev = np.linalg.eigvalsh((herm + herm.conj().T) / 2)
    diag_exact = all(m.entry(k, k) == sum(occ) + 2 for k, occ in enumerate(m.basis))
    n_states = min(sweep, NUMBER_CAP)
    gen = sampling.rng(seed + 7)
    worst = np.inf
    for _ in range(n_states):
        amps = gen.normal(size=len(m.basis)) + 1j * gen.normal(size=len(m.basis))
        state = fock.FockState(dict(zip(m.basis, amps)), NUMBER_NMAX)
        worst = min(worst, state.expectation(n_op).real)
    ok = len(m.basis) == 70 and diag_exact and abs(ev.min() - 2) < 1e-12 and worst >= 2 - 1e-12
    out.append(
        Record(
            "fock.number_lower_bound",
            {"dimension": len(m.basis), "min_eigenvalue": float(ev.min()), "min_random_expectation": float(worst)},
            _verdict(ok),
            {"n_max": NUMBER_NMAX, **_sweep(seed + 7, n_states, FLOAT)},
            {"dimension": 70, "lower_bound": 2},
            1e-12,
        )
    )
    return out


# --- field identities and multiplicities -------------------------------------------------


def check_records(seed: int = 0, sweep: int = 1000, backend: str = FLOAT, inject_fault: bool = False) -> list[Record]:
    exact = backend == EXACT
    out = []
    res, ratios = fields.kg_convergence(KG_WAVE)
    lo, hi = KG_RATIO_WINDOW
    ok = all(lo <= r <= hi for r in ratios)
    out.append(
        Record(
            "kg.convergence",
            {"residuals": res, "ratios": ratios, "summary": f"KG ratio 4.0+-10%: {_verdict(ok)}"},
            _verdict(ok),
            {"k": KG_WAVE, "h": fields.DEFAULT_SPACINGS, "points": fields.DEFAULT_POINTS},
            4.0,
            [lo, hi],
        )
    )
    kk = FourVector(KG_WAVE).norm2()
    out.append(Record("kg.momentum_space", kk, _verdict(kk == 0), {"k": KG_WAVE}, 0, 0))
    r_axis = fields.kg_residual(fields.PlaneWave(FourVector((1, 0, 0, 1)), fields.DEFAULT_SPACINGS[-1]))
    out.append(Record("kg.axis_aligned", r_axis, INFO, {"k": (1, 0, 0, 1), "h": fields.DEFAULT_SPACINGS[-1]}, "stencil errors cancel"))
    r_mass = fields.kg_residual(fields.PlaneWave(FourVector((1, 0, 0, 0)), fields.DEFAULT_SPACINGS[-1]))
    out.append(Record("kg.massive_limit", r_mass, _verdict(abs(r_mass - 1) < 1e-2), {"k": (1, 0, 0, 0), "h": fields.DEFAULT_SPACINGS[-1]}, 1, 1e-2))

    gen = sampling.rng(seed + 4)
    good = 0
    for _ in range(sweep):
        k = sampling.random_four_vector(gen, exact=True)
        m = sigma_dot(k)
        good += m[0][0] * m[1][1] - m[0][1] * m[1][0] == k.norm2()
    out.append(Record("weyl.det_identity", {"pass": f"{good}/{sweep}"}, _verdict(good == sweep), _sweep(seed + 4, sweep, EXACT), "det(sigma.k) = k.k", 0))

    gen = sampling.rng(seed + 5)
    good = 0
    for _ in range(sweep):
        u = sampling.random_spinor(gen, exact)
        good += fields.weyl_rank_check(u).passed
    out.append(
        Record("weyl.rank", {"pass": f"{good}/{sweep}"}, _verdict(good == sweep), _sweep(seed + 5, sweep, backend), "rank 1, det 0", 0 if exact else NULL_TOL)
    )

    n_mx = min(sweep, MAXWELL_CAP)
    gen = sampling.rng(seed + 6)
    worst, good = 0.0, 0
    for _ in range(n_mx):
        u = sampling.random_spinor(gen)
        c = sampling.random_complex(gen)
        phi = c * np.outer(u.components, u.components)
        rep = fields.maxwell_identity_check(phi, spinor_to_null(u))
        worst = max(worst, rep.cyclic_residual)
        good += rep.passed
    out.append(
        Record(
            "maxwell.cyclic",
            {"pass": f"{good}/{n_mx}", "max_residual": worst},
            _verdict(good == n_mx),
            _sweep(seed + 6, n_mx, FLOAT),
            "k_[l F_mn] = 0",
            fields.MAXWELL_TOL,
        )
    )

    bad = [n for n in range(1, SUM_RULE_MAX + 1) if su2.multiplicity(n).dimension_sum() != 2**n + (1 if inject_fault else 0)]
    out.append(
        Record(
            "su2.sum_rule",
            {"failures": bad, "summary": f"2^{SUM_RULE_MAX} exact: {_verdict(not bad)}"},
            _verdict(not bad),
            {"N": [1, SUM_RULE_MAX]},
            "sum (2j+1) m(j,N) = 2^N",
            0,
        )
    )
    bad = [n for n in range(1, ORACLE_MAX_N + 1) if su2.multiplicity(n) != su2.branching_multiplicity(n)]
    out.append(Record("su2.branching_oracle", {"failures": bad}, _verdict(not bad), {"N": [1, ORACLE_MAX_N]}, "closed form = branching", 0))
    bad = [n for n in range(1, SUM_RULE_MAX + 1) if not su2.multiplicity(n).is_unimodal()]
    out.append(Record("su2.unimodal", {"failures": bad}, _verdict(not bad), {"N": [1, SUM_RULE_MAX]}, "weakly unimodal in j", 0))
    return out


def multiplicity_records(n: int) -> list[Record]:
    table = su2.multiplicity(n)
    oracle = su2.branching_multiplicity(n)
    out = [
        Record(f"su2.m(j={label}, N={n})", m, _verdict(m == oracle[label.j]), {"N": n, "j": label.j, "dim": label.dimension}, oracle[label.j], 0)
        for label, m in table.items()
    ]
    total = table.dimension_sum()
    out.append(Record(f"su2.dimension_sum(N={n})", total, _verdict(total == 2**n), {"N": n}, 2**n, 0))
    out.append(Record(f"su2.peak(N={n})", table.peak().j, INFO, {"N": n}))
    return out


# --- cosmology ---------------------------------------------------------------------------

HEADLINE_EXPONENTS = {
    "nucleon_urs": 40,
    "total_urs": 120,
    "nucleon_count": 80,
    "cutoff_over_R": -60,
    "universe_entropy": 120,
    "holographic_nucleon": 40,
    "holographic_electron": 46,
    "ur_electron": 37,
}
EXPECTED_AGREEMENT = {"nucleon": True, "electron": False, "universe": True}


def cosmic_records(params: cosmic.CosmologyParams | None = None, mode: str = cosmic.OOM) -> list[Record]:
    p = params or cosmic.CosmologyParams()
    defaults = p == cosmic.CosmologyParams()
    inputs = {"mode": mode, "params": p.as_strings()}
    out = []
    if mode == cosmic.OOM:
        for key, value in cosmic.headline_exponents(p).items():
            want = HEADLINE_EXPONENTS.get(key) if defaults else None
            verdict = INFO if want is None else _verdict(value == want)
            out.append(Record(f"cosmic.{key}", value, verdict, inputs, want, None if want is None else 0))
    else:
        n_total = cosmic.total_urs(p.R, p.lambda_nucleon, mode)
        values = {
            "nucleon_urs": cosmic.ur_count_particle(p.R, p.lambda_nucleon, mode),
            "total_urs": n_total,
            "nucleon_count": cosmic.nucleon_count(p, mode),
            "cutoff_over_R": su2.cutoff_length(p.R, n_total) / p.R,
            "universe_entropy": cosmic.bekenstein_mass_entropy(p.M_u, mode),
            "universe_area_entropy": cosmic.bekenstein_area_entropy(cosmic.universe_area(p.R / p.l_o, mode), mode),
            "holographic_nucleon": cosmic.holographic_particle_bits(p.lambda_nucleon, p.l_o, mode),
            "holographic_electron": cosmic.holographic_particle_bits(p.lambda_electron, p.l_o, mode),
            "ur_electron": cosmic.ur_count_particle(p.R, p.lambda_electron, mode),
        }
        for key, value in values.items():
            out.append(Record(f"cosmic.{key}", value, INFO, inputs))
        for name, m in (("nucleon", p.m_nucleon), ("electron", p.m_electron)):
            d = cosmic.particle_entropy_delta(p.M_u, m, mode)
            ok = d.relative_deviation <= m.to_fraction() / (2 * p.M_u.to_fraction())
            out.append(
                Record(
                    f"cosmic.entropy_delta_{name}",
                    {"exact": d.exact, "linearized": d.linearized, "relative_deviation": float(d.relative_deviation)},
                    _verdict(ok),
                    inputs,
                    "relative deviation <= m / (2 M_u)",
                )
            )
    label = cosmic.hilbert_dimension_label(cosmic.total_urs(p.R, p.lambda_nucleon, cosmic.OOM))
    out.append(Record("cosmic.hilbert_dimension", label, INFO if not defaults else _verdict(label == "2^(1e120)"), inputs, "2^(1e120)" if defaults else None))
    for row in cosmic.discrepancy_report(p, mode):
        want = EXPECTED_AGREEMENT[row.name] if defaults else None
        value = {
            "ur_bits": row.ur_bits,
            "holographic_bits": row.holographic_bits,
            "ur_exponent": row.ur_exponent,
            "holographic_exponent": row.holographic_exponent,
            "gap": row.gap,
            "agree": row.agree,
        }
        verdict = INFO if want is None else _verdict(row.agree == want)
        out.append(Record(f"cosmic.discrepancy.{row.name}", value, verdict, inputs, None if want is None else {"agree": want}, cosmic.AGREEMENT_ORDERS))
    return out
