"""Lie closure of operator sets and structural identification of real Lie algebras.

Closure and everything derived from structure constants (Killing form, its
rank and signature, centre, derived algebra) is exact.  The split of a
semisimple algebra into simple ideals uses the centroid (endomorphisms
commuting with every ``ad``) and is done in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import NoConvergence, NotClosed
from .fock import QuadraticOperator, commutator
from .gaussian import I

__all__ = [
    "ExactSpan",
    "StructureConstants",
    "Closure",
    "IdealInfo",
    "AlgebraReport",
    "lie_closure",
    "identify_algebra",
    "killing_signature",
    "sl2c_pair_structure",
    "so3_structure",
    "abelian_structure",
    "hermitian_bracket",
]


# --- exact linear algebra -------------------------------------------------------


class ExactSpan:
    """Incrementally built span of rational vectors.

    Keeps an echelon form whose rows remember their expression in terms of
    the vectors that were accepted, so membership tests also give coordinates.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
        self.count = 0

    def _reduce(self, vec):
        v = [Fraction(x) for x in vec]
        if len(v) != self.length:
            raise ValueError(f"vector length {len(v)} != {self.length}")
        combo = [Fraction(0)] * self.count
        for pivot, row, expr in self._rows:
            c = v[pivot]
            if c:
                for k in range(pivot, self.length):
                    if row[k]:
                        v[k] -= c * row[k]
                for k, e in enumerate(expr):
                    if e:
                        combo[k] += c * e
        return v, combo

    def add(self, vec) -> bool:
        """Append ``vec`` if it is independent; return whether it was added."""
        v, combo = self._reduce(vec)
        pivot = next((k for k, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        row = [x * inv for x in v]
        # row = (vec - sum combo_k b_k) / v[pivot]
        expr = [-c * inv for c in combo] + [inv]
        for _, _, e in self._rows:
            e.append(Fraction(0))
        self._rows.append((pivot, row, expr))
        self.count += 1
        return True

    def coordinates(self, vec) -> list[Fraction] | None:
        """Coefficients of ``vec`` in the accepted vectors, or ``None`` if outside the span."""
        v, combo = self._reduce(vec)
        if any(v):
            return None
        return combo

    def contains(self, vec) -> bool:
        return self.coordinates(vec) is not None


def exact_rank(rows: Sequence[Sequence]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    span = ExactSpan(len(rows[0]))
    for r in rows:
        span.add(r)
    return span.count


def exact_nullspace(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][fcol]
        basis.append(x)
    return basis


def killing_signature(form: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` inertia of a rational symmetric matrix.

    Symmetric Gaussian elimination (congruence), exact.
    """
    a = [[Fraction(x) for x in row] for row in form]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal 2 a_ij + a_jj (+ a_ii = 0);
            # if that vanishes use e_i - e_j instead.
            sign = 1 if 2 * a[i][j] + a[j][j] else -1
            for t in range(n):
                a[i][t] += sign * a[j][t]
            for t in range(n):
                a[t][i] += sign * a[t][j]
            k = i
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / piv
            if f:
                for t in active:
                    a[i][t] -= f * a[k][t]
        for i in range(n):
            a[i][k] = a[k][i] = Fraction(0)
    return pos, neg, n - pos - neg


# --- structure constants -----------------------------------------------------------


@dataclass(frozen=True)
class StructureConstants:
    """``[e_i, e_j] = sum_k c[i][j][k] e_k`` with exact rational ``c``."""

    c: tuple

    @classmethod
    def from_array(cls, arr) -> "StructureConstants":
        return cls(tuple(tuple(tuple(Fraction(x) for x in row) for row in mat) for mat in arr))

    @property
    def dim(self) -> int:
        return len(self.c)

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                cij = self.c[i][j]
                f = x[i] * y[j]
                for k in range(n):
                    if cij[k]:
                        out[k] += f * cij[k]
        return out

    def _scaled(self):
        """Integer array ``D * c`` and the common denominator ``D``."""
        from math import lcm

        den = 1
        for mat in self.c:
            for row in mat:
                for x in row:
                    den = lcm(den, x.denominator)
        ints = [[[int(x * den) for x in row] for row in mat] for mat in self.c]
        big = max((abs(v) for mat in ints for row in mat for v in row), default=0)
        dtype = np.int64 if big * big * max(self.dim, 1) ** 2 < 2**62 else object
        return np.array(ints, dtype=dtype).reshape((self.dim,) * 3), den

    def as_float(self) -> np.ndarray:
        arr, den = self._scaled()
        return arr.astype(float) / den

    def check(self) -> None:
        """Raise ``NotClosed`` unless antisymmetry and the Jacobi identity hold exactly."""
        arr, _ = self._scaled()
        if arr.size and np.any(arr + arr.transpose(1, 0, 2) != 0):
            raise NotClosed("structure constants are not antisymmetric")
        if arr.size:
            # J[i,j,k,m] = c_ij^l c_lk^m + cyclic
            t = np.einsum("ijl,lkm->ijkm", arr, arr)
            jac = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
            if np.any(jac != 0):
                raise NotClosed("Jacobi identity violated")

    def killing_form(self) -> list[list[Fraction]]:
        """``K_ij = tr(ad e_i ad e_j) = sum_kl c_ik^l c_jl^k``."""
        arr, den = self._scaled()
        k = np.einsum("ikl,jlk->ij", arr, arr)
        d2 = den * den
        return [[Fraction(int(x), d2) for x in row] for row in k]

    def center(self) -> list[list[Fraction]]:
        """Basis of ``{x : [x, e_j] = 0 for all j}``."""
        n = self.dim
        rows = [[self.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
        return exact_nullspace(rows)

    def derived_basis(self) -> list[list[Fraction]]:
        n = self.dim
        span = ExactSpan(n)
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                v = self.c[i][j]
                if span.add(v):
                    out.append(list(v))
        return out

    def restrict(self, basis: Sequence[Sequence]) -> "StructureConstants":
        """Structure constants of the subalgebra spanned by ``basis`` (must be closed)."""
        span = ExactSpan(self.dim)
        for b in basis:
            if not span.add(b):
                raise ValueError("restriction basis is linearly dependent")
        m = len(basis)
        c = []
        for i in range(m):
            mat = []
            for j in range(m):
                coords = span.coordinates(self.bracket(basis[i], basis[j]))
                if coords is None:
                    raise NotClosed("subspace is not closed under the bracket")
                mat.append(tuple(coords))
            c.append(tuple(mat))
        return StructureConstants(tuple(c))


# --- closure -----------------------------------------------------------------------


def hermitian_bracket(p: QuadraticOperator, q: QuadraticOperator) -> QuadraticOperator:
    """``i [P, Q]``: keeps Hermitian operators Hermitian."""
    return commutator(p, q) * I


@dataclass
class Closure:
    basis: list[QuadraticOperator]
    structure: StructureConstants
    generator_count: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, op: QuadraticOperator) -> bool:
        span = ExactSpan(len(op.to_real_vector()))
        for b in self.basis:
            span.add(b.to_real_vector())
        return span.contains(op.to_real_vector())


def lie_closure(
    generators: Sequence[QuadraticOperator],
    bracket: Callable[[QuadraticOperator, QuadraticOperator], QuadraticOperator] = commutator,
) -> Closure:
    """Smallest real Lie algebra containing ``generators``.

    Brackets are taken pairwise until the real-linear span stops growing.
    The basis consists of generators and brackets in the order they were
    found, so the result is deterministic for a given input order.

    Raises
    ------
    NoConvergence
        If the span would exceed the real dimension of the quadratic sector.
    """
    if not generators:
        raise ValueError("lie_closure needs at least one generator")
    n_modes = generators[0].n_modes
    bound = QuadraticOperator.real_dimension(n_modes)
    span = ExactSpan(bound)
    basis: list[QuadraticOperator] = []
    for g in generators:
        if span.add(g.to_real_vector()):
            basis.append(g)
    cache: dict[tuple[int, int], list[Fraction]] = {}
    i = 0
    while i < len(basis):
        for j in range(i):
            br = bracket(basis[j], basis[i])
            vec = br.to_real_vector()
            if span.add(vec):
                basis.append(br)
                if len(basis) > bound:
                    raise NoConvergence(f"span exceeded ambient dimension {bound}")
            cache[(j, i)] = vec
        i += 1
    n = len(basis)
    zero = tuple(Fraction(0) for _ in range(n))
    c = [[zero] * n for _ in range(n)]
    for (j, i), vec in cache.items():
        coords = span.coordinates(vec)
        if coords is None:  # pragma: no cover - the loop above guarantees membership
            raise NoConvergence("bracket left the computed span")
        coords = tuple(coords) + (Fraction(0),) * (n - len(coords))
        c[j][i] = coords
        c[i][j] = tuple(-x for x in coords)
    return Closure(basis, StructureConstants(tuple(tuple(r) for r in c)), len(generators))


# --- identification ----------------------------------------------------------------


@dataclass
class IdealInfo:
    dimension: int
    killing_signature: tuple[int, int, int]
    centroid_type: str  # "real" or "complex"


@dataclass
class AlgebraReport:
    dimension: int
    killing_rank: int
    killing_signature: tuple[int, int, int]
    center_dimension: int
    derived_dimension: int
    semisimple: bool
    reductive: bool
    ideals: list[IdealInfo] = field(default_factory=list)
    ideals_commute: bool = True
    is_sl2c_pair: bool = False

    def describe(self) -> str:
        parts = [f"dim {self.dimension}", f"center {self.center_dimension}", f"derived {self.derived_dimension}"]
        p, q, z = self.killing_signature
        parts.append(f"Killing (+{p}, -{q}, 0x{z})")
        if self.ideals:
            parts.append("simple ideals " + " + ".join(f"{i.dimension}[{i.centroid_type}]" for i in self.ideals))
        return ", ".join(parts)


def _simple_ideals(sc: StructureConstants, seed: int = 0, tol: float = 1e-8):
    """Float bases of the simple ideals of a semisimple algebra."""
    n = sc.dim
    if n == 0:
        return []
    ad = np.transpose(sc.as_float(), (0, 2, 1))  # ad[i][k, j] = c_ij^k
    gen = np.random.default_rng(seed)
    eye = np.eye(n)
    blocks = []
    for _ in range(3):
        x = np.tensordot(gen.normal(size=n), ad, axes=1)
        # C x = x C  <=>  (I (x) x - x^T (x) I) vec(C) = 0  (column-major vec)
        blocks.append(np.kron(eye, x) - np.kron(x.T, eye))
    system = np.vstack(blocks)
    _, s, vh = np.linalg.svd(system)
    null = vh[np.sum(s > tol * max(1.0, s[0])):]
    cent = [v.reshape((n, n), order="F") for v in null]
    c = sum(gen.normal() * m for m in cent)
    vals = np.linalg.eigvals(c)
    ideals = []
    used = np.zeros(len(vals), dtype=bool)
    for k, lam in enumerate(vals):
        if used[k]:
            continue
        close = np.abs(vals - lam) < 1e-6 * max(1.0, abs(lam))
        conj = np.abs(vals - np.conj(lam)) < 1e-6 * max(1.0, abs(lam))
        used |= close | conj
        if abs(lam.imag) < 1e-6 * max(1.0, abs(lam)):
            op = c - lam.real * eye
            kind = "real"
        else:
            op = c @ c - 2 * lam.real * c + abs(lam) ** 2 * eye
            kind = "complex"
        _, s2, vh2 = np.linalg.svd(op)
        basis = vh2[np.sum(s2 > 1e-6 * max(1.0, s2[0])):].T
        ideals.append((basis, kind))
    return ideals


def identify_algebra(sc: StructureConstants, seed: int = 0) -> AlgebraReport:
    """Killing form, centre, ideals and an ``sl(2,C) + sl(2,C)`` verdict.

    The verdict is positive iff the algebra is 12-dimensional, semisimple and
    splits into two commuting 6-dimensional simple ideals of complex type with
    Killing signature ``(3, 3)``.

    Raises
    ------
    NotClosed
        If the structure constants are not antisymmetric or violate Jacobi.
    """
    sc.check()
    n = sc.dim
    killing = sc.killing_form()
    sig = killing_signature(killing)
    rank = sig[0] + sig[1]
    center = sc.center()
    derived = sc.derived_basis()
    semisimple = rank == n
    reductive = semisimple
    target = sc if semisimple else None
    if not semisimple and len(center) + len(derived) == n:
        span = ExactSpan(n)
        for v in center + derived:
            span.add(v)
        if span.count == n and derived:
            sub = sc.restrict(derived)
            s = killing_signature(sub.killing_form())
            if s[2] == 0:
                reductive = True
                target = sub
        elif span.count == n:
            reductive = True
    report = AlgebraReport(n, rank, sig, len(center), len(derived), semisimple, reductive)
    if target is None or target.dim == 0:
        return report
    kf = np.array([[float(x) for x in row] for row in target.killing_form()])
    cf = target.as_float()
    found = _simple_ideals(target, seed)
    for basis, kind in found:
        restricted = basis.T @ kf @ basis
        ev = np.linalg.eigvalsh((restricted + restricted.T) / 2)
        scale = max(1.0, np.max(np.abs(ev)))
        p = int(np.sum(ev > 1e-8 * scale))
        q = int(np.sum(ev < -1e-8 * scale))
        report.ideals.append(IdealInfo(basis.shape[1], (p, q, basis.shape[1] - p - q), kind))
    for a in range(len(found)):
        for b in range(a + 1, len(found)):
            ba, bb = found[a][0], found[b][0]
            br = np.einsum("ijk,ia,jb->kab", cf, ba, bb)
            if np.max(np.abs(br), initial=0.0) > 1e-8:
                report.ideals_commute = False
    report.is_sl2c_pair = (
        n == 12
        and semisimple
        and len(report.ideals) == 2
        and report.ideals_commute
        and all(i.dimension == 6 and i.killing_signature == (3, 3, 0) and i.centroid_type == "complex" for i in report.ideals)
    )
    return report


# --- reference algebras ------------------------------------------------------------


def _from_bracket_table(n: int, table: dict[tuple[int, int], dict[int, Fraction]]) -> StructureConstants:
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), out in table.items():
        for k, v in out.items():
            c[i][j][k] += Fraction(v)
            c[j][i][k] -= Fraction(v)
    return StructureConstants.from_array(c)


def sl2c_pair_structure() -> StructureConstants:
    """Real structure constants of ``sl(2,C) + sl(2,C)``.

    Basis per copy: ``H, E, F, iH, iE, iF`` with ``[H,E] = 2E``,
    ``[H,F] = -2F``, ``[E,F] = H``.
    """
    complex_table = {(0, 1): (1, 2), (0, 2): (2, -2), (1, 2): (0, 1)}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for off in (0, 6):
        for (a, b), (k, coef) in complex_table.items():
            # [X, Y] = c Z ; [iX, Y] = [X, iY] = c iZ ; [iX, iY] = -c Z
            table[(off + a, off + b)] = {off + k: coef}
            table[(off + a + 3, off + b)] = {off + k + 3: coef}
            table[(off + a, off + b + 3)] = {off + k + 3: coef}
            table[(off + a + 3, off + b + 3)] = {off + k: -coef}
    return _from_bracket_table(12, table)


def so3_structure() -> StructureConstants:
    """``[e_i, e_j] = eps_ijk e_k``."""
    return _from_bracket_table(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def abelian_structure(n: int) -> StructureConstants:
    return _from_bracket_table(n, {})
