"""Quadratic forms in bosonic ladder operators and their truncated Fock matrices.

A ``QuadraticOperator`` on ``n`` modes is::

    c + sum_rs alpha[r][s] a+_r a_s + sum_rs beta[r][s] a+_r a+_s + sum_rs gamma[r][s] a_r a_s

with ``beta`` and ``gamma`` symmetric.  Every coefficient is a
``GaussianRational`` so brackets are exact.  Mode indices in the public
helpers are 1-based (modes 1, 2 carry ``u``; modes 3, 4 carry ``v``).

The commutator uses ``[a_r, a+_s] = delta_rs`` in closed form::

    [a+ A a, a+ A' a] = a+ [A, A'] a
    [a+ A a, a+ B a+] = a+ (A B + B A^T) a+
    [a+ A a, a G a]   = -a (A^T G + G A) a
    [a G a, a+ B a+]  = 4 a+ B G a + 2 tr(B G)

``matrix_representation`` is the independent oracle: it works on occupation
vectors directly and never uses these formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from .gaussian import GaussianRational, I, as_exact

__all__ = [
    "N_MODES",
    "QuadraticOperator",
    "FockState",
    "FockMatrix",
    "TETRAD_LEGS",
    "TETRAD_NUMBER_RATIO",
    "commutator",
    "number_operator",
    "quantize_tetrad",
    "fock_basis",
    "matrix_representation",
    "interior_columns",
]

N_MODES = 4
ZERO = GaussianRational(0)
HALF = Fraction(1, 2)

Matrix = tuple  # n x n nested tuple of GaussianRational


def _zeros(n: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(n)) for _ in range(n))


def _coerce_matrix(m, n: int) -> Matrix:
    if m is None:
        return _zeros(n)
    rows = tuple(tuple(as_exact(x) for x in row) for row in m)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"coefficient matrix must be {n}x{n}")
    return rows


def _symmetrize(m: Matrix) -> Matrix:
    n = len(m)
    return tuple(tuple((m[r][s] + m[s][r]) * HALF for s in range(n)) for r in range(n))


def _mm(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for r in range(n):
        row = []
        for s in range(n):
            acc = ZERO
            for k in range(n):
                if a[r][k] and b[k][s]:
                    acc = acc + a[r][k] * b[k][s]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _add(*ms: Matrix) -> Matrix:
    n = len(ms[0])
    return tuple(tuple(sum((m[r][s] for m in ms), ZERO) for s in range(n)) for r in range(n))


def _sub(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(a[r][s] - b[r][s] for s in range(n)) for r in range(n))


def _scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def _t(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _conj(a: Matrix) -> Matrix:
    return tuple(tuple(x.conjugate() for x in row) for row in a)


def _trace(a: Matrix):
    return sum((a[k][k] for k in range(len(a))), ZERO)


@dataclass(frozen=True)
class QuadraticOperator:
    """Exact normal-ordered quadratic form in ``n_modes`` bosonic modes."""

    scalar: GaussianRational = ZERO
    alpha: Matrix = None
    beta: Matrix = None
    gamma: Matrix = None
    n_modes: int = N_MODES

    def __post_init__(self):
        n = self.n_modes
        object.__setattr__(self, "scalar", as_exact(self.scalar))
        object.__setattr__(self, "alpha", _coerce_matrix(self.alpha, n))
        object.__setattr__(self, "beta", _symmetrize(_coerce_matrix(self.beta, n)))
        object.__setattr__(self, "gamma", _symmetrize(_coerce_matrix(self.gamma, n)))

    # -- elementary operators (1-based modes) ------------------------------
    @classmethod
    def constant(cls, c, n_modes: int = N_MODES) -> "QuadraticOperator":
        return cls(scalar=c, n_modes=n_modes)

    @classmethod
    def hop(cls, r: int, s: int, coeff=1, n_modes: int = N_MODES) -> "QuadraticOperator":
        """``coeff * a+_r a_s``."""
        return cls(alpha=_unit(r, s, coeff, n_modes), n_modes=n_modes)

    @classmethod
    def create_pair(cls, r: int, s: int, coeff=1, n_modes: int = N_MODES) -> "QuadraticOperator":
        """``coeff * a+_r a+_s``."""
        return cls(beta=_unit(r, s, coeff, n_modes), n_modes=n_modes)

    @classmethod
    def annihilate_pair(cls, r: int, s: int, coeff=1, n_modes: int = N_MODES) -> "QuadraticOperator":
        """``coeff * a_r a_s``."""
        return cls(gamma=_unit(r, s, coeff, n_modes), n_modes=n_modes)

    # -- linear structure ---------------------------------------------------
    def __add__(self, other: "QuadraticOperator") -> "QuadraticOperator":
        self._check(other)
        return QuadraticOperator(
            self.scalar + other.scalar,
            _add(self.alpha, other.alpha),
            _add(self.beta, other.beta),
            _add(self.gamma, other.gamma),
            self.n_modes,
        )

    def __neg__(self) -> "QuadraticOperator":
        return self * -1

    def __sub__(self, other: "QuadraticOperator") -> "QuadraticOperator":
        return self + (-other)

    def __mul__(self, c) -> "QuadraticOperator":
        if isinstance(c, QuadraticOperator):
            return NotImplemented
        c = as_exact(c)
        return QuadraticOperator(
            self.scalar * c, _scale(self.alpha, c), _scale(self.beta, c), _scale(self.gamma, c), self.n_modes
        )

    __rmul__ = __mul__

    def __truediv__(self, c) -> "QuadraticOperator":
        return self * (1 / as_exact(c))

    def _check(self, other):
        if not isinstance(other, QuadraticOperator) or other.n_modes != self.n_modes:
            raise TypeError("operands must be QuadraticOperators on the same modes")

    def is_zero(self) -> bool:
        return not any(self.to_real_vector())

    # -- adjoint ------------------------------------------------------------
    def adjoint(self) -> "QuadraticOperator":
        return QuadraticOperator(
            self.scalar.conjugate(), _t(_conj(self.alpha)), _conj(self.gamma), _conj(self.beta), self.n_modes
        )

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def vacuum_expectation(self) -> GaussianRational:
        return self.scalar

    # -- real coordinates -----------------------------------------------------
    def to_real_vector(self) -> tuple[Fraction, ...]:
        """Real coordinates: scalar, alpha (all entries), beta and gamma (upper triangles)."""
        n = self.n_modes
        out = [self.scalar.re, self.scalar.im]
        for r, s in product(range(n), repeat=2):
            z = self.alpha[r][s]
            out += [z.re, z.im]
        for m in (self.beta, self.gamma):
            for r in range(n):
                for s in range(r, n):
                    z = m[r][s]
                    out += [z.re, z.im]
        return tuple(out)

    @classmethod
    def from_real_vector(cls, vec: Iterable, n_modes: int = N_MODES) -> "QuadraticOperator":
        it = iter(Fraction(x) for x in vec)

        def nxt():
            return GaussianRational(next(it), next(it))

        n = n_modes
        scalar = nxt()
        alpha = [[ZERO] * n for _ in range(n)]
        for r, s in product(range(n), repeat=2):
            alpha[r][s] = nxt()
        sym = []
        for _ in range(2):
            m = [[ZERO] * n for _ in range(n)]
            for r in range(n):
                for s in range(r, n):
                    m[r][s] = m[s][r] = nxt()
            sym.append(m)
        return cls(scalar, alpha, sym[0], sym[1], n)

    @staticmethod
    def real_dimension(n_modes: int = N_MODES) -> int:
        return 2 * (1 + n_modes * n_modes + n_modes * (n_modes + 1))

    def __str__(self) -> str:
        terms = []
        if self.scalar:
            terms.append(f"({self.scalar})")
        n = self.n_modes
        for r, s in product(range(n), repeat=2):
            if self.alpha[r][s]:
                terms.append(f"({self.alpha[r][s]}) a+{r + 1} a{s + 1}")
        for label, m in (("a+{} a+{}", self.beta), ("a{} a{}", self.gamma)):
            for r in range(n):
                for s in range(r, n):
                    c = m[r][s] if r == s else m[r][s] * 2
                    if c:
                        terms.append(f"({c}) " + label.format(r + 1, s + 1))
        return " + ".join(terms) or "0"


def _unit(r: int, s: int, coeff, n: int) -> Matrix:
    if not (1 <= r <= n and 1 <= s <= n):
        raise ValueError(f"mode indices must lie in 1..{n}")
    m = [[ZERO] * n for _ in range(n)]
    m[r - 1][s - 1] = as_exact(coeff)
    return tuple(tuple(row) for row in m)


def commutator(p: QuadraticOperator, q: QuadraticOperator) -> QuadraticOperator:
    """Exact ``[P, Q]``, again a normal-ordered quadratic form."""
    p._check(q)
    ap, bp, gp = p.alpha, p.beta, p.gamma
    aq, bq, gq = q.alpha, q.beta, q.gamma
    alpha = _add(_sub(_mm(ap, aq), _mm(aq, ap)), _scale(_sub(_mm(bq, gp), _mm(bp, gq)), 4))
    beta = _sub(_add(_mm(ap, bq), _mm(bq, _t(ap))), _add(_mm(aq, bp), _mm(bp, _t(aq))))
    gamma = _sub(_add(_mm(_t(aq), gp), _mm(gp, aq)), _add(_mm(_t(ap), gq), _mm(gq, ap)))
    scalar = (_trace(_mm(bq, gp)) - _trace(_mm(bp, gq))) * 2
    return QuadraticOperator(scalar, alpha, beta, gamma, p.n_modes)


def number_operator(n_modes: int = N_MODES) -> QuadraticOperator:
    """``(1/2) sum_r {a+_r, a_r} = sum_r a+_r a_r + n_modes / 2``."""
    alpha = [[ZERO] * n_modes for _ in range(n_modes)]
    for r in range(n_modes):
        alpha[r][r] = GaussianRational(1)
    return QuadraticOperator(Fraction(n_modes, 2), alpha, n_modes=n_modes)


# --- quantised tetrad ----------------------------------------------------------

_PAULI = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, -I), (I, 0)),
    ((1, 0), (0, -1)),
)

TETRAD_LEGS = ("t", "x", "y", "z")
TETRAD_NUMBER_RATIO = Fraction(1, 2)


def _quantized_contraction(left: tuple[int, int], right: tuple[int, int], mu: int) -> QuadraticOperator:
    """``conj(w^a) sigma^mu_ab w'^b`` with ``conj(w^a) -> a+``, ``w'^b -> a``, symmetrically ordered.

    ``conj(w^a) w'^b`` becomes ``(a+_i a_j + a_j a+_i) / 2 = a+_i a_j + delta_ij / 2``.
    """
    op = QuadraticOperator()
    for a, b in product(range(2), repeat=2):
        c = as_exact(_PAULI[mu][a][b])
        if not c:
            continue
        i, j = left[a], right[b]
        op = op + QuadraticOperator.hop(i, j, c)
        if i == j:
            op = op + QuadraticOperator.constant(c * HALF)
    return op


def quantize_tetrad() -> dict[str, QuadraticOperator]:
    """The sixteen operators ``theta^alpha_mu``, keyed ``"t0" .. "z3"``.

    The classical legs are transcribed with ``u -> (a_1, a_2)``,
    ``v -> (a_3, a_4)`` and symmetric (anticommutator) ordering of each
    ``conj(spinor) * spinor`` product, so ``t0`` equals
    ``TETRAD_NUMBER_RATIO * number_operator()`` exactly.
    """
    u, v = (1, 2), (3, 4)
    out = {}
    for mu in range(4):
        l = _quantized_contraction(u, u, mu)
        n = _quantized_contraction(v, v, mu)
        m = _quantized_contraction(u, v, mu)
        mbar = _quantized_contraction(v, u, mu)
        out[f"t{mu}"] = (l + n) * HALF
        out[f"x{mu}"] = (m + mbar) * HALF
        out[f"y{mu}"] = (m - mbar) * (I * HALF)
        out[f"z{mu}"] = (l - n) * HALF
    return {f"{leg}{mu}": out[f"{leg}{mu}"] for leg in TETRAD_LEGS for mu in range(4)}


# --- occupation-number representation ------------------------------------------


def fock_basis(n_max: int, n_modes: int = N_MODES) -> list[tuple[int, ...]]:
    """Occupation tuples with total occupation ``<= n_max``, ordered by total then descending lexicographic."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    states = [s for s in product(range(n_max + 1), repeat=n_modes) if sum(s) <= n_max]
    return sorted(states, key=lambda s: (sum(s), tuple(-x for x in s)))


@dataclass
class FockState:
    """Truncated Fock state in the orthonormal occupation basis (float amplitudes)."""

    amplitudes: Mapping[tuple[int, ...], complex] = field(default_factory=dict)
    n_max: int = 4
    n_modes: int = N_MODES

    def __post_init__(self):
        amps = {}
        for occ, a in dict(self.amplitudes).items():
            occ = tuple(int(x) for x in occ)
            if len(occ) != self.n_modes or min(occ) < 0:
                raise ValueError(f"bad occupation tuple {occ}")
            if sum(occ) > self.n_max:
                raise ValueError(f"{occ} exceeds truncation n_max={self.n_max}")
            if a:
                amps[occ] = complex(a)
        self.amplitudes = amps

    @classmethod
    def basis_state(cls, occ, n_max: int = 4) -> "FockState":
        return cls({tuple(occ): 1.0}, n_max, len(occ))

    @classmethod
    def vacuum(cls, n_max: int = 4, n_modes: int = N_MODES) -> "FockState":
        return cls({(0,) * n_modes: 1.0}, n_max, n_modes)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def inner(self, other: "FockState") -> complex:
        return sum(a.conjugate() * other.amplitudes.get(k, 0) for k, a in self.amplitudes.items())

    def apply(self, op: QuadraticOperator) -> "FockState":
        """``op |self>``; components pushed above ``n_max`` are dropped."""
        terms = _terms(op, complex)
        out: dict[tuple[int, ...], complex] = {}
        for occ, amp in self.amplitudes.items():
            for new, c, f in _act(terms, occ, normalized=True):
                if sum(new) <= self.n_max:
                    out[new] = out.get(new, 0) + amp * c * f
        return FockState(out, self.n_max, self.n_modes)

    def expectation(self, op: QuadraticOperator) -> complex:
        return self.inner(self.apply(op)) / self.inner(self)


def _terms(op: QuadraticOperator, convert):
    """Nonzero terms as ``(kind, r, s, convert(coefficient))``; kind is 'c', 'hop', 'cc' or 'aa'."""
    out = []
    if op.scalar:
        out.append(("c", 0, 0, convert(op.scalar)))
    for kind, m in (("hop", op.alpha), ("cc", op.beta), ("aa", op.gamma)):
        for r, s in product(range(op.n_modes), repeat=2):
            if m[r][s]:
                out.append((kind, r, s, convert(m[r][s])))
    return out


def _act(terms, occ: tuple[int, ...], normalized: bool):
    """Yield ``(new_occupation, coefficient, ladder_factor)`` for each term on one basis state.

    ``normalized=False`` uses the unnormalised basis ``|n) = prod (a+_r)^n_r |0>``,
    where ``a+|n) = |n+1)`` and ``a|n) = n |n-1)`` so all factors are integers.
    """

    def lower(state, r):
        k = state[r]
        if k == 0:
            return None, 0
        s = list(state)
        s[r] -= 1
        return tuple(s), (math.sqrt(k) if normalized else k)

    def raise_(state, r):
        s = list(state)
        s[r] += 1
        return tuple(s), (math.sqrt(s[r]) if normalized else 1)

    for kind, r, s, c in terms:
        if kind == "c":
            yield occ, c, 1
        elif kind == "hop":
            st, f1 = lower(occ, s)
            if st is not None:
                st, f2 = raise_(st, r)
                yield st, c, f1 * f2
        elif kind == "cc":
            st, f1 = raise_(occ, s)
            st, f2 = raise_(st, r)
            yield st, c, f1 * f2
        else:
            st, f1 = lower(occ, s)
            if st is not None:
                st, f2 = lower(st, r)
                if st is not None:
                    yield st, c, f1 * f2


@dataclass(frozen=True)
class FockMatrix:
    """Exact Gaussian-rational matrix ``(re + i im) / denominator`` with integer arrays."""

    re: np.ndarray
    im: np.ndarray
    denominator: int
    basis: tuple

    def _safe(self, other: "FockMatrix"):
        bound = max(_maxabs(self.re), _maxabs(self.im)) * max(_maxabs(other.re), _maxabs(other.im))
        bound *= 2 * self.re.shape[1]
        if bound < 2**62:
            return self.re, self.im, other.re, other.im
        return tuple(x.astype(object) for x in (self.re, self.im, other.re, other.im))

    def __matmul__(self, other: "FockMatrix") -> "FockMatrix":
        ar, ai, br, bi = self._safe(other)
        return FockMatrix(ar @ br - ai @ bi, ar @ bi + ai @ br, self.denominator * other.denominator, self.basis)

    def __sub__(self, other: "FockMatrix") -> "FockMatrix":
        d = math.lcm(self.denominator, other.denominator)
        fs, fo = d // self.denominator, d // other.denominator
        return FockMatrix(self.re * fs - other.re * fo, self.im * fs - other.im * fo, d, self.basis)

    def entry(self, row: int, col: int) -> GaussianRational:
        return GaussianRational(Fraction(int(self.re[row, col]), self.denominator), Fraction(int(self.im[row, col]), self.denominator))

    def equal_on(self, other: "FockMatrix", columns) -> bool:
        cols = list(columns)
        lhs_r = self.re[:, cols].astype(object) * other.denominator
        lhs_i = self.im[:, cols].astype(object) * other.denominator
        rhs_r = other.re[:, cols].astype(object) * self.denominator
        rhs_i = other.im[:, cols].astype(object) * self.denominator
        return bool(np.all(lhs_r == rhs_r) and np.all(lhs_i == rhs_i))

    def to_complex(self, normalized: bool = True) -> np.ndarray:
        """Float matrix; ``normalized=True`` converts to the orthonormal occupation basis."""
        m = (self.re.astype(float) + 1j * self.im.astype(float)) / self.denominator
        if normalized:
            w = np.array([math.sqrt(math.prod(math.factorial(k) for k in occ)) for occ in self.basis])
            m = m * w[:, None] / w[None, :]
        return m


def _maxabs(a: np.ndarray) -> int:
    return int(np.max(np.abs(a))) if a.size else 0


def matrix_representation(op: QuadraticOperator, n_max: int) -> FockMatrix:
    """Exact matrix of ``op`` on occupations ``<= n_max`` in the unnormalised basis.

    The unnormalised basis ``|n) = prod (a+_r)^n_r |0>`` is related to the
    orthonormal one by a diagonal similarity, so commutators carry over
    unchanged while every entry stays a Gaussian rational.
    """
    basis = fock_basis(n_max, op.n_modes)
    index = {s: k for k, s in enumerate(basis)}
    coeffs = [op.scalar] + [x for m in (op.alpha, op.beta, op.gamma) for row in m for x in row]
    den = reduce(math.lcm, (c.re.denominator for c in coeffs), 1)
    den = reduce(math.lcm, (c.im.denominator for c in coeffs), den)
    terms = _terms(op, lambda z: (int(z.re * den), int(z.im * den)))
    dim = len(basis)
    re = np.zeros((dim, dim), dtype=np.int64)
    im = np.zeros((dim, dim), dtype=np.int64)
    for col, occ in enumerate(basis):
        for new, (cr, ci), f in _act(terms, occ, normalized=False):
            row = index.get(new)
            if row is None:
                continue
            re[row, col] += cr * f
            im[row, col] += ci * f
    return FockMatrix(re, im, den, tuple(basis))


def interior_columns(n_max: int, margin: int = 2, n_modes: int = N_MODES) -> list[int]:
    """Basis indices whose total occupation is ``<= n_max - margin``.

    A product of two quadratic operators only leaves the truncated space in
    intermediate states two quanta above the starting state, so matrix
    commutators are exact on these columns.
    """
    return [k for k, s in enumerate(fock_basis(n_max, n_modes)) if sum(s) <= n_max - margin]
