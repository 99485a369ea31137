"""Numerical Belyi models ``beta = P / (r (z - c))`` of 2^1-maps.

``P = prod (z - x_i)^{k_i}`` over white vertices and
``Q = prod (z - y_j)^{l_j}`` over black vertices satisfy
``P - r (z - c) = Q``, so ``beta`` is 0 at white and 1 at black vertices.
The canonical model additionally has white (degree > 1) coordinates summing
to 0 and black (degree > 1) coordinates summing to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegeneratePassport, NoSolutionsFound, PoleEvaluation, SingularNormalization
from .passport import Passport

SEPARATION = 1e-6
MAX_NEWTON = 200
STEP_TOL = 1e-12


def poly_from_roots(roots: Sequence[tuple[complex, int]]) -> np.ndarray:
    """Monic ``prod (z - root)^mult``, coefficients highest degree first."""
    coeffs = np.array([1.0 + 0j])
    for z, k in roots:
        for _ in range(k):
            coeffs = np.append(coeffs, 0) - z * np.concatenate(([0], coeffs))
    return coeffs


def _pad(coeffs: np.ndarray, length: int) -> np.ndarray:
    return np.concatenate((np.zeros(length - len(coeffs), dtype=complex), coeffs))


@dataclass(frozen=True)
class BelyiModel:
    white: tuple[tuple[complex, int], ...]
    black: tuple[tuple[complex, int], ...]
    c: complex
    r: complex

    def __post_init__(self):
        sw = sum(k for _, k in self.white)
        sb = sum(k for _, k in self.black)
        if sw != sb:
            raise ValueError(f"white degree sum {sw} != black degree sum {sb}")
        if self.r == 0:
            raise ValueError("scale r must be nonzero")

    @property
    def edges(self) -> int:
        return sum(k for _, k in self.white)

    @property
    def passport(self) -> Passport:
        return Passport.from_degrees([k for _, k in self.white], [k for _, k in self.black])

    def numerator(self) -> np.ndarray:
        return poly_from_roots(self.white)

    def black_polynomial(self) -> np.ndarray:
        return poly_from_roots(self.black)

    def coordinates(self) -> list[complex]:
        return [z for z, _ in self.white] + [z for z, _ in self.black]

    def to_text(self) -> str:
        def num(x: float) -> str:
            # round-off residue at exact zeros would make the text unstable
            return f"{(0.0 if abs(x) < 1e-13 else x) + 0.0:.12g}"

        def pt(z: complex) -> str:
            return f"({num(z.real)},{num(z.imag)})"

        return "\n".join([
            "white: " + " ".join(f"{pt(z)}^{k}" for z, k in self.white),
            "black: " + " ".join(f"{pt(z)}^{k}" for z, k in self.black),
            f"c: {pt(self.c)}",
            f"r: {pt(self.r)}",
            f"residual: {residual(self):.3e}",
        ])


def residual(m: BelyiModel) -> float:
    """Largest coefficient of ``P - r (z - c) - Q``."""
    e = m.edges
    diff = m.numerator() - _pad(np.array([m.r, -m.r * m.c]), e + 1) - m.black_polynomial()
    return float(np.max(np.abs(diff)))


def derivative_identity_residual(m: BelyiModel) -> float:
    """Largest coefficient of ``P' (z - c) - P - (E - 1) prod (z - x)^(k-1) prod (z - y)^(l-1)``."""
    e = m.edges
    p = m.numerator()
    lhs = np.polymul(np.polyder(p), np.array([1, -m.c])) - p
    rhs = (e - 1) * poly_from_roots([(z, k - 1) for z, k in m.white + m.black])
    return float(np.max(np.abs(_pad(lhs, e + 1) - _pad(rhs, e + 1))))


def evaluate(m: BelyiModel, z: complex) -> complex:
    if abs(z - m.c) <= 1e-14 * max(1.0, abs(m.c)):
        raise PoleEvaluation(f"{z} is the pole")
    return complex(np.polyval(m.numerator(), z) / (m.r * (z - m.c)))


def affine(m: BelyiModel, a: complex, b: complex) -> BelyiModel:
    """Image of ``m`` under ``z -> a z + b``; ``beta`` values at vertices are kept."""
    if a == 0:
        raise SingularNormalization("affine factor is zero")
    return BelyiModel(
        tuple((a * z + b, k) for z, k in m.white),
        tuple((a * z + b, k) for z, k in m.black),
        a * m.c + b,
        m.r * a ** (m.edges - 1),
    )


def to_canonical(m: BelyiModel, tol: float = 1e-12) -> BelyiModel:
    """Affine change making the white (degree > 1) coordinates sum to 0 and
    the black (degree > 1) coordinates sum to 1."""
    big_w = [z for z, k in m.white if k > 1]
    big_b = [z for z, k in m.black if k > 1]
    k, l = len(big_w), len(big_b)
    if not k or not l:
        raise SingularNormalization("no vertex of degree > 1 on one side")
    x_sum, y_sum = sum(big_w), sum(big_b)
    det = x_sum * l - y_sum * k
    scale = max(1.0, *(abs(z) for z in m.coordinates()))
    if abs(det) <= tol * scale * (k + l):
        raise SingularNormalization("normalization determinant vanishes")
    return affine(m, -k / det, x_sum / det)


def to_normalized(m: BelyiModel, white_index: int | None = None, black_index: int | None = None) -> BelyiModel:
    """Affine change putting a white vertex of degree > 1 at 0 and a black
    one at 1 (by default those of largest degree)."""
    if white_index is None:
        white_index = max(range(len(m.white)), key=lambda i: (m.white[i][1], -i))
    if black_index is None:
        black_index = max(range(len(m.black)), key=lambda i: (m.black[i][1], -i))
    x = m.white[white_index][0]
    y = m.black[black_index][0]
    if abs(y - x) < SEPARATION:
        raise SingularNormalization("anchor vertices coincide")
    return affine(m, 1 / (y - x), -x / (y - x))


def _check_solvable(p: Passport) -> None:
    if max(p.white)[0] < 2 or max(p.black)[0] < 2:
        raise DegeneratePassport("need a vertex of degree > 1 of each colour")
    if p.white_count + p.black_count != p.edges:
        raise DegeneratePassport("vertex count must equal edge count for a 2^1-map")


class _System:
    """The square polynomial system in the vertex coordinates, batched over starts."""

    def __init__(self, p: Passport):
        self.white = p.degrees("white")
        self.black = p.degrees("black")
        self.degrees = np.array(self.white + self.black)
        self.sign = np.array([1] * len(self.white) + [-1] * len(self.black))
        self.nw = len(self.white)
        self.size = len(self.degrees)
        self.e = p.edges
        self.big_w = np.array([k > 1 for k in self.white] + [False] * len(self.black))
        self.big_b = np.array([False] * len(self.white) + [k > 1 for k in self.black])

    def _prod_range(self, u, idx, skip):
        n = u.shape[0]
        coeffs = np.ones((n, 1), dtype=complex)
        for i in idx:
            for _ in range(self.degrees[i] - (1 if i == skip else 0)):
                nxt = np.zeros((n, coeffs.shape[1] + 1), dtype=complex)
                nxt[:, :-1] = coeffs
                nxt[:, 1:] -= u[:, i:i + 1] * coeffs
                coeffs = nxt
        return coeffs

    def p_and_q(self, u):
        return (self._prod_range(u, range(self.nw), None),
                self._prod_range(u, range(self.nw, self.size), None))

    def residuals(self, u: np.ndarray) -> np.ndarray:
        p, q = self.p_and_q(u)
        diff = p - q
        eqs = diff[:, 1:self.e - 1]  # z^{E-1} .. z^2
        sw = (u * self.big_w).sum(axis=1)
        sb = (u * self.big_b).sum(axis=1) - 1
        return np.concatenate([eqs, sw[:, None], sb[:, None]], axis=1)

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        n = u.shape[0]
        jac = np.zeros((n, self.size, self.size), dtype=complex)
        for i in range(self.size):
            rng = range(self.nw) if i < self.nw else range(self.nw, self.size)
            part = self._prod_range(u, rng, i)  # degree E - 1
            # d/du_i of (P - Q): -d_i * P/(z - u_i) for white, +d_j * Q/(z - u_j) for black
            col = -self.sign[i] * self.degrees[i] * part
            jac[:, : self.e - 2, i] = col[:, : self.e - 2]
        jac[:, self.e - 2, :] = self.big_w
        jac[:, self.e - 1, :] = self.big_b
        return jac


def _solve_batch(jac: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(jac, rhs[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(rhs)
        for i in range(rhs.shape[0]):
            out[i] = np.linalg.lstsq(jac[i], rhs[i], rcond=None)[0]
        return out


def newton(system: _System, u0: np.ndarray, max_iter: int = MAX_NEWTON, step_tol: float = STEP_TOL):
    """Damped Newton from every row of ``u0``; returns ``(u, converged)``."""
    u = u0.copy()
    n = u.shape[0]
    done = np.zeros(n, dtype=bool)
    alive = np.ones(n, dtype=bool)
    with np.errstate(all="ignore"):
        for _ in range(max_iter):
            act = np.flatnonzero(alive & ~done)
            if not act.size:
                break
            ua = u[act]
            f = system.residuals(ua)
            fnorm = np.linalg.norm(f, axis=1)
            step = _solve_batch(system.jacobian(ua), f)
            lam = np.ones(act.size)
            trial = ua - step
            tnorm = np.linalg.norm(system.residuals(trial), axis=1)
            for _ in range(30):
                worse = ~(tnorm <= fnorm) & (fnorm > 0)
                if not worse.any():
                    break
                lam[worse] *= 0.5
                trial[worse] = ua[worse] - lam[worse, None] * step[worse]
                tnorm[worse] = np.linalg.norm(system.residuals(trial[worse]), axis=1)
            u[act] = trial
            snorm = lam * np.linalg.norm(step, axis=1)
            done[act] = snorm < step_tol * np.maximum(1.0, np.linalg.norm(trial, axis=1))
            alive[act] = np.isfinite(trial).all(axis=1) & (np.abs(trial) < 1e8).all(axis=1)
    f = system.residuals(u)
    with np.errstate(all="ignore"):
        small = np.linalg.norm(f, axis=1) < 1e-9
    return u, alive & (done | small)


def _separated(zs: Sequence[complex]) -> bool:
    return all(abs(zs[i] - zs[j]) >= SEPARATION for i in range(len(zs)) for j in range(i))


def model_distance(m1: BelyiModel, m2: BelyiModel) -> float:
    """Greedy matched distance between vertex sets of equal passport."""
    worst = abs(m1.c - m2.c)
    for attr in ("white", "black"):
        groups1: dict[int, list[complex]] = {}
        groups2: dict[int, list[complex]] = {}
        for z, k in getattr(m1, attr):
            groups1.setdefault(k, []).append(z)
        for z, k in getattr(m2, attr):
            groups2.setdefault(k, []).append(z)
        if sorted(groups1) != sorted(groups2):
            return float("inf")
        for k, zs in groups1.items():
            pool = list(groups2[k])
            if len(pool) != len(zs):
                return float("inf")
            for z in zs:
                j = min(range(len(pool)), key=lambda i: abs(pool[i] - z))
                worst = max(worst, abs(pool.pop(j) - z))
    return worst


def _sorted_side(zs: Sequence[complex], degs: Sequence[int]) -> tuple[tuple[complex, int], ...]:
    pairs = sorted(zip(degs, zs), key=lambda kz: (-kz[0], round(kz[1].real, 9), round(kz[1].imag, 9)))
    return tuple((complex(z), int(k)) for k, z in pairs)


def canonical_key(m: BelyiModel):
    return tuple((round(z.real, 6), round(z.imag, 6)) for z in m.coordinates() + [m.c])


def solve_canonical(p: Passport, starts: int = 200, tol: float = 1e-9, seed: int = 0,
                    scale: float = 1.0) -> list[BelyiModel]:
    """Canonical models for ``p`` by damped Newton from seeded random starts.

    Spurious solutions (merged vertices, vanishing ``r``, pole on a vertex,
    residual above ``tol``) are discarded and the rest deduplicated.
    """
    _check_solvable(p)
    if starts < 1:
        raise ValueError("starts must be positive")
    system = _System(p)
    rng = np.random.default_rng(seed)
    u0 = scale * (rng.standard_normal((starts, system.size)) + 1j * rng.standard_normal((starts, system.size)))
    u, ok = newton(system, u0)
    found: list[BelyiModel] = []
    for row in u[ok]:
        white = row[: system.nw]
        black = row[system.nw:]
        if not (_separated(list(white)) and _separated(list(black))):
            continue
        pp, qq = system.p_and_q(row[None, :])
        diff = (pp - qq)[0]
        r = complex(diff[-2])
        if abs(r) < SEPARATION:
            continue
        c = complex(-diff[-1] / r)
        if min(abs(c - z) for z in row) < SEPARATION:
            continue
        model = BelyiModel(_sorted_side(white, system.white), _sorted_side(black, system.black), c, r)
        if residual(model) > tol:
            continue
        if any(model_distance(model, other) < SEPARATION for other in found):
            continue
        found.append(model)
    if not found:
        raise NoSolutionsFound(f"no start converged to a valid model for {p}")
    return sorted(found, key=canonical_key)
