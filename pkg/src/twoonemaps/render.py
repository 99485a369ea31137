"""Attraction-time pictures of Belyi models, written as binary PPM.

A point is coloured by the number of iterations of ``beta`` it needs to
enter ``O``: small disks around the attracting fixed points among 0 and 1,
plus a neighbourhood of infinity.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .belyi import BelyiModel, evaluate

NOT_CAPTURED = -1

WHITE = (255, 255, 255)
YELLOW = (255, 215, 0)
RED = (220, 40, 40)
BLUE = (40, 60, 220)


@dataclass(frozen=True)
class Viewport:
    center: complex
    width: float
    height: float
    pixels_x: int
    pixels_y: int

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.pixels_x < 1 or self.pixels_y < 1:
            raise ValueError("viewport extents and pixel counts must be positive")
        if abs(self.pixels_y - self.pixels_x * self.height / self.width) > 1:
            raise ValueError("pixel aspect ratio must match the viewport to within one pixel")

    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        """Real and imaginary parts of pixel centres, row-major from the top row."""
        xs = self.center.real - self.width / 2 + (np.arange(self.pixels_x) + 0.5) * (self.width / self.pixels_x)
        ys = self.center.imag + self.height / 2 - (np.arange(self.pixels_y) + 0.5) * (self.height / self.pixels_y)
        re, im = np.meshgrid(xs, ys)
        return re, im


def default_viewport(m: BelyiModel, pixels_x: int = 600, pixels_y: int = 400, margin: float = 0.5) -> Viewport:
    """Box around the vertices, pole, 0 and 1, padded and matched to the pixel aspect."""
    pts = m.coordinates() + [m.c, 0j, 1 + 0j]
    lo_re, hi_re = min(z.real for z in pts), max(z.real for z in pts)
    lo_im, hi_im = min(z.imag for z in pts), max(z.imag for z in pts)
    w = max(hi_re - lo_re, 1e-3) * (1 + 2 * margin)
    h = max(hi_im - lo_im, 1e-3) * (1 + 2 * margin)
    aspect = pixels_y / pixels_x
    if h < w * aspect:
        h = w * aspect
    else:
        w = h / aspect
    return Viewport(complex((lo_re + hi_re) / 2, (lo_im + hi_im) / 2), w, h, pixels_x, pixels_y)


@dataclass(frozen=True)
class ColorRule:
    band_edges: tuple[int, ...] = (5, 7, 9)
    colors: tuple[tuple[int, int, int], ...] = field(default=(WHITE, YELLOW, RED, BLUE))

    def __post_init__(self):
        if len(self.colors) != len(self.band_edges) + 1:
            raise ValueError("need exactly one more colour than band edges")
        if list(self.band_edges) != sorted(self.band_edges):
            raise ValueError("band edges must ascend")

    def palette_index(self, steps: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(np.asarray(self.band_edges), steps, side="left")
        return np.where(steps < 0, len(self.colors) - 1, idx)


def active_attractors(m: BelyiModel, r0: float) -> tuple[bool, bool]:
    """Whether 0 and 1 are (numerically) fixed by ``beta``."""
    def near(z: complex, target: complex) -> bool:
        try:
            return abs(evaluate(m, z) - target) < r0 / 2
        except ZeroDivisionError:
            return False

    return near(0j, 0j), near(1 + 0j, 1 + 0j)


def _check_params(r0: float, escape: float, max_iter: int) -> None:
    if not 0 < r0 < 0.25:
        raise ValueError("r0 must lie in (0, 1/4)")
    if escape <= 2:
        raise ValueError("escape radius must exceed 2")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")


def _kernel_args(m: BelyiModel):
    p = m.numerator()
    return p.real.copy(), p.imag.copy(), m.r.real, m.r.imag, m.c.real, m.c.imag


def attraction_steps_array(m: BelyiModel, z_re, z_im, r0: float = 0.05, escape: float = 1e3,
                           max_iter: int = 512, backend=None) -> np.ndarray:
    _check_params(r0, escape, max_iter)
    kern = backend or _kernels.active
    use0, use1 = active_attractors(m, r0)
    return kern.escape_steps(*_kernel_args(m), z_re, z_im, r0, escape, max_iter, use0, use1)


def attraction_steps(m: BelyiModel, z: complex, r0: float = 0.05, escape: float = 1e3,
                     max_iter: int = 512, backend=None) -> int:
    """Iterations until ``z`` enters ``O``, or ``NOT_CAPTURED`` (-1).

    Landing on the pole counts as escaping at the next step.
    """
    out = attraction_steps_array(m, np.array([z.real]), np.array([z.imag]), r0, escape, max_iter, backend)
    return int(out[0])


def render_steps(m: BelyiModel, view: Viewport, r0: float = 0.05, escape: float = 1e3,
                 max_iter: int = 512, workers: int = 1, backend=None) -> np.ndarray:
    """Per-pixel step counts, shape ``(pixels_y, pixels_x)``.

    With ``workers > 1`` rows are split across threads; the result does not
    depend on the split.
    """
    re, im = view.grid()
    if workers <= 1:
        flat = attraction_steps_array(m, re, im, r0, escape, max_iter, backend)
        return flat.reshape(re.shape)
    chunks = np.array_split(np.arange(view.pixels_y), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(
            lambda rows: attraction_steps_array(m, re[rows], im[rows], r0, escape, max_iter, backend),
            [c for c in chunks if c.size],
        ))
    return np.concatenate(parts).reshape(re.shape)


def render(m: BelyiModel, view: Viewport, rule: ColorRule = ColorRule(), r0: float = 0.05,
           escape: float = 1e3, max_iter: int = 512, workers: int = 1, backend=None) -> np.ndarray:
    """RGB image, ``uint8`` array of shape ``(pixels_y, pixels_x, 3)``."""
    steps = render_steps(m, view, r0, escape, max_iter, workers, backend)
    palette = np.asarray(rule.colors, dtype=np.uint8)
    return palette[rule.palette_index(steps)]


def ppm_bytes(img: np.ndarray) -> bytes:
    img = np.ascontiguousarray(img, dtype=np.uint8)
    h, w = img.shape[:2]
    return f"P6\n{w} {h}\n255\n".encode("ascii") + img.tobytes()


def write_ppm(img: np.ndarray, path: str | os.PathLike) -> None:
    with open(path, "wb") as fh:
        fh.write(ppm_bytes(img))
