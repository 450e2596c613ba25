"""Float pictures of pencil members: a triangle mesh by marching cubes and a
shaded raster by ray sampling.  Nothing here feeds back into the exact core."""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from skimage.measure import marching_cubes

from .poly import MultiPoly

__all__ = [
    "FloatPoly",
    "RenderScene",
    "Mesh",
    "mesh",
    "raster",
    "write_ppm",
    "write_obj",
    "default_threads",
    "foreground_fraction",
]

RESIDUAL_TOL = 1e-6


def default_threads() -> int:
    env = os.environ.get("PENCILFORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


class FloatPoly:
    """A homogeneous polynomial in x0..x3 dehomogenized at x_chart = 1, in float64."""

    def __init__(self, P: MultiPoly, chart: int = 3):
        if chart not in range(4):
            raise ValueError("chart index must be 0..3")
        self.chart = chart
        self.free = [i for i in range(4) if i != chart]
        exps, coefs = [], []
        for e, c in P.items():
            exps.append([e[i] for i in self.free])
            coefs.append(float(c))
        self.exps = np.array(exps, dtype=np.int64).reshape(-1, 3)
        self.coefs = np.array(coefs, dtype=np.float64)
        self.degree = int(self.exps.sum(axis=1).max()) if len(coefs) else 0
        self._grad = []
        for k in range(3):
            mask = self.exps[:, k] > 0
            ge = self.exps[mask].copy()
            gc = self.coefs[mask] * ge[:, k]
            ge[:, k] -= 1
            self._grad.append((ge, gc))

    @staticmethod
    def _eval(exps, coefs, pts: np.ndarray, deg: int) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.float64)
        pw = np.ones((3, deg + 1) + pts.shape[:-1])
        for k in range(3):
            for d in range(1, deg + 1):
                pw[k, d] = pw[k, d - 1] * pts[..., k]
        out = np.zeros(pts.shape[:-1])
        for (a, b, c), w in zip(exps, coefs):
            out += w * pw[0, a] * pw[1, b] * pw[2, c]
        return out

    def __call__(self, pts: np.ndarray) -> np.ndarray:
        return self._eval(self.exps, self.coefs, pts, self.degree)

    def gradient(self, pts: np.ndarray) -> np.ndarray:
        return np.stack([self._eval(e, c, pts, max(self.degree - 1, 0)) for e, c in self._grad], axis=-1)

    def grid(self, axis: np.ndarray) -> np.ndarray:
        """Values on the tensor grid axis x axis x axis (separable contraction)."""
        D = self.degree
        C = np.zeros((D + 1, D + 1, D + 1))
        for (a, b, c), w in zip(self.exps, self.coefs):
            C[a, b, c] += w
        V = np.vander(axis, D + 1, increasing=True)  # (n, D+1)
        t = np.tensordot(V, C, axes=(1, 0))  # i,b,c
        t = np.tensordot(t, V, axes=(1, 1))  # i,c,j
        t = np.tensordot(t, V, axes=(1, 1))  # i,j,k
        return t


@dataclass
class RenderScene:
    poly: MultiPoly
    chart: int = 3
    radius: float = 4.0
    eye: tuple = (9.0, 6.5, 5.0)
    look_at: tuple = (0.0, 0.0, 0.0)
    up: tuple = (0.0, 0.0, 1.0)
    fov_degrees: float = 40.0
    width: int = 256
    height: int = 256
    grid: int = 128
    ray_samples: int = 384
    background: tuple = (255, 255, 255)

    def __post_init__(self):
        if self.chart not in range(4):
            raise ValueError("chart index must be 0..3")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.width < 2 or self.height < 2 or self.grid < 2:
            raise ValueError("resolutions must be at least 2")


@dataclass
class Mesh:
    vertices: np.ndarray  # (V, 3)
    faces: np.ndarray  # (F, 3) zero-based
    residuals: np.ndarray  # |F| at each vertex after refinement
    gradients: np.ndarray  # |grad F| at each vertex

    @property
    def empty(self) -> bool:
        return len(self.faces) == 0

    def within_tolerance(self, tol: float = RESIDUAL_TOL) -> bool:
        return bool(np.all(self.residuals <= tol * (self.gradients + 1.0)))


def _chunks(n: int, size: int) -> list[slice]:
    return [slice(i, min(i + size, n)) for i in range(0, n, size)]


def _edge_brackets(idx_verts: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Grid-edge endpoints (index space) of each marching-cubes vertex.

    Two coordinates of a vertex are grid values (up to float32 noise); the
    third lies strictly inside an edge unless the vertex sits on a grid node.
    """
    v = idx_verts.astype(np.float64)
    r = np.round(v)
    off = np.abs(v - r)
    axis = np.argmax(off, axis=1)
    rows = np.arange(len(v))
    lo = r.copy()
    hi = r.copy()
    moving = off[rows, axis] > 1e-4
    m_rows, m_axis = rows[moving], axis[moving]
    base = np.floor(v[m_rows, m_axis])
    lo[m_rows, m_axis] = base
    hi[m_rows, m_axis] = np.minimum(base + 1, n - 1)
    return lo, hi


def _edge_root(F: "FloatPoly", a: np.ndarray, b: np.ndarray, iterations: int = 12) -> np.ndarray:
    """Root of F on each segment [a, b] by the Illinois variant of regula falsi."""
    fa, fb = F(a), F(b)
    s0, s1 = np.zeros(len(a)), np.ones(len(a))
    side = np.zeros(len(a), dtype=np.int8)
    for _ in range(iterations):
        denom = fb - fa
        ok = denom != 0
        s = np.where(ok, (s0 * fb - s1 * fa) / np.where(ok, denom, 1.0), (s0 + s1) / 2)
        s = np.clip(s, np.minimum(s0, s1), np.maximum(s0, s1))
        fs = F(a + (b - a) * s[:, None])
        left = np.signbit(fs) == np.signbit(fa)
        # replace the endpoint with the same sign; halve the stale one if it repeats
        s0 = np.where(left, s, s0)
        fa_new = np.where(left, fs, fa)
        s1 = np.where(left, s1, s)
        fb_new = np.where(left, fb, fs)
        fb_new = np.where(left & (side == 1), fb_new / 2, fb_new)
        fa_new = np.where(~left & (side == -1), fa_new / 2, fa_new)
        side = np.where(left, 1, -1).astype(np.int8)
        fa, fb = fa_new, fb_new
        done = fs == 0
        s0 = np.where(done, s, s0)
        s1 = np.where(done, s, s1)
    s = np.where(np.abs(fa) <= np.abs(fb), s0, s1)
    return a + (b - a) * s[:, None]


def mesh(scene: RenderScene, threads: "int | None" = None) -> Mesh:
    """Marching cubes on [-R, R]^3; each vertex is placed by root finding along
    its grid edge, then moved by one Newton step toward F = 0."""
    threads = threads or default_threads()
    F = FloatPoly(scene.poly, scene.chart)
    n = scene.grid
    axis = np.linspace(-scene.radius, scene.radius, n)
    vol = F.grid(axis)
    if not (vol.min() < 0 < vol.max()):
        warnings.warn("no real points of the surface in the clip region; mesh is empty")
        z = np.zeros((0, 3))
        return Mesh(z, np.zeros((0, 3), dtype=np.int64), np.zeros(0), np.zeros(0))
    step = axis[1] - axis[0]
    idx_verts, faces, _, _ = marching_cubes(vol, level=0.0)
    lo_pt, hi_pt = _edge_brackets(idx_verts, n)

    def refine(sl: slice) -> tuple:
        a = lo_pt[sl] * step - scene.radius
        b = hi_pt[sl] * step - scene.radius
        v = _edge_root(F, a, b)
        f = F(v)
        g = F.gradient(v)
        g2 = np.einsum("ij,ij->i", g, g)
        safe = np.where(g2 > 0, g2, 1.0)
        v = v - (f / safe)[:, None] * g * (g2 > 0)[:, None]
        return v, np.abs(F(v)), np.linalg.norm(F.gradient(v), axis=1)

    parts = _chunks(len(idx_verts), 4096)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        done = list(ex.map(refine, parts))
    verts = np.concatenate([d[0] for d in done])
    res = np.concatenate([d[1] for d in done])
    grads = np.concatenate([d[2] for d in done])
    return Mesh(verts, faces.astype(np.int64), res, grads)


def _camera(scene: RenderScene):
    eye = np.array(scene.eye, dtype=np.float64)
    fwd = np.array(scene.look_at, dtype=np.float64) - eye
    fwd /= np.linalg.norm(fwd)
    right = np.cross(fwd, np.array(scene.up, dtype=np.float64))
    right /= np.linalg.norm(right)
    up = np.cross(right, fwd)
    return eye, fwd, right, up


def _ray_tile(scene: RenderScene, F: FloatPoly, rows: slice) -> np.ndarray:
    eye, fwd, right, up = _camera(scene)
    w, h = scene.width, scene.height
    half = np.tan(np.radians(scene.fov_degrees) / 2)
    ys = np.arange(rows.start, rows.stop)
    sy = (1 - 2 * (ys + 0.5) / h) * half
    sx = (2 * (np.arange(w) + 0.5) / w - 1) * half * (w / h)
    dirs = fwd[None, None, :] + sx[None, :, None] * right + sy[:, None, None] * up
    dirs /= np.linalg.norm(dirs, axis=-1, keepdims=True)
    dirs = dirs.reshape(-1, 3)
    # clip sphere |eye + t d| = R
    b = dirs @ eye
    c = eye @ eye - scene.radius ** 2
    disc = b * b - c
    hit = disc > 0
    sq = np.sqrt(np.where(hit, disc, 0))
    t0 = np.maximum(-b - sq, 0.0)
    t1 = -b + sq
    hit &= t1 > t0
    out = np.empty((len(dirs), 3), dtype=np.uint8)
    out[:] = scene.background
    idx = np.nonzero(hit)[0]
    if len(idx) == 0:
        return out.reshape(-1, w, 3)
    d, a0, a1 = dirs[idx], t0[idx], t1[idx]
    # the restriction of F to a ray is a univariate polynomial: interpolate it
    # at Chebyshev nodes on [t0, t1] and sample that instead of F
    deg = F.degree
    nodes = np.cos(np.pi * (np.arange(deg + 1) + 0.5) / (deg + 1))  # in (-1, 1)
    tt = (a0[:, None] + a1[:, None]) / 2 + (a1 - a0)[:, None] / 2 * nodes[None, :]
    vals = F(eye[None, None, :] + tt[..., None] * d[:, None, :])
    V = np.polynomial.chebyshev.chebvander(nodes, deg)
    coef = np.linalg.solve(V, vals.T).T  # (rays, deg+1)
    s = np.linspace(-1, 1, scene.ray_samples)
    samples = np.polynomial.chebyshev.chebvander(s, deg) @ coef.T  # (samples, rays)
    sign = np.signbit(samples)
    change = sign[1:] != sign[:-1]
    has = change.any(axis=0)
    first = np.argmax(change, axis=0)
    lo = s[first]
    hi = s[np.minimum(first + 1, len(s) - 1)]
    flo = np.polynomial.chebyshev.chebval(lo, coef.T, tensor=False)
    for _ in range(40):
        mid = (lo + hi) / 2
        fm = np.polynomial.chebyshev.chebval(mid, coef.T, tensor=False)
        same = np.signbit(fm) == np.signbit(flo)
        lo = np.where(same, mid, lo)
        flo = np.where(same, fm, flo)
        hi = np.where(same, hi, mid)
    sroot = (lo + hi) / 2
    troot = (a0 + a1) / 2 + (a1 - a0) / 2 * sroot
    p = eye[None, :] + troot[:, None] * d
    g = F.gradient(p)
    gn = np.linalg.norm(g, axis=1)
    nrm = g / np.where(gn > 0, gn, 1)[:, None]
    light = -fwd + 0.5 * up
    light /= np.linalg.norm(light)
    shade = 0.15 + 0.85 * np.abs(nrm @ light)
    base = np.array([205.0, 120.0, 60.0])
    col = np.clip(shade[:, None] * base[None, :], 0, 255).astype(np.uint8)
    sel = idx[has]
    out[sel] = col[has]
    return out.reshape(-1, w, 3)


def raster(scene: RenderScene, threads: "int | None" = None, tile_rows: int = 16) -> np.ndarray:
    """(height, width, 3) uint8 image; tiles are independent, so output does not
    depend on the thread count."""
    threads = threads or default_threads()
    F = FloatPoly(scene.poly, scene.chart)
    tiles = _chunks(scene.height, tile_rows)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        parts = list(ex.map(lambda sl: _ray_tile(scene, F, sl), tiles))
    return np.concatenate(parts, axis=0)


def write_ppm(path: str, image: np.ndarray) -> None:
    h, w, _ = image.shape
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(image, dtype=np.uint8).tobytes())


def write_obj(path: str, m: Mesh) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for v in m.vertices:
            fh.write(f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}\n")
        for f in m.faces:
            fh.write(f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}\n")


def foreground_fraction(image: np.ndarray, background: Sequence[int] = (255, 255, 255)) -> float:
    bg = np.all(image == np.array(background, dtype=np.uint8), axis=-1)
    return float(1.0 - bg.mean())
