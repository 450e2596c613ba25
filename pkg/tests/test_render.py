from fractions import Fraction

import numpy as np
import pytest

from pencilforge.pencil import PencilMember, build_pencil
from pencilforge.poly import MultiPoly, quadric
from pencilforge.render import (FloatPoly, RenderScene, foreground_fraction, mesh, raster, write_obj,
                                write_ppm)


def unit_sphere():
    x = [MultiPoly.variable(i) for i in range(4)]
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3]


def test_float_poly_matches_exact():
    P = build_pencil(6).polynomial(PencilMember.from_lambda(-1))
    F = FloatPoly(P, chart=3)
    pt = np.array([[0.3, -0.2, 0.7]])
    assert F(pt)[0] == pytest.approx(float(P.evaluate((3, -2, 7, 10))) / 10 ** 6, rel=1e-12)


def test_sphere_mesh():
    m = mesh(RenderScene(unit_sphere(), radius=1.5, grid=64))
    r = np.linalg.norm(m.vertices, axis=1)
    assert not m.empty
    assert np.max(np.abs(r - 1.0)) < 1e-3
    assert m.within_tolerance()


def test_quadric_member_is_empty():
    scene = RenderScene(quadric() ** 6, grid=24, width=16, height=16)
    with pytest.warns(UserWarning):
        m = mesh(scene)
    assert m.empty
    img = raster(scene)
    assert foreground_fraction(img) == 0.0


def test_scene_validation():
    with pytest.raises(ValueError):
        RenderScene(quadric(), chart=4)
    with pytest.raises(ValueError):
        RenderScene(quadric(), radius=0)
    with pytest.raises(ValueError):
        RenderScene(quadric(), grid=1)


def test_thread_count_does_not_change_output(tmp_path):
    P = build_pencil(12).polynomial(PencilMember.from_lambda(Fraction(-22, 243)))
    scene = RenderScene(P, grid=40, width=48, height=40)
    blobs = []
    for threads in (1, 3):
        m = mesh(scene, threads=threads)
        img = raster(scene, threads=threads)
        write_obj(tmp_path / f"m{threads}.obj", m)
        write_ppm(tmp_path / f"i{threads}.ppm", img)
        blobs.append(((tmp_path / f"m{threads}.obj").read_bytes(), (tmp_path / f"i{threads}.ppm").read_bytes()))
    assert blobs[0] == blobs[1]
    assert blobs[0][1].startswith(b"P6\n48 40\n255\n")
    assert foreground_fraction(img) > 0.01


def test_obj_format(tmp_path):
    m = mesh(RenderScene(unit_sphere(), radius=1.5, grid=8))
    write_obj(tmp_path / "s.obj", m)
    lines = (tmp_path / "s.obj").read_text().splitlines()
    assert sum(ln.startswith("v ") for ln in lines) == len(m.vertices)
    faces = [ln for ln in lines if ln.startswith("f ")]
    assert len(faces) == len(m.faces)
    assert min(int(t) for ln in faces for t in ln.split()[1:]) == 1
