from fractions import Fraction

import pytest

from singindex.errors import RejectedInputError
from singindex.grobner import INFINITE
from singindex.oracles import (
    boundary_degree_3d,
    macaulay_colength,
    winding_degree,
)


def test_macaulay_examples():
    assert macaulay_colength(["x", "y"], ("x", "y")) == 1
    assert macaulay_colength(["x^2", "y^3"], ("x", "y")) == 6
    assert macaulay_colength(["x^2 + y^3", "x*y"], ("x", "y")) == 5
    assert macaulay_colength(["x^2 - y^3", "y^4"], ("x", "y")) == 8


def test_macaulay_unit_ideal():
    assert macaulay_colength(["1 + x", "y"], ("x", "y")) == 0


def test_macaulay_non_isolated():
    assert macaulay_colength(["x*y"], ("x", "y"), max_truncation=12) is INFINITE


def test_winding_linear_orientation():
    assert winding_degree(["x", "y"], ("x", "y")) == 1
    assert winding_degree(["y", "x"], ("x", "y")) == -1
    assert winding_degree(["-x", "-y"], ("x", "y")) == 1


def test_winding_requires_plane_germ():
    with pytest.raises(RejectedInputError):
        winding_degree(["x", "y", "z"], ("x", "y", "z"))


def test_winding_rejects_vanishing_on_circle():
    # x^2 + y^2 - r^2 vanishes on the sample circle of radius r
    with pytest.raises(RejectedInputError):
        winding_degree(
            ["x^2 + y^2 - 1/16", "y"], ("x", "y"), radius=Fraction(1, 4)
        )


def test_boundary_degree_orientation():
    assert boundary_degree_3d(["x", "y", "z"], ("x", "y", "z"), grid=4) == 1
    assert boundary_degree_3d(["y", "x", "z"], ("x", "y", "z"), grid=4) == -1
    assert boundary_degree_3d(["-x", "-y", "-z"], ("x", "y", "z"), grid=4) == -1


def test_boundary_degree_nonsurjective_zero():
    assert boundary_degree_3d(["x^2", "y", "z"], ("x", "y", "z"), grid=4) == 0
