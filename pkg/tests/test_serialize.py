import pytest

from circlet import generators as gen
from circlet.complex import ParseError
from circlet.cover import build_cover, canonical_assignment, classify
from circlet.serialize import (parse_assignment, parse_surface, report_classification,
                               serialize_assignment, serialize_surface)
from circlet.splice import euler_cover


def test_surface_round_trip(octa):
    M = build_cover(octa, canonical_assignment(octa)).surface
    text = serialize_surface(M)
    back = parse_surface(text)
    assert (back.p, back.q, back.r) == (M.p, M.q, M.r)
    assert back.faces == M.faces and back.edges == M.edges
    assert serialize_surface(back) == text


def test_figure2_surface_header(fig2):
    text = serialize_surface(build_cover(fig2, canonical_assignment(fig2)).surface)
    header = text.splitlines()[0]
    assert "r=40" in header and "q=80" in header


def test_bad_surface_documents():
    with pytest.raises(ParseError, match="closed surface"):
        parse_surface("face f = +a +b +c\n")
    with pytest.raises(ParseError, match="integers"):
        parse_surface("pair s f x g 1\n")


def test_assignment_round_trip(fig2):
    A = canonical_assignment(fig2)
    assert parse_assignment(serialize_assignment(A)) == A
    with pytest.raises(ParseError, match="even face count"):
        parse_assignment("match a x y z\n")
    with pytest.raises(ParseError, match="twice"):
        parse_assignment("match a x y\nmatch a x y\n")


def test_report_for_d5(d5):
    rec = report_classification(euler_cover(d5))
    assert rec["name"] == "sphere" and rec["chi"] == 2 and rec["components"] == 1
    assert len(rec["splices"]) == 3


def test_report_names_from_census(fig2):
    from circlet.cover import _edge_choices, assignment_at

    choices = _edge_choices(fig2)
    names = {}
    for i in range(81):
        rec = report_classification(build_cover(fig2, assignment_at(choices, i)))
        names[rec["name"]] = rec["chi"]
    assert names["triple torus (S₃)"] == -4
    assert names["Klein bottle (N₂)"] == 0


def test_report_refuses_invalid_cover(octa):
    from dataclasses import replace

    c = build_cover(octa, canonical_assignment(octa))
    f = sorted(octa.faces)
    with pytest.raises(ValueError, match="refusing"):
        report_classification(replace(c, face_map={**c.face_map, f[0]: f[1]}))


def test_classify_parsed_surface_of_disjoint_spheres(two_tetra):
    from circlet.gf2 import circlet_decomposition

    parts = [p.ids for p in circlet_decomposition(two_tetra)]
    M = parse_surface(serialize_surface(
        build_cover(two_tetra, canonical_assignment(two_tetra, parts)).surface))
    assert classify(M).name == "sphere + sphere"
