import io
import json
import logging
from fractions import Fraction

import pytest

from src.documents.input_document import loads, parse_document, parse_surface, read_document
from src.lattice.surface import SurfaceKind, SurfaceModel
from src.utils.errors import ValidationError


def running_doc(**overrides):
    doc = {
        "surface": {"kind": "p2"},
        "character": {"ch0": 2, "ch1": ["1"], "ch2": "-3/2"},
        "curve": {"dH": 4},
    }
    doc.update(overrides)
    return doc


def test_plane_defaults():
    doc = parse_document(running_doc())
    assert doc.surface.kind is SurfaceKind.PROJECTIVE_PLANE
    assert doc.polarization.coefficients == (1,)
    assert doc.twist.is_zero()
    assert doc.character.ch2 == Fraction(-3, 2)
    assert doc.curve.coefficients == (4,)
    assert doc.curve_degree == 4
    assert doc.options == {}


def test_header_echoes_input():
    assert parse_document(running_doc()).header() == {
        "surface": "P2",
        "polarization": "(1)",
        "twist": "(0)",
        "character": "(2, (1), -3/2)",
        "curve": "4H",
    }


def test_curve_as_class_list():
    doc = parse_document(running_doc(curve=["3"]))
    assert doc.curve_degree is None
    assert doc.header()["curve"] == "(3)"


def test_missing_curve_only_fails_when_required():
    data = running_doc()
    del data["curve"]
    doc = parse_document(data)
    with pytest.raises(ValidationError, match="curve"):
        doc.require_curve()


def test_hirzebruch_needs_polarization():
    data = running_doc(surface={"kind": "hirzebruch", "m": 1}, character={"ch0": 2, "ch1": [2, 4], "ch2": 0})
    with pytest.raises(ValidationError, match="polarization"):
        parse_document(data)


def test_hirzebruch_polarization_must_be_ample():
    data = running_doc(
        surface={"kind": "hirzebruch", "m": 1},
        polarization=["1", "1"],
        character={"ch0": 2, "ch1": [2, 4], "ch2": 0},
    )
    with pytest.raises(ValidationError, match="not ample"):
        parse_document(data)


def test_auto_twist_is_minimizing():
    data = running_doc(
        surface={"kind": "hirzebruch", "m": 1},
        polarization=["1", "2"],
        twist="auto",
        character={"ch0": 2, "ch1": ["2", "0"], "ch2": "-1"},
        curve={"dH": 2},
    )
    doc = parse_document(data)
    assert doc.twist_auto
    assert doc.twist.coefficients == (Fraction(2, 3), Fraction(-2, 3))
    assert doc.header()["twist"] == "auto (2/3, -2/3)"
    assert doc.curve.coefficients == (2, 4)


def custom_doc(surface):
    return running_doc(
        surface=surface,
        polarization=["1", "1"],
        character={"ch0": 2, "ch1": ["0", "0"], "ch2": "-1"},
        curve=["1", "1"],
    )


def test_custom_surface_warns(caplog):
    data = custom_doc({"kind": "custom", "matrix": [[0, 1], [1, 0]], "canonical": ["-2", "-2"], "chiO": 1})
    with caplog.at_level(logging.WARNING):
        doc = parse_document(data)
    assert doc.surface.kind is SurfaceKind.CUSTOM
    assert doc.surface.intersection_matrix == ((0, 1), (1, 0))
    assert doc.surface.canonical_class.coefficients == (-2, -2)
    assert "no ampleness oracle" in caplog.text


def test_custom_surface_long_key_aliases():
    doc = parse_document(custom_doc({"kind": "custom", "intersection_matrix": [[0, 1], [1, 0]],
                                     "canonical_class": ["-2", "-2"], "chi_structure_sheaf": 1}))
    assert doc.surface.chi_structure_sheaf == 1
    assert doc.surface.intersection_matrix == ((0, 1), (1, 0))


def test_custom_surface_missing_key_names_short_form():
    with pytest.raises(ValidationError, match="'matrix'"):
        parse_surface({"kind": "custom", "canonical": ["-3"], "chiO": 1})
    with pytest.raises(ValidationError, match="surface.canonical"):
        parse_surface({"kind": "custom", "matrix": [[1]], "canonical": "-3", "chiO": 1})


@pytest.mark.parametrize("surface", [
    SurfaceModel.projective_plane(),
    SurfaceModel.hirzebruch(2),
    SurfaceModel.custom([[1]], [-3], 1),
    SurfaceModel.custom([[0, 1], [1, 0]], [-2, "-2"], 1),
])
def test_surface_to_dict_parses_back(surface):
    assert parse_surface(surface.to_dict()) == surface
    assert parse_surface(json.loads(json.dumps(surface.to_dict()))) == surface


@pytest.mark.parametrize(
    "overrides, location",
    [
        ({"character": {"ch0": 2, "ch1": ["1"], "ch2": "1/0"}}, "character.ch2"),
        ({"character": {"ch0": 2, "ch1": ["1"], "ch2": -1.5}}, "character.ch2"),
        ({"character": {"ch0": "3/2", "ch1": ["1"], "ch2": "0"}}, "character.ch0"),
        ({"character": {"ch0": 2, "ch1": "1", "ch2": "0"}}, "character.ch1"),
        ({"curve": {"dH": 4, "extra": 1}}, "curve"),
        ({"curve": "4H"}, "curve"),
    ],
)
def test_bad_values_name_their_location(overrides, location):
    with pytest.raises(ValidationError) as info:
        parse_document(running_doc(**overrides))
    assert location in str(info.value)


def test_wrong_class_length():
    with pytest.raises(ValidationError, match="character.ch1"):
        parse_document(running_doc(character={"ch0": 2, "ch1": ["1", "0"], "ch2": "0"}))


def test_unknown_surface_kind():
    with pytest.raises(ValidationError, match="Unknown surface kind"):
        parse_document(running_doc(surface={"kind": "k3"}))


def test_options():
    doc = parse_document(running_doc(options={"depth": 4, "output": "csv", "picard_rank_policy": "enforce"}))
    assert doc.options == {"depth": 4, "output": "csv", "picard_rank_policy": "enforce"}
    limits = parse_document(running_doc(options={"max_depth": 14, "max_peel": 50}))
    assert limits.options == {"max_depth": 14, "max_peel": 50}
    for bad in ({"depth": -1}, {"max_peel": -3}, {"output": "xml"}, {"colour": "red"},
                {"picard_rank_policy": "ignore"}):
        with pytest.raises(ValidationError):
            parse_document(running_doc(options=bad))


def test_bad_json_reports_position():
    with pytest.raises(ValidationError, match="line 1"):
        loads("{not json")


def test_read_document_from_stdin_and_file(tmp_path):
    text = json.dumps(running_doc())
    assert read_document("-", io.StringIO(text)).curve_degree == 4
    path = tmp_path / "doc.json"
    path.write_text(text, encoding="utf-8")
    assert read_document(str(path)).character.ch0 == 2
    with pytest.raises(ValidationError, match="Cannot read"):
        read_document(str(tmp_path / "missing.json"))
