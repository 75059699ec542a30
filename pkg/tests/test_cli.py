import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcat import ParseError, RingSpec
from abelcat.diagram import Bounds, Generator
from abelcat.diagram.commute import Arrow, ExactClaim
from abelcat.document import InputDocument, dumps, parse_data, parse_input, serialize

from golden_cases import CASES, FIX, GOLDEN, run


def test_minimal_document():
    doc = parse_input('{"ring": {"zmod": 4}, "objects": {"A": {"gens": 1, "relations": []}}}')
    assert doc.objects["A"].invariant_factors == (0, (4,))


@pytest.mark.parametrize("data, path", [
    ({"ring": "Q"}, "$.ring"),
    ({"ring": {"zmod": 1}}, "$.ring.zmod"),
    ({"ring": "Z", "objects": {"A": {"gens": 2, "relations": [[1]]}}},
     "$.objects.A.relations[0]"),
    ({"ring": "Z", "objects": {"A": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "B", "matrix": [[1]]}}}, "$.morphisms.f.cod"),
    ({"ring": "Z", "objects": {"A": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "A", "matrix": [[1, 2]]}}},
     "$.morphisms.f.matrix[0]"),
    ({"ring": "Z", "objects": {"A": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "A", "matrix": []}}}, "$.morphisms.f.matrix"),
    ({"ring": {"zmod": 4}, "objects": {"A": {"gens": 1, "relations": [[2]]}, "B": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "B", "matrix": [[1]]}}}, "$.morphisms.f.matrix"),
    ({"ring": "Z", "objects": {"A": {"gens": 1}, "B": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "B", "matrix": [[1]]}},
      "assertions": [{"exact": ["f", "f"]}]}, "$.assertions[0].exact[1]"),
    ({"ring": "Z", "objects": {"A": {"gens": 1}, "B": {"gens": 1}},
      "morphisms": {"f": {"dom": "A", "cod": "B", "matrix": [[1]]},
                    "g": {"dom": "A", "cod": "A", "matrix": [[1]]}},
      "assertions": [{"commute": [["f"], ["g"]]}]}, "$.assertions[0].commute"),
    ({"ring": "Z", "subcategory": ["X"]}, "$.subcategory[0]"),
    ({"ring": "Z", "extra": 1}, "$"),
])
def test_parse_errors_are_located(data, path):
    with pytest.raises(ParseError) as info:
        parse_data(data)
    assert info.value.path == path


def test_malformed_json():
    with pytest.raises(ParseError):
        parse_input("{")


def _document(seed: int) -> InputDocument:
    gen = Generator(seed, Bounds(max_gens=3))
    doc = InputDocument(gen.ring)
    names = ["A", "B", "C"]
    for name in names:
        doc.objects[name] = gen.module()
    f = gen.morphism(doc.objects["A"], doc.objects["B"])
    g = gen.morphism(doc.objects["B"], doc.objects["C"])
    doc.morphisms["f"] = Arrow("A", "B", f)
    doc.morphisms["g"] = Arrow("B", "C", g)
    doc.morphisms["h"] = Arrow("A", "C", gen.cat.compose(g, f))
    doc.commutes.append((["f", "g"], ["h"]))
    doc.exact.append(ExactClaim(["f", "g"], seed % 2 == 0, False))
    if seed % 3 == 0:
        doc.subcategory = ["A", "C"]
    return doc


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_round_trip(seed):
    doc = _document(seed)
    again = parse_input(dumps(doc))
    assert again == doc
    assert serialize(again) == serialize(doc)


def test_implicit_relations_are_not_serialized():
    doc = parse_input('{"ring": {"zmod": 6}, "objects": {"A": {"gens": 2}}}')
    assert serialize(doc)["objects"]["A"]["relations"] == []
    assert doc.ring == RingSpec.zmod(6)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name):
    code, text = run(CASES[name])
    expected = (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
    assert text == expected
    assert code == (1 if name == "check_failing" else 0)
    json.loads(text)


def test_same_invocation_is_byte_identical():
    argv = ["lemmas", "--seed", "11", "--count", "3", "--format", "json"]
    assert run(argv) == run(argv)


@pytest.mark.parametrize("fixture, code", [
    ("commuting_square.json", 0), ("failing_square.json", 1), ("ill_defined.json", 2)])
def test_exit_codes(fixture, code):
    assert run(["check", str(FIX / fixture)])[0] == code


def test_input_errors_exit_2(tmp_path, capsys):
    assert run(["check", str(tmp_path / "missing.json")])[0] == 2
    assert run(["snf", "--matrix", "[[1, 2], [3]]"])[0] == 2
    assert run(["snf"])[0] == 2
    assert run(["embed", str(FIX / "failing_square.json")])[0] == 2
    assert run(["embed", str(FIX / "z4_subcategory.json"), "--subcategory", "Q"])[0] == 2
    assert run(["injective", str(FIX / "z4_subcategory.json"), "--object", "Q"])[0] == 2
    assert "error" in capsys.readouterr().err


def test_text_format():
    code, text = run(["check", str(FIX / "commuting_square.json")])
    assert code == 0 and text.startswith("[PASS] diagram")


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "abelcat.cli", "snf", "--matrix", "[[2,0],[0,3]]"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0 and "[PASS]" in out.stdout
