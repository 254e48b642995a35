"""Text and JSON algebra descriptions: byte-stable round trips, positioned
parse errors, DOT export."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from reslat import catalog, core, fileformat as ff, modelgen as mg
from reslat.errors import FormatError, ResiduumMismatch

A6_TEXT = """\
name A6
elements 0 a b c d 1
covers 0<a 0<c a<b b<d c<d d<1
mul
0 0 0 0 0 0
0 a a 0 a a
0 a a 0 a b
0 0 0 c c c
0 a a c d d
0 a b c d 1
res
1 1 1 1 1 1
c 1 1 c 1 1
c d 1 c 1 1
b b b 1 1 1
0 b b c 1 1
0 a b c d 1
"""

A6_HASSE_DOT = """\
digraph A6 {
  rankdir=BT;
  "0";
  "a";
  "b";
  "c";
  "d";
  "1";
  "0" -> "a";
  "0" -> "c";
  "a" -> "b";
  "b" -> "d";
  "c" -> "d";
  "d" -> "1";
}
"""

A8_SPEC_DOT = """\
digraph A8 {
  rankdir=BT;
  "{f,1}";
  "{c,e,1}";
  "{a,c,d,e,f,1}";
  "{f,1}" -> "{a,c,d,e,f,1}";
  "{c,e,1}" -> "{a,c,d,e,f,1}";
}
"""

CATALOG = (
    "A6", "A8", "chain2", "chain3", "chain4", "chain5", "chain6",
    "cube1", "cube2", "cube3", "MV3",
)


def test_serialize_a6_is_byte_frozen():
    assert ff.serialize(catalog.get("A6")) == A6_TEXT


def test_parse_text_reads_the_frozen_form():
    a = ff.parse_text(A6_TEXT)
    ref = catalog.get("A6")
    assert a.label == "A6" and a.names == ref.names
    assert a.mul == ref.mul and a.res == ref.res and a.up == ref.up


@pytest.mark.parametrize("name", CATALOG)
def test_text_round_trip_is_byte_exact(name):
    a = catalog.get(name)
    text = ff.serialize(a)
    assert ff.serialize(ff.parse_text(text)) == text


@pytest.mark.parametrize("name", CATALOG)
def test_json_round_trip_is_byte_exact(name):
    a = catalog.get(name)
    doc = ff.to_json(a)
    assert ff.to_json(ff.parse_json_text(doc)) == doc
    json.loads(doc)  # stays plain JSON


def test_parse_sniffs_the_format():
    a = catalog.get("A6")
    assert ff.parse(ff.to_json(a)).label == "A6"
    assert ff.parse(ff.serialize(a)).label == "A6"


def test_load_reads_files(tmp_path):
    p = tmp_path / "a6.txt"
    p.write_text(A6_TEXT)
    assert ff.load(str(p)).label == "A6"
    q = tmp_path / "a6.json"
    q.write_text(ff.to_json(catalog.get("A6")))
    assert ff.load(str(q)).label == "A6"


def test_row_with_wrong_arity_reports_its_line():
    lines = A6_TEXT.splitlines()
    lines[lines.index("mul") + 2] = "0 a a 0 a"
    with pytest.raises(FormatError, match=r"line 6: expected 6 entries"):
        ff.parse_text("\n".join(lines) + "\n")


def test_duplicate_blocks_are_rejected():
    with pytest.raises(FormatError, match="duplicate covers line"):
        ff.parse_text(A6_TEXT + "covers 0<a\n")
    with pytest.raises(FormatError, match="duplicate mul block"):
        ff.parse_text(A6_TEXT + "mul\n" + "0 0 0 0 0 0\n" * 6)


def test_truncated_table_reports_the_block_start():
    with pytest.raises(FormatError, match=r"line 2: table starting here is missing 1 rows"):
        ff.parse_text("elements 0 1\nmul\n0 0\n")


def test_unknown_directive_and_unknown_element():
    with pytest.raises(FormatError, match="unknown directive"):
        ff.parse_text("elements 0 1\nbogus x\n")
    with pytest.raises(FormatError, match="unknown element 'q'"):
        ff.parse_text("elements 0 1\ncovers 0<q\n")


def test_order_block_is_mandatory_and_unique():
    with pytest.raises(FormatError, match="exactly one of covers or leq"):
        ff.parse_text("elements 0 1\nmul\n0 0\n0 1\n")
    base = "elements 0 1\ncovers 0<1\nmul\n0 0\n0 1\nleq\n1 1\n0 1\n"
    with pytest.raises(FormatError, match="exactly one of covers or leq"):
        ff.parse_text(base)


def test_leq_rows_must_be_binary():
    with pytest.raises(FormatError, match="leq rows must contain 0 or 1"):
        ff.parse_text("elements 0 1\nleq\n1 2\n0 1\nmul\n0 0\n0 1\n")


def test_supplied_residuum_is_checked_against_the_derived_one():
    lines = A6_TEXT.splitlines()
    lines[lines.index("res") + 1] = "0 1 1 1 1 1"
    with pytest.raises(ResiduumMismatch, match=r"residuum at \(0,0\) is 0, derived 1"):
        ff.parse_text("\n".join(lines) + "\n")


def test_cover_pairs_of_a6():
    a = catalog.get("A6")
    pairs = ff.cover_pairs(a)
    assert pairs == ((0, 1), (0, 3), (1, 2), (2, 4), (3, 4), (4, 5))
    assert len(pairs) == 6


def test_export_dot_hasse_is_byte_frozen():
    assert ff.export_dot(catalog.get("A6")) == A6_HASSE_DOT


def test_export_dot_spec_is_byte_frozen():
    assert ff.export_dot(catalog.get("A8"), kind="spec") == A8_SPEC_DOT


def test_export_dot_rejects_unknown_kind():
    with pytest.raises(ValueError):
        ff.export_dot(catalog.get("A6"), kind="nope")


MODELS = [a for n in (2, 3, 4, 5) for a in mg.residuated_structures(n)]


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_relabelings_survive_the_round_trip(data):
    """Serialize-parse recovers any permuted presentation up to isomorphism."""
    a = data.draw(st.sampled_from(MODELS))
    perm = data.draw(st.permutations(range(a.n)))
    names = tuple(f"x{i}" for i in range(a.n))
    mul = [[0] * a.n for _ in range(a.n)]
    for x in range(a.n):
        for y in range(a.n):
            mul[perm[x]][perm[y]] = perm[a.mul[x][y]]
    covers = [(perm[lo], perm[hi]) for lo, hi in ff.cover_pairs(a)]
    b = core.validate(names, mul, covers=covers, label="permuted")
    c = ff.parse_text(ff.serialize(b))
    assert c.mul == b.mul and c.up == b.up
    assert core.is_isomorphic(c, a)


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_json_and_text_agree_on_random_models(data):
    a = data.draw(st.sampled_from(MODELS))
    via_text = ff.parse_text(ff.serialize(a))
    via_json = ff.parse_json_text(ff.to_json(a))
    assert via_text.mul == via_json.mul
    assert via_text.up == via_json.up
    assert via_text.res == via_json.res
