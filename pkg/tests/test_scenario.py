import pytest

from coreseq.errors import ParseError, PositivityError
from coreseq.omega import invariant_seq
from coreseq.ring import laurent_parse
from coreseq.scenario import BUILTINS, Scenario, load_scenario, parse_scenario

w = laurent_parse


def test_builtins_all_load():
    for key in ("c7", "z3z3", "s10-prefix", "s9-prefix"):
        scn = load_scenario(f"builtin:{key}")
        assert isinstance(scn, Scenario)
    with pytest.raises(ParseError):
        load_scenario("builtin:nope")


def test_prefix_builtins_carry_terms_and_recurrence():
    s10 = load_scenario("builtin:s10-prefix").prefix
    assert s10.kind == "s"
    assert [int(v) for v in s10.terms] == [1, 4, 19, 94, 469, 2344]
    assert [int(v) for v in s10.rec] == [1, 25, -25]
    s9 = load_scenario("builtin:s9-prefix").prefix
    assert [int(v) for v in s9.terms] == [1, 4, 35, 310, 2789, 25096]


def test_expectations_parsed():
    scn = load_scenario("builtin:c7")
    assert "c" in scn.expect_terms and "c" in scn.expect_rec
    assert list(scn.expect_terms["s"])[:3] == [1, 2, 3]


MINI = """
# one periodic orbit, doubling matrix
[system] name=mini size=1
[orbit X] name=only
channel dim forward prefix=[2,3] tail=quasipoly T=2 start=0 polys=[2; 3]
channel dim backward prefix=[3] tail=quasipoly T=2 start=1 polys=[2; 3]
[matrix]
T[1][1] = "2"
[initial]
v[1] = "1"
[expect]
c terms = 2,4,8
"""


def test_parse_minimal_scenario():
    scn = parse_scenario(MINI, name="mini")
    assert scn.system.size == 1
    assert invariant_seq(scn.system, "c", 3) == [2, 4, 8]
    assert scn.expect_terms["c"] == (2, 4, 8)


def test_inline_section_entries_accepted():
    text = MINI.replace("[matrix]\nT[1][1] = \"2\"",
                        "[matrix] T[1][1] = \"2\"")
    scn = parse_scenario(text)
    assert invariant_seq(scn.system, "c", 3) == [2, 4, 8]


def test_zero_difference_entry_accepted():
    text = MINI.replace('T[1][1] = "2"', 'T[1][1] = "2 + w - w"')
    scn = parse_scenario(text)
    assert scn.system.matrix.entry(0, 0) == w("2")


def test_negative_entry_rejected_by_name():
    text = MINI.replace('T[1][1] = "2"', 'T[1][1] = "0 - w"')
    with pytest.raises(PositivityError) as err:
        parse_scenario(text)
    assert "(1,1)" in str(err.value)


def test_parse_errors_carry_line_numbers():
    bad = MINI.replace('T[1][1] = "2"', "T[1,1] = 2")
    with pytest.raises(ParseError) as err:
        parse_scenario(bad)
    assert "line" in str(err.value)


def test_size_mismatch_detected():
    bad = MINI.replace("size=1", "size=2")
    with pytest.raises(ParseError):
        parse_scenario(bad)


def test_file_round_trip(tmp_path):
    path = tmp_path / "mini.scn"
    path.write_text(MINI, encoding="utf-8")
    scn = load_scenario(str(path))
    assert scn.system.size == 1
    assert invariant_seq(scn.system, "c", 3) == [2, 4, 8]


def test_builtin_text_is_self_consistent():
    for key in ("c7", "z3z3"):
        scn = parse_scenario(BUILTINS[key], name=key)
        for kind, want in scn.expect_terms.items():
            got = invariant_seq(scn.system, kind, len(want))
            assert got == [int(v) for v in want], (key, kind)
