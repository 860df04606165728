import pytest

from conftest import BFILE_DIR
from polygram.oeis import BFileError, OeisSequence, align, find_bfile, parse_bfile, parse_bfile_text


def test_parse_basic():
    seq = parse_bfile_text("1 1\n2 2\n3 4\n4 9\n")
    assert seq.entries == {1: 1, 2: 2, 3: 4, 4: 9}
    assert seq.offset == 1


def test_parse_skips_comments_and_blanks():
    seq = parse_bfile_text("# A006958\n\n1 1\n  \n2 2\n")
    assert seq.entries == {1: 1, 2: 2}


def test_parse_reports_malformed_line_number():
    with pytest.raises(BFileError) as err:
        parse_bfile_text("1 1\n2 2\n3 x\n")
    assert err.value.line == 3


def test_parse_rejects_gaps_and_empty_files():
    with pytest.raises(BFileError):
        parse_bfile_text("1 1\n3 2\n")
    with pytest.raises(BFileError):
        parse_bfile_text("# nothing\n")
    with pytest.raises(BFileError):
        parse_bfile_text("1 1 1\n")


def test_big_values_survive():
    big = 3**200
    assert parse_bfile_text(f"0 {big}\n").entries[0] == big


def test_bfile_round_trip():
    seq = OeisSequence("A000001", {0: 1, 1: 1, 2: 10**40})
    assert parse_bfile_text(seq.to_bfile()).entries == seq.entries


def test_fixture_files():
    for seq_id in ("A006958", "A174158", "A045943", "A000891", "A319743"):
        path = find_bfile(BFILE_DIR, seq_id)
        assert path is not None
        assert parse_bfile(path).id == seq_id
    assert find_bfile(BFILE_DIR, "A000000") is None


def test_align_unique_and_offset():
    seq = parse_bfile_text("0 0\n1 3\n2 9\n3 18\n4 30\n5 45\n6 63\n")
    result = align([3, 9, 18, 30, 45, 63, 84], seq)
    assert result.ok and result.start == 1 and result.shared == 6


def test_align_reports_first_mismatch():
    seq = parse_bfile_text("1 1\n2 2\n3 4\n4 9\n5 20\n6 46\n7 105\n8 738\n")
    result = align([1, 2, 4, 9, 20, 46, 105, 242], seq)
    assert not result.ok
    assert result.mismatch == (7, 738, 242)


def test_align_refuses_ambiguity_and_absence():
    seq = parse_bfile_text("\n".join(f"{i} 1" for i in range(12)))
    assert "ambiguous" in align([1] * 6, seq).detail
    assert not align([2, 3, 4, 5, 6], seq).ok


def test_align_min_shared():
    seq = parse_bfile_text("1 1\n2 2\n3 3\n4 4\n5 5\n6 6\n")
    assert not align([1, 2, 3, 4, 5, 6], seq, min_shared=10).ok
    assert align([1, 2, 3, 4, 5, 6], seq, min_shared=6).ok
