import logging

import pytest
from hypothesis import given, settings, strategies as st

from seqlab.storage import (
    CacheError,
    SequenceRecord,
    cache_load,
    cache_path,
    cache_store,
    format_bfile,
    parse_bfile,
    record_to_bfile,
    resolve_cache_dir,
)

from helpers import catalan

terms_strategy = st.lists(
    st.integers(0, 10**40), min_size=0, max_size=30
).map(lambda rest: tuple([1] + rest))


def record(d=3, r=1, terms=(1, 1, 2, 5, 14), **kw):
    return SequenceRecord(d=d, r=r, terms=terms, **kw)


class TestSequenceRecord:
    def test_valid(self):
        rec = record()
        assert rec.terms == (1, 1, 2, 5, 14)
        assert rec.provenance == "computed"
        assert rec.timestamp

    def test_rejects_empty_terms(self):
        with pytest.raises(ValueError):
            record(terms=())

    def test_rejects_wrong_first_term(self):
        with pytest.raises(ValueError):
            record(terms=(2, 3))

    def test_rejects_bad_provenance(self):
        with pytest.raises(ValueError):
            record(provenance="guessed")

    def test_rejects_bad_key(self):
        with pytest.raises(ValueError):
            record(d=1)
        with pytest.raises(ValueError):
            record(r=0)


class TestBfileFormat:
    def test_plain_text(self):
        assert format_bfile([1, 1, 2]) == "0 1\n1 1\n2 2\n"

    def test_comments_lead(self):
        text = format_bfile([1, 5], comments=("hello",))
        assert text == "# hello\n0 1\n1 5\n"

    def test_parse_round_trip_with_metadata(self):
        rec = record(provenance="extended-by-recurrence")
        terms, meta = parse_bfile(record_to_bfile(rec))
        assert tuple(terms) == rec.terms
        assert meta["d"] == "3" and meta["r"] == "1"
        assert meta["provenance"] == "extended-by-recurrence"
        assert meta["timestamp"] == rec.timestamp

    @given(terms_strategy)
    @settings(max_examples=50, deadline=None)
    def test_emission_parses_back_identically(self, terms):
        parsed, _ = parse_bfile(format_bfile(terms))
        assert tuple(parsed) == terms

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "0 1\nx 2\n",
            "0 1\n2 2\n",        # index gap
            "1 1\n",             # wrong start index
            "0 1 9\n",           # extra field
            "0 1\n# late comment\n1 1\n",
        ],
    )
    def test_parse_rejects_damage(self, text):
        with pytest.raises(ValueError):
            parse_bfile(text)


class TestCache:
    def test_path_layout(self, tmp_path):
        assert cache_path(tmp_path, 4, 2) == tmp_path / "A_d4_r2.bfile"

    def test_resolution_order(self, tmp_path, monkeypatch):
        monkeypatch.delenv("SEQLAB_CACHE", raising=False)
        assert resolve_cache_dir("x") == resolve_cache_dir("x")
        assert str(resolve_cache_dir()) == ".seqlab"
        monkeypatch.setenv("SEQLAB_CACHE", str(tmp_path))
        assert resolve_cache_dir() == tmp_path
        assert resolve_cache_dir("explicit") != tmp_path

    def test_round_trip(self, tmp_path):
        rec = record()
        cache_store(rec, tmp_path)
        loaded = cache_load(3, 1, tmp_path)
        assert loaded is not None
        assert loaded.terms == rec.terms
        assert loaded.provenance == rec.provenance

    def test_absent_key(self, tmp_path):
        assert cache_load(9, 9, tmp_path) is None

    def test_longer_store_wins(self, tmp_path):
        cache_store(record(terms=(1, 1, 2)), tmp_path)
        cache_store(record(terms=(1, 1, 2, 5, 14)), tmp_path)
        assert cache_load(3, 1, tmp_path).terms == (1, 1, 2, 5, 14)

    def test_shorter_store_rejected_with_notice(self, tmp_path, caplog):
        long_rec = record(terms=(1, 1, 2, 5, 14))
        cache_store(long_rec, tmp_path)
        with caplog.at_level(logging.WARNING, logger="seqlab.storage"):
            kept = cache_store(record(terms=(1, 1)), tmp_path)
        assert kept.terms == long_rec.terms
        assert any("keep-longest" in msg for msg in caplog.messages)
        assert cache_load(3, 1, tmp_path).terms == long_rec.terms

    def test_conflicting_overlap_raises(self, tmp_path):
        cache_store(record(terms=(1, 1, 2)), tmp_path)
        with pytest.raises(CacheError, match="disagree"):
            cache_store(record(terms=(1, 1, 3, 7)), tmp_path)

    def test_corrupt_file_reported_with_path(self, tmp_path):
        path = cache_path(tmp_path, 3, 1)
        path.write_text("0 1\nbroken line\n")
        with pytest.raises(CacheError) as excinfo:
            cache_load(3, 1, tmp_path)
        assert excinfo.value.path == path
        assert str(path) in str(excinfo.value)

    def test_key_metadata_mismatch_detected(self, tmp_path):
        cache_store(record(d=3, r=1), tmp_path)
        src = cache_path(tmp_path, 3, 1)
        src.rename(cache_path(tmp_path, 4, 1))
        with pytest.raises(CacheError, match="metadata"):
            cache_load(4, 1, tmp_path)

    def test_no_temp_files_left_behind(self, tmp_path):
        cache_store(record(), tmp_path)
        cache_store(record(d=5, r=2, terms=(1, 1)), tmp_path)
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["A_d3_r1.bfile", "A_d5_r2.bfile"]

    def test_big_terms_survive(self, tmp_path):
        big = tuple([1] + [catalan(n) for n in range(200, 204)])
        cache_store(record(terms=big), tmp_path)
        assert cache_load(3, 1, tmp_path).terms == big
