import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfloor import cache, classnum


def test_round_trip_is_byte_identical(tmp_path):
    path = tmp_path / "h.cache"
    cache.store(path, {-7: 1, -23: 3})
    original = path.read_bytes()
    assert original == b"qfloor-classnum-cache v1\n-7\t1\n-23\t3\n"
    cache.store(path, cache.load(path))
    assert path.read_bytes() == original


def test_header_only_is_empty(tmp_path):
    path = tmp_path / "h.cache"
    path.write_text("qfloor-classnum-cache v1\n")
    assert cache.load(path) == {}


def test_missing_file_is_empty(tmp_path):
    assert cache.load(tmp_path / "absent") == {}


@pytest.mark.parametrize(
    "text",
    [
        "qfloor-classnum-cache v2\n-7\t1\n",
        "",
        "qfloor-classnum-cache v1\n-7 1\n",
        "qfloor-classnum-cache v1\n-23\t3\n-7\t1\n",
        "qfloor-classnum-cache v1\n-7\t0\n",
        "qfloor-classnum-cache v1\n-7\tx\n",
        "qfloor-classnum-cache v1\n7\t1\n",
    ],
)
def test_malformed_file_warns_and_is_empty(tmp_path, text):
    path = tmp_path / "h.cache"
    path.write_text(text)
    with pytest.warns(cache.CacheWarning):
        assert cache.load(path) == {}


def test_binary_garbage_warns(tmp_path):
    path = tmp_path / "h.cache"
    path.write_bytes(b"\xff\xfe\x00junk")
    with pytest.warns(cache.CacheWarning):
        assert cache.load(path) == {}


@given(st.dictionaries(st.integers(-10**9, -1), st.integers(1, 10**6), max_size=50))
def test_dumps_parse_inverse(memo):
    assert cache.parse(cache.dumps(memo)) == memo


def test_seed_and_save_memo(tmp_path):
    path = tmp_path / "h.cache"
    classnum.memo_clear()
    classnum.class_number_dirichlet(-23)
    cache.save_memo(path)
    classnum.memo_clear()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert cache.seed_memo(path) == 1
    assert classnum.memo_snapshot() == {-23: 3}
