import json

import pytest

from schubdiag import cache
from schubdiag.rootsys import _REGISTERED, build, enumerate_weyl, weyl_group


@pytest.fixture(autouse=True)
def clean_registry():
    yield
    _REGISTERED.clear()


def test_roundtrip_g2(tmp_path):
    rs = build("G2")
    elems = enumerate_weyl(rs)
    cache.save(tmp_path, rs, elems)
    loaded = cache.load(tmp_path, rs)
    assert len(loaded) == 12
    assert [(w.matrix, w.word, w.length) for w in loaded] == [(w.matrix, w.word, w.length) for w in elems]


def test_file_is_bit_stable(tmp_path):
    rs = build("B", 3)
    cache.load_or_compute(rs, tmp_path)
    first = cache.cache_path(tmp_path, rs).read_bytes()
    cache.save(tmp_path, rs, cache.load(tmp_path, rs))
    assert cache.cache_path(tmp_path, rs).read_bytes() == first


def test_missing_cache_recomputes_silently(tmp_path, recwarn):
    rs = build("A", 3)
    W = cache.load_or_compute(rs, tmp_path / "sub")
    assert len(W) == 24 and not recwarn.list
    assert cache.cache_path(tmp_path / "sub", rs).exists()
    assert weyl_group(rs) is W


@pytest.mark.parametrize(
    "corrupt",
    [
        lambda d: "garbage{",
        lambda d: json.dumps({**d, "elements": d["elements"][:-1]}),
        lambda d: json.dumps({**d, "length_counts": [1, 1, 2, 2, 2, 3, 1]}),
        lambda d: json.dumps({**d, "elements": [d["elements"][0]] * len(d["elements"])}),
        lambda d: json.dumps({**d, "elements": [{"word": [1, 1], "matrix": e["matrix"]} for e in d["elements"]]}),
        lambda d: json.dumps({**d, "simple_roots": [[1, 0], [0, 2]]}),
    ],
)
def test_corrupt_cache_warns_recomputes_and_overwrites(tmp_path, corrupt):
    rs = build("G2")
    path = cache.save(tmp_path, rs, enumerate_weyl(rs))
    good = path.read_text()
    path.write_text(corrupt(json.loads(good)))
    with pytest.warns(cache.CacheWarning):
        W = cache.load_or_compute(rs, tmp_path)
    assert len(W) == 12
    assert path.read_text() == good


def test_non_reduced_words_rejected():
    # padded words still reproduce their matrices and the stored profile,
    # but the profile no longer matches the group's Poincare polynomial
    rs = build("G2")
    d = cache.dump(rs, enumerate_weyl(rs))
    mid = d["elements"][3]
    mid["word"] = mid["word"] + [1, 1]
    d["length_counts"] = [1, 2, 1, 2, 3, 2, 1]
    with pytest.raises(cache.CorruptCache, match="Poincare"):
        cache.parse(rs, d)


def test_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    rs = build("C", 2)
    cache.load_or_compute(rs)
    assert cache.cache_path(tmp_path, rs).exists()


@pytest.mark.parametrize("name", ["A4", "B4", "C3", "D4", "G2"])
def test_poincare_profile_matches_enumeration(name):
    from schubdiag.rootsys import from_string

    rs = from_string(name)
    assert cache.poincare_coefficients(rs) == weyl_group(rs).length_counts()
