import pytest

from genocchi.exactseq import _CACHE


@pytest.fixture(scope="session")
def bernoulli_800():
    """Shared exact Bernoulli values up to subscript 800 (one fill per session)."""
    _CACHE.fill_to(800)
    return _CACHE


@pytest.fixture()
def tmp_cache(tmp_path, monkeypatch):
    """Isolated survey cache directory; also shields tests from GENOCCHI_CACHE_DIR."""
    monkeypatch.delenv("GENOCCHI_CACHE_DIR", raising=False)
    d = tmp_path / "cache"
    return d
