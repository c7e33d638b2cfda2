"""Shared fixtures: the builtin corpus, lazily-built oracle groups, and one
full campaign run reused by every test that needs campaign rows."""

import time

import pytest

import oracles
from sigmagroups import CampaignConfig, builtin_corpus, run_campaign


@pytest.fixture(scope="session")
def corpus():
    """name -> CorpusEntry for every builtin group."""
    return {e.name: e for e in builtin_corpus()}


@pytest.fixture(scope="session")
def oracle_group(corpus):
    """Callable name -> TupleGroup, built once per group."""
    cache = {}

    def get(name):
        if name not in cache:
            e = corpus[name]
            gens = [tuple(p.images) for p in e.generators]
            cache[name] = oracles.TupleGroup(gens, e.degree)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def campaign():
    """One full single-process campaign over the builtin corpus.

    Returns {"rows": [row dicts], "elapsed": seconds}.  zero_millis keeps the
    rows deterministic so assertions can compare them structurally.
    """
    entries = builtin_corpus()
    t0 = time.perf_counter()
    rows = run_campaign(entries, CampaignConfig(jobs=1, zero_millis=True))
    return {"rows": rows, "elapsed": time.perf_counter() - t0}
