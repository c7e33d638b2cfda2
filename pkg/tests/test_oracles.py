"""Self-checks of the brute-force oracle against textbook facts.

The oracle is the measuring stick for the rest of the suite, so it gets its
own validation against hand-checkable and literature-standard values before
anything else trusts it.
"""

import oracles


def tg(corpus, name):
    e = corpus[name]
    return oracles.TupleGroup([tuple(p.images) for p in e.generators], e.degree)


# ---------------------------------------------------------------------------
# raw tuple arithmetic

def test_compose_applies_left_argument_first():
    p = (1, 2, 0)   # 0->1->2->0
    q = (0, 2, 1)   # swap 1,2
    assert oracles.compose(p, q) == (2, 1, 0)
    assert oracles.compose(q, p) == (1, 0, 2)


def test_inverse_and_identity():
    p = (2, 0, 3, 1)
    assert oracles.compose(p, oracles.inverse(p)) == oracles.identity(4)
    assert oracles.compose(oracles.inverse(p), p) == oracles.identity(4)
    assert oracles.inverse(oracles.identity(5)) == oracles.identity(5)


def test_close_tuples_generates_s3_from_transpositions():
    elems = oracles.close_tuples([(1, 0, 2), (0, 2, 1)], 3)
    assert len(elems) == 6
    assert oracles.identity(3) in elems


def test_close_tuples_empty_generators_is_trivial():
    assert oracles.close_tuples([], 4) == frozenset({oracles.identity(4)})


# ---------------------------------------------------------------------------
# subgroup enumeration against standard subgroup counts

def test_subgroup_counts_match_literature(corpus):
    expected = {"S3": 6, "C6": 4, "Q8": 6, "D8": 10, "A4": 10, "S4": 30, "A5": 59}
    for name, count in expected.items():
        assert len(tg(corpus, name).mt.all_subgroups()) == count, name


def test_s3_subgroup_orders(corpus):
    t = tg(corpus, "S3")
    assert sorted(len(s) for s in t.mt.all_subgroups()) == [1, 2, 2, 2, 3, 6]


def test_normal_subgroups_of_s3_a4_s4(corpus):
    assert sorted(len(s) for s in tg(corpus, "S3").mt.normal_subgroups()) == [1, 3, 6]
    assert sorted(len(s) for s in tg(corpus, "A4").mt.normal_subgroups()) == [1, 4, 12]
    assert sorted(len(s) for s in tg(corpus, "S4").mt.normal_subgroups()) == [1, 4, 12, 24]


def test_every_enumerated_set_is_closed(corpus):
    t = tg(corpus, "S4")
    for s in t.mt.all_subgroups():
        for a in s:
            for b in s:
                assert t.mt.table[a][b] in s


# ---------------------------------------------------------------------------
# solubility, nilpotency, derived series

def test_derived_series_of_s4(corpus):
    t = tg(corpus, "S4").mt
    full = frozenset(range(t.order))
    d1 = t.derived_of(full)
    d2 = t.derived_of(d1)
    d3 = t.derived_of(d2)
    assert [len(full), len(d1), len(d2), len(d3)] == [24, 12, 4, 1]


def test_solubility_flags(corpus):
    assert tg(corpus, "S4").mt.is_soluble()
    assert tg(corpus, "F20").mt.is_soluble()
    assert not tg(corpus, "A5").mt.is_soluble()


def test_nilpotency_flags(corpus):
    assert tg(corpus, "C6").mt.is_nilpotent()
    assert tg(corpus, "Q8").mt.is_nilpotent()
    assert tg(corpus, "D8").mt.is_nilpotent()
    assert not tg(corpus, "S3").mt.is_nilpotent()
    assert not tg(corpus, "A4").mt.is_nilpotent()


def test_sylow_parts(corpus):
    assert tg(corpus, "S4").mt.sylow_parts() == {2: 8, 3: 3}
    assert tg(corpus, "A5").mt.sylow_parts() == {2: 4, 3: 3, 5: 5}


# ---------------------------------------------------------------------------
# quotients and residuals

def test_quotient_of_s4_by_klein_four_is_s3_like(corpus):
    t = tg(corpus, "S4").mt
    v4 = next(s for s in t.normal_subgroups() if len(s) == 4)
    q = t.quotient(v4)
    assert q.order == 6
    assert q.is_soluble()
    assert not q.is_nilpotent()


def test_nilpotent_residual_orders(corpus):
    assert oracles.nilpotent_residual_order(tg(corpus, "C6")) == 1
    assert oracles.nilpotent_residual_order(tg(corpus, "S3")) == 3


# ---------------------------------------------------------------------------
# maximal subgroups, Frattini, centralizer

def test_maximal_subgroups_of_s3(corpus):
    orders = sorted(len(s) for s in oracles.maximal_image_sets(tg(corpus, "S3")))
    assert orders == [2, 2, 2, 3]


def test_frattini_orders(corpus):
    assert oracles.frattini_order(tg(corpus, "C4")) == 2
    assert oracles.frattini_order(tg(corpus, "S3")) == 1
    assert oracles.frattini_order(tg(corpus, "Q8")) == 2


def test_center_of_q8_has_order_two(corpus):
    t = tg(corpus, "Q8")
    z = oracles.centralizer_tuples(t.elements, t.elements)
    assert len(z) == 2
