"""Property-based checks: the pruned solver against brute force, and friends."""

import random

from conftest import (
    oracle_scan_edges,
    random_mixed_hypergraph,
    witness_is_isomorphism,
)
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyper import (
    DimsSpec,
    Partition,
    brute_force_spectrum,
    chromatic_spectrum,
    enumerate_feasible_partitions,
    is_isomorphic,
    is_proper_coloring,
    make_mixed_hypergraph,
    product_bihypergraph,
)


@st.composite
def mixed_hypergraphs(draw, max_vertices=9, max_edges=20):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = [(i + 1,) for i in range(n)]
    pool = []
    if n >= 2:
        edge = st.lists(
            st.integers(min_value=0, max_value=n - 1),
            min_size=2,
            max_size=min(4, n),
            unique=True,
        )
        pool = draw(st.lists(edge, max_size=max_edges))
    flags = draw(st.lists(st.tuples(st.booleans(), st.booleans()),
                          min_size=len(pool), max_size=len(pool)))
    c_edges = [e for e, (in_c, _) in zip(pool, flags) if in_c]
    d_edges = [e for e, (_, in_d) in zip(pool, flags) if in_d]
    return make_mixed_hypergraph(vertices, c_edges, d_edges)


@settings(max_examples=60, deadline=None)
@given(mixed_hypergraphs())
def test_solver_matches_brute_force(h):
    assert chromatic_spectrum(h) == brute_force_spectrum(h)


@settings(max_examples=40, deadline=None)
@given(mixed_hypergraphs(max_vertices=7))
def test_every_emitted_partition_is_proper(h):
    for p in enumerate_feasible_partitions(h):
        assert is_proper_coloring(h, p)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=9),
       st.randoms(use_true_random=False))
def test_partition_canonical_under_relabeling(labels, rng):
    renaming = list(range(6))
    rng.shuffle(renaming)
    assert Partition.from_labels(labels) == Partition.from_labels(
        [renaming[lab] for lab in labels]
    )


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(3, 3), (4, 3), (3, 3, 3)]))
def test_product_builder_matches_triple_scan(dims):
    h = product_bihypergraph(DimsSpec(dims))
    assert list(h.bi_edges) == oracle_scan_edges(h.vertices)


@settings(max_examples=25, deadline=None)
@given(mixed_hypergraphs(max_vertices=7, max_edges=10),
       st.randoms(use_true_random=False))
def test_relabeled_instances_always_isomorphic(h, rng):
    perm = list(range(h.n))
    rng.shuffle(perm)
    vertices = [None] * h.n
    for old, new in enumerate(perm):
        vertices[new] = h.vertices[old]
    other = make_mixed_hypergraph(
        vertices,
        [tuple(perm[v] for v in e) for e in h.c_edges],
        [tuple(perm[v] for v in e) for e in h.d_edges],
    )
    witness = is_isomorphic(h, other)
    assert witness is not None
    assert witness_is_isomorphism(h, other, witness)


def test_seeded_randoms_do_not_shrink_coverage():
    # a plain seeded sweep alongside hypothesis, for a guaranteed volume
    rng = random.Random(424242)
    for _ in range(25):
        h = random_mixed_hypergraph(rng)
        assert chromatic_spectrum(h) == brute_force_spectrum(h)
