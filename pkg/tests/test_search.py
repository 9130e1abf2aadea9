"""Staged search: soundness, stage-1 completeness, determinism."""

from qacodes.algebra import AbelianGroup
from qacodes.concatenation import is_qa, qa_from_constituents
from qacodes.idempotents import decompose_algebra
from qacodes.linear_codes import LinearCode, gaussian_binomial
from qacodes.search import SearchSpec, search, stage1_filter

G33 = AbelianGroup((3, 3))


def test_target_beyond_length_is_empty():
    res = search(SearchSpec(q=2, group=G33, index=3, d_min=28))
    assert res.codes == []


def test_stage1_filter_example():
    spec = SearchSpec(q=2, group=G33, index=3, d_min=12)
    dec = decompose_algebra(G33, 2)
    i = dec.class_index((1, 0))
    survivors = stage1_filter(spec, i)
    a = dec.spec.xi.code
    target = LinearCode(dec.spec.subfield(2), 3, [[1, a, 1]])
    match = [d for outer, d in survivors if outer == target]
    assert match and match[0] >= 12
    # every survivor's concatenation distance is exact and >= 12
    for outer, d in survivors:
        qa = qa_from_constituents(G33, 2, 3, {i: outer})
        assert qa.flattened.min_distance() == d >= 12
    # nothing with a weight-1 outer word can survive: its concatenation has
    # distance 6 < 12, so survivor count must match the direct census
    full = [outer for outer in _all_nonzero(dec, i, 3)
            if qa_from_constituents(G33, 2, 3, {i: outer}).flattened.min_distance() >= 12]
    assert len(full) == len(survivors)


def _all_nonzero(dec, i, ell):
    from qacodes.linear_codes import enumerate_codes
    k = dec.classes[i].size
    return [c for c in enumerate_codes(dec.spec.subfield(k), ell) if c.dim]


def test_stage1_low_target_keeps_every_nonzero_code():
    spec = SearchSpec(q=2, group=G33, index=2, d_min=1)
    dec = decompose_algebra(G33, 2)
    for i in (0, 1):
        survivors = stage1_filter(spec, i)
        k = dec.classes[i].size
        want = sum(gaussian_binomial(2, j, 2 ** k) for j in (1, 2))
        assert len(survivors) == want


def test_search_soundness_and_determinism():
    spec = SearchSpec(q=2, group=G33, index=2, d_min=8)
    res1 = search(spec)
    res2 = search(spec)
    assert [(e.params, e.fingerprint) for e in res1.codes] == \
        [(e.params, e.fingerprint) for e in res2.codes]
    assert res1.codes, "this target is reachable"
    fingerprints = [e.fingerprint for e in res1.codes]
    assert len(set(fingerprints)) == len(fingerprints)
    for e in res1.codes:
        qa = qa_from_constituents(G33, 2, 2, dict(e.assignment))
        flat = qa.flattened
        assert is_qa(flat, G33)
        assert flat.min_distance() == e.params.distance >= 8
        wd = tuple(int(x) for x in flat.weight_distribution())
        assert e.fingerprint == (flat.length, flat.dim, wd)
    # output ordering: dimension ascending, then fingerprint
    keys = [(e.params.dim, e.fingerprint) for e in res1.codes]
    assert keys == sorted(keys)


def test_search_dim_target_filters_output():
    full = search(SearchSpec(q=2, group=G33, index=2, d_min=8))
    only4 = search(SearchSpec(q=2, group=G33, index=2, d_min=8, dim_target=4))
    want = {e.fingerprint for e in full.codes if e.params.dim == 4}
    assert {e.fingerprint for e in only4.codes} == want


def test_no_survivor_contains_a_pruned_summand():
    spec = SearchSpec(q=2, group=G33, index=2, d_min=8)
    res = search(spec)
    dec = decompose_algebra(G33, 2)
    stage1_ok = {i: {outer for outer, _ in stage1_filter(spec, i)}
                 for i in range(dec.class_count)}
    for e in res.codes:
        for i, outer in e.assignment:
            assert outer in stage1_ok[i]


def test_index3_regression_contains_reference_code():
    from qacodes.reference import qa_27_6_12
    res = search(SearchSpec(q=2, group=G33, index=3, d_min=12, dim_target=6))
    want = tuple(int(x) for x in qa_27_6_12().flattened.weight_distribution())
    assert any(e.fingerprint[2] == want for e in res.codes)
    assert all(e.params.distance >= 12 and e.params.dim == 6 for e in res.codes)
