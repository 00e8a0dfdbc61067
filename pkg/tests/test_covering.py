from itertools import product

import pytest

from combnull import (
    ZZ,
    CoverInstance,
    Inapplicable,
    MultisetGrid,
    Poly,
    PuncturedGrid,
    ScaleExceeded,
    UnsupportedField,
    Zmod,
    affine_blocking_bound,
    blocking_audit,
    covering_audit,
    exists_blocking_of_size,
    minimal_blocking_size,
    point_cover_threshold,
)
from combnull.covering import affine_hyperplanes
from conftest import P


def threshold_by_enumeration(psi, t):
    best = -1
    tops = [m * t for m in psi]  # beta_i <= psi_i * t - 1 in the admissible set
    for beta in product(*(range(top) for top in tops)):
        if sum(b // m for b, m in zip(beta, psi)) <= t - 1:
            best = max(best, sum(beta))
    return best + 1


def test_threshold_examples():
    assert point_cover_threshold((1, 1), 1) == 1
    assert point_cover_threshold((1, 1, 1), 3) == 3
    assert point_cover_threshold((2, 3), 1) == 4
    assert point_cover_threshold((4,), 2) == 8


def test_threshold_matches_enumeration_exhaustive():
    for n in (1, 2, 3):
        for psi in product((1, 2, 3, 4), repeat=n):
            for t in (1, 2, 3, 4):
                assert point_cover_threshold(psi, t) == threshold_by_enumeration(
                    psi, t
                ), (psi, t)


def coordinate_cover_instance():
    grid = MultisetGrid.build(ZZ, [[0, 1], [0, 1]])
    pg = PuncturedGrid.build(grid, [[0], [0]])
    planes = [
        (P("x1 - 1", nvars=2), 1),
        (P("x2 - 1", nvars=2), 1),
    ]
    return CoverInstance.build(pg, planes, 1)


def test_covering_audit_bound_holds():
    report = covering_audit(coordinate_cover_instance())
    assert report.verdict == "bound_holds"
    assert report.escape_point == (0, 0)
    assert report.sum_degrees == 2
    assert report.product_degree == 2
    assert max(report.bounds) == 2


def test_covering_audit_uncovered():
    grid = MultisetGrid.build(ZZ, [[0, 1], [0, 1]])
    pg = PuncturedGrid.build(grid, [[0], [0]])
    report = covering_audit(CoverInstance.build(pg, [], 1))
    assert report.verdict == "hypotheses_unmet"
    assert not report.hypothesis_coverage
    assert report.uncovered_point is not None


def test_covering_audit_no_escape_point():
    grid = MultisetGrid.build(ZZ, [[0, 1], [0, 1]])
    pg = PuncturedGrid.build(grid, [[0], [0]])
    planes = [
        (P("x1 - 1", nvars=2), 1),
        (P("x2 - 1", nvars=2), 1),
        (P("x1", nvars=2) * P("x2", nvars=2), 2),
    ]
    report = covering_audit(CoverInstance.build(pg, planes, 1))
    assert report.verdict == "hypotheses_unmet"
    assert report.hypothesis_coverage
    assert not report.hypothesis_escape


def test_covering_audit_gate():
    grid = MultisetGrid.build(Zmod(6), [[0, 3]])
    pg = PuncturedGrid.build(grid, [[0]])
    with pytest.raises(Inapplicable):
        covering_audit(CoverInstance.build(pg, [], 1))


def test_covering_audit_multiplicity_instance():
    # doubled coverage requirement at t = 2 on a one-dimensional grid
    grid = MultisetGrid.build(ZZ, [[0, 1, 2]])
    pg = PuncturedGrid.build(grid, [[0]])
    planes = [(P("x1 - 1"), 1), (P("x1 - 1"), 1), (P("x1 - 2"), 1), (P("x1 - 2"), 1)]
    inst = CoverInstance.build(pg, planes, 2)
    report = covering_audit(inst)
    assert report.verdict == "bound_holds"
    assert max(report.bounds) == (2 - 1) * 2 + 2


def test_cover_instance_degree_validation():
    grid = MultisetGrid.build(ZZ, [[0, 1]])
    pg = PuncturedGrid.build(grid, [[0]])
    with pytest.raises(ValueError):
        CoverInstance.build(pg, [(P("x1 - 1"), 2)], 1)


def test_affine_blocking_bound_values():
    assert affine_blocking_bound(2, 2, 1) == 3
    assert affine_blocking_bound(3, 2, 1) == 5
    assert affine_blocking_bound(2, 2, 2) == 4
    with pytest.raises(UnsupportedField):
        affine_blocking_bound(4, 2, 1)
    with pytest.raises(UnsupportedField):
        affine_blocking_bound(9, 2, 1)


def test_hyperplane_enumeration_counts():
    assert len(list(affine_hyperplanes(2, 2))) == 6
    assert len(list(affine_hyperplanes(3, 2))) == 12
    assert len(list(affine_hyperplanes(2, 3))) == 14


def test_blocking_audit_examples():
    report = blocking_audit(2, 2, 1, [(0, 1), (1, 0), (1, 1)])
    assert report.blocked and report.size == report.bound == 3

    axes_points = [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]
    report3 = blocking_audit(3, 2, 1, axes_points)
    assert report3.blocked and report3.size == report3.bound == 5

    missing = blocking_audit(2, 2, 1, [(0, 1), (1, 0)])
    assert not missing.blocked
    assert missing.unblocked_hyperplane is not None


def test_blocking_multiset_multiplicity():
    # t = 2 blocking counts points with multiplicity
    doubled = [(0, 1), (0, 1), (1, 0), (1, 0), (1, 1), (1, 1)]
    report = blocking_audit(2, 2, 2, doubled)
    assert report.blocked


def test_minimal_blocking_sizes():
    assert minimal_blocking_size(2, 2, 1)[0] == 3
    assert minimal_blocking_size(3, 2, 1)[0] == 5
    assert not exists_blocking_of_size(2, 2, 1, 2)[0]
    assert not exists_blocking_of_size(3, 2, 1, 4)[0]


def test_scale_guard():
    with pytest.raises(ScaleExceeded):
        blocking_audit(7, 5, 1, [])
    with pytest.raises(ValueError):
        blocking_audit(2, 2, 1, [(0, 1, 1)])


def test_covering_degree_inequality_on_random_instances(rng):
    # coordinate-plane covers of random Condition (D) grids satisfy both
    # hypotheses by construction; the audit then asserts the inequality
    # internally and must return bound_holds every time
    for _ in range(25):
        n = rng.randint(1, 3)
        t = rng.randint(1, 2)
        supports = []
        punctures = []
        for _ in range(n):
            size = rng.randint(2, 3)
            values = sorted(rng.sample(range(-3, 7), size))
            keep = rng.randint(1, size - 1)
            supports.append(values)
            punctures.append(values[:keep])
        grid = MultisetGrid.build(ZZ, supports)
        pg = PuncturedGrid.build(grid, punctures)
        planes = []
        for k in range(n):
            off = [u for u in supports[k] if u not in set(punctures[k])]
            for u in off:
                mono = Poly.variable(ZZ, n, k) - Poly.constant(ZZ, n, u)
                threshold = point_cover_threshold((1,) * n, t)
                planes.extend([(mono, 1)] * threshold)
        report = covering_audit(CoverInstance.build(pg, planes, t))
        assert report.verdict == "bound_holds"
