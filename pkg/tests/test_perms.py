"""Permutation presentations, translation actions, and Maschke spot checks."""

import itertools

import pytest

from cyclomod import QQ
from cyclomod.linalg import DenseMatrix, SpanSolver, rref
from cyclomod.decompose import complete_decomposition, check_report
from cyclomod.perms import (
    PermutationPresentation,
    compose,
    left_translation_action,
    permutation_module,
    symmetric_group,
)


def s3_presentation():
    return PermutationPresentation(3, [("s1", (1, 0, 2)), ("s2", (0, 2, 1))])


def test_presentation_validation():
    with pytest.raises(ValueError):
        PermutationPresentation(0, [])
    with pytest.raises(ValueError):
        PermutationPresentation(3, [("s1", (0, 1))])
    with pytest.raises(ValueError):
        PermutationPresentation(3, [("s1", (0, 1, 1))])
    with pytest.raises(ValueError):
        PermutationPresentation(3, [("s1", (0, 1, 2)), ("s1", (1, 0, 2))])


def test_permutation_matrices_are_permutation_matrices():
    p = s3_presentation()
    action = p.action()
    for label in p.labels:
        mat = action.matrices[label]
        for i in range(3):
            row_ones = sum(1 for x in mat.row(i) if x)
            col_ones = sum(1 for x in mat.column(i) if x)
            assert row_ones == col_ones == 1
            assert all(x.value in (0, 1) for x in mat.row(i))
        # orthogonality: transpose is the inverse
        assert mat * mat.transpose() == DenseMatrix.identity(QQ, 3)


def test_matrix_composition_order():
    # column i of the matrix holds e_{p[i]}, so matrices compose like the permutations
    p = s3_presentation()
    action = p.action()
    s1, s2 = action.matrices["s1"], action.matrices["s2"]
    composed = compose(p.generators["s1"], p.generators["s2"])
    expected = PermutationPresentation(3, [("c", composed)]).action().matrices["c"]
    assert s1 * s2 == expected


def test_natural_module_dimensions():
    p = s3_presentation()
    assert permutation_module(p, (1, 0, 0)).dim == 3
    assert permutation_module(p, (1, 1, 1)).dim == 1
    with pytest.raises(ValueError):
        permutation_module(p, (1, 0))


def test_trivial_group_module():
    trivial = PermutationPresentation(3, [])
    m = permutation_module(trivial, (2, 1, 0))
    assert m.dim == 1
    report = complete_decomposition(m)
    assert report.signature == (1,)


def test_left_translation_s3():
    elements = symmetric_group(3)
    gens = [elements.index((1, 0, 2)), elements.index((0, 2, 1))]
    p = left_translation_action(elements, gens)
    assert p.degree == 6
    assert p.labels == ("s1", "s2")
    m = permutation_module(p, (1, 0, 0, 0, 0, 0))
    assert m.dim == 6
    report = complete_decomposition(m)
    assert report.signature == (1, 1, 2, 2)
    assert report.fully_decomposed
    check_report(report)


def test_left_translation_cyclic_three():
    elements = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    p = left_translation_action(elements, [1])
    assert p.degree == 3
    assert p.generators["s1"] == (1, 2, 0) or p.generators["s1"] == (2, 0, 1)
    m = permutation_module(p, (1, 0, 0))
    assert m.dim == 3
    report = complete_decomposition(m)
    assert report.signature == (1, 2)
    # the 2-dimensional leaf is simple because its commutant is Q(cube root of 1)
    assert report.fully_decomposed


def test_left_translation_trivial_group():
    p = left_translation_action([(0,)], [])
    assert p.degree == 1
    assert p.labels == ()


def test_closure_violation_witness():
    elements = [(0, 1, 2), (1, 0, 2), (0, 2, 1)]
    with pytest.raises(ValueError) as err:
        left_translation_action(elements, [1])
    assert "closure violation" in str(err.value)
    with pytest.raises(ValueError):
        left_translation_action(elements, [7])
    with pytest.raises(ValueError):
        left_translation_action([(0, 1), (0, 1)], [0])
    with pytest.raises(ValueError):
        left_translation_action([], [])


def _height_one_vectors(d):
    out = []
    for entries in itertools.product((-1, 0, 1), repeat=d):
        if not any(entries):
            continue
        first = next(x for x in entries if x)
        if first == 1:
            out.append(entries)
    return out


def _canonical_span(vectors, d):
    m = DenseMatrix(QQ, [list(v) for v in vectors], cols=d)
    r = rref(m)
    return tuple(r.matrix.row(i) for i in range(r.rank))


def _stable_spans(action, max_basis):
    d = action.dim
    vectors = _height_one_vectors(d)
    spans = {}
    for size in range(1, max_basis + 1):
        for combo in itertools.combinations(vectors, size):
            key = _canonical_span(combo, d)
            if 0 < len(key) < d:
                spans[key] = None
    stable = []
    for rows in spans:
        solver = SpanSolver(QQ, d)
        for v in rows:
            solver.add(v)
        ok = True
        for label in action.labels:
            mat = action.matrices[label]
            if not all(solver.contains(mat.apply(v)) for v in rows):
                ok = False
                break
        if ok:
            stable.append(rows)
    return stable


@pytest.mark.parametrize(
    "presentation",
    [
        PermutationPresentation(3, [("s1", (1, 0, 2)), ("s2", (0, 2, 1))]),
        PermutationPresentation(4, [("r", (1, 2, 3, 0))]),
    ],
)
def test_maschke_complement_among_small_height_subspaces(presentation):
    # every stable subspace found at height one has a stable complement
    # in the same family: the semisimplicity of group actions over Q,
    # checked by bounded enumeration rather than by the decomposition code
    action = presentation.action()
    d = action.dim
    stable = _stable_spans(action, d - 1)
    assert stable, "enumeration found no proper stable subspaces"
    for rows in stable:
        found = False
        for other in stable:
            if len(rows) + len(other) != d:
                continue
            solver = SpanSolver(QQ, d)
            for v in rows + other:
                solver.add(v)
            if solver.rank == d:
                found = True
                break
        assert found, f"no stable complement for {rows}"
