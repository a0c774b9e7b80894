"""Endomorphism algebras of cyclic modules and splitting-element search.

compute_end builds the commutant of the restricted generator matrices:
all module-coordinate matrices commuting with every generator.  The
module decomposes exactly when that algebra holds an idempotent other
than 0 and 1, and any element that is neither nilpotent nor invertible
yields a splitting through its stable kernel/image pair, so the search
never needs the idempotent itself.

find_splitting_element runs fixed stages: the one-dimensional shortcut,
a deterministic scan of basis elements and their pairwise sums and
differences, exhaustive enumeration over a finite field when the algebra
is small enough, and over the rationals minimal-polynomial factorization
of scanned plus seeded random elements followed by a bounded integer box
sweep.  Everything is exact; when all budgets run out the verdict is
"undecided", never a guess.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .fields import FieldScalar, FieldSpec
from .linalg import (
    DenseMatrix,
    SpanSolver,
    Vector,
    column_space_basis,
    kernel_basis,
    mat_pow,
    rref,
)
from .modules import CyclicModule
from .polynomials import factor, min_poly


def commutant_basis(field: FieldSpec, dim: int, matrices: Sequence[DenseMatrix]) -> list:
    """Basis of all dim x dim matrices commuting with every given matrix.

    The unknown matrix is flattened row major; each given matrix S
    contributes the dim^2 linear conditions (X S - S X)_{ij} = 0.
    """
    if dim == 0:
        return []
    for s in matrices:
        if s.field != field:
            raise ValueError(f"matrix in {s.field}, expected {field}")
        if (s.rows, s.cols) != (dim, dim):
            raise ValueError(f"matrix is {s.rows}x{s.cols}, expected {dim}x{dim}")
    zero = field.zero()
    rows = []
    for s in matrices:
        for i in range(dim):
            for j in range(dim):
                row = [zero] * (dim * dim)
                for k in range(dim):
                    # x_{ik} s_{kj} from X S
                    row[i * dim + k] = row[i * dim + k] + s.entries[k][j]
                    # -s_{ik} x_{kj} from S X
                    row[k * dim + j] = row[k * dim + j] - s.entries[i][k]
                rows.append(row)
    constraint = DenseMatrix(field, rows, cols=dim * dim)
    basis = []
    for flat in kernel_basis(constraint):
        entries = [list(flat[i * dim:(i + 1) * dim]) for i in range(dim)]
        basis.append(DenseMatrix(field, entries, cols=dim))
    return basis


class EndoAlgebra:
    """The commutant algebra, with coordinates over a fixed matrix basis."""

    __slots__ = ("field", "module_dim", "basis", "action_mats", "_solver", "_identity_coords")

    def __init__(self, field, module_dim, basis, action_mats):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "module_dim", module_dim)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "action_mats", tuple(action_mats))
        solver = SpanSolver(field, module_dim * module_dim)
        for b in self.basis:
            if not solver.add(b.flatten()):
                raise ValueError("endomorphism basis is linearly dependent")
        object.__setattr__(self, "_solver", solver)
        ident = DenseMatrix.identity(field, module_dim)
        coords = solver.coordinates(ident.flatten()) if module_dim else ()
        if coords is None:
            raise ValueError("identity is outside the proposed endomorphism algebra")
        object.__setattr__(self, "_identity_coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("EndoAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def identity(self) -> DenseMatrix:
        return DenseMatrix.identity(self.field, self.module_dim)

    def identity_coords(self) -> Vector:
        return self._identity_coords

    def element(self, coords: Sequence) -> DenseMatrix:
        if len(coords) != self.dim:
            raise ValueError(f"{len(coords)} coordinates for a basis of {self.dim}")
        acc = DenseMatrix.zeros(self.field, self.module_dim, self.module_dim)
        for c, b in zip(coords, self.basis):
            c = self.field.scalar(c)
            if c:
                acc = acc + b.scale(c)
        return acc

    def coordinates(self, mat: DenseMatrix) -> Optional[Vector]:
        if (mat.rows, mat.cols) != (self.module_dim, self.module_dim):
            raise ValueError("matrix shape does not match the module")
        return self._solver.coordinates(mat.flatten())

    def contains(self, mat: DenseMatrix) -> bool:
        return self.coordinates(mat) is not None

    def left_mult_matrix(self, i: int) -> DenseMatrix:
        """Left multiplication by basis[i], in algebra coordinates."""
        columns = []
        for b in self.basis:
            coords = self.coordinates(self.basis[i] * b)
            if coords is None:
                raise RuntimeError("algebra basis is not multiplicatively closed")
            columns.append(coords)
        return DenseMatrix.from_columns(self.field, columns, rows=self.dim)

    def __repr__(self) -> str:
        return f"EndoAlgebra(dim={self.dim}, module_dim={self.module_dim}, {self.field})"


def compute_end(m: CyclicModule) -> EndoAlgebra:
    """Endomorphism algebra of a cyclic module, from its restricted action."""
    labels = m.action.labels
    mats = [m.restricted[s] for s in labels]
    basis = commutant_basis(m.field, m.dim, mats)
    return EndoAlgebra(m.field, m.dim, basis, tuple((s, m.restricted[s]) for s in labels))


def _require_member(e: "EndoAlgebra", mat: DenseMatrix):
    if not e.contains(mat):
        raise ValueError("matrix is not in the endomorphism algebra")


def is_nilpotent(e: EndoAlgebra, mat: DenseMatrix) -> bool:
    """Whether mat^module_dim vanishes (mat must lie in the algebra)."""
    _require_member(e, mat)
    return mat_pow(mat, e.module_dim).is_zero()


def is_invertible(e: EndoAlgebra, mat: DenseMatrix) -> bool:
    _require_member(e, mat)
    return rref(mat).rank == e.module_dim


def fitting_split(e: EndoAlgebra, mat: DenseMatrix):
    """(kernel, image) bases of mat^module_dim, or None when one side is trivial.

    Both sides are generator stable because mat commutes with the
    action, and they meet trivially because kernel and image of a
    high enough power always do.
    """
    for label, s in e.action_mats:
        if mat * s != s * mat:
            raise ValueError(f"matrix does not commute with generator {label!r}")
    power = mat_pow(mat, e.module_dim)
    ker = kernel_basis(power)
    im = column_space_basis(power)
    if not ker or not im:
        return None
    if len(ker) + len(im) != e.module_dim:
        raise RuntimeError("kernel and image dimensions do not add up")
    check = SpanSolver(e.field, e.module_dim)
    for v in list(ker) + list(im):
        if not check.add(v):
            raise RuntimeError("kernel and image of the stable power overlap")
    return tuple(ker), tuple(im)


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for the splitting-element search; defaults decide all small cases."""

    exhaustive_cap: int = 2 ** 22
    box_height: int = 5
    random_trials: int = 64
    seed: int = 0

    def as_dict(self) -> dict:
        return {
            "exhaustive_cap": self.exhaustive_cap,
            "box_height": self.box_height,
            "random_trials": self.random_trials,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Certificate:
    """Outcome of one splitting-element search, with enough data to re-check."""

    verdict: str                      # "decomposable" | "indecomposable" | "undecided"
    mode: str
    element: Optional[DenseMatrix]
    summands: Optional[tuple]         # pair of module-coordinate basis tuples
    budgets: dict
    diagnostics: dict = dc_field(default_factory=dict)


def _scan_candidates(e: EndoAlgebra):
    """Basis elements, then pairwise sums, then pairwise differences."""
    for b in e.basis:
        yield b
    n = e.dim
    for i in range(n):
        for j in range(i + 1, n):
            yield e.basis[i] + e.basis[j]
    if e.field.characteristic != 2:
        for i in range(n):
            for j in range(i + 1, n):
                yield e.basis[i] - e.basis[j]


def _try_fitting(e: EndoAlgebra, mat: DenseMatrix, mode: str, budgets: dict, diagnostics: dict):
    if mat.is_zero():
        return None
    power = mat_pow(mat, e.module_dim)
    if power.is_zero():
        return None
    if rref(mat).rank == e.module_dim:
        return None
    split = fitting_split(e, mat)
    if split is None:
        return None
    return Certificate("decomposable", mode, mat, split, budgets, diagnostics)


def _try_min_poly(e: EndoAlgebra, mat: DenseMatrix, budgets: dict, diagnostics: dict):
    """Character zero only: split along coprime factors of the minimal polynomial.

    Returns a certificate (decomposable or indecomposable) or None when
    the polynomial is a power of one irreducible of degree below dim E.
    """
    mp = min_poly(mat)
    factors = factor(mp)
    diag = dict(diagnostics)
    diag["min_poly_degree"] = mp.degree
    diag["factor_shape"] = [[f.degree, k] for f, k in factors]
    if len(factors) >= 2:
        f0, k0 = factors[0]
        first = f0 ** k0
        rest = mp.exact_div(first)
        ker_first = kernel_basis(first.evaluate_matrix(mat))
        ker_rest = kernel_basis(rest.evaluate_matrix(mat))
        if not ker_first or not ker_rest:
            raise RuntimeError("coprime factor kernels cannot be trivial")
        if len(ker_first) + len(ker_rest) != e.module_dim:
            raise RuntimeError("coprime factor kernels do not fill the module")
        return Certificate(
            "decomposable", "min-poly-split", mat, (tuple(ker_first), tuple(ker_rest)), budgets, diag
        )
    if factors and factors[0][1] == 1 and factors[0][0].degree == e.dim:
        # the element generates the whole algebra, which is then a field
        return Certificate("indecomposable", "field-generated", mat, None, budgets, diag)
    return None


def find_splitting_element(e: EndoAlgebra, config: Optional[SearchConfig] = None) -> Certificate:
    """Staged exact search for a decomposition witness in the algebra."""
    config = config or SearchConfig()
    budgets = config.as_dict()
    if e.module_dim == 0:
        raise ValueError("the zero module has no decomposition question")
    if e.dim == 1:
        return Certificate("indecomposable", "dimension-1", None, None, budgets, {"endo_dim": 1})

    diagnostics = {"endo_dim": e.dim}
    scanned = 0
    for mat in _scan_candidates(e):
        scanned += 1
        cert = _try_fitting(e, mat, "fitting-scan", budgets, dict(diagnostics, scanned=scanned))
        if cert is not None:
            return cert
    diagnostics["scanned"] = scanned

    p = e.field.characteristic
    if p != 0:
        total = p ** e.dim
        if total <= config.exhaustive_cap:
            elements = [e.field.scalar(v) for v in range(p)]
            ident = e.identity()
            count = 0
            for coords in itertools.product(elements, repeat=e.dim):
                count += 1
                mat = e.element(coords)
                if mat.is_zero() or mat == ident:
                    continue
                if mat * mat == mat:
                    ker = kernel_basis(mat)
                    im = column_space_basis(mat)
                    if len(ker) + len(im) != e.module_dim or not ker or not im:
                        raise RuntimeError("idempotent with inconsistent kernel and image")
                    return Certificate(
                        "decomposable",
                        "exhaustive-idempotent",
                        mat,
                        (tuple(im), tuple(ker)),
                        budgets,
                        dict(diagnostics, enumerated=count),
                    )
            return Certificate(
                "indecomposable", "exhaustive", None, None, budgets, dict(diagnostics, enumerated=count)
            )
        return Certificate(
            "undecided", "budget-exhausted", None, None, budgets,
            dict(diagnostics, reason=f"{p}^{e.dim} elements exceed the exhaustive cap"),
        )

    # characteristic zero: factor minimal polynomials of scanned then random elements
    rng = random.Random(config.seed)
    candidates = list(_scan_candidates(e))
    for _ in range(config.random_trials):
        coords = tuple(rng.randint(-3, 3) for _ in range(e.dim))
        if any(coords):
            candidates.append(e.element(coords))
    tried = 0
    for mat in candidates:
        if mat.is_zero():
            continue
        tried += 1
        cert = _try_min_poly(e, mat, budgets, dict(diagnostics, min_poly_tried=tried))
        if cert is not None:
            return cert
    diagnostics["min_poly_tried"] = tried

    # bounded integer box sweep, shells of growing height
    height = config.box_height
    while height > 0 and (2 * height + 1) ** e.dim > config.exhaustive_cap:
        height -= 1
    swept = 0
    for h in range(1, height + 1):
        for coords in itertools.product(range(-h, h + 1), repeat=e.dim):
            if max(abs(c) for c in coords) != h:
                continue
            swept += 1
            mat = e.element(coords)
            diag = dict(diagnostics, box_swept=swept, box_height_used=h)
            cert = _try_fitting(e, mat, "box-fitting", budgets, diag)
            if cert is not None:
                return cert
            cert = _try_min_poly(e, mat, budgets, diag)
            if cert is not None:
                return cert
    diagnostics["box_swept"] = swept
    diagnostics["box_height_used"] = height

    return Certificate("undecided", "budget-exhausted", None, None, budgets, diagnostics)


def verify_certificate(e: EndoAlgebra, cert: Certificate):
    """Re-check a certificate against the algebra; raises RuntimeError on failure."""
    if cert.verdict == "decomposable":
        if cert.element is None or cert.summands is None:
            raise RuntimeError("decomposable certificate is missing its witness")
        for label, s in e.action_mats:
            if cert.element * s != s * cert.element:
                raise RuntimeError(f"witness does not commute with generator {label!r}")
        left, right = cert.summands
        if not left or not right:
            raise RuntimeError("a summand is zero")
        if len(left) + len(right) != e.module_dim:
            raise RuntimeError("summand dimensions do not sum to the module dimension")
        solver = SpanSolver(e.field, e.module_dim)
        for v in list(left) + list(right):
            if not solver.add(v):
                raise RuntimeError("summand bases are not independent")
        for part in (left, right):
            part_solver = SpanSolver(e.field, e.module_dim)
            for v in part:
                part_solver.add(v)
            for label, s in e.action_mats:
                for v in part:
                    if not part_solver.contains(s.apply(v)):
                        raise RuntimeError(f"summand is not stable under generator {label!r}")
    elif cert.verdict == "indecomposable":
        if cert.mode == "dimension-1" and e.dim != 1:
            raise RuntimeError("dimension-1 verdict on a larger algebra")
        if cert.mode == "field-generated":
            if cert.element is None:
                raise RuntimeError("field-generated certificate is missing its element")
            factors = factor(min_poly(cert.element))
            if len(factors) != 1 or factors[0][1] != 1 or factors[0][0].degree != e.dim:
                raise RuntimeError("element does not generate a field of full dimension")
        if cert.mode == "exhaustive" and e.field.characteristic == 0:
            raise RuntimeError("exhaustive verdict claimed over an infinite field")
    elif cert.verdict == "undecided":
        if cert.element is not None or cert.summands is not None:
            raise RuntimeError("undecided certificate carries witness data")
    else:
        raise RuntimeError(f"unknown verdict {cert.verdict!r}")


def radical_char0(e: EndoAlgebra) -> list:
    """Basis of the Jacobson radical over Q, via the regular trace form.

    An element is radical exactly when the trace of left multiplication
    by (it times anything) vanishes; that is the classical criterion in
    characteristic zero.  Results are verified nilpotent and ideal-stable
    before returning.
    """
    if e.field.characteristic != 0:
        raise ValueError("the trace-form radical needs characteristic zero")
    d = e.dim
    if d == 0:
        return []
    left = [e.left_mult_matrix(i) for i in range(d)]
    gram_rows = []
    for i in range(d):
        gram_rows.append([(left[i] * left[j]).trace() for j in range(d)])
    gram = DenseMatrix(e.field, gram_rows, cols=d)
    rad = []
    rad_solver = SpanSolver(e.field, e.module_dim * e.module_dim)
    for coords in kernel_basis(gram):
        mat = e.element(coords)
        rad.append(mat)
        rad_solver.add(mat.flatten())
    for mat in rad:
        # the algebra acts faithfully, so radical elements are nilpotent matrices
        if not mat_pow(mat, e.module_dim).is_zero():
            raise RuntimeError("radical candidate is not nilpotent")
        for b in e.basis:
            for prod in (mat * b, b * mat):
                if not rad_solver.contains(prod.flatten()):
                    raise RuntimeError("radical candidate span is not a two-sided ideal")
    return rad
