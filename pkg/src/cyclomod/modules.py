"""Cyclic modules over a finitely generated matrix algebra.

An AlgebraAction is an ordered list of labeled square matrices over one
field; the algebra they generate acts on the ambient coordinate space.
orbit_basis grows the cyclic module A*g breadth first: a word wa is kept
exactly when applying generator a to the vector of w leaves the span,
letters tried in generator order.  The kept words are prefix closed and
their vectors are a basis of A*g.  This is the covering-tree reduction
from wfa.py run on column vectors instead of row vectors.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .fields import FieldSpec
from .linalg import DenseMatrix, SpanSolver, Vector, vec_add, vec_is_zero, vec_scale, zero_vector


class AlgebraAction:
    """Ordered labeled generators acting on an ambient coordinate space."""

    __slots__ = ("field", "dim", "labels", "matrices")

    def __init__(self, field: FieldSpec, generators: Sequence[tuple], dim: int | None = None):
        labels = []
        matrices = {}
        for label, mat in generators:
            if label in matrices:
                raise ValueError(f"duplicate generator label {label!r}")
            if not isinstance(mat, DenseMatrix):
                mat = DenseMatrix(field, mat)
            if mat.field != field:
                raise ValueError(f"generator {label!r} lives in {mat.field}, expected {field}")
            if mat.rows != mat.cols:
                raise ValueError(f"generator {label!r} is {mat.rows}x{mat.cols}, not square")
            labels.append(label)
            matrices[label] = mat
        if not labels:
            # generator-free action: the algebra is just the scalars
            if dim is None:
                raise ValueError("an action with no generators needs an explicit dimension")
            ambient = dim
        else:
            dims = {matrices[s].rows for s in labels}
            if len(dims) != 1:
                raise ValueError(f"generators disagree on ambient dimension: {sorted(dims)}")
            ambient = dims.pop()
            if dim is not None and dim != ambient:
                raise ValueError(f"declared dimension {dim} but generators act on {ambient}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", ambient)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "matrices", matrices)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraAction is immutable")

    def matrix(self, label: str) -> DenseMatrix:
        return self.matrices[label]

    def apply_word(self, word: Sequence[str], v: Vector) -> Vector:
        """First letter acts first: apply_word((a, b), v) = mu(b) mu(a) v."""
        for letter in word:
            v = self.matrices[letter].apply(v)
        return v

    def __repr__(self) -> str:
        return f"AlgebraAction(dim={self.dim}, labels={list(self.labels)}, {self.field})"


class CyclicModule:
    """A*g with a prefix-closed word basis and restricted generator matrices.

    basis_vectors[j] is the ambient vector of basis_words[j]; the
    restricted matrix of a generator holds, in column j, the module
    coordinates of that generator applied to basis vector j.
    """

    __slots__ = ("action", "generator", "basis_words", "basis_vectors", "restricted", "_solver")

    def __init__(self, action, generator, basis_words, basis_vectors, restricted, solver):
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "generator", tuple(generator))
        object.__setattr__(self, "basis_words", tuple(tuple(w) for w in basis_words))
        object.__setattr__(self, "basis_vectors", tuple(tuple(v) for v in basis_vectors))
        object.__setattr__(self, "restricted", dict(restricted))
        object.__setattr__(self, "_solver", solver)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicModule is immutable")

    @property
    def field(self) -> FieldSpec:
        return self.action.field

    @property
    def dim(self) -> int:
        return len(self.basis_vectors)

    def coordinates(self, v: Vector):
        """Module coordinates of an ambient vector, or None if outside."""
        if len(v) != self.action.dim:
            raise ValueError(f"ambient vector length {len(v)}, expected {self.action.dim}")
        v = tuple(self.field.scalar(x) for x in v)
        if self.dim == 0:
            return () if vec_is_zero(v) else None
        return self._solver.coordinates(v)

    def contains(self, v: Vector) -> bool:
        return self.coordinates(v) is not None

    def ambient_vector(self, coords: Vector) -> Vector:
        """Ambient vector of module coordinates."""
        if len(coords) != self.dim:
            raise ValueError(f"coordinate length {len(coords)}, expected {self.dim}")
        out = zero_vector(self.field, self.action.dim)
        for c, b in zip(coords, self.basis_vectors):
            c = self.field.scalar(c)
            if c:
                out = vec_add(out, vec_scale(c, b))
        return out

    def __repr__(self) -> str:
        return f"CyclicModule(dim={self.dim}, ambient={self.action.dim}, {self.field})"


def orbit_basis(action: AlgebraAction, g: Vector) -> CyclicModule:
    """Cyclic module generated by g under the action, by breadth-first orbit."""
    field = action.field
    g = tuple(field.scalar(x) for x in g)
    if len(g) != action.dim:
        raise ValueError(f"generator length {len(g)}, expected {action.dim}")
    solver = SpanSolver(field, action.dim)
    if not solver.add(g):
        # zero generator: the zero module
        return CyclicModule(action, g, (), (), {s: DenseMatrix.zeros(field, 0, 0) for s in action.labels}, solver)
    words = [()]
    vectors = [g]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        base = vectors[i]
        for label in action.labels:
            v = action.matrices[label].apply(base)
            if solver.add(v):
                words.append(words[i] + (label,))
                vectors.append(v)
                queue.append(len(vectors) - 1)
    n = len(vectors)
    restricted = {}
    for label in action.labels:
        mat = action.matrices[label]
        columns = []
        for v in vectors:
            coords = solver.coordinates(mat.apply(v))
            if coords is None:
                raise RuntimeError("orbit basis failed to span its own images")
            columns.append(coords)
        restricted[label] = DenseMatrix.from_columns(field, columns, rows=n)
    return CyclicModule(action, g, words, vectors, restricted, solver)


def restricted_matrix(m: CyclicModule, label: str) -> DenseMatrix:
    if label not in m.restricted:
        raise ValueError(f"unknown generator label {label!r}")
    return m.restricted[label]


def restricted_action(m: CyclicModule) -> AlgebraAction:
    """The same generators acting on module coordinates."""
    if m.dim == 0:
        raise ValueError("the zero module has no coordinate action")
    return AlgebraAction(m.field, [(s, m.restricted[s]) for s in m.action.labels], dim=m.dim)


def submodule_generated(m: CyclicModule, coords: Vector) -> CyclicModule:
    """A*v for v given in module coordinates, as a module over the restricted action."""
    return orbit_basis(restricted_action(m), coords)


class ActionGraph:
    """Nodes and labeled edges of the generator action on a module basis."""

    __slots__ = ("node_labels", "edges")

    def __init__(self, node_labels, edges):
        object.__setattr__(self, "node_labels", tuple(node_labels))
        object.__setattr__(self, "edges", tuple(edges))

    def __setattr__(self, name, value):
        raise AttributeError("ActionGraph is immutable")


def render_vector(v: Vector, names=None) -> str:
    """Linear-combination rendering against coordinate names, or the raw tuple."""
    if names is None:
        return "(" + ", ".join(str(x) for x in v) + ")"
    if len(names) != len(v):
        raise ValueError(f"{len(names)} names for a vector of length {len(v)}")
    parts = []
    for c, name in zip(v, names):
        if not c:
            continue
        parts.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(parts) if parts else "0"


def graph_from_parts(labels, basis_vectors, restricted, names=None) -> ActionGraph:
    """One node per basis vector, one edge per nonzero restricted entry.

    An edge (j, i, label, coeff) says that the generator sends basis
    vector j to coeff times basis vector i plus terms on other nodes.
    """
    node_labels = [render_vector(v, names) for v in basis_vectors]
    n = len(basis_vectors)
    edges = []
    for label in labels:
        mat = restricted[label]
        for j in range(n):
            for i in range(n):
                c = mat.entries[i][j]
                if c:
                    edges.append((j, i, label, c))
    return ActionGraph(node_labels, edges)


def action_graph(m: CyclicModule, names=None) -> ActionGraph:
    return graph_from_parts(m.action.labels, m.basis_vectors, m.restricted, names)
