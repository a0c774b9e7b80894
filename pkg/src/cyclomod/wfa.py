"""Weighted finite automata over an exact field, and their minimization.

An automaton (lambda, mu, gamma) realizes the series
    weight(w) = lambda * mu(w_1) * ... * mu(w_k) * gamma.
left_reduce grows a covering tree over the row vectors lambda*mu(w): a
word wa is kept exactly when its vector is independent of the vectors
kept before it, in breadth-first order with letters tried in alphabet
order.  The kept words form a prefix-closed set whose vectors are a
basis of the reachability space.  right_reduce is the mirror on the
transposed automaton, and minimize chains the two, which is dimension
minimal for series over a field.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .fields import FieldSpec
from .linalg import (
    DenseMatrix,
    SpanSolver,
    Vector,
    vec_dot,
    vec_is_zero,
    zero_vector,
)


class PrefixBasis:
    """Kept words and their vectors, in covering-tree order."""

    __slots__ = ("words", "vectors", "word_to_index")

    def __init__(self, words: Sequence[tuple], vectors: Sequence[Vector]):
        if len(words) != len(vectors):
            raise ValueError("words and vectors differ in length")
        object.__setattr__(self, "words", tuple(tuple(w) for w in words))
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in vectors))
        object.__setattr__(
            self, "word_to_index", {w: i for i, w in enumerate(self.words)}
        )

    def __setattr__(self, name, value):
        raise AttributeError("PrefixBasis is immutable")

    def __len__(self) -> int:
        return len(self.words)

    def is_prefix_closed(self) -> bool:
        return all(w[:-1] in self.word_to_index for w in self.words if w)


class WeightedAutomaton:
    """(lambda, mu, gamma) over one field, alphabet order fixed."""

    __slots__ = ("field", "alphabet", "dim", "lam", "mu", "gamma")

    def __init__(
        self,
        field: FieldSpec,
        alphabet: Sequence[str],
        lam: Sequence,
        mu: dict,
        gamma: Sequence,
    ):
        alphabet = tuple(alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet labels must be distinct")
        lam = tuple(field.scalar(x) for x in lam)
        gamma = tuple(field.scalar(x) for x in gamma)
        dim = len(lam)
        if len(gamma) != dim:
            raise ValueError(f"lambda has length {dim} but gamma has length {len(gamma)}")
        if set(mu) != set(alphabet):
            raise ValueError("mu must cover exactly the alphabet")
        mats = {}
        for a in alphabet:
            m = mu[a]
            if not isinstance(m, DenseMatrix):
                m = DenseMatrix(field, m, cols=dim)
            if m.field != field:
                raise ValueError(f"mu[{a!r}] lives in {m.field}, expected {field}")
            if (m.rows, m.cols) != (dim, dim):
                raise ValueError(f"mu[{a!r}] is {m.rows}x{m.cols}, expected {dim}x{dim}")
            mats[a] = m
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mats)
        object.__setattr__(self, "gamma", gamma)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedAutomaton is immutable")

    @classmethod
    def zero(cls, field: FieldSpec, alphabet: Sequence[str]) -> "WeightedAutomaton":
        return cls(field, alphabet, (), {a: DenseMatrix.zeros(field, 0, 0) for a in alphabet}, ())

    def weight(self, word: Iterable[str]):
        """Series coefficient of the given word (any iterable of labels)."""
        v = self.lam
        for letter in word:
            if letter not in self.mu:
                raise ValueError(f"letter {letter!r} is not in the alphabet")
            v = self.mu[letter].apply_row(v)
        if self.dim == 0:
            return self.field.zero()
        return vec_dot(v, self.gamma)

    def __repr__(self) -> str:
        return f"WeightedAutomaton(dim={self.dim}, alphabet={list(self.alphabet)}, {self.field})"


def transpose(a: WeightedAutomaton) -> WeightedAutomaton:
    """Swap lambda and gamma and transpose every mu; reverses all words."""
    return WeightedAutomaton(
        a.field,
        a.alphabet,
        a.gamma,
        {s: m.transpose() for s, m in a.mu.items()},
        a.lam,
    )


def left_reduce(a: WeightedAutomaton):
    """Reachability reduction; returns (reduced automaton, PrefixBasis).

    The reduced lambda is (1, 0, ..., 0) whenever lambda is nonzero,
    because the root vector of the covering tree is lambda itself.
    """
    field = a.field
    if vec_is_zero(a.lam):
        return WeightedAutomaton.zero(field, a.alphabet), PrefixBasis((), ())
    solver = SpanSolver(field, a.dim)
    solver.add(a.lam)
    words = [()]
    vectors = [a.lam]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        base = vectors[i]
        for letter in a.alphabet:
            v = a.mu[letter].apply_row(base)
            if solver.add(v):
                words.append(words[i] + (letter,))
                vectors.append(v)
                queue.append(len(vectors) - 1)
    n = len(vectors)
    lam = solver.coordinates(a.lam)
    mu = {}
    for letter in a.alphabet:
        rows = []
        for v in vectors:
            coords = solver.coordinates(a.mu[letter].apply_row(v))
            if coords is None:
                raise RuntimeError("covering tree failed to span its own successors")
            rows.append(coords)
        mu[letter] = DenseMatrix(field, rows, cols=n)
    gamma = tuple(vec_dot(v, a.gamma) for v in vectors)
    reduced = WeightedAutomaton(field, a.alphabet, lam, mu, gamma)
    return reduced, PrefixBasis(words, vectors)


def right_reduce(a: WeightedAutomaton):
    """Observability reduction: left_reduce on the transpose, words reversed.

    The returned word set is suffix-closed rather than prefix-closed;
    its vectors are the columns mu(w) * gamma.
    """
    reduced_t, basis_t = left_reduce(transpose(a))
    reduced = transpose(reduced_t)
    words = tuple(tuple(reversed(w)) for w in basis_t.words)
    return reduced, PrefixBasis(words, basis_t.vectors)


def minimize(a: WeightedAutomaton) -> WeightedAutomaton:
    """Minimal automaton realizing the same series (right then left reduction)."""
    b, _ = right_reduce(a)
    c, _ = left_reduce(b)
    return c


def direct_sum(a: WeightedAutomaton, b: WeightedAutomaton) -> WeightedAutomaton:
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field} and {b.field}")
    if a.alphabet != b.alphabet:
        raise ValueError("direct sum needs identical alphabets")
    field = a.field
    zero = field.zero()
    n, m = a.dim, b.dim
    mu = {}
    for s in a.alphabet:
        rows = []
        for i in range(n):
            rows.append(list(a.mu[s].row(i)) + [zero] * m)
        for i in range(m):
            rows.append([zero] * n + list(b.mu[s].row(i)))
        mu[s] = DenseMatrix(field, rows, cols=n + m)
    return WeightedAutomaton(
        field, a.alphabet, a.lam + b.lam, mu, a.gamma + b.gamma
    )


def scale(a: WeightedAutomaton, c) -> WeightedAutomaton:
    """Same series multiplied by the scalar c (rescales lambda)."""
    c = a.field.scalar(c)
    return WeightedAutomaton(
        a.field, a.alphabet, tuple(c * x for x in a.lam), dict(a.mu), a.gamma
    )


def equivalent(a: WeightedAutomaton, b: WeightedAutomaton) -> bool:
    """Whether two automata realize the same series (exact decision)."""
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field} and {b.field}")
    if a.alphabet != b.alphabet:
        raise ValueError("equivalence needs identical alphabets")
    diff = direct_sum(a, scale(b, -1))
    return minimize(diff).dim == 0
