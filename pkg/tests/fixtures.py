"""Hand-worked modules reused across test files.

The GF(2) fixture: 8 ANF monomials of 3 variables ordered by bitmask,
adjacent transpositions s1 = (x1 x2), s2 = (x2 x3), and the generator
g = x1+x2+x3+x1*x3+x2*x3+x1*x2*x3 whose orbit basis is
    A = g,  B = s2*A,  C = s1*B,
with s1 fixing A and swapping B, C and s2 swapping A, B and fixing C.
The sum F = A+B+C spans the invariant line inside span{A, B, C}.
"""

from cyclomod import GF2, QQ
from cyclomod.modules import AlgebraAction, orbit_basis


def bit_swap(mask, i, j):
    bi = (mask >> i) & 1
    bj = (mask >> j) & 1
    if bi == bj:
        return mask
    return mask ^ ((1 << i) | (1 << j))


def transposition_matrix(n, k):
    """ANF monomial permutation matrix swapping variables x_k and x_{k+1}."""
    size = 1 << n
    rows = [[0] * size for _ in range(size)]
    for m in range(size):
        rows[bit_swap(m, k - 1, k)][m] = 1
    return rows


def s3_anf_action():
    return AlgebraAction(
        GF2,
        [("s1", transposition_matrix(3, 1)), ("s2", transposition_matrix(3, 2))],
    )


MONOMIALS = ["1", "x1", "x2", "x1*x2", "x3", "x1*x3", "x2*x3", "x1*x2*x3"]


def anf_vector(indices):
    return tuple(1 if i in indices else 0 for i in range(8))


G = anf_vector({1, 2, 4, 5, 6, 7})
B_VEC = anf_vector({1, 2, 3, 4, 6, 7})
C_VEC = anf_vector({1, 2, 3, 4, 5, 7})
F_VEC = anf_vector({1, 2, 4, 7})


def swap_invariant_module():
    """The 3-dimensional GF(2) module generated by G."""
    return orbit_basis(s3_anf_action(), G)


def s3_natural_action():
    """Adjacent transpositions permuting the coordinates of Q^3."""
    s1 = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    s2 = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    return AlgebraAction(QQ, [("s1", s1), ("s2", s2)])


def compose(p, q):
    """(p o q)[i] = p[q[i]]; permutations as index tuples."""
    return tuple(p[q[i]] for i in range(len(q)))


def s3_elements():
    """All six permutations of {0,1,2} in lexicographic order."""
    return [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ]


def s3_regular_action():
    """Left translation by s1 = (0 1), s2 = (1 2) on the six group elements."""
    elements = s3_elements()
    index = {g: i for i, g in enumerate(elements)}
    mats = []
    for gen in [(1, 0, 2), (0, 2, 1)]:
        rows = [[0] * 6 for _ in range(6)]
        for j, g in enumerate(elements):
            rows[index[compose(gen, g)]][j] = 1
        mats.append(rows)
    return AlgebraAction(QQ, [("s1", mats[0]), ("s2", mats[1])])
