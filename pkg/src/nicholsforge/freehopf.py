"""Degreewise presentation of the free braided Hopf algebra and its quotients.

Degree n of the free algebra on a diagonal braiding is spanned by words of
length n, multiplication is concatenation (the identity matrix under the
mixed-radix index identification), and the coproduct is the quantum shuffle:

    Delta^{a,b}(e_w) = sum over a-subsets S of positions of
        (prod q_{w_j, w_i} : j outside S, i in S, j < i) e_{w|S} (x) e_{w|Sc}

The crossing product is the braid lift of the inverse-shuffle permutation
moving the S positions to the front, so letters headed left pick up one q
factor per letter they pass.  Flipping which factor passes over which would
transpose the braiding matrix; this orientation is the documented one.

A GradedQuotient keeps, for every degree up to a cutoff, the ideal it
quotients by, a projection and section rooted at the free algebra, and
derives multiplication and coproduct blocks from the free ones through
those maps.  Quotient ideals must be generated by primitive elements, which
is what keeps them Hopf ideals; the constructor refuses anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .braided import DiagonalBraiding, all_words, word_index, word_label
from .linalg import BasedSpace, Matrix, Subspace, kernel, quotient, vstack
from .scalars import ONE, ZERO

__all__ = [
    "GradedQuotient",
    "PrimitiveReport",
    "tensor_space",
    "shuffle_coproduct",
    "primitives",
    "quotient_by_hopf_ideal",
]


def tensor_space(braiding: DiagonalBraiding, degree: int) -> BasedSpace:
    words = all_words(braiding.dim, degree)
    return BasedSpace(len(words), tuple(word_label(w) for w in words))


def _shuffle_block(braiding: DiagonalBraiding, degree: int, a: int) -> Matrix:
    """Delta^{a, degree-a} on the free algebra, as a dim^degree matrix."""
    n = braiding.dim
    b = degree - a
    dim = n**degree
    entries: dict = {}
    positions = range(degree)
    for subset in combinations(positions, a):
        in_subset = set(subset)
        rest = [j for j in positions if j not in in_subset]
        for w in all_words(n, degree):
            factor = ONE
            for j in rest:
                for i in subset:
                    if j < i:
                        factor = factor * braiding.q[w[j]][w[i]]
            left = word_index([w[i] for i in subset], n)
            right = word_index([w[j] for j in rest], n)
            key = (left * n**b + right, word_index(w, n))
            cur = entries.get(key)
            entries[key] = factor if cur is None else cur + factor
    return Matrix(dim, dim, entries)


def shuffle_coproduct(braiding: DiagonalBraiding, degree: int) -> dict:
    """All blocks {(a, b): Delta^{a,b}} with a + b = degree, on the free algebra."""
    return {(a, degree - a): _shuffle_block(braiding, degree, a) for a in range(degree + 1)}


class GradedQuotient:
    """A degreewise quotient of the free braided Hopf algebra.

    Everything is rooted at the free algebra: degree n stores the ideal
    I_n, the quotient space Q_n with representative-word labels, and the
    projection/section pair between them.  Structure blocks are derived:

        mul_{a,b} = proj_{a+b} o (sect_a (x) sect_b)
        cop_n^{a,b} = (proj_a (x) proj_b) o Delta_n^{a,b} o sect_n

    both well-defined because the ideal is two-sided and generated by
    primitives.  Instances are immutable; quotients produce new ones.
    """

    __slots__ = ("braiding", "cutoff", "spaces", "projections", "sections", "ideal", "_shuffles")

    def __init__(self, braiding, cutoff, spaces, projections, sections, ideal, shuffles=None):
        self.braiding = braiding
        self.cutoff = cutoff
        self.spaces = tuple(spaces)
        self.projections = tuple(projections)
        self.sections = tuple(sections)
        self.ideal = tuple(ideal)
        self._shuffles = {} if shuffles is None else shuffles

    @classmethod
    def free(cls, braiding: DiagonalBraiding, cutoff: int) -> "GradedQuotient":
        assert cutoff >= 1
        spaces, projections, sections, ideal = [], [], [], []
        for n in range(cutoff + 1):
            space = tensor_space(braiding, n)
            eye = Matrix.identity(space.dim)
            spaces.append(space)
            projections.append(eye)
            sections.append(eye)
            ideal.append(Subspace.zero(space.dim))
        return cls(braiding, cutoff, spaces, projections, sections, ideal)

    # -- shape -----------------------------------------------------------

    @property
    def dims(self) -> tuple:
        return tuple(space.dim for space in self.spaces)

    def dim(self, n: int) -> int:
        return self.spaces[n].dim

    def total_dim(self) -> int:
        return sum(self.dims)

    def _check_degree(self, n: int):
        if not 0 <= n <= self.cutoff:
            raise ValueError(f"degree {n} outside cutoff {self.cutoff}")

    # -- structure blocks --------------------------------------------------

    def free_shuffle(self, degree: int, a: int) -> Matrix:
        key = (degree, a)
        block = self._shuffles.get(key)
        if block is None:
            block = _shuffle_block(self.braiding, degree, a)
            self._shuffles[key] = block
        return block

    def mul_block(self, a: int, b: int) -> Matrix:
        """Multiplication Q_a (x) Q_b -> Q_{a+b}."""
        self._check_degree(a + b)
        return self.projections[a + b] @ self.sections[a].kron(self.sections[b])

    def cop_block(self, n: int, a: int, b: int) -> Matrix:
        """Coproduct component Q_n -> Q_a (x) Q_b with a + b = n."""
        assert a + b == n and a >= 0 and b >= 0
        self._check_degree(n)
        left_right = self.projections[a].kron(self.projections[b])
        return left_right @ self.free_shuffle(n, a) @ self.sections[n]


@dataclass(frozen=True)
class PrimitiveReport:
    degree: int
    subspace: Subspace  # inside Q_degree
    dim: int


def primitives(Q: GradedQuotient, n: int) -> PrimitiveReport:
    """Kernel of all inner coproduct components in degree n.

    The (n,0) and (0,n) components hold automatically, so only splits with
    both sides positive constrain; in degree 1 everything is primitive.
    """
    if not 1 <= n <= Q.cutoff:
        raise ValueError(f"degree {n} must be within 1..{Q.cutoff}")
    blocks = [Q.cop_block(n, a, n - a) for a in range(1, n)]
    if not blocks:
        sub = Subspace.full(Q.dim(n))
    else:
        sub = kernel(vstack(blocks))
    return PrimitiveReport(n, sub, sub.dim)


def quotient_by_hopf_ideal(Q: GradedQuotient, gens: Sequence) -> GradedQuotient:
    """Quotient by the two-sided ideal generated by primitive elements.

    gens is a sequence of (degree, vector) pairs, each vector given in the
    coordinates of Q_degree with degree >= 2.  Every generator must be
    primitive in Q; that makes the generated ideal a Hopf ideal, so the
    quotient inherits well-defined structure blocks.
    """
    if not gens:
        return Q
    m = Q.braiding.dim
    lifted = []  # (degree, column in free coordinates)
    for degree, vector in gens:
        if not 2 <= degree <= Q.cutoff:
            raise ValueError(f"generator degree {degree} must be within 2..{Q.cutoff}")
        vector = list(vector)
        if len(vector) != Q.dim(degree):
            raise ValueError(f"generator has {len(vector)} coordinates, expected {Q.dim(degree)}")
        if not primitives(Q, degree).subspace.contains(vector):
            raise ValueError(f"generator in degree {degree} is not primitive")
        lifted.append((degree, Q.sections[degree] @ Matrix.column(vector)))

    spaces, projections, sections, ideal = [], [], [], []
    for n in range(Q.cutoff + 1):
        new_rows = []
        for degree, g in lifted:
            if degree > n:
                continue
            g_terms = [(r, v) for (r, _), v in g.entries.items()]
            for a in range(n - degree + 1):
                c = n - degree - a
                for u in all_words(m, a):
                    u_idx = word_index(u, m)
                    for w in all_words(m, c):
                        w_idx = word_index(w, m)
                        vec = {}
                        for g_idx, value in g_terms:
                            vec[(u_idx * m**degree + g_idx) * m**c + w_idx] = value
                        new_rows.append([vec.get(i, ZERO) for i in range(m**n)])
        enlarged = Q.ideal[n]
        if new_rows:
            enlarged = enlarged.add(Subspace.from_vectors(m**n, new_rows))
        space, proj, sect = quotient(tensor_space(Q.braiding, n), enlarged)
        spaces.append(space)
        projections.append(proj)
        sections.append(sect)
        ideal.append(enlarged)
    return GradedQuotient(Q.braiding, Q.cutoff, spaces, projections, sections, ideal, Q._shuffles)
