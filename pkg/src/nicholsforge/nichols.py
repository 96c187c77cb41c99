"""Nichols algebra engine and its independent cross-check.

The engine runs the iterated primitive-quotient procedure: starting from
the free braided Hopf algebra truncated at a cutoff, repeatedly find the
primitives in the lowest degree >= 2 and quotient by the Hopf ideal they
generate, until no primitives remain above degree one.  Degrees below the
current scan point never change, so the scan is a single pass that pauses
on a degree while it still produces relations.

The oracle is deliberately a different computation: the rank of the n-th
quantum symmetrizer, the sum over all permutations of their positive braid
lifts, with each lift evaluated through the inversion-set product rather
than through reduced words.  The two must agree degree by degree; that
agreement is the main correctness property of the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .braided import DiagonalBraiding, all_words, word_index
from .freehopf import GradedQuotient, primitives, quotient_by_hopf_ideal
from .linalg import Matrix, rank
from .scalars import ONE

__all__ = [
    "NicholsReport",
    "nichols_compute",
    "symmetrizer_rank",
    "hilbert_series",
    "dims_symmetry_warning",
    "ORACLE_MAX_DEGREE",
]

FINITE = "finite"
UNDETERMINED = "undetermined-at-cutoff"

# 9! braid lifts is already minutes of work; past that the oracle is not a
# practical cross-check, so refuse instead of grinding.
ORACLE_MAX_DEGREE = 8


@dataclass(frozen=True)
class NicholsReport:
    braiding: DiagonalBraiding
    cutoff: int
    dims: tuple
    relations: tuple  # (degree, dim of quotiented primitive space) per iteration
    termination: str  # FINITE or UNDETERMINED
    total_dim: Optional[int]
    quotient: GradedQuotient  # final state of the iteration


def nichols_compute(braiding: DiagonalBraiding, cutoff: int) -> NicholsReport:
    """Iterated primitive-quotient construction up to the cutoff degree.

    Finiteness is only ever claimed on hard evidence: some graded piece
    vanished and multiplication from degree one still covers every degree,
    which together force all higher pieces to vanish.  Anything else is
    reported as undetermined at this cutoff.
    """
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    Q = GradedQuotient.free(braiding, cutoff)
    relations = []
    n = 2
    while n <= cutoff:
        if Q.dim(n) == 0:
            n += 1
            continue
        found = primitives(Q, n)
        if found.dim == 0:
            n += 1
            continue
        gens = [(n, found.subspace.basis.column_vector(j)) for j in range(found.dim)]
        Q = quotient_by_hopf_ideal(Q, gens)
        relations.append((n, found.dim))
        # stay on this degree: the quotient can expose new primitives here

    dims = Q.dims
    generated = all(
        rank(Q.mul_block(1, m - 1)) == dims[m] for m in range(2, cutoff + 1) if dims[m]
    )
    if generated and any(d == 0 for d in dims):
        first_zero = dims.index(0)
        assert all(d == 0 for d in dims[first_zero:]), "ideal saturation must close upward"
        termination, total = FINITE, sum(dims)
    else:
        termination, total = UNDETERMINED, None
    return NicholsReport(braiding, cutoff, dims, tuple(relations), termination, total, Q)


def symmetrizer_rank(braiding: DiagonalBraiding, degree: int) -> int:
    """Rank of the quantum symmetrizer on the degree-th tensor power.

    Independent of the engine: sums the braid lift of every permutation,
    each computed from its inversion set, and ranks the result.
    """
    if degree > ORACLE_MAX_DEGREE:
        raise ValueError(f"oracle degree {degree} exceeds cutoff {ORACLE_MAX_DEGREE}")
    if degree == 0:
        return 1
    n = braiding.dim
    words = all_words(n, degree)
    dim = len(words)
    entries: dict = {}
    for perm in permutations(range(degree)):
        inversions = [
            (i, j)
            for i in range(degree)
            for j in range(i + 1, degree)
            if perm[i] > perm[j]
        ]
        for w in words:
            factor = ONE
            for i, j in inversions:
                factor = factor * braiding.q[w[i]][w[j]]
            target = [0] * degree
            for pos, letter in enumerate(w):
                target[perm[pos]] = letter
            key = (word_index(target, n), word_index(w, n))
            cur = entries.get(key)
            entries[key] = factor if cur is None else cur + factor
    return rank(Matrix(dim, dim, entries))


def hilbert_series(report: NicholsReport) -> list:
    """Graded dimensions; trailing zeros stripped once finiteness is known."""
    dims = list(report.dims)
    if report.termination == FINITE:
        while dims and dims[-1] == 0:
            dims.pop()
    return dims


def dims_symmetry_warning(report: NicholsReport) -> Optional[str]:
    """Soft check: finite graded dimensions are expected to be palindromic.

    Kept advisory rather than asserted; a violation means something worth a
    human look, not a definite engine bug.
    """
    if report.termination != FINITE:
        return None
    dims = hilbert_series(report)
    if dims != dims[::-1]:
        return f"graded dimensions {dims} are not palindromic"
    return None
