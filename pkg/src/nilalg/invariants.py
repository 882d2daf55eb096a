"""Filtration and operator invariants of nilpotent algebras.

Implements the lower central series L^1 = L, L^{k+1} = [L^k, L], the
nilindex, right-multiplication operators R_x(y) = [y, x], Jordan block
profiles of nilpotent operators, the characteristic sequence C(L) and the
p-filiformity test C(L) = (n-p, 1, ..., 1).

Everything is a pure function over immutable inputs; the one randomized
operation takes its seed as an explicit parameter, so concurrent calls
are deterministic and independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Algebra, Subspace, bracket, bracket_vec_basis
from .errors import InvalidInputError, NotNilpotentError
from .linalg import RowSpace, Vector, mat_vec, unit_vector

DEFAULT_SEED = 20260
DEFAULT_SAMPLES = 25


@dataclass(frozen=True)
class CentralSeries:
    """Terms of the descending central series, terms[0] = whole algebra."""

    terms: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    @property
    def derived_subalgebra(self) -> Subspace:
        """L^2 = [L, L]."""
        return self.terms[1]


@dataclass(frozen=True)
class CharacteristicSequence:
    """Descending block-size sequence; entries sum to the algebra dimension."""

    seq: tuple[int, ...]

    def __iter__(self):
        return iter(self.seq)

    def __lt__(self, other: "CharacteristicSequence") -> bool:
        return self.seq < other.seq


def lower_central_series(alg: Algebra) -> CentralSeries:
    """Compute L^k until the first zero term.

    Raises NotNilpotentError when the dimensions stop strictly decreasing
    before reaching zero.
    """
    n = alg.dim
    whole = Subspace.span(n, (unit_vector(n, i) for i in range(n)))
    terms = [whole]
    current = whole
    while current.dim > 0:
        space = RowSpace(n)
        for vec in current.basis:
            for j in range(n):
                space.add(bracket_vec_basis(alg, vec, j))
        nxt = Subspace(n, space.rows(), space.pivots)
        if nxt.dim >= current.dim:
            raise NotNilpotentError(
                f"descending central sequence stalls at dimension {current.dim}")
        terms.append(nxt)
        current = nxt
    return CentralSeries(tuple(terms))


def nilindex(alg: Algebra) -> int:
    """The s with L^s != 0 and L^{s+1} = 0."""
    series = lower_central_series(alg)
    return len(series.terms) - 1


def right_mult_matrix(alg: Algebra, x) -> tuple[Vector, ...]:
    """Matrix of R_x: column j holds the coordinates of [e_j, x]."""
    if len(x) != alg.dim:
        raise InvalidInputError(
            f"vector length {len(x)} does not match dim {alg.dim}")
    n = alg.dim
    cols = [bracket(alg, unit_vector(n, j), x) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def nilpotent_block_profile(m) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, sorted descending.

    Block counts come from the kernel-dimension sequence of powers: the
    number of blocks of size >= k equals dim ker(m^k) - dim ker(m^{k-1}).
    Raises InvalidInputError when the rank sequence shows m is not
    nilpotent (rank stalls above zero).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidInputError("matrix is not square")
    # Iterated images: rank(m^k) = dim of m applied k times to the whole space.
    ranks = [n]
    image = [unit_vector(n, i) for i in range(n)]
    while ranks[-1] > 0:
        space = RowSpace(n)
        for vec in image:
            space.add(mat_vec(m, vec))
        r = space.dim
        if r >= ranks[-1]:
            raise InvalidInputError("matrix is not nilpotent (rank descent stalls)")
        ranks.append(r)
        image = list(space.rows())
    # blocks of size >= k: ker dims difference = rank_{k-1} - rank_k
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    profile = []
    for k in range(1, len(at_least) + 1):
        bigger = at_least[k] if k < len(at_least) else 0
        profile.extend([k] * (at_least[k - 1] - bigger))
    profile.sort(reverse=True)
    return tuple(profile)


def char_seq_at(alg: Algebra, x, series: CentralSeries | None = None
                ) -> CharacteristicSequence:
    """C(x): Jordan profile of R_x for x outside L^2."""
    if series is None:
        series = lower_central_series(alg)
    if series.derived_subalgebra.contains(x):
        raise InvalidInputError("x lies in L^2; C(x) requires x outside L^2")
    try:
        profile = nilpotent_block_profile(right_mult_matrix(alg, x))
    except InvalidInputError as exc:
        raise NotNilpotentError(f"R_x is not nilpotent: {exc}") from exc
    return CharacteristicSequence(profile)


def _random_rational_vector(rng: random.Random, n: int) -> Vector:
    return tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n))


def characteristic_sequence(alg: Algebra, samples: int = DEFAULT_SAMPLES,
                            seed: int = DEFAULT_SEED) -> CharacteristicSequence:
    """Lexicographic maximum of C(x) over a finite test set.

    The test set holds every basis vector outside L^2, every pairwise sum
    of two such basis vectors, and ``samples`` seeded random rational
    vectors outside L^2.  The maximum of C(x) is attained on a dense open
    subset of L \\ L^2, so this finite sweep is generically exact; formally
    the result is a lower bound in the lexicographic order.
    """
    n = alg.dim
    series = lower_central_series(alg)
    l2 = series.derived_subalgebra
    if l2.dim == n:
        raise InvalidInputError("L^2 = L: the algebra has no generators")
    candidates = []
    outside = [i for i in range(n) if not l2.contains(unit_vector(n, i))]
    for i in outside:
        candidates.append(unit_vector(n, i))
    for a in range(len(outside)):
        for b in range(a + 1, len(outside)):
            i, j = outside[a], outside[b]
            candidates.append(tuple(x + y for x, y in
                                    zip(unit_vector(n, i), unit_vector(n, j))))
    rng = random.Random(seed)
    drawn = 0
    while drawn < samples:
        vec = _random_rational_vector(rng, n)
        if l2.contains(vec):
            continue
        candidates.append(vec)
        drawn += 1
    best = None
    for vec in candidates:
        seq = char_seq_at(alg, vec, series)
        if best is None or best < seq:
            best = seq
    return best


def is_p_filiform(alg: Algebra, p: int, samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED) -> bool:
    """True iff C(L) = (n-p, 1, ..., 1) with exactly p trailing ones."""
    if p < 0 or p >= alg.dim:
        raise InvalidInputError(f"need 0 <= p < dim, got p={p}, dim={alg.dim}")
    expected = (alg.dim - p,) + (1,) * p
    return characteristic_sequence(alg, samples=samples, seed=seed).seq == expected
