"""Algebras given by exact rational structure constants.

An :class:`Algebra` is a finite-dimensional vector space with a bilinear
product determined by a sparse table of basis brackets [e_i, e_j].  No
symmetry of any kind is assumed: Leibniz algebras are not antisymmetric,
so (i, j) and (j, i) are independent keys.  Absent keys mean the product
of those basis elements is zero.

All scalars are ``fractions.Fraction``; equality of vectors, tables and
subspaces is therefore exact and decidable.  Algebras, vectors and
subspaces are immutable after construction and every operation is a pure
function, so concurrent use needs no locking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInputError
from .linalg import (
    RowSpace,
    Vector,
    ZERO,
    invert,
    is_zero_vector,
    row_times_mat,
    unit_vector,
    zero_vector,
)


def parse_scalar(text: str) -> Fraction:
    """Parse a canonical rational string like "-3/2" or "1"."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad rational scalar {text!r}: {exc}") from exc


def format_scalar(value: Fraction) -> str:
    """Canonical rational string: reduced, positive denominator, no "/1"."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Subspace:
    """A subspace stored as its reduced-row-echelon basis.

    The canonical storage makes equality of subspaces syntactic equality
    of the dataclass, so subspaces are usable as dict keys / set members.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        space = RowSpace(ambient_dim)
        for v in vectors:
            space.add(v)
        return Subspace(ambient_dim, space.rows(), space.pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return RowSpace(self.ambient_dim, self.basis).contains(vec)

    def is_zero(self) -> bool:
        return not self.basis


@dataclass(frozen=True)
class Algebra:
    """Finite-dimensional algebra over Q given by a sparse bracket table."""

    dim: int
    basis_labels: tuple[str, ...]
    brackets: Mapping[tuple[int, int], Vector] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim <= 0:
            raise InvalidInputError("dimension must be positive")
        if len(self.basis_labels) != self.dim:
            raise InvalidInputError("basis_labels length must equal dim")
        if len(set(self.basis_labels)) != self.dim:
            raise InvalidInputError("basis labels must be distinct")
        for (i, j), vec in self.brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise InvalidInputError(f"bracket index ({i},{j}) out of range")
            if len(vec) != self.dim:
                raise InvalidInputError(
                    f"bracket ({i},{j}) value has length {len(vec)}, "
                    f"expected {self.dim}")

    # -- construction helpers -------------------------------------------

    @staticmethod
    def from_products(dim: int, labels: Sequence[str],
                      products: Mapping[tuple[int, int],
                                        Iterable[tuple[int, Fraction]]]) -> "Algebra":
        """Build from sparse products {(i, j): [(k, coeff), ...]}."""
        table = {}
        for (i, j), terms in products.items():
            vec = [ZERO] * dim
            for k, c in terms:
                vec[k] += Fraction(c)
            if not is_zero_vector(vec):
                table[(i, j)] = tuple(vec)
        return Algebra(dim, tuple(labels), table)

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise InvalidInputError(f"unknown basis label {label!r}") from None

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def table_entry(self, i: int, j: int) -> Vector:
        return self.brackets.get((i, j), zero_vector(self.dim))

    def format_vector(self, vec: Sequence[Fraction]) -> str:
        terms = [f"{format_scalar(c)}*{self.basis_labels[k]}"
                 for k, c in enumerate(vec) if c]
        return " + ".join(terms) if terms else "0"


def bracket(alg: Algebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    """Bilinear extension [x, y] = sum_i sum_j x_i y_j [e_i, e_j]."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise InvalidInputError(
            f"vector length mismatch: got {len(x)} and {len(y)}, "
            f"algebra has dim {alg.dim}")
    out = [ZERO] * alg.dim
    for (i, j), vec in alg.brackets.items():
        c = x[i] * y[j]
        if c:
            for k in range(alg.dim):
                if vec[k]:
                    out[k] += c * vec[k]
    return tuple(out)


def bracket_basis(alg: Algebra, i: int, vec: Sequence[Fraction]) -> Vector:
    """[e_i, vec] without building the left unit vector."""
    out = [ZERO] * alg.dim
    for j, c in enumerate(vec):
        if c:
            entry = alg.brackets.get((i, j))
            if entry:
                for k in range(alg.dim):
                    if entry[k]:
                        out[k] += c * entry[k]
    return tuple(out)


def bracket_vec_basis(alg: Algebra, vec: Sequence[Fraction], j: int) -> Vector:
    """[vec, e_j] without building the right unit vector."""
    out = [ZERO] * alg.dim
    for i, c in enumerate(vec):
        if c:
            entry = alg.brackets.get((i, j))
            if entry:
                for k in range(alg.dim):
                    if entry[k]:
                        out[k] += c * entry[k]
    return tuple(out)


@dataclass(frozen=True)
class LeibnizViolation:
    """One basis triple (i, j, k) where the Leibniz identity fails."""

    triple: tuple[int, int, int]
    defect: Vector  # [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]


@dataclass(frozen=True)
class LeibnizReport:
    algebra_dim: int
    violations: tuple[LeibnizViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self, alg: Algebra) -> str:
        if self.ok:
            return "Leibniz identity holds on all basis triples"
        lines = [f"{len(self.violations)} violating basis triple(s):"]
        for v in self.violations[:10]:
            i, j, k = v.triple
            lines.append(
                f"  ({alg.basis_labels[i]}, {alg.basis_labels[j]}, "
                f"{alg.basis_labels[k]}): defect = {alg.format_vector(v.defect)}")
        return "\n".join(lines)


def check_leibniz(alg: Algebra) -> LeibnizReport:
    """Evaluate [x,[y,z]] = [[x,y],z] - [[x,z],y] on all n^3 basis triples."""
    n = alg.dim
    violations = []
    for i in range(n):
        for j in range(n):
            left = alg.table_entry(i, j)  # [e_i, e_j]
            for k in range(n):
                term1 = bracket_basis(alg, i, alg.table_entry(j, k))
                term2 = bracket_vec_basis(alg, left, k)
                term3 = bracket_vec_basis(alg, alg.table_entry(i, k), j)
                defect = tuple(a - b + c for a, b, c in zip(term1, term2, term3))
                if not is_zero_vector(defect):
                    violations.append(LeibnizViolation((i, j, k), defect))
    return LeibnizReport(n, tuple(violations))


def is_lie(alg: Algebra) -> bool:
    """True iff the table is antisymmetric with zero squares.

    Assumes check_leibniz passed; antisymmetry on basis pairs then gives
    [x, x] = 0 for every x by bilinearity.
    """
    for i in range(alg.dim):
        if not is_zero_vector(alg.table_entry(i, i)):
            return False
        for j in range(i + 1, alg.dim):
            anti = tuple(a + b for a, b in
                         zip(alg.table_entry(i, j), alg.table_entry(j, i)))
            if not is_zero_vector(anti):
                return False
    return True


def square_ideal(alg: Algebra) -> Subspace:
    """Two-sided ideal generated by the squares [x, x].

    Seeded by [e_i, e_i] and the polarizations [e_i, e_j] + [e_j, e_i],
    then closed under bracketing with basis elements on both sides.
    """
    n = alg.dim
    space = RowSpace(n)
    frontier = []

    def feed(vec) -> None:
        if space.add(vec):
            frontier.append(tuple(vec))

    for i in range(n):
        feed(alg.table_entry(i, i))
        for j in range(i + 1, n):
            feed(tuple(a + b for a, b in
                       zip(alg.table_entry(i, j), alg.table_entry(j, i))))
    while frontier:
        vec = frontier.pop()
        for i in range(n):
            feed(bracket_basis(alg, i, vec))
            feed(bracket_vec_basis(alg, vec, i))
    return Subspace(n, space.rows(), space.pivots)


def change_of_basis(alg: Algebra, m: Sequence[Sequence[Fraction]],
                    labels: Sequence[str] | None = None) -> Algebra:
    """Rewrite the table in the basis b_i = sum_j m[i][j] e_j.

    ``m`` must be invertible; the returned algebra is isomorphic to the
    input and round-trips with the inverse matrix.
    """
    n = alg.dim
    if len(m) != n or any(len(row) != n for row in m):
        raise InvalidInputError("change-of-basis matrix has wrong shape")
    minv = invert(m)
    if minv is None:
        raise InvalidInputError("change-of-basis matrix is singular")
    if labels is None:
        labels = tuple(f"b{i + 1}" for i in range(n))
    # Old coordinates u map to new coordinates u * minv (rows are new basis).
    new_table = {}
    for i in range(n):
        for j in range(n):
            prod = bracket(alg, m[i], m[j])
            if not is_zero_vector(prod):
                new_table[(i, j)] = row_times_mat(prod, minv)
    return Algebra(n, tuple(labels), new_table)


def abelian_algebra(dim: int, prefix: str = "e") -> Algebra:
    """All products zero."""
    return Algebra(dim, tuple(f"{prefix}{i + 1}" for i in range(dim)), {})


def chain_algebra(dim: int, prefix: str = "e") -> Algebra:
    """Null-filiform chain [e_i, e_1] = e_{i+1}, 1 <= i <= dim-1."""
    products = {(i, 0): [(i + 1, Fraction(1))] for i in range(dim - 1)}
    return Algebra.from_products(
        dim, tuple(f"{prefix}{i + 1}" for i in range(dim)), products)


# -- JSON interface ------------------------------------------------------

def algebra_to_dict(alg: Algebra) -> dict:
    """Canonical JSON-ready form of the algebra table."""
    entries = {}
    for (i, j) in sorted(alg.brackets):
        vec = alg.brackets[(i, j)]
        terms = [[k, format_scalar(vec[k])] for k in range(alg.dim) if vec[k]]
        if terms:
            entries[f"{i},{j}"] = terms
    return {"dim": alg.dim, "basis": list(alg.basis_labels), "brackets": entries}


def algebra_to_json(alg: Algebra) -> str:
    return json.dumps(algebra_to_dict(alg), indent=2, sort_keys=True)


def algebra_from_dict(data: dict) -> Algebra:
    if not isinstance(data, dict):
        raise InvalidInputError("algebra JSON must be an object")
    for key in ("dim", "basis", "brackets"):
        if key not in data:
            raise InvalidInputError(f"algebra JSON missing key {key!r}")
    dim = data["dim"]
    if not isinstance(dim, int) or dim <= 0:
        raise InvalidInputError("'dim' must be a positive integer")
    basis = data["basis"]
    if (not isinstance(basis, list) or len(basis) != dim
            or not all(isinstance(s, str) for s in basis)):
        raise InvalidInputError("'basis' must be a list of dim strings")
    raw = data["brackets"]
    if not isinstance(raw, dict):
        raise InvalidInputError("'brackets' must be an object")
    products = {}
    for key, terms in raw.items():
        try:
            si, sj = key.split(",")
            i, j = int(si), int(sj)
        except ValueError:
            raise InvalidInputError(
                f"brackets key {key!r} is not of the form 'i,j'") from None
        if not (0 <= i < dim and 0 <= j < dim):
            raise InvalidInputError(f"brackets key {key!r}: index out of range")
        if not isinstance(terms, list):
            raise InvalidInputError(f"brackets[{key!r}] must be a list")
        parsed = []
        for t in terms:
            if (not isinstance(t, list) or len(t) != 2
                    or not isinstance(t[0], int) or not isinstance(t[1], str)):
                raise InvalidInputError(
                    f"brackets[{key!r}] entries must be [index, \"num/den\"]")
            k, scalar = t
            if not (0 <= k < dim):
                raise InvalidInputError(
                    f"brackets[{key!r}]: target index {k} out of range")
            parsed.append((k, parse_scalar(scalar)))
        products[(i, j)] = parsed
    return Algebra.from_products(dim, basis, products)


def algebra_from_json(text: str) -> Algebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON: {exc}") from exc
    return algebra_from_dict(data)
