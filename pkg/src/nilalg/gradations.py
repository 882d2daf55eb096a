"""Z-gradations: verification, natural gradation, and maximum-length search.

A diagonal degree assignment d maps each basis index to an integer and is
a maximum-length gradation witness when (a) every bracket [e_i, e_j] lands
in the component of degree d_i + d_j - c for one uniform integer offset c
(c = 0 for a literal gradation; subtracting c relabels any witness to a
literal one, making verdicts shift- and negation-invariant), (b) the
degrees are all distinct (components of dimension one), (c) the attained
degrees form an integer interval, and (d) that interval has size dim(L).

Two search strategies are provided.  ``diagonal_search`` exhaustively
enumerates injective interval assignments in the given basis (small
dimensions only).  ``two_generator_search`` follows the adapted-basis
scheme: pick homogeneous generators (one chain driver of degree 1 plus
the remaining generators with unknown degrees), close them under
bracketing while propagating symbolic degrees, and test every integer
value of the unknown degrees in a window.  A negative answer means no
gradation was found under that scheme; it is not a formal non-existence
certificate.

Search candidates are examined in a fixed order (lowest unknown tuple
first, samples in build order) and the first witness wins, so results are
independent of any execution interleaving.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .core import (
    Algebra,
    Subspace,
    bracket,
    change_of_basis,
    is_lie,
    square_ideal,
)
from .errors import DegenerateSampleError, InvalidInputError
from .invariants import (
    DEFAULT_SEED,
    CentralSeries,
    characteristic_sequence,
    lower_central_series,
)
from .linalg import RowSpace, Vector, ZERO, invert, is_zero_vector, unit_vector

MAXIMUM_LENGTH = "maximum_length"
NOT_MAXIMUM_LENGTH = "not_maximum_length"
NO_GRADATION_FOUND = "no_gradation_found"

REASON_COLLISION = "degree collision"
REASON_DISCONNECTED = "disconnected"
REASON_CLOSURE = "closure"

SCHEME_NOTE = (
    "no gradation found under the two-generator adapted-basis scheme "
    "(homogeneous generators of the standard form, chain driver of degree "
    "one by the +/-1 equivalence); this is a generic-sample search, not a "
    "formal non-existence proof")


# -- degree assignments ----------------------------------------------------

@dataclass(frozen=True)
class DegreeAssignment:
    """Total map basis-index -> integer degree (a diagonal gradation candidate)."""

    degrees: dict[int, int]

    def degree_list(self, n: int) -> list[int]:
        if set(self.degrees) != set(range(n)):
            raise InvalidInputError("degree assignment is not total on the basis")
        return [self.degrees[i] for i in range(n)]

    def shifted(self, c: int) -> "DegreeAssignment":
        return DegreeAssignment({i: d + c for i, d in self.degrees.items()})

    def negated(self) -> "DegreeAssignment":
        return DegreeAssignment({i: -d for i, d in self.degrees.items()})

    def to_dict(self, alg: Algebra) -> dict:
        return {"degrees": {alg.basis_labels[i]: self.degrees[i]
                            for i in sorted(self.degrees)}}

    @staticmethod
    def from_dict(data: dict, alg: Algebra) -> "DegreeAssignment":
        if not isinstance(data, dict) or not isinstance(data.get("degrees"), dict):
            raise InvalidInputError(
                "degree assignment JSON must be {\"degrees\": {label: int}}")
        degrees = {}
        for label, deg in data["degrees"].items():
            if not isinstance(deg, int) or isinstance(deg, bool):
                raise InvalidInputError(f"degree of {label!r} must be an integer")
            degrees[alg.label_index(label)] = deg
        if set(degrees) != set(range(alg.dim)):
            raise InvalidInputError("degree assignment must cover every basis label")
        return DegreeAssignment(degrees)

    @staticmethod
    def from_json(text: str, alg: Algebra) -> "DegreeAssignment":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"invalid JSON: {exc}") from exc
        return DegreeAssignment.from_dict(data, alg)


@dataclass(frozen=True)
class SymbolicDegree:
    """Affine degree a*k_s + sum_t b_t*k_t + c over the unknown generator degrees.

    In the classic two-generator search there is a single unknown k_t and
    the form reduces to a*k_s + b*k_t + c.
    """

    a: int
    b: tuple[int, ...]
    c: int = 0

    def plus(self, other: "SymbolicDegree") -> "SymbolicDegree":
        return SymbolicDegree(self.a + other.a,
                              tuple(x + y for x, y in zip(self.b, other.b)),
                              self.c + other.c)

    def value(self, ks: int, kts: tuple[int, ...]) -> int:
        return self.a * ks + sum(x * k for x, k in zip(self.b, kts)) + self.c

    def describe(self, names: tuple[str, ...]) -> str:
        terms = []
        if self.a:
            terms.append(f"{self.a}*k_s" if self.a != 1 else "k_s")
        for coeff, name in zip(self.b, names):
            if coeff:
                terms.append(f"{coeff}*{name}" if coeff != 1 else name)
        if self.c or not terms:
            terms.append(str(self.c))
        return " + ".join(terms)


# -- gradation verification -------------------------------------------------

@dataclass(frozen=True)
class GradationChecks:
    """Booleans for the four defining properties of a maximum-length gradation.

    Closure is checked up to a uniform integer offset: the assignment
    passes when every nonzero product satisfies deg(target) = d_i + d_j - c
    for one common c.  Subtracting c from every degree turns such a witness
    into a literal gradation with [V_i, V_j] in V_{i+j}, so the verdict is
    invariant under shifting all degrees by a constant (and under negation,
    the k_s = -1 case).  A literal gradation reports offset 0.
    """

    closure: bool
    nonempty: bool
    dim_one: bool
    distinct: bool
    connected: bool
    interval: tuple[int, int] | None
    offset: int | None = None

    @property
    def all_ok(self) -> bool:
        return (self.closure and self.nonempty and self.dim_one
                and self.distinct and self.connected)

    def to_dict(self) -> dict:
        return {"closure": self.closure, "nonempty": self.nonempty,
                "dim_one": self.dim_one, "distinct": self.distinct,
                "connected": self.connected,
                "interval": list(self.interval) if self.interval else None,
                "offset": self.offset}


@dataclass(frozen=True)
class GradationReport:
    verdict: str
    witness: DegreeAssignment | None = None
    reason: str | None = None
    checks: GradationChecks | None = None
    search: dict | None = None

    @property
    def is_maximum_length(self) -> bool:
        return self.verdict == MAXIMUM_LENGTH

    def to_dict(self, alg: Algebra | None = None) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness is not None and alg is not None:
            out["witness"] = self.witness.to_dict(alg)
        elif self.witness is not None:
            out["witness"] = {"degrees_by_index": dict(sorted(
                self.witness.degrees.items()))}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.checks is not None:
            out["checked_properties"] = self.checks.to_dict()
        if self.search is not None:
            out["search"] = self.search
        return out


def _closure_offset(alg: Algebra, degs: list[int]) -> tuple[bool, int | None]:
    """Uniform-offset closure: all products satisfy deg(k) = d_i + d_j - c.

    Returns (True, c) when a single offset c works for every nonzero
    product component, (True, None) when there are no products at all,
    and (False, None) otherwise.
    """
    offset = None
    for (i, j), vec in alg.brackets.items():
        base = degs[i] + degs[j]
        for k, c in enumerate(vec):
            if not c:
                continue
            this = base - degs[k]
            if offset is None:
                offset = this
            elif this != offset:
                return False, None
    return True, offset


def _degree_reason(n: int, degs: list[int]) -> str | None:
    """Fast-path reason from the degree multiset alone (closure not examined)."""
    seen = set(degs)
    if len(seen) != n:
        return REASON_COLLISION
    if max(seen) - min(seen) + 1 != n:
        return REASON_DISCONNECTED
    return None


def verify_gradation(alg: Algebra, d: DegreeAssignment) -> GradationReport:
    """Check the maximum-length properties of ``d`` exactly.

    The report carries each property verdict; MaximumLength requires all.
    """
    n = alg.dim
    degs = d.degree_list(n)
    seen = sorted(set(degs))
    lo, hi = seen[0], seen[-1]
    distinct = len(seen) == n
    dim_one = distinct  # one basis vector per attained degree
    connected = (hi - lo + 1) == len(seen)
    nonempty = connected  # no empty component inside the covering interval
    closure, offset = _closure_offset(alg, degs)
    max_length = distinct and connected and (hi - lo + 1) == n
    checks = GradationChecks(closure, nonempty, dim_one, distinct, connected,
                             (lo, hi), offset)
    if closure and max_length:
        return GradationReport(MAXIMUM_LENGTH, witness=d, checks=checks)
    if not distinct:
        reason = REASON_COLLISION
    elif not connected:
        reason = REASON_DISCONNECTED
    elif not closure:
        reason = REASON_CLOSURE
    else:
        reason = f"interval size {hi - lo + 1} != dim {n}"
    return GradationReport(NOT_MAXIMUM_LENGTH, witness=d, reason=reason,
                           checks=checks)


# -- natural gradation -------------------------------------------------------

@dataclass(frozen=True)
class NaturalGradation:
    """gr L = sum of L^i / L^{i+1} in a chosen homogeneous complement basis."""

    components: tuple[Subspace, ...]
    component_dims: tuple[int, ...]
    degrees: tuple[int, ...]          # degree of each adapted basis vector
    basis_matrix: tuple[Vector, ...]  # rows: adapted basis in original coords
    graded_algebra: Algebra


def natural_gradation(alg: Algebra, series: CentralSeries | None = None
                      ) -> NaturalGradation:
    """Build gr L from the lower central series.

    Complements are chosen deterministically: the representatives of
    L^i / L^{i+1} are the echelon rows of L^i whose pivot column does not
    survive into L^{i+1} (lexicographically earliest pivots).  Brackets of
    representatives are projected onto the component of the summed degree.
    """
    n = alg.dim
    if series is None:
        series = lower_central_series(alg)
    terms = series.terms
    reps: list[Vector] = []
    degrees: list[int] = []
    labels: list[str] = []
    components = []
    for k in range(len(terms) - 1):
        nxt_pivots = set(terms[k + 1].pivots)
        layer = [row for row, piv in zip(terms[k].basis, terms[k].pivots)
                 if piv not in nxt_pivots]
        layer_pivots = [piv for piv in terms[k].pivots if piv not in nxt_pivots]
        components.append(Subspace.span(n, layer))
        for row, piv in zip(layer, layer_pivots):
            reps.append(row)
            degrees.append(k + 1)
            labels.append(alg.basis_labels[piv])
    matrix = tuple(reps)
    minv = invert(matrix)
    if minv is None:  # cannot happen: reps form a basis by construction
        raise InvalidInputError("natural gradation produced a singular basis")
    table = {}
    for i in range(n):
        for j in range(n):
            prod = bracket(alg, matrix[i], matrix[j])
            if is_zero_vector(prod):
                continue
            coords = [sum(prod[t] * minv[t][s] for t in range(n))
                      for s in range(n)]
            target = degrees[i] + degrees[j]
            projected = tuple(c if degrees[s] == target else ZERO
                              for s, c in enumerate(coords))
            if not is_zero_vector(projected):
                table[(i, j)] = projected
    graded = Algebra(n, tuple(labels), table)
    return NaturalGradation(tuple(components),
                            tuple(c.dim for c in components),
                            tuple(degrees), matrix, graded)


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant record; equality is necessary for isomorphism."""

    dim: int
    series_dims: tuple[int, ...]
    char_seq: tuple[int, ...]
    lie: bool
    component_dims: tuple[int, ...]
    square_ideal_dim: int

    def to_dict(self) -> dict:
        return {"dim": self.dim, "series_dims": list(self.series_dims),
                "char_seq": list(self.char_seq), "is_lie": self.lie,
                "component_dims": list(self.component_dims),
                "square_ideal_dim": self.square_ideal_dim}


def graded_fingerprint(alg: Algebra, samples: int = 25,
                       seed: int = DEFAULT_SEED) -> Fingerprint:
    series = lower_central_series(alg)
    nat = natural_gradation(alg, series)
    cs = characteristic_sequence(alg, samples=samples, seed=seed)
    return Fingerprint(alg.dim, series.dims, cs.seq, is_lie(alg),
                       nat.component_dims, square_ideal(alg).dim)


# -- explicit witness for M4(1) ----------------------------------------------

def m4_1_witness(n: int, p: int) -> DegreeAssignment:
    """The explicit degree table for M4(1): x_i in V_{i k}, k = n/(n-p).

    Indices follow the catalog ordering x_1..x_{n-p}, y_1..y_{p/2},
    z_1..z_{p/2}.  Requires p even >= 4, n even, n-p >= 4 and (n-p) | n.
    """
    m = n - p
    if p % 2 != 0 or p < 4:
        raise InvalidInputError("M4(1) witness needs p even >= 4")
    if m < 4:
        raise InvalidInputError("M4(1) witness needs n-p >= 4")
    if n % 2 != 0:
        raise InvalidInputError("M4(1) witness needs n even")
    if n % m != 0:
        raise InvalidInputError("M4(1) witness needs (n-p) | n")
    k = n // m
    half = p // 2
    y = lambda j: m + j - 1
    z = lambda j: m + half + j - 1
    degrees = {i - 1: i * k for i in range(1, m + 1)}
    degrees[y(1)] = 1
    degrees[y(2)] = (m - 1) * k - 1
    degrees[z(1)] = k + 1
    degrees[z(2)] = m * k - 1
    for i in range(3, k + 1):
        degrees[y(i)] = i - 1
        degrees[z(i)] = k + i - 1
    for q in range(1, (m - 4) // 2 + 1):
        for i in range(2, k + 1):
            degrees[y(q * (k - 1) + i)] = 2 * q * k - 1 + i
            degrees[z(q * (k - 1) + i)] = (2 * q + 1) * k - 1 + i
    base = (m - 2) // 2 * (k - 1)
    for i in range(2, k):
        degrees[y(base + i)] = (m - 2) * k - 1 + i
        degrees[z(base + i)] = (m - 1) * k - 1 + i
    if len(degrees) != n:
        raise InvalidInputError("M4(1) witness table did not cover the basis")
    return DegreeAssignment(degrees)


# -- exhaustive diagonal search ----------------------------------------------

def diagonal_search(alg: Algebra, window: int | None = None) -> GradationReport:
    """Enumerate every injective interval degree map in the given basis.

    Sound and complete for gradations diagonal in this basis.  Guarded to
    dim <= 8 (the enumeration is n! per interval).
    """
    n = alg.dim
    if n > 8:
        raise InvalidInputError(
            f"diagonal_search is limited to dim <= 8 (got {n})")
    if window is None:
        window = n
    if window < n - 1:
        raise InvalidInputError("window too small to contain any interval")
    entries = [(i, j, tuple(k for k, c in enumerate(vec) if c))
               for (i, j), vec in sorted(alg.brackets.items())]
    tried = 0
    closure_failures = 0
    for base in range(-window, window - n + 2):
        for perm in permutations(range(n)):
            degs = [base + t for t in perm]
            tried += 1
            ok = True
            for i, j, support in entries:
                target = degs[i] + degs[j]
                if any(degs[k] != target for k in support):
                    ok = False
                    break
            if not ok:
                closure_failures += 1
                continue
            witness = DegreeAssignment(dict(enumerate(degs)))
            report = verify_gradation(alg, witness)
            if report.is_maximum_length:
                search = {"strategy": "diagonal", "window": window,
                          "assignments_tried": tried}
                return GradationReport(MAXIMUM_LENGTH, witness=witness,
                                       checks=report.checks, search=search)
    search = {"strategy": "diagonal", "window": window,
              "assignments_tried": tried,
              "closure_failures": closure_failures,
              "note": "exhaustive over injective interval maps in the given basis"}
    return GradationReport(NO_GRADATION_FOUND, search=search)


# -- adapted-basis search ------------------------------------------------------

@dataclass(frozen=True)
class GeneratorRoles:
    """Which generators drive the chain and which carry unknown degrees.

    ``extra_draw`` optionally restricts where the non-driver generic
    generators may spread (the standard generator shape draws them over the
    chain part and the other generators only).
    """

    driver: int
    others: tuple[int, ...]
    extra_draw: tuple[int, ...] | None = None


@dataclass
class AdaptedBasisSample:
    """One generic draw of homogeneous generators plus its bracket closure."""

    sample_index: int
    driver: int
    plain: bool
    generators: tuple[Vector, ...]
    basis_matrix: tuple[Vector, ...] | None = None
    forms: tuple[SymbolicDegree, ...] | None = None
    labels: tuple[str, ...] | None = None
    adapted: Algebra | None = None

    @property
    def degenerate(self) -> bool:
        return self.basis_matrix is None


def _random_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def _draw_generators(alg: Algebra, roles: GeneratorRoles, rng: random.Random,
                     plain: bool) -> tuple[Vector, ...]:
    n = alg.dim
    gens = []
    all_indices = set(range(n))
    for pos, lead in enumerate((roles.driver,) + roles.others):
        vec = list(unit_vector(n, lead))
        if not plain:
            if pos == 0 or roles.extra_draw is None:
                support = all_indices - {lead}
            else:
                support = (set(roles.extra_draw) | {roles.driver}
                           | set(roles.others)) - {lead}
            for k in sorted(support):
                vec[k] = _random_coeff(rng)
        gens.append(tuple(vec))
    return tuple(gens)


def _close_adapted_basis(alg: Algebra, sample: AdaptedBasisSample,
                         unknowns: int) -> None:
    """Bracket-close the generators, tracking symbolic degrees.

    Fills the sample in place; leaves basis_matrix = None when the closure
    does not span (degenerate draw).
    """
    n = alg.dim
    vecs = list(sample.generators)
    forms = [SymbolicDegree(1, (0,) * unknowns)]
    for t in range(unknowns):
        forms.append(SymbolicDegree(0, tuple(1 if s == t else 0
                                             for s in range(unknowns))))
    space = RowSpace(n)
    for v in vecs:
        if not space.add(v):
            return  # generators already dependent
    while space.dim < n:
        added = False
        size = len(vecs)
        for i in range(size):
            for j in range(size):
                w = bracket(alg, vecs[i], vecs[j])
                if is_zero_vector(w) or not space.add(w):
                    continue
                vecs.append(w)
                forms.append(forms[i].plus(forms[j]))
                added = True
                if space.dim == n:
                    break
            if space.dim == n:
                break
        if not added:
            return  # closure stalls below full rank
    matrix = tuple(vecs)
    labels = _adapted_labels(alg, matrix)
    sample.basis_matrix = matrix
    sample.forms = tuple(forms)
    sample.labels = labels
    sample.adapted = change_of_basis(alg, matrix, labels)


def _adapted_labels(alg: Algebra, matrix: tuple[Vector, ...]) -> tuple[str, ...]:
    """Reuse an original label when an adapted vector is proportional to it."""
    labels = []
    used = set()
    for idx, row in enumerate(matrix):
        support = [k for k, c in enumerate(row) if c]
        name = None
        if len(support) == 1:
            cand = alg.basis_labels[support[0]]
            if cand not in used:
                name = cand
        if name is None:
            name = f"w{idx + 1}"
            while name in used:
                name += "'"
        used.add(name)
        labels.append(name)
    return tuple(labels)


def two_generator_search(alg: Algebra, kt_window: int | None = None,
                         samples: int = 3, seed: int = DEFAULT_SEED,
                         roles: GeneratorRoles | None = None) -> GradationReport:
    """Adapted-basis maximum-length search following the extension scheme.

    The chain driver is normalized to degree k_s = 1 (the k_s = -1 case is
    equivalent under negation of all degrees); every other generator gets
    an unknown integer degree enumerated over [-kt_window, kt_window].
    Sample 0 uses the plain generators; ``samples`` further draws use
    generic rational coefficients to avoid non-generic degeneration.
    Witnesses are reported in the adapted basis together with the change
    of basis, lowest unknown tuple first.
    """
    n = alg.dim
    if kt_window is None:
        kt_window = 2 * n
    series = lower_central_series(alg)
    l2 = series.derived_subalgebra
    if l2.dim == n:
        raise InvalidInputError("L^2 = L: the algebra has no generators")
    gen_indices = tuple(i for i in range(n) if i not in set(l2.pivots))
    if roles is None:
        role_choices = [GeneratorRoles(driver=g,
                                       others=tuple(h for h in gen_indices
                                                    if h != g))
                        for g in gen_indices]
    else:
        if roles.driver in roles.others or len(set(roles.others)) != len(roles.others):
            raise InvalidInputError("generator roles overlap")
        role_choices = [roles]
    unknowns = len(role_choices[0].others)
    space_size = (2 * kt_window + 1) ** unknowns
    if space_size > 2_000_000:
        raise InvalidInputError(
            f"degree enumeration would try {space_size} assignments "
            f"({unknowns} unknowns over window {kt_window}); reduce "
            "kt_window or pin the generator roles")
    unknown_names = tuple(
        "k_t" if unknowns == 1 else f"k_{t + 1}" for t in range(unknowns))

    rng = random.Random(seed)
    built: list[AdaptedBasisSample] = []
    degenerate = 0
    for sample_index in range(samples + 1):
        for choice in role_choices:
            sample = AdaptedBasisSample(
                sample_index=sample_index, driver=choice.driver,
                plain=(sample_index == 0),
                generators=_draw_generators(alg, choice, rng,
                                            plain=(sample_index == 0)))
            _close_adapted_basis(alg, sample, unknowns)
            if sample.degenerate:
                degenerate += 1
            else:
                built.append(sample)
    if not built:
        raise DegenerateSampleError(
            "every generator sample produced a singular basis change; "
            "re-seed or adjust the generator roles")

    # Group samples whose symbolic degree forms coincide: the degree-set
    # checks depend only on the forms, closure is per-sample.  Groups keep
    # build order so the plain sample drives the recorded reasons.
    groups: dict[tuple, tuple[int, list[AdaptedBasisSample]]] = {}
    for pos, sample in enumerate(built):
        if sample.forms in groups:
            groups[sample.forms][1].append(sample)
        else:
            groups[sample.forms] = (pos, [sample])
    group_items = [(forms, members) for forms, (pos, members)
                   in sorted(groups.items(), key=lambda kv: kv[1][0])]

    reasons_by_kt: dict[tuple[int, ...], str] = {}
    reason_counts = {REASON_COLLISION: 0, REASON_DISCONNECTED: 0,
                     REASON_CLOSURE: 0}
    exemplars: dict[str, tuple[int, ...]] = {}

    def record(kts: tuple[int, ...], reason: str) -> None:
        if kts not in reasons_by_kt:
            reasons_by_kt[kts] = reason
            reason_counts[reason] += 1
            exemplars.setdefault(reason, kts)

    domain = range(-kt_window, kt_window + 1)
    for kts in product(domain, repeat=unknowns):
        verdict_reason = None
        for forms, members in group_items:
            degs = [f.value(1, kts) for f in forms]
            reason = _degree_reason(n, degs)
            if reason is not None:
                if verdict_reason is None:
                    verdict_reason = reason
                continue
            for sample in members:
                if _closure_offset(sample.adapted, degs)[0]:
                    witness = DegreeAssignment(dict(enumerate(degs)))
                    report = verify_gradation(sample.adapted, witness)
                    search = _search_summary(
                        kt_window, samples, seed, unknown_names, reasons_by_kt,
                        reason_counts, exemplars, degenerate, unknowns,
                        found_at=kts, sample=sample)
                    return GradationReport(MAXIMUM_LENGTH, witness=witness,
                                           checks=report.checks, search=search)
            if verdict_reason is None:
                verdict_reason = REASON_CLOSURE
        record(kts, verdict_reason if verdict_reason else REASON_CLOSURE)
    search = _search_summary(kt_window, samples, seed, unknown_names,
                             reasons_by_kt, reason_counts, exemplars,
                             degenerate, unknowns, found_at=None, sample=None)
    return GradationReport(NO_GRADATION_FOUND, search=search)


def _matrix_strings(matrix: tuple[Vector, ...]) -> list[list[str]]:
    return [[str(Fraction(c)) for c in row] for row in matrix]


def _search_summary(kt_window, samples, seed, unknown_names, reasons_by_kt,
                    reason_counts, exemplars, degenerate, unknowns,
                    found_at, sample) -> dict:
    out = {
        "strategy": "two_generator_adapted_basis",
        "kt_window": kt_window,
        "samples": samples,
        "seed": seed,
        "unknowns": list(unknown_names),
        "degenerate_samples": degenerate,
        "reason_counts": dict(sorted(reason_counts.items())),
        "reason_exemplars": {r: list(k) for r, k in sorted(exemplars.items())},
    }
    if unknowns == 1:
        out["reasons_by_kt"] = {str(k[0]): r
                                for k, r in sorted(reasons_by_kt.items())}
    elif len(reasons_by_kt) <= 1000:
        out["reasons_by_kt"] = {",".join(map(str, k)): r
                                for k, r in sorted(reasons_by_kt.items())}
    else:
        head = sorted(reasons_by_kt.items())[:200]
        out["reasons_by_kt"] = {",".join(map(str, k)): r for k, r in head}
        out["reasons_by_kt_truncated"] = len(reasons_by_kt)
    if found_at is not None:
        out["witness_at"] = list(found_at)
        out["sample_index"] = sample.sample_index
        out["plain_sample"] = sample.plain
        out["adapted_basis_labels"] = list(sample.labels)
        out["adapted_basis_matrix"] = _matrix_strings(sample.basis_matrix)
    else:
        out["note"] = SCHEME_NOTE
    return out
