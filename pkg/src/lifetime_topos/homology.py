"""Homology of complexes with lifetimes over F2 or Q.

Pointwise Betti numbers come from ranks of boundary matrices on time
slices; :func:`betti_curve` glues them into step functions of time.  For
filtrations (nothing dies inside the window) :func:`persistence_pairs`
runs the standard column reduction.
"""
from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .algebra import Bounds, Lifetime, Orientation, orientation
from .varcomplex import StaticComplex, VariableComplex, critical_values, slice_at

INF = math.inf
Death = Union[Fraction, float]


class Field(enum.Enum):
    F2 = "f2"
    Q = "q"

    def coefficient(self, i: int):
        if self is Field.F2:
            return 1
        return Fraction(-1) ** i

    def normalize(self, v):
        return v % 2 if self is Field.F2 else v


class HomologyError(ValueError):
    pass


class ChainConditionError(HomologyError):
    def __init__(self, dim: int, field: Field):
        super().__init__(
            f"boundary of boundary is nonzero in dimension {dim} over {field.name}; "
            "face orientations are inconsistent for this field"
        )
        self.dim = dim
        self.field = field


class NotAFiltrationError(HomologyError):
    def __init__(self):
        super().__init__(
            "not a filtration: some simplex dies inside the window; "
            "use betti curves for complexes with deaths"
        )


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary map from dimension ``n`` to ``n - 1``; ``entries[r][c]``."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    field: Field
    entries: tuple[tuple, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def column(self, sid: str) -> list:
        j = self.cols.index(sid)
        return [row[j] for row in self.entries]


def _face_column(faces: Sequence[str], field: Field) -> dict[str, object]:
    col: dict[str, object] = {}
    for i, f in enumerate(faces):
        col[f] = field.normalize(col.get(f, 0) + field.coefficient(i))
    return {f: v for f, v in col.items() if v != 0}


def boundary_matrix(s: StaticComplex, n: int, field: Field = Field.F2) -> BoundaryMatrix:
    if n < 1:
        raise ValueError("boundary matrices start at n = 1")
    rows, cols = s.ids(n - 1), s.ids(n)
    index = {r: i for i, r in enumerate(rows)}
    zero = 0 if field is Field.F2 else Fraction(0)
    dense = [[zero] * len(cols) for _ in rows]
    for j, sid in enumerate(cols):
        for f, v in _face_column(s.faces[sid], field).items():
            dense[index[f]][j] = v
    return BoundaryMatrix(rows, cols, field, tuple(tuple(r) for r in dense))


def _rank_f2(entries) -> int:
    # rows packed as integer bitmasks
    rows = [sum(1 << j for j, v in enumerate(r) if v % 2) for r in entries]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def _rank_q(entries) -> int:
    m = [[Fraction(v) for v in r] for r in entries]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for r in range(rank + 1, n_rows):
            if m[r][c] != 0:
                k = m[r][c] / p[c]
                m[r] = [a - k * b for a, b in zip(m[r], p)]
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank(m: Union[BoundaryMatrix, Sequence[Sequence]], field: Optional[Field] = None) -> int:
    """Exact rank over the matrix's field (or ``field`` for a bare nested list)."""
    if isinstance(m, BoundaryMatrix):
        field, entries = m.field, m.entries
    else:
        entries = m
        field = field or Field.F2
    if field is Field.F2:
        return _rank_f2(entries)
    return _rank_q(entries)


def _compose_is_zero(lower: BoundaryMatrix, upper: BoundaryMatrix) -> bool:
    field = lower.field
    for j in range(len(upper.cols)):
        col = [row[j] for row in upper.entries]
        for row in lower.entries:
            v = field.normalize(sum(a * b for a, b in zip(row, col)))
            if v != 0:
                return False
    return True


def check_chain_condition(s: StaticComplex, field: Field = Field.F2) -> None:
    """Raise ChainConditionError unless every composite of boundaries vanishes."""
    for n in range(2, s.top_dim + 1):
        if not _compose_is_zero(boundary_matrix(s, n - 1, field), boundary_matrix(s, n, field)):
            raise ChainConditionError(n, field)


def betti(s: StaticComplex, n: int, field: Field = Field.F2) -> int:
    if n < 0:
        raise ValueError("negative dimension")
    check_chain_condition(s, field)
    dim_c = len(s.ids(n))
    rank_n = rank(boundary_matrix(s, n, field)) if n >= 1 else 0
    rank_up = rank(boundary_matrix(s, n + 1, field))
    return dim_c - rank_n - rank_up


def euler_characteristic(s: StaticComplex) -> int:
    return sum((-1) ** n * len(s.ids(n)) for n in range(s.top_dim + 1))


@dataclass(frozen=True)
class Step:
    start: Fraction
    end: Fraction
    end_included: bool
    rank: int


@dataclass(frozen=True)
class BettiCurve:
    """Step function ``t -> betti_n(slice at t)``.

    Steps tile ``[min birth, max death]``; the first step is closed at its
    start and each later step is closed at its start exactly when the
    previous one is open at its end.
    """

    dimension: int
    steps: tuple[Step, ...]

    def rank_at(self, t) -> int:
        t = Fraction(t)
        for st in self.steps:
            if st.start <= t < st.end or (t == st.end and st.end_included):
                return st.rank
        raise ValueError(f"{t} lies outside the curve's domain")

    def to_csv(self) -> str:
        return "".join(
            f"{self.dimension},{st.start},{st.end},{str(st.end_included).lower()},{st.rank}\n"
            for st in self.steps
        )


def betti_curve(
    c: VariableComplex,
    n: int,
    field: Field = Field.F2,
    extra_points: Iterable = (),
) -> BettiCurve:
    """Glue pointwise Betti numbers into maximal constant steps.

    Rank is evaluated at every critical value and at the midpoint of every
    gap between consecutive evaluation points.  ``extra_points`` refines
    the evaluation grid; the merged result does not depend on it.
    """
    crit = critical_values(c)
    if not crit:
        return BettiCurve(n, ())
    pts = sorted(set(crit) | {Fraction(p) for p in extra_points if crit[0] <= Fraction(p) <= crit[-1]})
    # pieces alternate: closed point, open gap, closed point, ...
    pieces: list[tuple[Fraction, Fraction, bool, int]] = []
    for i, p in enumerate(pts):
        if i:
            lo = pts[i - 1]
            r = betti(slice_at(c, (lo + p) / 2), n, field)
            pieces.append((lo, p, False, r))
        pieces.append((p, p, True, betti(slice_at(c, p), n, field)))
    steps: list[Step] = []
    start = pieces[0][0]
    for k, (lo, hi, closed, r) in enumerate(pieces):
        nxt = pieces[k + 1] if k + 1 < len(pieces) else None
        if nxt is None or nxt[3] != r:
            steps.append(Step(start, hi, closed, r))
            if nxt is not None:
                start = nxt[0]
    return BettiCurve(n, tuple(steps))


def is_filtration(c: VariableComplex) -> bool:
    return all(e.death == c.bounds.eps2 for e in c.entries)


class PairClass(enum.Enum):
    ORDINARY = "ordinary"
    RELATIVE = "relative"
    ESSENTIAL = "essential"


@dataclass(frozen=True)
class PersistencePair:
    dimension: int
    birth: Fraction
    death: Death
    pair_class: PairClass

    def alive_at(self, t) -> bool:
        return self.birth <= t < self.death


def filtration_order(c: VariableComplex) -> list:
    pos = {e.id: i for i, e in enumerate(c.entries)}
    return sorted(c.entries, key=lambda e: (e.birth, e.dim, pos[e.id]))


def persistence_pairs(c: VariableComplex, field: Field = Field.F2) -> list[PersistencePair]:
    """Birth/death pairs from column reduction in (birth, dim, file order).

    Pairs of zero persistence are dropped; unpaired simplices give
    essential classes with death ``INF``.
    """
    if not is_filtration(c):
        raise NotAFiltrationError()
    check_chain_condition(c.restrict_to({e.id for e in c.entries}), field)
    order = filtration_order(c)
    index = {e.id: i for i, e in enumerate(order)}
    pivot_of: dict[int, int] = {}  # low row -> column owning it
    reduced: dict[int, dict[int, object]] = {}
    for j, e in enumerate(order):
        col = {index[f]: v for f, v in _face_column(e.faces, field).items()}
        while col:
            low = max(col)
            k = pivot_of.get(low)
            if k is None:
                break
            other = reduced[k]
            if field is Field.F2:
                for r in other:
                    if r in col:
                        del col[r]
                    else:
                        col[r] = 1
            else:
                factor = col[low] / other[low]
                for r, v in other.items():
                    nv = col.get(r, 0) - factor * v
                    if nv == 0:
                        col.pop(r, None)
                    else:
                        col[r] = nv
        if col:
            low = max(col)
            pivot_of[low] = j
            reduced[j] = col
    paired = set()
    pairs: list[PersistencePair] = []
    for low, j in sorted(pivot_of.items(), key=lambda kv: kv[0]):
        paired.update((low, j))
        born, dies = order[low], order[j]
        if born.birth < dies.birth:
            pairs.append(PersistencePair(born.dim, born.birth, dies.birth, PairClass.ORDINARY))
    for i, e in enumerate(order):
        if i not in paired:
            pairs.append(PersistencePair(e.dim, e.birth, INF, PairClass.ESSENTIAL))
    pairs.sort(key=lambda p: (p.dimension, p.birth, p.death))
    return pairs


class PointClass(enum.Enum):
    ORDINARY = "ordinary"
    RELATIVE = "relative"
    DIAGONAL = "diagonal"


def classify_point(p: Lifetime) -> PointClass:
    o = orientation(p)
    if o is Orientation.POSITIVE:
        return PointClass.ORDINARY
    if o is Orientation.NEGATIVE:
        return PointClass.RELATIVE
    return PointClass.DIAGONAL


@dataclass(frozen=True)
class PersistenceDiagram:
    points: dict  # Lifetime -> multiplicity
    bounds: Bounds

    def __len__(self):
        return sum(self.points.values())

    def items(self) -> list[tuple[Lifetime, int]]:
        return sorted(self.points.items(), key=lambda kv: kv[0].as_tuple())

    def collapsed(self) -> PersistenceDiagram:
        return PersistenceDiagram({p: 1 for p in self.points}, self.bounds)


def diagram(
    pairs: Iterable[PersistencePair], bounds: Bounds, collapse_multiplicity: bool = False
) -> PersistenceDiagram:
    counts: Counter = Counter()
    for p in pairs:
        death = bounds.eps2 if p.death == INF else p.death
        counts[Lifetime(p.birth, death, bounds)] += 1
    d = PersistenceDiagram(dict(counts), bounds)
    return d.collapsed() if collapse_multiplicity else d


def pairs_to_csv(pairs: Iterable[PersistencePair]) -> str:
    out = []
    for p in pairs:
        death = "inf" if p.death == INF else str(p.death)
        out.append(f"{p.dimension},{p.birth},{death},{p.pair_class.value}\n")
    return "".join(out)
