"""Semi-simplicial sets whose simplices carry lifetimes.

File format (``#`` comments)::

    pcomplex v1
    bounds <eps1> <eps2>                        # optional
    simplex <id> <dim> <birth> <death> [faces...]

A simplex is alive on the closed interval ``[birth, death]`` and must not
outlive any of its faces.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import (
    AlgebraError,
    Bounds,
    Lifetime,
    Orientation,
    leq,
    orientation,
    parse_rational,
)

HEADER = "pcomplex v1"
_ID_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class ComplexError(ValueError):
    kind = "invalid"


class ComplexParseError(ComplexError):
    kind = "parse"

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ComplexValidationError(ComplexError):
    kind = "validation"

    def __init__(self, simplex: str, message: str):
        super().__init__(message)
        self.simplex = simplex


class UnknownFaceError(ComplexValidationError):
    kind = "unknown-face"


class FaceCountError(ComplexValidationError):
    kind = "face-count"


class FaceDimensionError(ComplexValidationError):
    kind = "face-dimension"


class LifetimeContainmentError(ComplexValidationError):
    kind = "lifetime-containment"

    def __init__(self, simplex: str, faces: tuple[str, ...], message: str):
        super().__init__(simplex, message)
        self.faces = faces


class DuplicateIdError(ComplexValidationError):
    kind = "duplicate-id"


class LifetimeRangeError(ComplexValidationError):
    """Negatively oriented or out-of-bounds simplex lifetime."""

    kind = "lifetime-range"


@dataclass(frozen=True)
class SimplexEntry:
    id: str
    dim: int
    lifetime: Lifetime
    faces: tuple[str, ...] = ()

    @property
    def birth(self) -> Fraction:
        return self.lifetime.x1

    @property
    def death(self) -> Fraction:
        return self.lifetime.x2


@dataclass(frozen=True)
class StaticComplex:
    """A plain semi-simplicial set: per-dimension id lists plus face lists."""

    cells: tuple[tuple[str, ...], ...]
    faces: dict = field(default_factory=dict, compare=False)

    def ids(self, dim: int) -> tuple[str, ...]:
        if 0 <= dim < len(self.cells):
            return self.cells[dim]
        return ()

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def all_ids(self) -> set[str]:
        return {s for level in self.cells for s in level}

    def is_closed(self) -> bool:
        alive = self.all_ids()
        return all(f in alive for s in alive for f in self.faces[s])

    def __len__(self):
        return sum(len(level) for level in self.cells)


class VariableComplex:
    """Validated, immutable complex with lifetimes.  Entry order is file order."""

    def __init__(self, entries: Iterable[SimplexEntry], bounds: Bounds):
        self.entries: tuple[SimplexEntry, ...] = tuple(entries)
        self.bounds = bounds
        self._by_id: dict[str, SimplexEntry] = {}
        for e in self.entries:
            self._validate(e)
            self._by_id[e.id] = e

    def _validate(self, e: SimplexEntry) -> None:
        if e.id in self._by_id:
            raise DuplicateIdError(e.id, f"duplicate simplex id {e.id!r}")
        if e.lifetime.bounds != self.bounds:
            raise LifetimeRangeError(e.id, f"{e.id}: lifetime uses different bounds")
        if orientation(e.lifetime) is Orientation.NEGATIVE:
            raise LifetimeRangeError(e.id, f"{e.id}: dies ({e.death}) before it is born ({e.birth})")
        if e.dim < 0:
            raise FaceDimensionError(e.id, f"{e.id}: negative dimension")
        expected = e.dim + 1 if e.dim > 0 else 0
        if len(e.faces) != expected:
            raise FaceCountError(
                e.id, f"{e.id}: dimension {e.dim} needs {expected} faces, got {len(e.faces)}"
            )
        outlived = []
        for f in e.faces:
            face = self._by_id.get(f)
            if face is None:
                raise UnknownFaceError(e.id, f"{e.id}: unknown face {f!r}")
            if face.dim != e.dim - 1:
                raise FaceDimensionError(
                    e.id, f"{e.id}: face {f} has dimension {face.dim}, expected {e.dim - 1}"
                )
            if not leq(e.lifetime, face.lifetime) and f not in outlived:
                outlived.append(f)
        if outlived:
            spans = ", ".join(
                f"{f} [{self._by_id[f].birth},{self._by_id[f].death}]" for f in outlived
            )
            raise LifetimeContainmentError(
                e.id, tuple(outlived),
                f"{e.id} lives on [{e.birth},{e.death}] outside its faces {spans}",
            )

    def __getitem__(self, sid: str) -> SimplexEntry:
        return self._by_id[sid]

    def __contains__(self, sid: str) -> bool:
        return sid in self._by_id

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, VariableComplex):
            return NotImplemented
        return self.bounds == other.bounds and self.entries == other.entries

    def __repr__(self):
        return f"VariableComplex({len(self.entries)} simplices, bounds=({self.bounds.eps1},{self.bounds.eps2}))"

    @property
    def top_dim(self) -> int:
        return max((e.dim for e in self.entries), default=-1)

    def restrict_to(self, ids: set[str]) -> StaticComplex:
        top = max((self._by_id[s].dim for s in ids), default=-1)
        cells = [[] for _ in range(top + 1)]
        for e in self.entries:
            if e.id in ids:
                cells[e.dim].append(e.id)
        return StaticComplex(
            tuple(tuple(c) for c in cells), {s: self._by_id[s].faces for s in ids}
        )


def _default_bounds(entries_raw) -> Bounds:
    top = max((d for _, _, _, _, d, _ in entries_raw), default=Fraction(0))
    if top <= 0:
        top = Fraction(1)
    return Bounds(top, top)


def parse_complex(text: str) -> VariableComplex:
    lines = text.splitlines()
    body = []
    for lineno, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            body.append((lineno, content))
    if not body or body[0][1] != HEADER:
        raise ComplexParseError(body[0][0] if body else 1, f"expected header {HEADER!r}")
    bounds: Optional[Bounds] = None
    raw = []
    for lineno, content in body[1:]:
        parts = content.split()
        if parts[0] == "bounds":
            if bounds is not None or raw:
                raise ComplexParseError(lineno, "bounds must appear once, before simplices")
            if len(parts) != 3:
                raise ComplexParseError(lineno, "expected 'bounds <eps1> <eps2>'")
            try:
                bounds = Bounds(parse_rational(parts[1]), parse_rational(parts[2]))
            except (ValueError, AlgebraError) as exc:
                raise ComplexParseError(lineno, str(exc)) from None
            continue
        if parts[0] != "simplex":
            raise ComplexParseError(lineno, f"unknown directive {parts[0]!r}")
        if len(parts) < 5:
            raise ComplexParseError(lineno, "expected 'simplex <id> <dim> <birth> <death> [faces]'")
        sid, dim_s, birth_s, death_s, *faces = parts[1:]
        if not _ID_RE.match(sid):
            raise ComplexParseError(lineno, f"bad simplex id {sid!r}")
        bad = [f for f in faces if not _ID_RE.match(f)]
        if bad:
            raise ComplexParseError(lineno, f"bad face id {bad[0]!r}")
        if not dim_s.isdigit():
            raise ComplexParseError(lineno, f"bad dimension {dim_s!r}")
        try:
            birth, death = parse_rational(birth_s), parse_rational(death_s)
        except ValueError as exc:
            raise ComplexParseError(lineno, str(exc)) from None
        raw.append((lineno, sid, int(dim_s), birth, death, tuple(faces)))
    if bounds is None:
        bounds = _default_bounds(raw)
    entries = []
    for lineno, sid, dim, birth, death, faces in raw:
        try:
            lt = Lifetime(birth, death, bounds)
        except AlgebraError as exc:
            raise LifetimeRangeError(sid, f"{sid}: {exc}") from None
        entries.append(SimplexEntry(sid, dim, lt, faces))
    return VariableComplex(entries, bounds)


def format_complex(c: VariableComplex) -> str:
    out = [HEADER, f"bounds {c.bounds.eps1} {c.bounds.eps2}"]
    for e in c.entries:
        out.append(" ".join(["simplex", e.id, str(e.dim), str(e.birth), str(e.death), *e.faces]))
    return "\n".join(out) + "\n"


def slice_at(c: VariableComplex, t) -> StaticComplex:
    """Simplices alive at time ``t`` (closed-interval membership)."""
    t = Fraction(t)
    return c.restrict_to({e.id for e in c.entries if e.birth <= t <= e.death})


def alive_over(c: VariableComplex, q: Lifetime) -> set[str]:
    """Ids alive during the whole of ``q``."""
    if orientation(q) is Orientation.NEGATIVE:
        raise AlgebraError(f"query {q} is negatively oriented")
    return {e.id for e in c.entries if leq(q, e.lifetime)}


def critical_values(c: VariableComplex) -> list[Fraction]:
    return sorted({v for e in c.entries for v in (e.birth, e.death)})


def sample_points(c: VariableComplex) -> list[Fraction]:
    crit = critical_values(c)
    out = crit[:1]
    for lo, hi in zip(crit, crit[1:]):
        out.extend(((lo + hi) / 2, hi))
    return out


TRIANGLE_FIXTURE = """\
pcomplex v1
# two vertices at t=0, a third joins at t=1 closing a loop of edges,
# the loop is filled at t=2 and most of the complex disappears by t=4
simplex x 0 0 5
simplex y 0 0 4
simplex z 0 1 3
simplex d 1 1 4 x y
simplex e 1 1 3 y z
simplex f 1 1 3 z x
simplex t 2 2 3 d e f
"""


def triangle_fixture() -> VariableComplex:
    return parse_complex(TRIANGLE_FIXTURE)


def random_complex(
    rng: random.Random,
    max_simplices: int = 12,
    max_dim: int = 2,
    filtration: bool = False,
    horizon: int = 8,
    denominators=(1, 2),
) -> VariableComplex:
    """A random valid complex whose simplices are genuine (vertex-set) simplices.

    With ``filtration`` every death equals the horizon.
    """

    def rat(lo: Fraction, hi: Fraction) -> Fraction:
        d = rng.choice(denominators)
        a, b = int(lo * d), int(hi * d)
        if Fraction(a, d) < lo:
            a += 1
        return Fraction(rng.randint(a, b), d) if a <= b else lo

    bounds = Bounds(horizon, horizon)
    H = Fraction(horizon)
    n_vertices = rng.randint(1, max(1, min(6, max_simplices)))
    keep = rng.uniform(0.3, 1.0)
    entries: list[SimplexEntry] = []
    by_verts: dict[frozenset, SimplexEntry] = {}

    def add(verts: tuple[int, ...], faces: tuple[str, ...]):
        dim = len(verts) - 1
        face_entries = [by_verts[frozenset(v for v in verts if v != w)] for w in verts] if dim else []
        lo = max((f.birth for f in face_entries), default=Fraction(0))
        hi = min((f.death for f in face_entries), default=H)
        if lo > hi:
            return
        birth = rat(lo, hi)
        death = H if filtration else rat(birth, hi)
        name = "s" + "_".join(map(str, verts))
        e = SimplexEntry(name, dim, Lifetime(birth, death, bounds), faces)
        entries.append(e)
        by_verts[frozenset(verts)] = e

    for v in range(n_vertices):
        add((v,), ())
    candidates = []
    if max_dim >= 1:
        candidates += [(i, j) for i in range(n_vertices) for j in range(i + 1, n_vertices)]
    rng.shuffle(candidates)
    for verts in candidates:
        if len(entries) >= max_simplices:
            break
        if rng.random() > keep:
            continue
        add(verts, tuple(by_verts[frozenset(v for v in verts if v != w)].id for w in verts))
    if max_dim >= 2:
        tris = [
            (i, j, k)
            for i in range(n_vertices)
            for j in range(i + 1, n_vertices)
            for k in range(j + 1, n_vertices)
            if all(frozenset(p) in by_verts for p in ((i, j), (j, k), (i, k)))
        ]
        rng.shuffle(tris)
        for verts in tris:
            if len(entries) >= max_simplices:
                break
            if rng.random() > keep:
                continue
            add(verts, tuple(by_verts[frozenset(v for v in verts if v != w)].id for w in verts))
    # shuffle file order while keeping faces ahead of cofaces
    rng.shuffle(entries)
    entries.sort(key=lambda e: e.dim)
    return VariableComplex(entries, bounds)
