"""Windows, torus and patch arrays, and the window-sum operator.

Array values live in any exact commutative ring: ``int``, ``Fraction``,
:class:`~tomofix.rings.IntMod` or :class:`~tomofix.cyclotomic.CycElem`.
Cells are addressed as ``(i, j)`` (column ``i``, row ``j``) and flattened as
``k = i + n1 * j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence

from .cyclotomic import CycElem
from .rings import IntMod, Ring

LatticePoint = tuple[int, int]
ORIGIN: LatticePoint = (0, 0)


class OutOfInteriorError(ValueError):
    """A window translate leaves the rectangle of a patch array."""


@dataclass(frozen=True)
class Window:
    points: frozenset[LatticePoint]

    def __init__(self, points: Iterable[Sequence[int]]) -> None:
        pts = frozenset((int(p[0]), int(p[1])) for p in points)
        object.__setattr__(self, "points", pts)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(sorted(self.points, key=lambda p: (p[1], p[0])))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def contains_origin(self) -> bool:
        return ORIGIN in self.points

    def __repr__(self) -> str:
        return f"Window({list(self)})"


def square_window(n: int) -> Window:
    """S(n) = {(i, j) : 0 <= i, j <= n - 1}."""
    if n < 2:
        raise ValueError(f"square window needs n >= 2, got {n}")
    return Window((i, j) for j in range(n) for i in range(n))


def puncture(w: Window) -> Window:
    if not w.contains_origin():
        raise ValueError("window does not contain the origin")
    return Window(w.points - {ORIGIN})


def translate_window(w: Window, k: Sequence[int]) -> Window:
    return Window((i + k[0], j + k[1]) for i, j in w.points)


def _ring_sum(values: list[Any]) -> Any:
    if not values:
        raise ValueError("empty sum needs an explicit zero")
    total = values[0]
    for v in values[1:]:
        total = total + v
    return total


def _zero_like(x: Any) -> Any:
    return x - x


@dataclass(frozen=True)
class TorusArray:
    """Values on the n1 x n2 wraparound grid, stored flat in ``i + n1*j`` order."""

    dims: tuple[int, int]
    values: tuple[Any, ...]

    def __post_init__(self) -> None:
        n1, n2 = self.dims
        if n1 < 1 or n2 < 1:
            raise ValueError(f"bad torus dims {self.dims}")
        if len(self.values) != n1 * n2:
            raise ValueError(f"expected {n1 * n2} values, got {len(self.values)}")

    @classmethod
    def from_function(cls, dims: tuple[int, int], f: Callable[[int, int], Any]) -> TorusArray:
        n1, n2 = dims
        return cls((n1, n2), tuple(f(i, j) for j in range(n2) for i in range(n1)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> TorusArray:
        """``rows[j][i]`` is the value at ``(i, j)``."""
        n2, n1 = len(rows), len(rows[0])
        return cls((n1, n2), tuple(v for row in rows for v in row))

    @classmethod
    def constant(cls, dims: tuple[int, int], value: Any) -> TorusArray:
        return cls(dims, (value,) * (dims[0] * dims[1]))

    def __getitem__(self, ij: Sequence[int]) -> Any:
        n1, n2 = self.dims
        return self.values[ij[0] % n1 + n1 * (ij[1] % n2)]

    def cells(self) -> Iterator[LatticePoint]:
        n1, n2 = self.dims
        for j in range(n2):
            for i in range(n1):
                yield (i, j)

    def rows(self) -> list[list[Any]]:
        n1, n2 = self.dims
        return [list(self.values[n1 * j : n1 * (j + 1)]) for j in range(n2)]

    def map(self, f: Callable[[Any], Any]) -> TorusArray:
        return TorusArray(self.dims, tuple(f(v) for v in self.values))

    def _check(self, other: TorusArray) -> None:
        if self.dims != other.dims:
            raise ValueError(f"dims differ: {self.dims} vs {other.dims}")

    def __add__(self, other: TorusArray) -> TorusArray:
        self._check(other)
        return TorusArray(self.dims, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: TorusArray) -> TorusArray:
        self._check(other)
        return TorusArray(self.dims, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> TorusArray:
        return self.map(lambda v: -v)

    def scale(self, c: Any) -> TorusArray:
        return self.map(lambda v: c * v)

    def translate(self, p: Sequence[int]) -> TorusArray:
        """T_p(a)_i = a_{i - p}."""
        return TorusArray.from_function(self.dims, lambda i, j: self[i - p[0], j - p[1]])

    def tile(self, dims: tuple[int, int]) -> TorusArray:
        """Same doubly periodic array viewed on a torus whose dims are multiples."""
        if dims[0] % self.dims[0] or dims[1] % self.dims[1]:
            raise ValueError(f"{dims} is not a multiple of {self.dims}")
        return TorusArray.from_function(dims, lambda i, j: self[i, j])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def has_period(self, p: Sequence[int]) -> bool:
        return all(self[i + p[0], j + p[1]] == self[i, j] for i, j in self.cells())


@dataclass(frozen=True)
class PatchArray:
    """Finite view of an array on Z^2 over an inclusive rectangle."""

    imin: int
    imax: int
    jmin: int
    jmax: int
    values: tuple[Any, ...]
    tag: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.imin > self.imax or self.jmin > self.jmax:
            raise ValueError("degenerate rectangle")
        if len(self.values) != self.width * self.height:
            raise ValueError("value count does not match rectangle")

    @property
    def width(self) -> int:
        return self.imax - self.imin + 1

    @property
    def height(self) -> int:
        return self.jmax - self.jmin + 1

    @classmethod
    def from_function(
        cls,
        imin: int,
        imax: int,
        jmin: int,
        jmax: int,
        f: Callable[[int, int], Any],
        tag: str | None = None,
    ) -> PatchArray:
        vals = tuple(f(i, j) for j in range(jmin, jmax + 1) for i in range(imin, imax + 1))
        return cls(imin, imax, jmin, jmax, vals, tag)

    def inside(self, ij: Sequence[int]) -> bool:
        return self.imin <= ij[0] <= self.imax and self.jmin <= ij[1] <= self.jmax

    def __getitem__(self, ij: Sequence[int]) -> Any:
        if not self.inside(ij):
            raise OutOfInteriorError(f"{tuple(ij)} outside patch")
        return self.values[(ij[0] - self.imin) + self.width * (ij[1] - self.jmin)]

    def cells(self) -> Iterator[LatticePoint]:
        for j in range(self.jmin, self.jmax + 1):
            for i in range(self.imin, self.imax + 1):
                yield (i, j)

    def interior(self, w: Window) -> list[LatticePoint]:
        """Cells k with w + k inside the rectangle."""
        return [k for k in self.cells() if all(self.inside((p[0] + k[0], p[1] + k[1])) for p in w.points)]

    def rows(self) -> list[list[Any]]:
        w = self.width
        return [list(self.values[w * r : w * (r + 1)]) for r in range(self.height)]


def degree(w: Window, a: TorusArray | PatchArray, k: Sequence[int] = ORIGIN) -> Any:
    """Sum of ``a`` over the translate ``w + k``."""
    cells = [(p[0] + k[0], p[1] + k[1]) for p in w]
    if isinstance(a, PatchArray):
        for c in cells:
            if not a.inside(c):
                raise OutOfInteriorError(f"window translate by {tuple(k)} leaves the patch")
    if not cells:
        return _zero_like(a.values[0])
    first = a.values[0]
    if isinstance(first, IntMod):
        return IntMod(sum(a[c].value for c in cells), first.modulus)
    if isinstance(first, CycElem):
        return _cyc_sum([a[c] for c in cells])
    return _ring_sum([a[c] for c in cells])


def _cyc_sum(vals: list[CycElem]) -> CycElem:
    n = vals[0].conductor
    if all(v.conductor == n and v.den == 1 for v in vals):
        acc = [0] * len(vals[0].num)
        for v in vals:
            for idx, c in enumerate(v.num):
                if c:
                    acc[idx] += c
        return CycElem._raw(n, tuple(acc), 1)
    return _ring_sum(vals)


def delta(w: Window, a: TorusArray) -> TorusArray:
    """The array k -> degree(w, a, k)."""
    return TorusArray.from_function(a.dims, lambda i, j: degree(w, a, (i, j)))


def delta_on_interior(w: Window, a: PatchArray) -> dict[LatticePoint, Any]:
    return {k: degree(w, a, k) for k in a.interior(w)}


def is_fixed(w: Window, a: TorusArray) -> bool:
    """Delta_W(a) == a, cross-checked against Delta_{W*}(a) == 0."""
    direct = delta(w, a) == a
    kernel = delta(puncture(w), a).is_zero()
    if direct != kernel:
        raise AssertionError("fixed-point and punctured-kernel checks disagree")
    return direct


# serialisation and display


def array_to_json(a: TorusArray, ring: Ring | None = None) -> dict:
    ring = ring or Ring.infer(a.values[0])
    return {
        "dims": list(a.dims),
        "ring": ring.to_json(),
        "values": [[ring.encode(v) for v in row] for row in a.rows()],
    }


def array_from_json(raw: dict | str) -> TorusArray:
    if isinstance(raw, str):
        raw = json.loads(raw)
    ring = Ring.from_json(raw["ring"])
    rows = [[ring.decode(v) for v in row] for row in raw["values"]]
    a = TorusArray.from_rows(rows)
    if list(a.dims) != list(raw["dims"]):
        raise ValueError(f"dims {raw['dims']} do not match values {a.dims}")
    return a


GRID_LEGEND = "# grid: row j increases downward, column i increases rightward"


def render_grid(a: TorusArray | PatchArray, fmt: Callable[[Any], str] = str) -> str:
    cells = [[fmt(v) for v in row] for row in a.rows()]
    width = max(len(c) for row in cells for c in row)
    lines = [GRID_LEGEND]
    if isinstance(a, PatchArray):
        lines.append(f"# i in [{a.imin}, {a.imax}], j in [{a.jmin}, {a.jmax}]")
    lines.extend(" ".join(c.rjust(width) for c in row) for row in cells)
    return "\n".join(lines)
