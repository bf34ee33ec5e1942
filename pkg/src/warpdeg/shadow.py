"""Knot and link shadows as 4-valent combinatorial maps on the sphere.

Dart ``4*x + s`` sits at crossing ``x`` in slot ``s``; slots are numbered
counterclockwise, so the rotation at every crossing is implicit.  A strand
entering through slot ``s`` leaves through slot ``s + 2`` (mod 4), i.e. dart
``d ^ 2``.  ``pairing`` is the edge involution.

Corner ``d`` is the angle between dart ``d`` and its counterclockwise
successor.  Faces are orbits of corners under ``d -> pairing[succ(d)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    EmptyShadow,
    NonInvolutivePairing,
    NotConnected,
    NotKnotShadow,
    NotSphereEmbeddable,
)


def succ(d: int) -> int:
    """Counterclockwise successor of dart ``d`` at its crossing."""
    return (d & ~3) | ((d + 1) & 3)


def pred(d: int) -> int:
    return (d & ~3) | ((d - 1) & 3)


def opposite(d: int) -> int:
    return d ^ 2


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple[int, ...]
    incident_crossings: frozenset[int]

    @property
    def size(self) -> int:
        """Number of corners on the boundary."""
        return len(self.boundary)


@dataclass(frozen=True)
class Shadow:
    """Immutable shadow; build through :func:`build_shadow` or the codecs.

    ``free_loops`` counts crossingless circles.  They only arise from
    smoothing and are never accepted from user input.
    """

    pairing: tuple[int, ...]
    free_loops: int = 0
    _faces: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _dart_face: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _strands: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _graph_components: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.pairing)
        if n % 4:
            raise NonInvolutivePairing(f"dart count {n} is not a multiple of 4")
        for d, e in enumerate(self.pairing):
            if not 0 <= e < n or e == d or self.pairing[e] != d:
                raise NonInvolutivePairing(f"pairing is not a fixed-point-free involution at dart {d}")
        faces, dart_face = _trace_faces(self.pairing)
        strands = _trace_strands(self.pairing)
        comps = _count_graph_components(self.pairing)
        c = n // 4
        if len(faces) != c + 2 * comps:
            raise NotSphereEmbeddable(
                f"{len(faces)} faces for {c} crossings in {comps} piece(s); "
                f"a sphere needs {c + 2 * comps}"
            )
        object.__setattr__(self, "_faces", faces)
        object.__setattr__(self, "_dart_face", dart_face)
        object.__setattr__(self, "_strands", strands)
        object.__setattr__(self, "_graph_components", comps)

    # basic counts

    @property
    def crossing_count(self) -> int:
        return len(self.pairing) // 4

    @property
    def component_count(self) -> int:
        """Number of closed strands (link components), free loops included."""
        return len(self._strands) + self.free_loops

    @property
    def piece_count(self) -> int:
        """Connected pieces of the underlying curve system."""
        return self._graph_components + self.free_loops

    @property
    def is_connected(self) -> bool:
        return self.piece_count == 1

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1 and self.crossing_count > 0

    def require_knot(self):
        if not self.is_knot:
            raise NotKnotShadow(
                f"expected a knot shadow, got {self.component_count} component(s) "
                f"and {self.crossing_count} crossing(s)"
            )

    def require_connected(self):
        if not self.is_connected or self.crossing_count == 0:
            raise NotConnected("operation needs a connected shadow with at least one crossing")

    # faces

    @property
    def face_count(self) -> int:
        return len(self._faces)

    def face_of(self, d: int) -> int:
        return self._dart_face[d]

    def regions(self) -> tuple[Region, ...]:
        return trace_regions(self)

    def quadrants(self, x: int) -> tuple[int, int, int, int]:
        return quadrants(self, x)

    def is_reduced(self) -> bool:
        return is_reduced(self)

    def strands(self) -> tuple[tuple[int, ...], ...]:
        return self._strands

    def nugatory_crossings(self) -> list[int]:
        f = self._dart_face
        return [x for x in range(self.crossing_count)
                if f[4 * x] == f[4 * x + 2] or f[4 * x + 1] == f[4 * x + 3]]


def _trace_faces(pairing):
    n = len(pairing)
    dart_face = [-1] * n
    faces = []
    for start in range(n):
        if dart_face[start] >= 0:
            continue
        orbit = []
        d = start
        while dart_face[d] < 0:
            dart_face[d] = len(faces)
            orbit.append(d)
            d = pairing[succ(d)]
        faces.append(tuple(orbit))
    return tuple(faces), tuple(dart_face)


def _trace_strands(pairing):
    # walk alternates out-dart, in-dart; each strand starts at its least out-dart
    n = len(pairing)
    seen = [False] * n
    strands = []
    for start in range(n):
        if seen[start]:
            continue
        walk = []
        d = start
        while True:
            e = pairing[d]
            walk.append(d)
            walk.append(e)
            seen[d] = seen[e] = True
            d = opposite(e)
            if d == start:
                break
        strands.append(tuple(walk))
    return tuple(strands)


def _count_graph_components(pairing):
    c = len(pairing) // 4
    parent = list(range(c))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for d, e in enumerate(pairing):
        ra, rb = find(d >> 2), find(e >> 2)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in range(c)})


def build_shadow(rotation: Sequence[Sequence[int]], pairing) -> Shadow:
    """Validate a rotation system and edge involution given with arbitrary dart ids.

    ``rotation`` lists, per crossing, its four dart ids in counterclockwise
    order.  ``pairing`` maps each dart id to its partner (a dict or a
    sequence indexed by dart id).
    """
    if len(rotation) == 0:
        raise EmptyShadow("a shadow needs at least one crossing")
    index = {}
    for x, quad in enumerate(rotation):
        if len(quad) != 4:
            raise NonInvolutivePairing(f"crossing {x} has {len(quad)} darts, expected 4")
        for s, d in enumerate(quad):
            if d in index:
                raise NonInvolutivePairing(f"dart {d} appears twice in the rotation")
            index[d] = 4 * x + s
    if not isinstance(pairing, dict):
        pairing = dict(enumerate(pairing))
    if set(pairing) != set(index):
        raise NonInvolutivePairing("pairing and rotation mention different darts")
    relabeled = [0] * len(index)
    for d, e in pairing.items():
        if e not in index:
            raise NonInvolutivePairing(f"dart {d} is paired with unknown dart {e}")
        relabeled[index[d]] = index[e]
    return Shadow(tuple(relabeled))


def trace_regions(s: Shadow) -> tuple[Region, ...]:
    return tuple(
        Region(i, orbit, frozenset(d >> 2 for d in orbit))
        for i, orbit in enumerate(s._faces)
    )


def quadrants(s: Shadow, x: int) -> tuple[int, int, int, int]:
    """Region ids of the four corners at crossing ``x``, counterclockwise.

    Corner ``k`` lies between slots ``k`` and ``k + 1``.
    """
    if not 0 <= x < s.crossing_count:
        raise IndexError(f"crossing {x} out of range 0..{s.crossing_count - 1}")
    f = s._dart_face
    return f[4 * x], f[4 * x + 1], f[4 * x + 2], f[4 * x + 3]


def is_reduced(s: Shadow) -> bool:
    return not s.nugatory_crossings()


def strands(s: Shadow) -> tuple[tuple[int, ...], ...]:
    return s.strands()


def region_incidence(s: Shadow) -> list[frozenset[int]]:
    """Incident crossing set of every region, indexed by region id."""
    return [r.incident_crossings for r in trace_regions(s)]


def knot_passes(s: Shadow) -> tuple[int, ...]:
    """Crossing visited by each pass of the single strand of a knot shadow.

    Pass ``i`` arrives through in-dart ``strands()[0][2*i + 1]``; edge ``i``
    runs from pass ``i`` to pass ``i + 1``.
    """
    s.require_knot()
    walk = s.strands()[0]
    return tuple(walk[i] >> 2 for i in range(1, len(walk), 2))
