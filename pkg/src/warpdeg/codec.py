"""Text formats, Gauss-code realization and canonical forms for shadows.

PD lines look like ``3_1: P[(1,4,2,5),(3,6,4,1),(5,2,6,3)]``.  Each quadruple
lists the edge labels around one crossing counterclockwise; entries 1&3 and
2&4 belong to the same strand.  Over/under information is not part of the
format.
"""

from __future__ import annotations

import re
from collections import Counter
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyShadow,
    LabelMultiplicityError,
    NotSphereEmbeddable,
    PDSyntaxError,
)
from .shadow import Shadow, pred, succ

_LINE_RE = re.compile(r"^\s*(?:(?P<name>[^:#\s][^:#]*?)\s*:)?\s*P\[(?P<body>.*)\]\s*$")
_QUAD_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _parse_quads(body: str, line=None) -> list[tuple[int, ...]]:
    quads = []
    pos = 0
    body = body.strip()
    while pos < len(body):
        m = _QUAD_RE.match(body, pos)
        if not m:
            raise PDSyntaxError(f"cannot parse quadruple at {body[pos:pos + 20]!r}", line)
        quads.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        rest = body[pos:].lstrip()
        if rest.startswith(","):
            pos = len(body) - len(rest) + 1
            while pos < len(body) and body[pos].isspace():
                pos += 1
            if pos == len(body):
                raise PDSyntaxError("trailing comma", line)
        elif rest:
            raise PDSyntaxError(f"unexpected text {rest[:20]!r}", line)
        else:
            break
    if not quads:
        raise PDSyntaxError("no crossings in PD code", line)
    return quads


def shadow_from_quads(quads: Sequence[Sequence[int]], line=None) -> Shadow:
    counts = Counter(label for q in quads for label in q)
    bad = sorted(label for label, k in counts.items() if k != 2)
    if bad:
        raise LabelMultiplicityError(
            f"edge label(s) {bad} must appear exactly twice"
            + (f" (line {line})" if line is not None else "")
        )
    seen = {}
    pairing = [0] * (4 * len(quads))
    for x, q in enumerate(quads):
        for s, label in enumerate(q):
            d = 4 * x + s
            if label in seen:
                e = seen.pop(label)
                pairing[d], pairing[e] = e, d
            else:
                seen[label] = d
    return Shadow(tuple(pairing))


def parse_pd_line(text: str, line=None) -> tuple[str | None, Shadow]:
    m = _LINE_RE.match(text)
    if not m:
        raise PDSyntaxError(f"not a PD line: {text.strip()[:40]!r}", line)
    return m.group("name"), shadow_from_quads(_parse_quads(m.group("body"), line), line)


def parse_pd(text: str) -> Shadow:
    """Parse a single PD code, with or without a ``name:`` prefix."""
    entries = parse_pd_file(text)
    if len(entries) != 1:
        raise PDSyntaxError(f"expected one PD code, found {len(entries)}")
    return entries[0][1]


def parse_pd_file(text: str) -> list[tuple[str | None, Shadow]]:
    """Parse a corpus: one PD code per line, ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        out.append(parse_pd_line(stripped, lineno))
    return out


def emit_pd(s: Shadow, name: str | None = None) -> str:
    """Serialize with edge labels 1..2c assigned along the strands."""
    if s.free_loops:
        raise ValueError("PD codes cannot express crossingless circles")
    label = [0] * len(s.pairing)
    nxt = 1
    for walk in s.strands():
        for i in range(0, len(walk), 2):
            label[walk[i]] = label[walk[i + 1]] = nxt
            nxt += 1
    quads = ",".join(
        "(" + ",".join(str(label[4 * x + k]) for k in range(4)) + ")"
        for x in range(s.crossing_count)
    )
    prefix = f"{name}: " if name else ""
    return f"{prefix}P[{quads}]"


# Gauss codes

def parse_gauss(text: str) -> tuple[int, ...]:
    """Whitespace (or comma) separated crossing labels, each used exactly twice."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise PDSyntaxError("empty Gauss code")
    try:
        labels = [int(t) for t in tokens]
    except ValueError as exc:
        raise PDSyntaxError(f"non-integer label in Gauss code: {exc}") from None
    counts = Counter(labels)
    bad = sorted(k for k, v in counts.items() if v != 2)
    if bad:
        raise LabelMultiplicityError(f"Gauss label(s) {bad} must appear exactly twice")
    return tuple(labels)


def normalize_gauss(code: Sequence[int]) -> tuple[int, ...]:
    """Relabel so crossings are 0, 1, ... in order of first appearance."""
    relabel = {}
    for a in code:
        if a not in relabel:
            relabel[a] = len(relabel)
    return tuple(relabel[a] for a in code)


def gauss_parity_ok(code: Sequence[int]) -> bool:
    first = {}
    for i, a in enumerate(code):
        if a in first:
            if (i - first[a]) % 2 == 0:
                return False
        else:
            first[a] = i
    return True


def shadow_from_gauss(code: Sequence[int], signs: Sequence[int]) -> Shadow:
    """Build the map for one choice of crossing direction per crossing.

    The first pass through crossing ``x`` runs slot 0 -> 2; the second runs
    1 -> 3 when ``signs[x] > 0`` and 3 -> 1 otherwise.  Raises
    ``NotSphereEmbeddable`` when the choice does not embed in the sphere.
    """
    g = normalize_gauss(code)
    c = len(g) // 2
    seen = [False] * c
    entry = []
    exit_ = []
    for x in g:
        if not seen[x]:
            seen[x] = True
            entry.append(4 * x)
            exit_.append(4 * x + 2)
        elif signs[x] > 0:
            entry.append(4 * x + 1)
            exit_.append(4 * x + 3)
        else:
            entry.append(4 * x + 3)
            exit_.append(4 * x + 1)
    pairing = [0] * (4 * c)
    n = len(g)
    for i in range(n):
        a, b = exit_[i], entry[(i + 1) % n]
        pairing[a], pairing[b] = b, a
    return Shadow(tuple(pairing))


def _face_count_for(g, signs):
    # same construction as shadow_from_gauss without validation, for the search loop
    c = len(g) // 2
    seen = [False] * c
    entry = []
    exit_ = []
    for x in g:
        if not seen[x]:
            seen[x] = True
            entry.append(4 * x)
            exit_.append(4 * x + 2)
        elif signs[x] > 0:
            entry.append(4 * x + 1)
            exit_.append(4 * x + 3)
        else:
            entry.append(4 * x + 3)
            exit_.append(4 * x + 1)
    pairing = [0] * (4 * c)
    n = len(g)
    for i in range(n):
        a, b = exit_[i], entry[(i + 1) % n]
        pairing[a] = b
        pairing[b] = a
    seen_d = bytearray(4 * c)
    faces = 0
    for start in range(4 * c):
        if seen_d[start]:
            continue
        faces += 1
        d = start
        while not seen_d[d]:
            seen_d[d] = 1
            d = pairing[(d & ~3) | ((d + 1) & 3)]
    return faces


def realize(code: Sequence[int]) -> list[Shadow]:
    """All sphere realizations of an unsigned Gauss code, up to reflection.

    Exhaustive search over crossing directions (the first crossing's
    direction is fixed, which quotients out the mirror), then dedup by
    canonical code.  Output is sorted by canonical code; empty means the
    code is not realizable.
    """
    g = normalize_gauss(code)
    if len(g) == 0:
        raise EmptyShadow("a shadow needs at least one crossing")
    if Counter(g) != Counter({x: 2 for x in range(len(g) // 2)}):
        raise LabelMultiplicityError("every Gauss label must appear exactly twice")
    if not gauss_parity_ok(g):
        return []
    c = len(g) // 2
    found = {}
    for tail in product((1, -1), repeat=c - 1):
        signs = (1,) + tail
        if _face_count_for(g, signs) != c + 2:
            continue
        s = shadow_from_gauss(g, signs)
        found.setdefault(canonical(s), s)
    return [found[k] for k in sorted(found)]


def emit_gauss(s: Shadow) -> str:
    """Unsigned Gauss code(s), labels 1-based in order of first appearance.

    Link components are separated by `` | ``.
    """
    relabel = {}
    parts = []
    for walk in s.strands():
        seq = []
        for i in range(1, len(walk), 2):
            x = walk[i] >> 2
            if x not in relabel:
                relabel[x] = len(relabel) + 1
            seq.append(str(relabel[x]))
        parts.append(" ".join(seq))
    return " | ".join(parts)


# canonical forms

def _bfs_code(pairing, root, mirror):
    step = pred if mirror else succ
    c = len(pairing) // 4
    new_of = {}
    order = []
    d = root
    for k in range(4):
        new_of[d] = k
        order.append(d)
        d = step(d)
    ncross = 1
    code = []
    i = 0
    while i < len(order):
        d = order[i]
        e = pairing[d]
        if e not in new_of:
            base = 4 * ncross
            ncross += 1
            f = e
            for k in range(4):
                new_of[f] = base + k
                order.append(f)
                f = step(f)
        code.append(new_of[e])
        i += 1
    if ncross != c:
        return None
    return tuple(code)


def _corner_signature(s: Shadow, d: int, mirror: bool) -> tuple[int, ...]:
    # sizes of the four faces around a crossing, read from dart d in the traversal direction
    sizes = []
    for _ in range(4):
        corner = pred(d) if mirror else d
        sizes.append(len(s._faces[s.face_of(corner)]))
        d = pred(d) if mirror else succ(d)
    return tuple(sizes)


def canonical_tuple(s: Shadow) -> tuple[int, ...]:
    """Least BFS code over all roots and both orientations of a connected map.

    Only roots whose corner-size signature is maximal are tried; that set is
    itself invariant under isomorphism and reflection, so the minimum stays
    canonical.
    """
    n = len(s.pairing)
    candidates = []
    best_sig = None
    for root in range(n):
        for mirror in (False, True):
            sig = _corner_signature(s, root, mirror)
            if best_sig is None or sig > best_sig:
                best_sig = sig
                candidates = [(root, mirror)]
            elif sig == best_sig:
                candidates.append((root, mirror))
    best = None
    for root, mirror in candidates:
        code = _bfs_code(s.pairing, root, mirror)
        if code is None:
            raise ValueError("canonical_tuple needs a connected map")
        if best is None or code < best:
            best = code
    return best


def _split_pieces(s: Shadow) -> list[tuple[int, ...]]:
    # pairings of each connected piece, relabeled densely
    c = s.crossing_count
    comp = [-1] * c
    pieces = []
    for x0 in range(c):
        if comp[x0] >= 0:
            continue
        stack = [x0]
        comp[x0] = len(pieces)
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for k in range(4):
                y = s.pairing[4 * x + k] >> 2
                if comp[y] < 0:
                    comp[y] = len(pieces)
                    stack.append(y)
        members.sort()
        pos = {x: i for i, x in enumerate(members)}
        pairing = tuple(
            4 * pos[s.pairing[4 * x + k] >> 2] + (s.pairing[4 * x + k] & 3)
            for x in members for k in range(4)
        )
        pieces.append(pairing)
    return pieces


def canonical(s: Shadow) -> str:
    """Canonical text code; equal iff the shadows agree up to sphere isomorphism and reflection.

    Disconnected shadows are coded piece by piece (pieces sorted) with one
    ``O`` per free loop; nesting of pieces is not recorded.
    """
    if s.is_connected and s.crossing_count:
        return ",".join(map(str, canonical_tuple(s)))
    parts = sorted(
        ",".join(map(str, canonical_tuple(Shadow(p)))) for p in _split_pieces(s)
    )
    parts.extend("O" * s.free_loops)
    return "+".join(parts)


def relabel_random(s: Shadow, crossing_perm: Sequence[int], rotations: Sequence[int],
                   mirror: bool = False) -> Shadow:
    """Isomorphic copy: crossing ``x`` becomes ``crossing_perm[x]``, slots rotated by ``rotations[x]``.

    With ``mirror`` every rotation is reversed.  Used by tests and by the
    reflection examples.
    """
    def new(d):
        x, k = d >> 2, d & 3
        if mirror:
            k = (-k) % 4
        return 4 * crossing_perm[x] + ((k + rotations[x]) & 3)

    pairing = [0] * len(s.pairing)
    for d, e in enumerate(s.pairing):
        pairing[new(d)] = new(e)
    return Shadow(tuple(pairing), s.free_loops)


def mirror(s: Shadow) -> Shadow:
    c = s.crossing_count
    return relabel_random(s, list(range(c)), [0] * c, mirror=True)


def iter_pd_lines(entries: Iterable[tuple[str, Shadow]]) -> Iterator[str]:
    for name, s in entries:
        yield emit_pd(s, name)
