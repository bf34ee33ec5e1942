"""Region choice matrices and the maximal independent region number.

Three routes reach the same numbers:

* :func:`ir_base` - exact branch-and-bound on the region conflict graph,
* :func:`solve_01_system` - literal enumeration of 0/1 vectors ``x`` with
  ``Mx`` in ``{0,1}^c``,
* :func:`emit_dimacs` - a CNF that an external SAT solver can decide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LimitExceeded
from .shadow import Shadow, region_incidence
from .warping import warping_degree_shadow


@dataclass(frozen=True)
class RegionChoiceMatrix:
    """``rows[i][j] == 1`` iff crossing i lies on the boundary of region j."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        if any(v not in (0, 1) for r in self.rows for v in r):
            raise ValueError("entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RegionChoiceMatrix":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def n_crossings(self) -> int:
        return len(self.rows)

    @property
    def n_regions(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def column_masks(self) -> tuple[int, ...]:
        """Bitmask of incident crossings for each region."""
        return tuple(
            sum(1 << i for i in range(self.n_crossings) if self.rows[i][j])
            for j in range(self.n_regions)
        )

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n_crossings, self.n_regions)


@dataclass(frozen=True)
class SelectionVector:
    x: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def regions(self) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.x) if v)


@dataclass(frozen=True)
class IRReport:
    ir: int
    base_crossing: int
    region_set: tuple[int, ...]
    per_crossing: tuple[int, ...]


@dataclass(frozen=True)
class BoundsReport:
    crossings: int
    reduced: bool
    d: int
    ir: int
    lower_ok: bool
    upper_ok: bool
    lemma5_ok: bool
    lemma6_ok: bool

    @property
    def theorem1_applicable(self) -> bool:
        return self.reduced

    @property
    def theorem1_verdict(self) -> str:
        holds = self.lower_ok and self.upper_ok
        if not self.reduced:
            return "not applicable (non-reduced)" + ("" if holds else ", fails")
        return "pass" if holds else "FAIL"

    @property
    def ok(self) -> bool:
        """False only when a reduced shadow violates one of the bounds."""
        if not self.reduced:
            return True
        return self.lower_ok and self.upper_ok and self.lemma5_ok and self.lemma6_ok


def region_choice_matrix(s: Shadow) -> RegionChoiceMatrix:
    """c x (number of regions) incidence matrix; c x (c+2) for knot shadows."""
    s.require_connected()
    inc = region_incidence(s)
    return RegionChoiceMatrix(tuple(
        tuple(1 if x in inc[j] else 0 for j in range(len(inc)))
        for x in range(s.crossing_count)
    ))


def _mask_to_vector(mask, n):
    return tuple((mask >> j) & 1 for j in range(n))


def _b_vector(m: RegionChoiceMatrix, mask: int) -> tuple[int, ...]:
    return tuple(
        sum(m.rows[i][j] for j in range(m.n_regions) if (mask >> j) & 1)
        for i in range(m.n_crossings)
    )


def independent_sets_for_base(m: RegionChoiceMatrix, base: int) -> list[SelectionVector]:
    """Every nonempty independent region set avoiding ``base``, ascending by bitmask.

    Bit ``j`` of the mask is region ``j``.
    """
    if not 0 <= base < m.n_crossings:
        raise IndexError(f"base crossing {base} out of range")
    cols = m.column_masks
    eligible = [j for j in range(m.n_regions) if not (cols[j] >> base) & 1]
    found = []

    def extend(start, used, mask):
        for t in range(start, len(eligible)):
            j = eligible[t]
            if cols[j] & used:
                continue
            new = mask | (1 << j)
            found.append(new)
            extend(t + 1, used | cols[j], new)

    extend(0, 0, 0)
    found.sort()
    return [SelectionVector(_mask_to_vector(k, m.n_regions), _b_vector(m, k)) for k in found]


_MAX_ORACLE_COLUMNS = 26


def solve_01_system(m: RegionChoiceMatrix) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (x, b) with x in {0,1}^n, b = Mx in {0,1}^c, b neither all 0 nor all 1.

    Brute force over every x; intended as an oracle, not a fast path.
    """
    n, c = m.n_regions, m.n_crossings
    if n > _MAX_ORACLE_COLUMNS:
        raise LimitExceeded(f"{n} regions is beyond the 0/1 enumeration limit")
    M = m.as_array()
    weights = 1 << np.arange(n, dtype=np.int64)
    out = []
    chunk = 1 << 16
    for lo in range(0, 1 << n, chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << n), dtype=np.int64)
        X = ((masks[:, None] & weights[None, :]) != 0).astype(np.int64)
        B = X @ M.T
        ok = (B <= 1).all(axis=1)
        nontrivial = (B.sum(axis=1) > 0) & (B.sum(axis=1) < c)
        for idx in np.nonzero(ok & nontrivial)[0]:
            out.append((tuple(int(v) for v in X[idx]), tuple(int(v) for v in B[idx])))
    return out


def ir_from_01_system(m: RegionChoiceMatrix, base: int) -> int:
    """IR(P^base) as the largest |x| among solutions with b_base = 0."""
    best = 0
    for x, b in solve_01_system(m):
        if b[base] == 0:
            best = max(best, sum(x))
    return best


def _clique_cover_bound(cand: int, adj: Sequence[int]) -> int:
    # greedy partition of the candidate set into cliques; each clique holds <= 1 chosen region
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique = 1 << v
        rest = cand & adj[v]
        while rest:
            u = (rest & -rest).bit_length() - 1
            clique |= 1 << u
            rest &= adj[u]
        cand &= ~clique
        count += 1
    return count


def max_independent_set(vertices: Sequence[int], col_masks: Sequence[int]) -> tuple[int, ...]:
    """Exact maximum set of pairwise crossing-disjoint regions among ``vertices``.

    Ties go to the lexicographically least set found first by the search.
    """
    k = len(vertices)
    adj = [0] * k
    for a in range(k):
        for b in range(k):
            if a != b and col_masks[vertices[a]] & col_masks[vertices[b]]:
                adj[a] |= 1 << b
    best = [0, 0]  # size, mask

    def search(cand, chosen, size):
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(cand, adj) <= best[0]:
            return
        v = (cand & -cand).bit_length() - 1
        search(cand & ~adj[v] & ~(1 << v), chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    search((1 << k) - 1, 0, 0)
    return tuple(vertices[i] for i in range(k) if (best[1] >> i) & 1)


def ir_base(s: Shadow, base: int) -> tuple[int, tuple[int, ...]]:
    """IR(P^base) and a witness region set."""
    if not 0 <= base < s.crossing_count:
        raise IndexError(f"base crossing {base} out of range 0..{s.crossing_count - 1}")
    inc = region_incidence(s)
    cols = [sum(1 << x for x in r) for r in inc]
    eligible = [j for j in range(len(inc)) if base not in inc[j]]
    witness = max_independent_set(eligible, cols)
    return len(witness), witness


def ir(s: Shadow) -> IRReport:
    s.require_knot()
    per = []
    best = None
    for x in range(s.crossing_count):
        value, witness = ir_base(s, x)
        per.append(value)
        if best is None or value > best[0]:
            best = (value, x, witness)
    return IRReport(best[0], best[1], best[2], tuple(per))


def max_independent_regions(s: Shadow) -> int:
    """Largest set of pairwise crossing-disjoint regions, no base crossing removed."""
    s.require_connected()
    inc = region_incidence(s)
    cols = [sum(1 << x for x in r) for r in inc]
    return len(max_independent_set(list(range(len(inc))), cols))


def is_independent(regions: Sequence[int], incidence: Sequence[frozenset[int]]) -> bool:
    regions = list(regions)
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            if regions[i] == regions[j] or incidence[regions[i]] & incidence[regions[j]]:
                return False
    return True


def verify_bounds(s: Shadow, warp=None, ir_report=None) -> BoundsReport:
    """IR <= d <= c - IR - 1 plus 2*IR <= c - 1 and IR >= 1; reducedness is recorded."""
    s.require_knot()
    w = warp if warp is not None else warping_degree_shadow(s)
    r = ir_report if ir_report is not None else ir(s)
    c, d, i = s.crossing_count, w.d_p, r.ir
    return BoundsReport(
        crossings=c,
        reduced=s.is_reduced(),
        d=d,
        ir=i,
        lower_ok=i <= d,
        upper_ok=d <= c - i - 1,
        lemma5_ok=2 * i <= c - 1,
        lemma6_ok=c < 2 or i >= 1,
    )


# DIMACS

def _at_most(lits, k, next_var):
    """Sequential counter clauses for sum(lits) <= k; returns (clauses, next free var)."""
    n = len(lits)
    if k >= n:
        return [], next_var
    if k == 0:
        return [[-l] for l in lits], next_var
    reg = [[0] * (k + 1) for _ in range(n)]
    for i in range(n - 1):
        for j in range(1, k + 1):
            reg[i][j] = next_var
            next_var += 1
    cl = [[-lits[0], reg[0][1]]]
    cl += [[-reg[0][j]] for j in range(2, k + 1)]
    for i in range(1, n - 1):
        cl.append([-lits[i], reg[i][1]])
        cl.append([-reg[i - 1][1], reg[i][1]])
        for j in range(2, k + 1):
            cl.append([-lits[i], -reg[i - 1][j - 1], reg[i][j]])
            cl.append([-reg[i - 1][j], reg[i][j]])
        cl.append([-lits[i], -reg[i - 1][k]])
    cl.append([-lits[n - 1], -reg[n - 2][k]])
    return cl, next_var


def dimacs_clauses(s: Shadow, base: int, k: int) -> tuple[list[int], list[list[int]], int]:
    """(eligible regions in variable order, clauses, variable count)."""
    if not 0 <= base < s.crossing_count:
        raise IndexError(f"base crossing {base} out of range")
    if k < 1:
        raise ValueError("target size must be at least 1")
    inc = region_incidence(s)
    eligible = [j for j in range(len(inc)) if base not in inc[j]]
    var = {j: i + 1 for i, j in enumerate(eligible)}
    pairs = set()
    for x in range(s.crossing_count):
        around = [j for j in eligible if x in inc[j]]
        for a in range(len(around)):
            for b in range(a + 1, len(around)):
                pairs.add((var[around[a]], var[around[b]]))
    clauses = [[-a, -b] for a, b in sorted(pairs)]
    n = len(eligible)
    next_var = n + 1
    if k > n:
        clauses += [[next_var], [-next_var]]
        next_var += 1
    else:
        # at least k true  <=>  at most n-k false
        extra, next_var = _at_most([-var[j] for j in eligible], n - k, next_var)
        clauses += extra
    return eligible, clauses, next_var - 1


def emit_dimacs(s: Shadow, base: int, k: int) -> str:
    """CNF satisfiable iff an independent region set of size >= k avoids ``base``."""
    eligible, clauses, nvars = dimacs_clauses(s, base, k)
    lines = [
        f"c independent region set avoiding crossing {base}, size >= {k}",
        f"c crossings {s.crossing_count}, regions {s.face_count}",
        "c variables 1..%d are regions; higher variables are counter registers" % len(eligible),
    ]
    lines += [f"c region {j} -> var {i + 1}" for i, j in enumerate(eligible)]
    lines.append(f"p cnf {nvars} {len(clauses)}")
    lines += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nvars = 0
    clauses = []
    current = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            nvars = int(line.split()[2])
            continue
        for tok in line.split():
            v = int(tok)
            if v == 0:
                clauses.append(current)
                current = []
            else:
                current.append(v)
    return nvars, clauses
