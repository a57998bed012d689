"""Integer lattices in Hermite normal form.

Row convention throughout: a lattice is the Z-span of the rows of its basis.
The HNF is upper echelon with positive pivots and the entries above each
pivot reduced into ``[0, pivot)``, which makes it canonical: two row sets
with the same span produce identical bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

__all__ = ["IntLattice", "hnf", "lattice_member", "lattice_intersect", "lattice_preimage"]

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntLattice:
    rows: Tuple[Vector, ...]
    dim: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def determinant(self) -> int:
        """Index in Z^dim; only meaningful for full rank."""
        det = 1
        for r, j in zip(self.rows, self.pivots()):
            det *= r[j]
        return det

    def __contains__(self, v) -> bool:
        return lattice_member(v, self)


def hnf(rows: Iterable[Sequence[int]], dim: int = None) -> IntLattice:
    work = [list(r) for r in rows]
    if dim is None:
        if not work:
            raise ValueError("dimension needed for an empty row set")
        dim = len(work[0])
    if any(len(r) != dim for r in work):
        raise ValueError("rows of unequal length")
    work = [r for r in work if any(r)]
    top = 0
    for j in range(dim):
        if top == len(work):
            break
        # gcd-reduce column j over the remaining rows until one nonzero entry is left
        while True:
            live = [i for i in range(top, len(work)) if work[i][j]]
            if not live:
                break
            p = min(live, key=lambda i: abs(work[i][j]))
            work[top], work[p] = work[p], work[top]
            piv = work[top]
            done = True
            for i in range(top + 1, len(work)):
                x = work[i][j]
                if x:
                    q = x // piv[j]
                    row = work[i]
                    for k in range(j, dim):
                        row[k] -= q * piv[k]
                    if row[j]:
                        done = False
            if done:
                break
        if not work[top][j]:
            continue
        piv = work[top]
        if piv[j] < 0:
            for k in range(j, dim):
                piv[k] = -piv[k]
        for i in range(top):
            q = work[i][j] // piv[j]
            if q:
                row = work[i]
                for k in range(j, dim):
                    row[k] -= q * piv[k]
        top += 1
        work = work[:top] + [r for r in work[top:] if any(r)]
    return IntLattice(tuple(tuple(r) for r in work[:top]), dim)


def lattice_member(v: Sequence[int], lat: IntLattice) -> bool:
    if len(v) != lat.dim:
        raise ValueError("dimension mismatch")
    rest = list(v)
    for row, j in zip(lat.rows, lat.pivots()):
        if any(rest[:j]):
            return False
        q, r = divmod(rest[j], row[j])
        if r:
            return False
        if q:
            for k in range(j, lat.dim):
                rest[k] -= q * row[k]
    return not any(rest)


def _bottom_block(rows, split: int, dim: int) -> IntLattice:
    """Span of HNF rows that vanish on the first ``split`` coordinates, projected."""
    h = hnf(rows, dim)
    tail = [r[split:] for r in h.rows if not any(r[:split])]
    return hnf(tail, dim - split)


def lattice_intersect(a: IntLattice, b: IntLattice) -> IntLattice:
    # rows (x, x) for x in a and (y, 0) for y in b: the zero-first-block part is a ∩ b
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    n = a.dim
    zero = (0,) * n
    rows = [tuple(r) + tuple(r) for r in a.rows] + [tuple(r) + zero for r in b.rows]
    return _bottom_block(rows, n, 2 * n)


def lattice_preimage(maps: Sequence[Sequence[Sequence[int]]], target: IntLattice) -> IntLattice:
    """``{z in Z^n : z @ T in target for every T in maps}``.

    Each ``T`` is an n x m integer matrix acting on row vectors.
    """
    n = len(maps[0])
    m = target.dim
    k = len(maps)
    width = k * m + n
    rows = []
    for i in range(n):
        row = []
        for t in maps:
            row.extend(t[i])
        row.extend(1 if c == i else 0 for c in range(n))
        rows.append(tuple(row))
    for slot in range(k):
        for r in target.rows:
            row = [0] * width
            row[slot * m:(slot + 1) * m] = r
            rows.append(tuple(row))
    return _bottom_block(rows, k * m, width)
