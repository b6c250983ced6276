"""Permutations and permutation groups with exact big-integer orders.

Permutations act on points 0..n-1 and compose left to right: ``(a * b)(x)
== b(a(x))``, i.e. "apply a, then b".  Groups are represented by a
deterministic stabilizer chain (Schreier-Sims), which gives the exact
order, a membership test, orbits and point stabilizers.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, FormatError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable permutation of 0..n-1, stored in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not 0 <= i < n or seen[i]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
            seen[i] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation like ``(0 1 2)(3 4)``; ``()`` is the identity.

        Commas or spaces separate points.  Points not mentioned are fixed.
        """
        stripped = text.strip()
        if not re.fullmatch(r"(\s*\([\d,\s]*\)\s*)*", stripped):
            raise FormatError(f"cannot parse permutation: {text!r}")
        images = list(range(degree))
        for body in _CYCLE_RE.findall(stripped):
            points = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if any(p >= degree for p in points):
                raise FormatError(f"point out of range for degree {degree}: {text!r}")
            if len(points) != len(set(points)):
                raise FormatError(f"repeated point in cycle: {text!r}")
            for a, b in zip(points, points[1:]):
                images[a] = b
            if points:
                images[points[-1]] = points[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """self, then other."""
        o = other.images
        return Permutation([o[i] for i in self.images])

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


class _Level:
    """One level of a stabilizer chain: a base point, the strong generators
    added at this level, and the transversal of the base point's orbit."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}


_ELEMENT_CAP = 2_000_000


class PermGroup:
    """A permutation group given by generators, with a stabilizer chain.

    The chain is built deterministically (breadth-first orbits, generators
    in insertion order, new base points chosen as the least moved point),
    so generator lists and transversals are reproducible.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation | Sequence[int]],
                 base: Sequence[int] = ()):
        self.degree = int(degree)
        self._levels: list[_Level] = []
        for b in base:
            lvl = _Level(int(b))
            lvl.transversal = {lvl.point: Permutation.identity(self.degree)}
            self._levels.append(lvl)
        self.generators: list[Permutation] = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise ValueError(f"generator degree {g.degree} != group degree {self.degree}")
            if g.is_identity() or g in self.generators:
                continue
            if self._insert(g):
                self.generators.append(g)

    # -- chain construction ------------------------------------------------

    def _gens_at(self, level: int) -> list[Permutation]:
        # Strong generators fixing the first `level` base points pointwise.
        out = []
        for lvl in self._levels[level:]:
            out.extend(lvl.gens)
        return out

    def _rebuild_orbit(self, level: int) -> None:
        lvl = self._levels[level]
        gens = self._gens_at(level)
        lvl.transversal = {lvl.point: Permutation.identity(self.degree)}
        queue = deque([lvl.point])
        while queue:
            p = queue.popleft()
            t_p = lvl.transversal[p]
            for s in gens:
                q = s(p)
                if q not in lvl.transversal:
                    lvl.transversal[q] = t_p * s
                    queue.append(q)

    def _strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Sift g through the chain; return (residue, level it stuck at)."""
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            p = g(lvl.point)
            if p == lvl.point:
                continue
            if p not in lvl.transversal:
                return g, i
            g = g * lvl.transversal[p].inverse()
        return g, len(self._levels)

    def _insert(self, g: Permutation) -> bool:
        """Add a generator, repairing the chain. Returns False if redundant."""
        residue, level = self._strip(g)
        if residue.is_identity():
            return False
        if level == len(self._levels):
            moved = next(i for i, j in enumerate(residue.images) if i != j)
            self._levels.append(_Level(moved))
        self._levels[level].gens.append(residue)
        for i in range(level, -1, -1):
            self._complete_level(i)
        return True

    def _complete_level(self, level: int) -> None:
        """Re-establish that the level's Schreier generators all sift to the
        identity through the deeper chain; restarts after each repair."""
        while True:
            self._rebuild_orbit(level)
            lvl = self._levels[level]
            gens = self._gens_at(level)
            dirty = False
            for p in list(lvl.transversal):
                t_p = lvl.transversal[p]
                for s in gens:
                    t_q = lvl.transversal[s(p)]
                    schreier = t_p * s * t_q.inverse()
                    if schreier.is_identity():
                        continue
                    residue, at = self._strip(schreier, level + 1)
                    if residue.is_identity():
                        continue
                    if at == len(self._levels):
                        moved = next(i for i, j in enumerate(residue.images) if i != j)
                        self._levels.append(_Level(moved))
                    self._levels[at].gens.append(residue)
                    for j in range(at, level, -1):
                        self._complete_level(j)
                    dirty = True
                    break
                if dirty:
                    break
            if not dirty:
                return

    def _extend(self, g: Permutation) -> bool:
        """Add a generator in place, keeping the chain complete.  Returns
        False when g is already a member (nothing changes).  Internal: used
        by searches that discover generators one at a time."""
        if g.is_identity():
            return False
        if self._insert(g):
            self.generators.append(g)
            return True
        return False

    # -- queries -----------------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.transversal)
        return n

    def contains(self, g: Permutation | Sequence[int]) -> bool:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != self.degree:
            return False
        residue, _ = self._strip(g)
        return residue.is_identity()

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def base(self) -> list[int]:
        return [lvl.point for lvl in self._levels]

    def orbits(self) -> list[list[int]]:
        """Orbit partition of 0..degree-1, each orbit sorted, ordered by min."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g.images):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        buckets: dict[int, list[int]] = {}
        for v in range(self.degree):
            buckets.setdefault(find(v), []).append(v)
        return [buckets[r] for r in sorted(buckets)]

    def orbit_of(self, point: int) -> list[int]:
        for orb in self.orbits():
            if point in orb:
                return orb
        raise ValueError(f"point {point} out of range")

    def point_stabilizer(self, point: int) -> PermGroup:
        """The full stabilizer of a point, as its own group.

        Rebuilds the chain with the point as first base; the strong
        generators below the first level then generate the stabilizer.
        """
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        rebased = PermGroup(self.degree, self._gens_at(0), base=(point,))
        return PermGroup(self.degree, rebased._gens_at(1))

    def fixes_setwise(self, points: Iterable[int]) -> bool:
        s = set(points)
        return all({g(p) for p in s} == s for g in self.generators)

    def fixes_pointwise(self, points: Iterable[int]) -> bool:
        pts = list(points)
        return all(g(p) == p for g in self.generators for p in pts)

    def elements(self) -> Iterator[Permutation]:
        """Every element, by transversal products. Guarded by a hard cap."""
        if self.order > _ELEMENT_CAP:
            raise CapExceededError(f"refusing to enumerate {self.order} elements")

        def rec(level: int) -> Iterator[Permutation]:
            if level == len(self._levels):
                yield Permutation.identity(self.degree)
                return
            lvl = self._levels[level]
            for rest in rec(level + 1):
                for p in sorted(lvl.transversal):
                    yield rest * lvl.transversal[p]

        return rec(0)

    def to_json_dict(self) -> dict:
        """Report form: order as a decimal string, generators in cycles."""
        return {
            "degree": self.degree,
            "order": str(self.order),
            "generators": [g.cycle_string() for g in self.generators],
        }

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def is_semiregular(group: PermGroup) -> bool:
    """True iff only the identity fixes a point: every orbit has full size."""
    return all(len(orb) == group.order for orb in group.orbits())
