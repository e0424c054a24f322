"""
Transitive permutation groups of degree 3 to 7 and their cycle types.

Each group is given by generators (permutations of 0..n-1 in array form);
elements and cycle types are generated on first use.  The counts per degree
are 2, 5, 5, 16, 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, List, Tuple

Perm = Tuple[int, ...]
CycleType = Tuple[int, ...]

_GENERATORS: Dict[int, List[Tuple[str, List[List[int]]]]] = {
    3: [
        ("C3", [[1, 2, 0]]),
        ("S3", [[1, 2, 0], [1, 0, 2]]),
    ],
    4: [
        ("C4", [[1, 2, 3, 0]]),
        ("V4", [[1, 0, 3, 2], [2, 3, 0, 1]]),
        ("D4", [[1, 2, 3, 0], [3, 2, 1, 0]]),
        ("A4", [[1, 2, 0, 3], [0, 2, 3, 1]]),
        ("S4", [[1, 2, 3, 0], [1, 0, 2, 3]]),
    ],
    5: [
        ("C5", [[1, 2, 3, 4, 0]]),
        ("D5", [[1, 2, 3, 4, 0], [4, 3, 2, 1, 0]]),
        ("F20", [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]]),
        ("A5", [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]]),
        ("S5", [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]),
    ],
    6: [
        ("C6", [[1, 2, 3, 4, 5, 0]]),
        ("S3(6)", [[1, 2, 0, 4, 5, 3], [3, 5, 4, 0, 2, 1]]),
        ("D6", [[1, 2, 3, 4, 5, 0], [5, 4, 3, 2, 1, 0]]),
        ("A4(6)", [[4, 3, 1, 2, 5, 0], [1, 2, 0, 5, 3, 4]]),
        ("F18", [[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3], [4, 5, 3, 2, 0, 1]]),
        ("2A4", [[4, 3, 1, 2, 5, 0], [1, 2, 0, 5, 3, 4], [0, 1, 4, 3, 2, 5]]),
        ("S4(6d)", [[0, 4, 2, 1, 5, 3], [4, 5, 3, 2, 0, 1]]),
        ("S4(6c)", [[2, 0, 4, 5, 1, 3], [3, 1, 2, 0, 5, 4]]),
        ("F18:2", [[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3], [0, 2, 1, 5, 4, 3], [4, 5, 3, 2, 0, 1]]),
        ("F36", [[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3], [5, 4, 3, 0, 1, 2]]),
        ("2S4(6)", [[0, 4, 2, 1, 5, 3], [4, 5, 3, 2, 0, 1], [0, 4, 2, 5, 1, 3]]),
        ("PSL(2,5)", [[4, 3, 1, 2, 5, 0], [4, 5, 2, 1, 3, 0]]),
        ("F36:2", [[1, 2, 0, 3, 4, 5], [4, 3, 5, 0, 1, 2], [3, 4, 5, 0, 1, 2]]),
        ("PGL(2,5)", [[1, 2, 3, 4, 0, 5], [5, 2, 1, 4, 3, 0]]),
        ("A6", [[1, 2, 0, 3, 4, 5], [0, 2, 3, 4, 5, 1]]),
        ("S6", [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]]),
    ],
    7: [
        ("C7", [[1, 2, 3, 4, 5, 6, 0]]),
        ("D7", [[1, 2, 3, 4, 5, 6, 0], [0, 6, 5, 4, 3, 2, 1]]),
        ("F21", [[1, 2, 3, 4, 5, 6, 0], [0, 2, 4, 6, 1, 3, 5]]),
        ("F42", [[1, 2, 3, 4, 5, 6, 0], [0, 3, 6, 2, 5, 1, 4]]),
        ("PSL(3,2)", [[1, 2, 3, 4, 5, 6, 0], [0, 2, 4, 6, 1, 3, 5], [0, 1, 4, 3, 2, 6, 5]]),
        ("A7", [[1, 2, 0, 3, 4, 5, 6], [0, 1, 3, 4, 5, 6, 2]]),
        ("S7", [[1, 2, 3, 4, 5, 6, 0], [1, 0, 2, 3, 4, 5, 6]]),
    ],
}


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def generate(gens: List[Perm], n: int) -> FrozenSet[Perm]:
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def cycle_type(perm: Perm) -> CycleType:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            out.append(k)
    return tuple(sorted(out))


def is_even(ct: CycleType) -> bool:
    return sum(k - 1 for k in ct) % 2 == 0


@dataclass(frozen=True)
class TransitiveGroup:
    name: str
    degree: int
    order: int
    cycle_types: FrozenSet[CycleType]

    @property
    def contains_alternating(self) -> bool:
        return self.order >= factorial(self.degree) // 2


@lru_cache(maxsize=None)
def transitive_groups(n: int) -> Tuple[TransitiveGroup, ...]:
    if n not in _GENERATORS:
        raise ValueError(f"no embedded transitive groups of degree {n}")
    out = []
    for name, gens in _GENERATORS[n]:
        elems = generate([tuple(g) for g in gens], n)
        types = frozenset(cycle_type(g) for g in elems)
        out.append(TransitiveGroup(name, n, len(elems), types))
    return tuple(out)


def surviving_groups(n: int, observed: FrozenSet[CycleType]) -> List[TransitiveGroup]:
    """Transitive groups of degree n whose cycle types include all observed."""
    return [G for G in transitive_groups(n) if observed <= G.cycle_types]
