"""Truncated Magnus expansion over the integers.

Series live in the ring of noncommutative polynomials in X_1..X_m truncated
above a degree cap; keys are tuples of 1-based variable indices.  In reduced
mode every monomial with a repeated index is dropped, which kills X_i^2 and
makes the ring finite — the right setting for non-repeating Milnor indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagrams import Word
from .seifert import StructureError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class MagnusSeries:
    m: int
    degree_cap: int
    reduced: bool
    coefficients: tuple[tuple[Monomial, int], ...]

    def coefficient(self, key: Monomial) -> int:
        return dict(self.coefficients).get(tuple(key), 0)

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.coefficients)


def _keep(key: Monomial, cap: int, reduced: bool) -> bool:
    if len(key) > cap:
        return False
    return not (reduced and len(set(key)) != len(key))


def _mul(a: dict[Monomial, int], b: dict[Monomial, int],
         cap: int, reduced: bool) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = ka + kb
            if not _keep(key, cap, reduced):
                continue
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _letter_series(letter: int, cap: int, reduced: bool) -> dict[Monomial, int]:
    i = abs(letter)
    if letter > 0:
        return {(): 1, (i,): 1}
    # x_i^-1 = 1 - X_i + X_i^2 - ... ; reduced mode truncates at degree 1
    out: dict[Monomial, int] = {(): 1}
    top = 1 if reduced else cap
    for d in range(1, top + 1):
        out[(i,) * d] = (-1) ** d
    return out


def magnus_expand(w: Word, m: int, degree_cap: int,
                  reduced: bool = True) -> MagnusSeries:
    """Expand a free-group word under x_i -> 1 + X_i."""
    if degree_cap < 1:
        raise StructureError("degree cap must be at least 1")
    for letter in w:
        if letter == 0 or abs(letter) > m:
            raise StructureError(f"letter {letter} outside x_1..x_{m}")
    acc: dict[Monomial, int] = {(): 1}
    for letter in w:
        acc = _mul(acc, _letter_series(letter, degree_cap, reduced),
                   degree_cap, reduced)
    coeffs = tuple(sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])))
    return MagnusSeries(m, degree_cap, reduced, coeffs)
