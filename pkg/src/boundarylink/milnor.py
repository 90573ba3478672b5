"""Milnor mu-bar invariants, link-homotopy triviality, and the certifier.

mu_bar(I) reads the coefficient of X_{I[0]}..X_{I[-2]} in the Magnus
expansion of the zero-framed longitude of component I[-1], with the standard
indeterminacy: the gcd of lower-order invariants over delete-one-index
cyclic sub-indices.  Homotopy triviality is decided by vanishing of all
non-repeating invariants, tested by increasing length so each test happens
at indeterminacy zero and the boolean verdict is exact.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import gcd

from . import diagrams as dg
from .diagrams import LinkDiagram
from .magnus import magnus_expand
from .seifert import SeifertMatrix, StructureError
from .smoves import GoodBasisForm, good_basis_form_check

Index = tuple[int, ...]


@dataclass(frozen=True)
class PairedLink:
    diagram: LinkDiagram
    sublink: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "sublink", tuple(self.sublink))
        labels = {l for l, _ in self.diagram.components}
        for l in self.sublink:
            if l not in labels:
                raise StructureError(f"sublink label {l!r} not in diagram")


@dataclass(frozen=True)
class MuTable:
    entries: tuple[tuple[Index, tuple[int, int]], ...]

    def as_dict(self) -> dict[Index, tuple[int, int]]:
        return dict(self.entries)

    def to_json(self) -> str:
        doc = [{"index": list(i), "value": v, "indeterminacy": d}
               for i, (v, d) in sorted(self.entries,
                                       key=lambda e: (len(e[0]), e[0]))]
        return json.dumps(doc, separators=(", ", ": "))


def _longitudes(d: LinkDiagram, depth: int) -> list[dg.Word]:
    return dg.wirtinger_longitudes(d, depth)


def _raw_mu(d: LinkDiagram, i: Index, depth: int,
            cache: dict) -> int:
    reduced = len(set(i)) == len(i)
    key = ("long", depth)
    if key not in cache:
        cache[key] = _longitudes(d, depth)
    lon = cache[key][i[-1] - 1]
    ekey = ("exp", depth, i[-1], len(i) - 1, reduced)
    if ekey not in cache:
        cache[ekey] = magnus_expand(lon, d.n, len(i) - 1, reduced)
    return cache[ekey].coefficient(i[:-1])


def _mu_with_indet(d: LinkDiagram, i: Index, depth: int,
                   cache: dict) -> tuple[int, int]:
    mkey = ("mu", i)
    if mkey in cache:
        return cache[mkey]
    value = _raw_mu(d, i, max(depth, len(i)), cache)
    indet = 0
    if len(i) > 2:
        for drop in range(len(i)):
            rest = i[:drop] + i[drop + 1:]
            for rot in range(len(rest)):
                sub = rest[rot:] + rest[:rot]
                v, _ = _mu_with_indet(d, sub, depth, cache)
                indet = gcd(indet, v)
    if indet:
        value %= indet
    result = (value, indet)
    cache[mkey] = result
    return result


def mu_bar(d: LinkDiagram, index: Index, depth: int | None = None) -> tuple[int, int]:
    """(value, indeterminacy) of mu-bar; indeterminacy 0 means exact."""
    index = tuple(int(j) for j in index)
    if d.kind != "closed":
        raise StructureError("mu-bar needs a closed diagram")
    if len(index) < 2:
        raise StructureError("index must have length at least 2")
    for j in index:
        if not (1 <= j <= d.n):
            raise StructureError(f"component {j} out of range")
    if depth is None:
        depth = len(index)
    if depth < len(index):
        raise StructureError(f"depth {depth} below index length {len(index)}")
    return _mu_with_indet(d, index, depth, {})


def _nonrepeating_indices(m: int, length: int):
    def build(prefix: tuple[int, ...]):
        if len(prefix) == length:
            yield prefix
            return
        for j in range(1, m + 1):
            if j not in prefix:
                yield from build(prefix + (j,))
    yield from build(())


def is_homotopically_trivial(d: LinkDiagram,
                             depth: int | None = None) -> tuple[bool, MuTable]:
    """Vanishing of all non-repeating mu-bar of length 2..n, with the table."""
    if d.kind != "closed":
        raise StructureError("homotopy test needs a closed diagram")
    m = d.n
    if depth is None:
        depth = max(m, 2)
    cache: dict = {}
    entries: list[tuple[Index, tuple[int, int]]] = []
    trivial_so_far = True
    for length in range(2, m + 1):
        for i in _nonrepeating_indices(m, length):
            value = _raw_mu(d, i, max(depth, length), cache)
            # lower-order invariants all vanish, so the value is exact
            entries.append((i, (value, 0)))
            if value != 0:
                trivial_so_far = False
        if not trivial_so_far:
            break
    return trivial_so_far, MuTable(tuple(entries))


def is_ht_plus_pair(p: PairedLink, depth: int | None = None
                    ) -> tuple[bool, dict[str, tuple[bool, MuTable]]]:
    """Definition: K with the zero-framed parallel of each J_i is
    homotopically trivial, for every component J_i of J."""
    d = p.diagram
    results: dict[str, tuple[bool, MuTable]] = {}
    ok = True
    for label, strands in d.components:
        if len(strands) != 1:
            raise StructureError(f"component {label!r} is not a single circle")
        with_copy = dg.pushoff(d, label)
        old = {l for l, _ in d.components}
        copy_label = next(l for l, _ in with_copy.components if l not in old)
        keep = sorted(set(p.sublink) | {copy_label})
        tested = dg.delete_components(with_copy, keep)
        verdict, table = is_homotopically_trivial(tested, depth)
        results[label] = (verdict, table)
        ok = ok and verdict
    return ok, results


def star_entries_zero(a: SeifertMatrix, form: GoodBasisForm) -> bool:
    """All entries outside the 2x2 diagonal pair corners vanish."""
    pairs = []
    for k in range(a.m):
        base = a.offset(k)
        for t in range(a.block_sizes[k] // 2):
            pairs.append((base + 2 * t, base + 2 * t + 1))
    pair_of = {}
    for p, (u, v) in enumerate(pairs):
        pair_of[u] = p
        pair_of[v] = p
    for r in range(a.side):
        for c in range(a.side):
            if pair_of[r] != pair_of[c] and a.entries[r][c] != 0:
                return False
    return True


@dataclass(frozen=True)
class Certificate:
    verdict: str                    # certified-freely-slice | hypothesis-failed | inconclusive
    checks: tuple[tuple[str, bool, str], ...]
    input_hashes: tuple[tuple[str, str], ...]
    version: str = "0.1.0"

    def to_json(self) -> str:
        doc = {
            "verdict": self.verdict,
            "checks": [{"name": n, "passed": p, "detail": t}
                       for n, p, t in self.checks],
            "inputs": {n: h for n, h in self.input_hashes},
            "version": self.version,
        }
        return json.dumps(doc, separators=(", ", ": "), sort_keys=False)


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def is_ht_plus_good_basis(matrix: SeifertMatrix,
                          derived: dict[str, LinkDiagram],
                          depth: int | None = None) -> bool:
    form = good_basis_form_check(matrix)
    if form is None:
        raise StructureError("matrix is not in good-basis form")
    g = matrix.side // 2
    for j in range(1, g + 1):
        for side in ("a", "b"):
            if f"{side}{j}" not in derived:
                raise StructureError(f"missing derived diagram {side}{j}")
    if not star_entries_zero(matrix, form):
        raise StructureError(
            "matrix has nonzero off-pair entries, contradicting the supplied "
            "homotopically-trivial-plus data")
    for j in range(1, g + 1):
        for side in ("a", "b"):
            verdict, _ = is_homotopically_trivial(derived[f"{side}{j}"], depth)
            if not verdict:
                return False
    return True


def certify_theorem_A(matrix: SeifertMatrix,
                      derived: dict[str, LinkDiagram],
                      depth: int | None = None) -> Certificate:
    """Verify the certifier hypotheses: good-basis form plus homotopy
    triviality of every derived link.  A certificate never asserts more than
    that these hypotheses hold for the supplied combinatorial data."""
    checks: list[tuple[str, bool, str]] = []
    hashes = [("matrix", _sha256(matrix.to_json()))]
    for name in sorted(derived):
        hashes.append((f"derived:{name}", _sha256(derived[name].to_json())))

    form = good_basis_form_check(matrix)
    checks.append(("good-basis-form", form is not None,
                   f"ordering={list(form.ordering)} signs={list(form.signs)}"
                   if form else "no pair ordering yields the staircase form"))
    if form is None:
        return Certificate("hypothesis-failed", tuple(checks), tuple(hashes))

    stars = star_entries_zero(matrix, form)
    checks.append(("star-entries-zero", stars,
                   "" if stars else "nonzero entry outside the pair corners"))
    if not stars:
        return Certificate("hypothesis-failed", tuple(checks), tuple(hashes))

    g = matrix.side // 2
    names = [f"{side}{j}" for j in range(1, g + 1) for side in ("a", "b")]
    missing = [n for n in names if n not in derived]
    if missing:
        checks.append(("derived-diagrams-present", False,
                       f"missing: {', '.join(missing)}"))
        return Certificate("inconclusive", tuple(checks), tuple(hashes))

    failed = False
    for name in names:
        verdict, table = is_homotopically_trivial(derived[name], depth)
        witness = ""
        if not verdict:
            bad = [(i, v) for i, (v, _) in table.entries if v != 0]
            i, v = bad[0]
            witness = f"mu-bar{tuple(i)} = {v}"
        checks.append((f"homotopy-trivial:{name}", verdict, witness))
        failed = failed or not verdict
    verdict = "hypothesis-failed" if failed else "certified-freely-slice"
    return Certificate(verdict, tuple(checks), tuple(hashes))


def build_l_beta_bundle(beta: LinkDiagram
                        ) -> tuple[SeifertMatrix, dict[str, LinkDiagram]]:
    """Good-basis matrix and derived links of the doubled link L(beta)."""
    from .seifert import whitehead_double_matrix

    if beta.kind != "string" or beta.n != 2:
        raise StructureError("beta must be a 2-strand string link")
    lk = dg.linking_number(dg.closure(beta), 0, 1)
    if lk != 0:
        raise StructureError(f"closure of beta has linking number {lk}, not 0")
    matrix = whitehead_double_matrix(2, (1, 1))
    b1 = dg.closure(dg.cable(beta, (2, 1)))
    b2 = dg.closure(dg.cable(beta, (1, 2)))
    a = dg.closure(dg.product(dg.split_union(dg.trivial(1), beta),
                              dg.cable(beta, (1, 2))))
    derived = {"b1": b1, "b2": b2, "a1": a, "a2": a}
    return matrix, derived
