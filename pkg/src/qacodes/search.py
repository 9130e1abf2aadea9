"""Exhaustive search for quasi-abelian codes meeting a distance target.

Stage 1 concatenates every nonzero outer code of the chosen index with every
minimal ideal and keeps the combinations whose exact minimum distance
reaches the target.  Later stages extend surviving assignments one class at
a time; this is complete because every sub-assignment of a survivor is
itself a survivor (a direct summand has at least the distance of the sum).
Results are deduplicated by (parameters, weight distribution) - a proxy for
code equivalence, which is deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AbelianGroup
from .errors import CapExceededError, InvariantError
from .idempotents import decompose_algebra
from .linear_codes import (DEFAULT_CODEWORD_CAP, DEFAULT_SUBSPACE_CAP, CodeParams,
                           LinearCode, enumerate_codes)


@dataclass(frozen=True)
class Caps:
    codewords: int = DEFAULT_CODEWORD_CAP
    subspaces: int = DEFAULT_SUBSPACE_CAP


@dataclass(frozen=True)
class SearchSpec:
    q: int
    group: AbelianGroup
    index: int
    d_min: int
    dim_target: int | None = None
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        if self.d_min < 1:
            raise ValueError("distance target must be positive")
        if self.index < 1:
            raise ValueError("index must be positive")


@dataclass(frozen=True)
class SearchEntry:
    """One surviving code: its assignment (class index -> outer code), its
    exact parameters, and the deduplication fingerprint."""

    assignment: tuple[tuple[int, LinearCode], ...]
    params: CodeParams
    fingerprint: tuple

    @property
    def class_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.assignment)


@dataclass
class SearchResult:
    codes: list[SearchEntry]
    stats: dict

    def by_dimension(self, dim: int) -> list[SearchEntry]:
        return [e for e in self.codes if e.params.dim == dim]


class _Evaluator:
    """Shared state for evaluating candidate assignments quickly.

    Flattened generator blocks are cached per (class, outer code), so a
    direct sum pays only for one weight enumeration over its raw generator
    rows (which are independent by construction; the weight distribution
    sanity check would expose any rank defect).  Over a prime base field the
    enumeration is a single matrix product modulo p.
    """

    _MATMUL_LIMIT = 2 ** 18

    def __init__(self, dec, spec: SearchSpec):
        self.dec = dec
        self.spec = spec
        self.base_field = dec.spec.subfield(1)
        self.length = dec.group.size * spec.index
        self.prime_base = dec.spec.base_degree == 1
        self._blocks: dict[tuple[int, LinearCode], np.ndarray] = {}
        self._messages: dict[int, np.ndarray] = {}

    def rows_for(self, i: int, outer: LinearCode) -> np.ndarray:
        key = (i, outer)
        rows = self._blocks.get(key)
        if rows is None:
            dec = self.dec
            spec_f = dec.spec
            out = []
            for v in outer.gens:
                for b in dec._power_basis[i]:
                    blocks = dec.lift_vector(i, spec_f.vscale(int(b), v))
                    out.append(blocks.reshape(-1))
            rows = np.array(out, dtype=np.int32)
            self._blocks[key] = rows
        return rows

    def _message_matrix(self, k: int) -> np.ndarray:
        M = self._messages.get(k)
        if M is None:
            p = self.dec.spec.p
            codes = np.arange(p ** k, dtype=np.int64)
            M = np.empty((p ** k, k), dtype=np.int32)
            for j in range(k - 1, -1, -1):
                M[:, j] = codes % p
                codes //= p
            self._messages[k] = M
        return M

    def _span_weight_distribution(self, rows: np.ndarray, dim: int) -> np.ndarray:
        q = self.base_field.size
        total = q ** dim
        if total > self.spec.caps.codewords:
            raise CapExceededError(
                f"codeword enumeration for [{self.length},{dim}]", total,
                self.spec.caps.codewords)
        if self.prime_base and total <= self._MATMUL_LIMIT:
            p = self.dec.spec.p
            W = (self._message_matrix(dim) @ rows) % p
            wd = np.bincount(np.count_nonzero(W, axis=1),
                             minlength=self.length + 1)
        else:
            code = LinearCode(self.base_field, self.length, rows)
            if code.dim != dim:
                raise InvariantError(
                    f"direct sum dimension {code.dim} does not match the expected {dim}")
            wd = code.weight_distribution(self.spec.caps.codewords)
        if wd[0] != 1:
            raise InvariantError("direct sum generators are not independent")
        return wd

    def evaluate(self, assignment: dict[int, LinearCode]) -> SearchEntry | None:
        """Exact-distance filter; returns the finished entry or None."""
        dec, spec = self.dec, self.spec
        dim = sum(dec.classes[i].size * c.dim for i, c in assignment.items())
        # Singleton prune: no [n, k, >= d_min] exists beyond this dimension
        if dim > self.length - spec.d_min + 1:
            return None
        rows = np.vstack([self.rows_for(i, c) for i, c in sorted(assignment.items())])
        wd = self._span_weight_distribution(rows, dim)
        d = int(np.nonzero(wd[1:])[0][0]) + 1
        if d < spec.d_min:
            return None
        params = CodeParams(self.length, dim, distance=d)
        return SearchEntry(tuple(sorted(assignment.items(), key=lambda t: t[0])),
                           params, (self.length, dim, tuple(int(x) for x in wd)))


def stage1_filter(spec: SearchSpec, class_index: int) -> list[tuple[LinearCode, int]]:
    """All nonzero outer codes for one class whose simple concatenation meets
    the distance target, with the exact concatenation distances."""
    dec = decompose_algebra(spec.group, spec.q)
    ev = _Evaluator(dec, spec)
    k_i = dec.classes[class_index].size
    out = []
    for outer in enumerate_codes(dec.spec.subfield(k_i), spec.index, spec.caps.subspaces):
        if outer.dim == 0:
            continue
        entry = ev.evaluate({class_index: outer})
        if entry is not None:
            out.append((outer, entry.params.distance))
    return out


def search(spec: SearchSpec) -> SearchResult:
    """Run the staged search; the result lists every fingerprint-distinct
    code meeting the target, ordered by dimension then fingerprint."""
    if spec.d_min > spec.group.size * spec.index:
        return SearchResult([], {"stages": [], "note": "target exceeds the length"})
    dec = decompose_algebra(spec.group, spec.q)
    ev = _Evaluator(dec, spec)
    stats: dict = {"stages": []}

    singles: list[SearchEntry] = []
    candidates = 0
    try:
        for i in range(dec.class_count):
            k_i = dec.classes[i].size
            for outer in enumerate_codes(dec.spec.subfield(k_i), spec.index,
                                         spec.caps.subspaces):
                if outer.dim == 0:
                    continue
                candidates += 1
                if (spec.dim_target is not None
                        and k_i * outer.dim > spec.dim_target):
                    continue
                entry = ev.evaluate({i: outer})
                if entry is not None:
                    singles.append(entry)
    except CapExceededError as exc:
        raise CapExceededError(f"search stage 1: {exc.what}",
                               exc.needed, exc.cap) from None
    stats["stages"].append({"stage": 1, "candidates": candidates,
                            "survivors": len(singles)})

    accepted: list[SearchEntry] = list(singles)
    surviving_keys: set = {e.assignment for e in singles}
    frontier = singles
    stage = 1
    while frontier:
        stage += 1
        new: list[SearchEntry] = []
        pairs = 0
        pruned = 0
        for base in frontier:
            top = max(base.class_indices)
            for single in singles:
                (i, outer), = single.assignment
                if i <= top:
                    continue
                dim = base.params.dim + single.params.dim
                if spec.dim_target is not None and dim > spec.dim_target:
                    continue
                pairs += 1
                # every sub-assignment of a survivor must itself survive
                # (a direct summand has at least the distance of the sum)
                if stage > 2 and any(
                        tuple(t for t in base.assignment if t != drop) + ((i, outer),)
                        not in surviving_keys for drop in base.assignment):
                    pruned += 1
                    continue
                assignment = dict(base.assignment)
                assignment[i] = outer
                try:
                    entry = ev.evaluate(assignment)
                except CapExceededError as exc:
                    raise CapExceededError(f"search stage {stage}: {exc.what}",
                                           exc.needed, exc.cap) from None
                if entry is not None:
                    new.append(entry)
                    surviving_keys.add(entry.assignment)
        stats["stages"].append({"stage": stage, "candidates": pairs,
                                "pruned": pruned, "survivors": len(new)})
        accepted.extend(new)
        frontier = new

    # fingerprint deduplication, deterministic order
    accepted.sort(key=lambda e: (e.params.dim, e.fingerprint,
                                 [(i, c.gens.tobytes()) for i, c in e.assignment]))
    seen: set = set()
    unique: list[SearchEntry] = []
    for e in accepted:
        if e.fingerprint in seen:
            continue
        seen.add(e.fingerprint)
        unique.append(e)
    if spec.dim_target is not None:
        unique = [e for e in unique if e.params.dim == spec.dim_target]
    stats["accepted"] = len(accepted)
    stats["distinct"] = len(unique)
    return SearchResult(unique, stats)
