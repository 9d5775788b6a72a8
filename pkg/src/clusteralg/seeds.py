"""Labeled seeds, seed mutation, permutation action, and orbit search.

A labeled seed is an ordered cluster of Laurent polynomials together
with an exchange matrix.  The cluster entries live in the Laurent ring
of the initial variables; the ambient variable count may exceed the
matrix rank (that is how subseeds on an index subset are represented).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvariantViolation, NotDivisible
from .exchange import ExchangeMatrix, Permutation, mutate_matrix
from .symbolic import LaurentPoly, exact_div, generators

MutationSequence = tuple  # finite list of 1-based indices, applied left to right


def parse_sequence(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s:
        return ()
    return tuple(int(x) for x in s.replace(" ", "").split(","))


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(k) for k in seq)


def validate_sequence(seq: Sequence[int], rank: int) -> None:
    for k in seq:
        if not 1 <= k <= rank:
            raise IndexError(f"mutation index {k} out of range [1,{rank}]")


def is_essential(seq: Sequence[int]) -> bool:
    """No two consecutive entries equal."""
    return all(a != b for a, b in zip(seq, seq[1:]))


def inverse_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(seq))


class LabeledSeed:
    """An ordered cluster plus an exchange matrix."""

    __slots__ = ("cluster", "matrix", "_key")

    def __init__(self, cluster: Sequence[LaurentPoly], matrix: ExchangeMatrix):
        cluster = tuple(cluster)
        if len(cluster) != matrix.n:
            raise ValueError("cluster length must equal matrix rank")
        nvars = {p.nvars for p in cluster}
        if len(nvars) > 1:
            raise ValueError("cluster entries disagree on ambient variable count")
        self.cluster = cluster
        self.matrix = matrix
        self._key: tuple | None = None

    @classmethod
    def initial(cls, B: ExchangeMatrix) -> "LabeledSeed":
        """The seed ((x_1,...,x_n), B)."""
        return cls(generators(B.n), B)

    @property
    def rank(self) -> int:
        return self.matrix.n

    @property
    def nvars(self) -> int:
        return self.cluster[0].nvars

    def canonical_key(self) -> tuple:
        if self._key is None:
            self._key = (
                tuple(p.canonical_string() for p in self.cluster),
                self.matrix.rows,
            )
        return self._key

    def key_string(self) -> str:
        strings, rows = self.canonical_key()
        return "|".join(strings) + " # " + json.dumps([list(r) for r in rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledSeed):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return f"LabeledSeed({self.key_string()})"

    def mutate(self, k: int) -> "LabeledSeed":
        return mutate_seed(self, k)

    def apply(self, seq: Sequence[int]) -> "LabeledSeed":
        return apply_sequence(self, seq)

    def permute(self, sigma: Permutation) -> "LabeledSeed":
        return permute_seed(self, sigma)


def mutate_seed(s: LabeledSeed, k: int) -> LabeledSeed:
    """Seed mutation: the exchange relation at k plus matrix mutation.

    x'_k = (prod_i x_i^[b_ik]_+ + prod_i x_i^[-b_ik]_+) / x_k.  The
    division is exact for every seed reachable from an initial one; a
    division failure therefore signals an implementation bug, not bad
    input, and surfaces as InvariantViolation.
    """
    if not 1 <= k <= s.rank:
        raise IndexError(f"mutation index {k} out of range [1,{s.rank}]")
    nvars = s.nvars
    plus = LaurentPoly.one(nvars)
    minus = LaurentPoly.one(nvars)
    col = k - 1
    for i in range(s.rank):
        b = s.matrix.rows[i][col]
        if b > 0:
            plus = plus * s.cluster[i].pow(b)
        elif b < 0:
            minus = minus * s.cluster[i].pow(-b)
    try:
        new_var = exact_div(plus + minus, s.cluster[col])
    except NotDivisible as exc:
        raise InvariantViolation(
            f"exchange relation at {k} did not divide exactly"
        ) from exc
    cluster = list(s.cluster)
    cluster[col] = new_var
    return LabeledSeed(cluster, mutate_matrix(s.matrix, k))


def apply_sequence(s: LabeledSeed, seq: Sequence[int]) -> LabeledSeed:
    """Mutate at seq[0] first, then seq[1], and so on."""
    for k in seq:
        s = mutate_seed(s, k)
    return s


def permute_seed(s: LabeledSeed, sigma: Permutation) -> LabeledSeed:
    """(x,B)^sigma: entry i of the result is old entry sigma(i).

    Iterating follows permute(permute(s,a),b) = permute(s, a.compose(b)).
    """
    if sigma.n != s.rank:
        raise ValueError("permutation degree does not match seed rank")
    cluster = tuple(s.cluster[sigma(i) - 1] for i in range(1, s.rank + 1))
    return LabeledSeed(cluster, s.matrix.permuted(sigma))


@dataclass(frozen=True)
class EquivalenceResult:
    kind: str  # "equal" | "equivalent" | "distinct"
    sigma: Permutation | None = None


def seed_equivalence(s: LabeledSeed, t: LabeledSeed) -> EquivalenceResult:
    """Equal, equivalent via some relabeling sigma, or distinct.

    Sigma is searched through cluster alignment only; the matrix is then
    required to match as well.  A cluster match with a matrix mismatch
    would contradict the uniqueness of a seed with a given cluster, so
    it is treated as an internal error.
    """
    if s.rank != t.rank:
        raise ValueError("rank mismatch")
    if s == t:
        return EquivalenceResult("equal", Permutation.identity(s.rank))
    if sorted(s.canonical_key()[0]) != sorted(t.canonical_key()[0]):
        return EquivalenceResult("distinct")
    target = t.canonical_key()[0]
    strings = s.canonical_key()[0]
    positions: dict[str, list[int]] = {}
    for i, cs in enumerate(strings):
        positions.setdefault(cs, []).append(i + 1)
    for sigma in _alignments(target, positions, s.rank):
        if s.matrix.permuted(sigma) == t.matrix:
            return EquivalenceResult("equivalent", sigma)
        raise InvariantViolation(
            "clusters align under a relabeling but the matrices do not"
        )
    return EquivalenceResult("distinct")


def _alignments(target: tuple, positions: dict[str, list[int]], n: int):
    """Permutations sigma with strings[sigma(i)] == target[i] for all i."""

    def extend(i: int, images: list[int], used: set[int]):
        if i > n:
            yield Permutation(images)
            return
        for p in positions.get(target[i - 1], ()):
            if p not in used:
                used.add(p)
                images.append(p)
                yield from extend(i + 1, images, used)
                images.pop()
                used.remove(p)

    yield from extend(1, [], set())


@dataclass
class OrbitGraph:
    """BFS closure of a seed under mutation (and optionally permutation).

    seeds are listed in discovery order; words[i] is a normalized
    witness (mutation word M, relabeling pi) with
    seeds[i] == permute(apply_sequence(root, M), pi).
    """

    seeds: list[LabeledSeed]
    words: list[tuple[tuple[int, ...], Permutation]]
    edges: list[tuple[int, str, int]]
    complete: bool
    with_permutations: bool
    max_seeds: int
    index: dict = field(repr=False, default_factory=dict)

    def find(self, s: LabeledSeed) -> int | None:
        return self.index.get(s.canonical_key())

    def __len__(self) -> int:
        return len(self.seeds)

    def dump_lines(self) -> list[str]:
        return sorted(s.key_string() for s in self.seeds)


def orbit(
    s: LabeledSeed,
    max_seeds: int,
    with_permutations: bool = False,
    max_depth: int | None = None,
) -> OrbitGraph:
    """Breadth-first closure under mu_1..mu_n (and adjacent transpositions).

    Stops as soon as the seed count would exceed max_seeds; the result
    then carries complete=False and is never silently truncated.
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be positive")
    n = s.rank
    gens: list[tuple[str, object]] = [("mu", k) for k in range(1, n + 1)]
    if with_permutations:
        gens += [("perm", Permutation.transposition(n, i, i + 1)) for i in range(1, n)]

    seeds = [s]
    words: list[tuple[tuple[int, ...], Permutation]] = [((), Permutation.identity(n))]
    index = {s.canonical_key(): 0}
    edges: list[tuple[int, str, int]] = []
    depth = {0: 0}
    queue = [0]
    complete = True
    qpos = 0
    while qpos < len(queue):
        cur = queue[qpos]
        qpos += 1
        word_m, word_p = words[cur]
        for kind, g in gens:
            if kind == "mu":
                t = mutate_seed(seeds[cur], g)  # type: ignore[arg-type]
                label = f"mu{g}"
                new_word = (word_m + (word_p(g),), word_p)  # type: ignore[operator]
            else:
                t = permute_seed(seeds[cur], g)  # type: ignore[arg-type]
                label = g.cycle_notation()  # type: ignore[union-attr]
                new_word = (word_m, word_p.compose(g))  # type: ignore[arg-type]
            key = t.canonical_key()
            found = index.get(key)
            if found is None:
                if max_depth is not None and depth[cur] + 1 > max_depth:
                    complete = False
                    continue
                if len(seeds) >= max_seeds:
                    return OrbitGraph(
                        seeds, words, edges, False, with_permutations, max_seeds, index
                    )
                found = len(seeds)
                seeds.append(t)
                words.append(new_word)
                index[key] = found
                depth[found] = depth[cur] + 1
                queue.append(found)
            edges.append((cur, label, found))
    return OrbitGraph(seeds, words, edges, complete, with_permutations, max_seeds, index)


def seed_from_json(text: str) -> tuple[LabeledSeed, list[str]]:
    """Parse {"n": int, "matrix": [[int]], "variables": [names]?}.

    Returns the initial seed of the matrix plus display names.
    """
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "matrix" not in data:
        raise ValueError('seed file needs keys "n" and "matrix"')
    n = data["n"]
    matrix = data["matrix"]
    if not isinstance(n, int) or not isinstance(matrix, list) or len(matrix) != n:
        raise ValueError('"matrix" must be an n-row array of arrays')
    B = ExchangeMatrix(matrix)
    names = data.get("variables")
    if names is None:
        names = [f"x{i}" for i in range(1, n + 1)]
    if len(names) != n or len(set(names)) != n:
        raise ValueError("variable names must be distinct and match n")
    return LabeledSeed.initial(B), [str(x) for x in names]


def seed_to_json(B: ExchangeMatrix, names: Iterable[str] | None = None) -> str:
    data: dict = {"n": B.n, "matrix": B.to_lists()}
    if names is not None:
        data["variables"] = list(names)
    return json.dumps(data, indent=2)
