"""Exchange matrices, quivers, diagrams, permutations, and matrix mutation.

Everything here is purely matrix-level: no cluster variables.  All
indices in the public API are 1-based.  Values are immutable and
hashable so they can serve directly as keys in orbit searches.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InvariantViolation, NotSkewSymmetrizable


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


class ExchangeMatrix:
    """A skew-symmetrizable integer matrix with its symmetrizer.

    Construction validates zero diagonal, sign coherence (b_ij > 0 iff
    b_ji < 0, zeros paired) and the existence of a positive integer
    diagonal D with D*B skew-symmetric.  The minimal such D is stored.
    """

    __slots__ = ("n", "rows", "symmetrizer", "_hash")

    def __init__(self, rows: Sequence[Sequence[int]]):
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        for row in grid:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            if grid[i][i] != 0:
                raise NotSkewSymmetrizable(f"nonzero diagonal entry at ({i + 1},{i + 1})")
        for i in range(n):
            for j in range(i + 1, n):
                a, b = grid[i][j], grid[j][i]
                if (a == 0) != (b == 0) or (a > 0 and b > 0) or (a < 0 and b < 0):
                    raise NotSkewSymmetrizable(
                        f"sign incoherence at ({i + 1},{j + 1}): {a} vs {b}"
                    )
        self.n = n
        self.rows = grid
        self.symmetrizer = _find_symmetrizer(grid)
        self._hash: int | None = None

    # -- basic access (1-based) --------------------------------------

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"ExchangeMatrix({[list(r) for r in self.rows]})"

    def __neg__(self) -> "ExchangeMatrix":
        return ExchangeMatrix([[-x for x in row] for row in self.rows])

    # -- structure ---------------------------------------------------

    def is_skew_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def v(self) -> int:
        """Largest entry; by sign coherence also the largest |entry|."""
        return max(x for row in self.rows for x in row) if self.n > 1 else 0

    def max_abs_product(self) -> int:
        """max over pairs of |b_ij * b_ji|."""
        best = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                best = max(best, abs(self.rows[i][j] * self.rows[j][i]))
        return best

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Edges {i,j} (1-based, i<j) of the underlying undirected graph."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i][j] != 0
        ]

    def is_indecomposable(self) -> bool:
        return _is_connected(self.n, self.underlying_edges())

    def is_acyclic(self) -> bool:
        """No directed cycle among the arrows i -> j (b_ij > 0)."""
        succ = {
            i: [j for j in range(self.n) if self.rows[i][j] > 0] for i in range(self.n)
        }
        state = [0] * self.n
        # iterative DFS, state 1 = on stack, 2 = done
        for start in range(self.n):
            if state[start]:
                continue
            stack = [(start, iter(succ[start]))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if state[nxt] == 1:
                        return False
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, iter(succ[nxt])))
                        advanced = True
                        break
                if not advanced:
                    state[node] = 2
                    stack.pop()
        return True

    def bipartition(self) -> tuple[int, ...] | None:
        """Signs eps with eps(i)+eps(j)=0 on every arrow, or None.

        Exists iff every vertex is a source or a sink; sources and
        isolated vertices get +1, sinks get -1 (canonical choice).
        """
        eps = []
        for i in range(self.n):
            has_pos = any(x > 0 for x in self.rows[i])
            has_neg = any(x < 0 for x in self.rows[i])
            if has_pos and has_neg:
                return None
            eps.append(-1 if has_neg else 1)
        return tuple(eps)

    def underlying_triangles(self) -> list[tuple[int, int, int]]:
        """3-cycles {i<j<k} of the underlying undirected graph."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.rows[i][j] == 0:
                    continue
                for k in range(j + 1, self.n):
                    if self.rows[i][k] != 0 and self.rows[j][k] != 0:
                        out.append((i + 1, j + 1, k + 1))
        return out

    # -- mutation and permutation ------------------------------------

    def mutate(self, k: int) -> "ExchangeMatrix":
        return mutate_matrix(self, k)

    def permuted(self, sigma: "Permutation") -> "ExchangeMatrix":
        return apply_permutation_matrix(self, sigma)

    # -- serialization -----------------------------------------------

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, text: str) -> "ExchangeMatrix":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("matrix file must be a JSON array of arrays")
        return cls(data)


def _find_symmetrizer(grid: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integer diagonal with d_i b_ij = -d_j b_ji.

    Ratios propagate along edges of the underlying graph, component by
    component; a cycle with an inconsistent ratio product means no
    symmetrizer exists.
    """
    n = len(grid)
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        queue = [root]
        component = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if grid[i][j] == 0:
                    continue
                # d_j = d_i * (-b_ij / b_ji); b_ji nonzero by sign coherence
                forced = d[i] * Fraction(-grid[i][j], grid[j][i])
                if forced <= 0:
                    raise NotSkewSymmetrizable("ratio propagation forces nonpositive d")
                if d[j] is None:
                    d[j] = forced
                    queue.append(j)
                    component.append(j)
                elif d[j] != forced:
                    raise NotSkewSymmetrizable("inconsistent symmetrizer ratios on a cycle")
        scale = 1
        for i in component:
            scale = scale * d[i].denominator // gcd(scale, d[i].denominator)
        nums = [int(d[i] * scale) for i in component]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for i, x in zip(component, nums):
            d[i] = Fraction(x // g)
    out = tuple(int(x) for x in d)  # type: ignore[arg-type]
    for i in range(n):
        for j in range(n):
            if out[i] * grid[i][j] != -out[j] * grid[j][i]:
                raise NotSkewSymmetrizable("no positive integer symmetrizer")
    return out


def _is_connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {1}
    queue = [1]
    while queue:
        i = queue.pop()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == n


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at direction k (1-based).

    b'_ij = -b_ij when i = k or j = k, else b_ij + sgn(b_ik) [b_ik b_kj]_+.
    The parent's symmetrizer must keep working; anything else is a bug.
    """
    if not 1 <= k <= B.n:
        raise IndexError(f"mutation index {k} out of range [1,{B.n}]")
    a = k - 1
    old = B.rows
    new = []
    for i in range(B.n):
        row = []
        for j in range(B.n):
            if i == a or j == a:
                row.append(-old[i][j])
            else:
                extra = _sgn(old[i][a]) * max(old[i][a] * old[a][j], 0)
                row.append(old[i][j] + extra)
        new.append(row)
    out = ExchangeMatrix(new)
    d = B.symmetrizer
    for i in range(B.n):
        for j in range(B.n):
            if d[i] * out.rows[i][j] != -d[j] * out.rows[j][i]:
                raise InvariantViolation("mutation broke the skew-symmetrizer")
    return out


def apply_matrix_sequence(B: ExchangeMatrix, seq: Sequence[int]) -> ExchangeMatrix:
    """Mutate at seq[0] first, then seq[1], and so on."""
    for k in seq:
        B = mutate_matrix(B, k)
    return B


class Permutation:
    """A bijection of [1,n]; images[i-1] = sigma(i)."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of [1,{len(imgs)}]: {imgs}")
        self.images = imgs

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(imgs)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self . other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.images):
            out[v - 1] = i + 1
        return Permutation(out)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    @classmethod
    def from_cycle_notation(cls, n: int, text: str) -> "Permutation":
        """Parse "(1 2)(3 4)"; "id", "()" and "" all mean the identity."""
        s = text.strip()
        if s in ("", "id", "()", "e"):
            return cls.identity(n)
        if s.count("(") != s.count(")") or not s.startswith("("):
            raise ValueError(f"bad cycle notation: {text!r}")
        imgs = list(range(1, n + 1))
        for chunk in s.replace(")(", ")|(").split("|"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"bad cycle notation: {text!r}")
            body = chunk[1:-1].replace(",", " ").split()
            cyc = [int(x) for x in body]
            if len(cyc) != len(set(cyc)) or any(not 1 <= x <= n for x in cyc):
                raise ValueError(f"bad cycle {chunk} for degree {n}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(imgs)


def all_permutations(n: int):
    """All degree-n permutations in lexicographic image order."""
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation(imgs)


def apply_permutation_matrix(B: ExchangeMatrix, sigma: Permutation) -> ExchangeMatrix:
    """B^sigma, entry (i,j) = b_{sigma(i) sigma(j)}.

    Composition law: (B^sigma)^tau = B^(sigma.compose(tau)).
    """
    if sigma.n != B.n:
        raise ValueError("permutation degree does not match matrix rank")
    return ExchangeMatrix(
        [
            [B.rows[sigma(i) - 1][sigma(j) - 1] for j in range(1, B.n + 1)]
            for i in range(1, B.n + 1)
        ]
    )


@dataclass(frozen=True)
class Quiver:
    """Arrow view of a skew-symmetric exchange matrix."""

    matrix: ExchangeMatrix

    def __post_init__(self):
        if not self.matrix.is_skew_symmetric():
            raise ValueError("a quiver needs a skew-symmetric matrix")

    @property
    def n(self) -> int:
        return self.matrix.n

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int] | tuple[int, int, int]]) -> "Quiver":
        """Arrows as (i, j) or (i, j, multiplicity), meaning i -> j."""
        grid = [[0] * n for _ in range(n)]
        for arrow in arrows:
            if len(arrow) == 2:
                i, j = arrow  # type: ignore[misc]
                m = 1
            else:
                i, j, m = arrow  # type: ignore[misc]
            grid[i - 1][j - 1] += m
            grid[j - 1][i - 1] -= m
        return cls(ExchangeMatrix(grid))

    def arrows(self) -> list[tuple[int, int, int]]:
        """(i, j, multiplicity) for every arrow bundle i -> j."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if self.matrix.rows[i][j] > 0:
                    out.append((i + 1, j + 1, self.matrix.rows[i][j]))
        return out

    def mutate(self, k: int) -> "Quiver":
        return Quiver(mutate_matrix(self.matrix, k))


def mutate_quiver(Q: Quiver, k: int) -> Quiver:
    """Quiver mutation; defined through the unambiguous matrix rule."""
    return Q.mutate(k)


@dataclass(frozen=True)
class Diagram:
    """The weighted digraph: arrow i -> j with weight |b_ij b_ji| when b_ij > 0."""

    n: int
    arrows: tuple[tuple[int, int, int], ...]

    @classmethod
    def of(cls, B: ExchangeMatrix) -> "Diagram":
        arrows = []
        for i in range(B.n):
            for j in range(B.n):
                if B.rows[i][j] > 0:
                    arrows.append((i + 1, j + 1, abs(B.rows[i][j] * B.rows[j][i])))
        return cls(B.n, tuple(arrows))

    def weight(self, i: int, j: int) -> int:
        """Weight of the undirected edge {i,j}; 0 if absent."""
        for a, b, w in self.arrows:
            if {a, b} == {i, j}:
                return w
        return 0


def is_inflexion(B: ExchangeMatrix, i: int, j: int, k: int) -> bool:
    """Within the triple {i,j,k}: arrows pass through i, i.e. b_ji b_ik > 0."""
    return B.entry(j, i) * B.entry(i, k) > 0


@dataclass
class MatrixClass:
    """BFS closure of a matrix under mutation in all directions."""

    matrices: list[ExchangeMatrix]
    words: list[tuple[int, ...]]  # mutation sequence reaching each matrix
    complete: bool
    max_matrices: int
    index: dict

    def find(self, B: ExchangeMatrix) -> int | None:
        return self.index.get(B.rows)

    def __len__(self) -> int:
        return len(self.matrices)


def matrix_mutation_class(B: ExchangeMatrix, max_matrices: int) -> MatrixClass:
    """All matrices mutation-equivalent to B, up to a size budget."""
    if max_matrices < 1:
        raise ValueError("max_matrices must be positive")
    matrices = [B]
    words: list[tuple[int, ...]] = [()]
    index = {B.rows: 0}
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        cur = queue[qpos]
        qpos += 1
        for k in range(1, B.n + 1):
            t = mutate_matrix(matrices[cur], k)
            if t.rows not in index:
                if len(matrices) >= max_matrices:
                    return MatrixClass(matrices, words, False, max_matrices, index)
                index[t.rows] = len(matrices)
                matrices.append(t)
                words.append(words[cur] + (k,))
                queue.append(len(matrices) - 1)
    return MatrixClass(matrices, words, True, max_matrices, index)


@dataclass(frozen=True)
class StructuralSummary:
    v: int
    skew_symmetric: bool
    indecomposable: bool
    acyclic: bool
    epsilon: tuple[int, ...] | None


def structural_predicates(B: ExchangeMatrix) -> StructuralSummary:
    return StructuralSummary(
        v=B.v(),
        skew_symmetric=B.is_skew_symmetric(),
        indecomposable=B.is_indecomposable(),
        acyclic=B.is_acyclic(),
        epsilon=B.bipartition(),
    )
