"""Classification of exchange matrices by their mutation class.

Finite type and finite mutation type are decided through the class-wide
2x2 product bounds (3 and 4 respectively), searched breadth-first with
pruning; every negative answer carries a replayable witness.  The same
search machinery yields the m-invariant upper bound, mutation-acyclicity,
the three sufficient relabeling-transitivity conditions, a cosmetic
Dynkin-diagram labeling, and the automorphism-finiteness probe.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import InvariantViolation
from .exchange import (
    ExchangeMatrix,
    Permutation,
    apply_matrix_sequence,
    matrix_mutation_class,
)
from .periodicity import find_periods, is_sigma_period
from .seeds import LabeledSeed, apply_sequence, inverse_sequence


@dataclass(frozen=True)
class BoundWitness:
    """A class member violating a 2x2 product bound, with its access path."""

    sequence: tuple[int, ...]
    i: int
    j: int
    product: int

    def replay(self, B: ExchangeMatrix, bound: int) -> bool:
        M = apply_matrix_sequence(B, self.sequence)
        value = abs(M.entry(self.i, self.j) * M.entry(self.j, self.i))
        return value == self.product and value > bound

    def to_json_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "i": self.i,
            "j": self.j,
            "product": self.product,
        }


@dataclass(frozen=True)
class Decision:
    status: str  # yes | no | unknown
    witness: BoundWitness | None
    budget: int


def _violating_pair(M: ExchangeMatrix, bound: int) -> tuple[int, int, int] | None:
    for i in range(1, M.n + 1):
        for j in range(i + 1, M.n + 1):
            product = abs(M.entry(i, j) * M.entry(j, i))
            if product > bound:
                return i, j, product
    return None


def _bounded_class_search(B: ExchangeMatrix, bound: int, budget: int) -> Decision:
    """BFS the mutation class, pruning to "no" at the first bound violation."""
    hit = _violating_pair(B, bound)
    if hit is not None:
        return Decision("no", BoundWitness((), *hit), budget)
    visited = {B.rows}
    queue = deque([(B, ())])
    while queue:
        M, word = queue.popleft()
        for k in range(1, B.n + 1):
            M2 = M.mutate(k)
            if M2.rows in visited:
                continue
            word2 = word + (k,)
            hit = _violating_pair(M2, bound)
            if hit is not None:
                return Decision("no", BoundWitness(word2, *hit), budget)
            if len(visited) >= budget:
                return Decision("unknown", None, budget)
            visited.add(M2.rows)
            queue.append((M2, word2))
    return Decision("yes", None, budget)


def is_finite_mutation_type(B: ExchangeMatrix, budget: int) -> Decision:
    """Finitely many matrices in the class iff products stay <= 4 (rank >= 3)."""
    if B.n <= 2:
        # class is {B, -B}
        return Decision("yes", None, budget)
    return _bounded_class_search(B, 4, budget)


def is_finite_type(B: ExchangeMatrix, budget: int) -> Decision:
    """Finitely many seeds iff products stay <= 3 across the class."""
    return _bounded_class_search(B, 3, budget)


@dataclass(frozen=True)
class MSearch:
    """Best v seen over the explored class, plus an acyclic representative."""

    min_v: int
    min_v_word: tuple[int, ...]
    acyclic_word: tuple[int, ...] | None
    complete: bool
    matrices_seen: int
    budget: int

    @property
    def m_certified(self) -> bool:
        # v >= 1 for any nonzero matrix, so min_v == 1 meets the infimum;
        # a complete class search also pins it exactly
        return self.min_v <= 1 or self.complete


def search_m_and_acyclic(B: ExchangeMatrix, budget: int) -> MSearch:
    mclass = matrix_mutation_class(B, max_matrices=budget)
    min_v = None
    min_word: tuple[int, ...] = ()
    acyclic_word = None
    for M, word in zip(mclass.matrices, mclass.words):
        v = M.v()
        if min_v is None or v < min_v:
            min_v, min_word = v, word
        if acyclic_word is None and M.is_acyclic():
            acyclic_word = word
    return MSearch(
        min_v, min_word, acyclic_word, mclass.complete, len(mclass.matrices), budget
    )


@dataclass(frozen=True)
class Main1Flags:
    """Sufficient conditions for W to exhaust the equivariant group."""

    i: bool
    ii: bool
    iii: bool

    @property
    def any(self) -> bool:
        return self.i or self.ii or self.iii

    def to_json_dict(self) -> dict:
        return {"i": self.i, "ii": self.ii, "iii": self.iii}


def _edge_is_simple(B: ExchangeMatrix, i: int, j: int) -> bool:
    return abs(B.entry(i, j)) == 1


def main1_conditions(B: ExchangeMatrix, budget: int) -> Main1Flags:
    """Evaluate the three quiver conditions; flags mean established-within-budget.

    (i)  the class contains a matrix with all entries in {-1,0,1};
    (ii) acyclic, v(B)=2, and the underlying graph has no 3-cycles;
    (iii) acyclic, v(B)=2, and every underlying 3-cycle has a simple edge.
    """
    if not B.is_skew_symmetric():
        raise ValueError("the quiver conditions need a skew-symmetric matrix")
    flag_i = search_m_and_acyclic(B, budget).min_v == 1
    acyclic = B.is_acyclic()
    v2 = B.v() == 2
    triangles = B.underlying_triangles()
    flag_ii = acyclic and v2 and not triangles
    flag_iii = (
        acyclic
        and v2
        and all(
            _edge_is_simple(B, a, b)
            or _edge_is_simple(B, b, c)
            or _edge_is_simple(B, a, c)
            for a, b, c in triangles
        )
    )
    return Main1Flags(flag_i, flag_ii, flag_iii)


def dynkin_type(B: ExchangeMatrix) -> tuple[str, int] | None:
    """Best-effort Dynkin label and Coxeter number for a tree-shaped diagram.

    Purely cosmetic: classification decisions never consult this.
    """
    n = B.n
    if n == 1:
        return "A1", 2
    edges = B.underlying_edges()
    if len(edges) != n - 1 or not B.is_indecomposable():
        return None
    weights = {e: abs(B.entry(*e) * B.entry(e[1], e[0])) for e in edges}
    heavy = sorted(w for w in weights.values() if w > 1)
    degree = {i: 0 for i in range(1, n + 1)}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    is_path = max(degree.values()) <= 2

    if not heavy:
        if is_path:
            return f"A{n}", n + 1
        branch = [v for v, d in degree.items() if d >= 3]
        if len(branch) != 1 or max(degree.values()) > 3:
            return None
        arms = sorted(_arm_lengths(edges, branch[0], n))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}", 2 * n - 2
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            rank = 4 + arms[2]
            h = {6: 12, 7: 18, 8: 30}[rank]
            return f"E{rank}", h
        return None
    if heavy == [2] and is_path:
        (edge,) = [e for e, w in weights.items() if w == 2]
        a, b = edge
        if n == 2:
            return "B2", 4
        if degree[a] == 1 or degree[b] == 1:
            return f"B/C{n}", 2 * n
        if n == 4:
            return "F4", 12
        return None
    if heavy == [3] and n == 2:
        return "G2", 6
    return None


def _arm_lengths(edges: list[tuple[int, int]], branch: int, n: int) -> list[int]:
    adj = {i: [] for i in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    arms = []
    for start in adj[branch]:
        length = 0
        prev, cur = branch, start
        while cur is not None:
            length += 1
            nxt = [w for w in adj[cur] if w != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        arms.append(length)
    return arms


@dataclass
class Classification:
    """The full decision record for one exchange matrix."""

    finite_type: str
    finite_mutation_type: str
    mutation_acyclic: str
    v: int
    m_upper_bound: int
    m_witness: tuple[int, ...]
    m_exact: bool
    main1: Main1Flags | None
    finite_type_witness: BoundWitness | None
    finite_mutation_type_witness: BoundWitness | None
    mutation_acyclic_witness: tuple[int, ...] | None
    dynkin: str | None
    budget: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "finite_type": self.finite_type,
                "finite_type_witness": (
                    self.finite_type_witness.to_json_dict()
                    if self.finite_type_witness
                    else None
                ),
                "finite_mutation_type": self.finite_mutation_type,
                "finite_mutation_type_witness": (
                    self.finite_mutation_type_witness.to_json_dict()
                    if self.finite_mutation_type_witness
                    else None
                ),
                "mutation_acyclic": self.mutation_acyclic,
                "mutation_acyclic_witness": (
                    list(self.mutation_acyclic_witness)
                    if self.mutation_acyclic_witness is not None
                    else None
                ),
                "v": self.v,
                "m_upper_bound": self.m_upper_bound,
                "m_witness": list(self.m_witness),
                "m_exact": self.m_exact,
                "main1_conditions": self.main1.to_json_dict() if self.main1 else None,
                "dynkin": self.dynkin,
                "budget": self.budget,
            },
            indent=2,
        )


def _render(status: str, budget: int) -> str:
    return status if status != "unknown" else f"unknown(budget={budget})"


def classify(B: ExchangeMatrix, budget: int) -> Classification:
    ft = is_finite_type(B, budget)
    fmt = is_finite_mutation_type(B, budget)
    msearch = search_m_and_acyclic(B, budget)
    if msearch.acyclic_word is not None:
        acyclic_status = "yes"
    elif msearch.complete:
        acyclic_status = "no"
    else:
        acyclic_status = "unknown"
    if ft.status == "yes" and (fmt.status != "yes" or acyclic_status != "yes"):
        raise InvariantViolation(
            "finite type must imply finite mutation type and mutation-acyclic"
        )
    main1 = main1_conditions(B, budget) if B.is_skew_symmetric() else None
    dynkin = dynkin_type(B)
    return Classification(
        _render(ft.status, budget),
        _render(fmt.status, budget),
        _render(acyclic_status, budget),
        B.v(),
        msearch.min_v,
        msearch.min_v_word,
        msearch.m_certified,
        main1,
        ft.witness,
        fmt.witness,
        msearch.acyclic_word,
        dynkin[0] if dynkin else None,
        budget,
    )


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of the automorphism-finiteness probe.

    An "infinite" answer carries a matrix-period whose 1st..Nth powers
    were all checked to move the seed; replaying means redoing exactly
    those checks.
    """

    status: str  # finite | infinite | unknown
    witness: tuple[int, ...] | None
    powers_checked: int
    budget: int

    def replay(self, s: LabeledSeed) -> bool:
        if self.status != "infinite":
            return True
        ident = Permutation.identity(s.rank)
        if not is_sigma_period(s.matrix, self.witness, ident).holds:
            return False
        t = s
        for _ in range(self.powers_checked):
            t = apply_sequence(t, self.witness)
            if t == s:
                return False
        return True


def _powers_avoid_seed(s: LabeledSeed, witness: tuple[int, ...], powers: int) -> bool:
    t = s
    for _ in range(powers):
        t = apply_sequence(t, witness)
        if t == s:
            return False
    return True


def _alternating_return_word(
    B: ExchangeMatrix, access: tuple[int, ...], i: int, j: int, budget: int
) -> tuple[int, ...] | None:
    """Conjugated return of the (i,j)-alternating walk started at apply(B, access).

    Inside a finite mutation class the walk must revisit a matrix; the
    enclosed segment is a period there and conjugation carries it back
    to B.
    """
    M = apply_matrix_sequence(B, access)
    seen = {M.rows: 0}
    walk: list[int] = []
    cur = M
    for step in range(2 * budget):
        k = i if step % 2 == 0 else j
        cur = cur.mutate(k)
        walk.append(k)
        pos = seen.get(cur.rows)
        if pos is not None:
            prefix = access + tuple(walk[:pos])
            segment = tuple(walk[pos:])
            return prefix + segment + inverse_sequence(prefix)
        seen[cur.rows] = step + 1
    return None


def automorphism_finiteness_probe(
    s: LabeledSeed, budget: int, powers: int = 5
) -> ProbeResult:
    """finite / infinite(witness) / unknown for the automorphism group.

    Finite type forces a finite group.  Otherwise a matrix-period none of
    whose first `powers` powers fixes the seed certifies an infinite
    group; candidates come from the bound-violation walk, the
    source/sink composite of a bipartite matrix, and a short generic
    period search, in that order.
    """
    B = s.matrix
    powers = min(powers, budget)
    ft = is_finite_type(B, budget)
    if ft.status == "yes":
        return ProbeResult("finite", None, 0, budget)
    if ft.status == "unknown":
        return ProbeResult("unknown", None, 0, budget)

    ident = Permutation.identity(B.n)
    candidates: list[tuple[int, ...]] = []
    fmt = is_finite_mutation_type(B, budget)
    if fmt.status == "yes" and ft.witness is not None:
        w = ft.witness
        word = _alternating_return_word(B, w.sequence, w.i, w.j, budget)
        if word is not None:
            candidates.append(word)
    if B.bipartition() is not None and B.is_indecomposable():
        eps = B.bipartition()
        sinks = [k for k in range(1, B.n + 1) if eps[k - 1] == -1]
        sources = [k for k in range(1, B.n + 1) if eps[k - 1] == +1]
        candidates.append(tuple(sinks + sources))
    candidates.extend(find_periods(B, ident, max_len=min(B.n + 1, 4)))

    for word in candidates:
        if not is_sigma_period(B, word, ident).holds:
            raise InvariantViolation("constructed witness is not a matrix period")
        if _powers_avoid_seed(s, word, powers):
            return ProbeResult("infinite", word, powers, budget)
    return ProbeResult("unknown", None, powers, budget)
