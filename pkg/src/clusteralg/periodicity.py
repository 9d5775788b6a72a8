"""Periodicity of matrices and seeds under mutation sequences.

A sequence i is a sigma-period of a target T when relabeling the
mutated target by sigma gives T back: permute(apply(T, i), sigma) == T.
The same predicate drives period searches, the bipartite belt, the
restriction/extension harness, and the period-set distinguisher.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import InvariantViolation, NotBipartite
from .exchange import ExchangeMatrix, Permutation, apply_matrix_sequence
from .seeds import (
    LabeledSeed,
    apply_sequence,
    inverse_sequence,
    is_essential,
    permute_seed,
    validate_sequence,
)

Target = Union[ExchangeMatrix, LabeledSeed]


@dataclass(frozen=True)
class PeriodReport:
    sequence: tuple[int, ...]
    sigma: Permutation
    kind: str  # "matrix-period" | "seed-period"
    holds: bool


def is_sigma_period(target: Target, seq: Sequence[int], sigma: Permutation) -> PeriodReport:
    """Does mutating along seq return target up to relabeling by sigma?"""
    seq = tuple(seq)
    if isinstance(target, LabeledSeed):
        validate_sequence(seq, target.rank)
        end = permute_seed(apply_sequence(target, seq), sigma)
        return PeriodReport(seq, sigma, "seed-period", end == target)
    validate_sequence(seq, target.n)
    end = apply_matrix_sequence(target, seq).permuted(sigma)
    return PeriodReport(seq, sigma, "matrix-period", end == target)


def _step(target: Target, k: int) -> Target:
    return target.mutate(k)


def _rank(target: Target) -> int:
    return target.rank if isinstance(target, LabeledSeed) else target.n


def _returns(state: Target, sigma: Permutation, original: Target) -> bool:
    if isinstance(state, LabeledSeed):
        return permute_seed(state, sigma) == original
    return state.permuted(sigma) == original


def find_periods(
    target: Target,
    sigma: Permutation,
    max_len: int,
    essential_only: bool = True,
) -> list[tuple[int, ...]]:
    """All nonempty sigma-periods of length <= max_len, sorted by (length, lex).

    The search shares mutation prefixes, so the cost is one mutation per
    visited sequence node.  The empty sequence (a period of anything
    when sigma is the identity) is never listed.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    n = _rank(target)
    found: list[tuple[int, ...]] = []

    def walk(state: Target, prefix: tuple[int, ...]):
        for k in range(1, n + 1):
            if essential_only and prefix and prefix[-1] == k:
                continue
            nxt = _step(state, k)
            seq = prefix + (k,)
            if _returns(nxt, sigma, target):
                found.append(seq)
            if len(seq) < max_len:
                walk(nxt, seq)

    if max_len > 0:
        walk(target, ())
    return sorted(found, key=lambda t: (len(t), t))


def conjugate_period(
    s: LabeledSeed,
    i: Sequence[int],
    j: Sequence[int],
    sigma: Permutation | None = None,
) -> tuple[int, ...]:
    """Transport the sigma-period i of s to a sigma-period of apply(s, j).

    The transported sequence is reverse(j) ++ i ++ sigma(j).  It is
    re-verified on the mutated seed; failure means i was not actually a
    sigma-period of s.
    """
    if sigma is None:
        sigma = Permutation.identity(s.rank)
    i = tuple(i)
    j = tuple(j)
    out = inverse_sequence(j) + i + tuple(sigma(k) for k in j)
    moved = apply_sequence(s, j)
    if not is_sigma_period(moved, out, sigma).holds:
        raise ValueError("conjugation failed: the input was not a sigma-period")
    return out


def subseed(s: LabeledSeed, I: Sequence[int]) -> LabeledSeed:
    """The seed on the index subset I: restricted cluster, principal submatrix."""
    idx = sorted(set(I))
    if not idx or idx[0] < 1 or idx[-1] > s.rank:
        raise ValueError(f"index subset out of range [1,{s.rank}]")
    cluster = [s.cluster[p - 1] for p in idx]
    sub = [[s.matrix.rows[p - 1][q - 1] for q in idx] for p in idx]
    return LabeledSeed(cluster, ExchangeMatrix(sub))


@dataclass(frozen=True)
class RestrictionExtensionReport:
    subset: tuple[int, ...]
    full_seed_period: bool
    restricted_seed_period: bool
    full_matrix_period: bool
    restricted_matrix_period: bool


def restriction_extension_check(
    full_seed: LabeledSeed,
    I: Sequence[int],
    seq: Sequence[int],
    sigma: Permutation,
) -> RestrictionExtensionReport:
    """Evaluate the sigma-period predicate on a seed and on its subseed.

    seq must stay inside I, and sigma must permute I while fixing its
    complement.  Restriction (full period implies restricted period) is
    a theorem at both levels and enforced; the extension direction is
    only reported, since for matrices it genuinely fails.
    """
    idx = sorted(set(I))
    seq = tuple(seq)
    inside = set(idx)
    if any(k not in inside for k in seq):
        raise ValueError("sequence leaves the index subset")
    for p in range(1, full_seed.rank + 1):
        if p in inside:
            if sigma(p) not in inside:
                raise ValueError("sigma does not map the subset to itself")
        elif sigma(p) != p:
            raise ValueError("sigma moves an index outside the subset")

    local = {p: i + 1 for i, p in enumerate(idx)}
    seq_local = tuple(local[k] for k in seq)
    sigma_local = Permutation([local[sigma(p)] for p in idx])

    sub = subseed(full_seed, idx)
    full_seed_p = is_sigma_period(full_seed, seq, sigma).holds
    rest_seed_p = is_sigma_period(sub, seq_local, sigma_local).holds
    full_mat_p = is_sigma_period(full_seed.matrix, seq, sigma).holds
    rest_mat_p = is_sigma_period(sub.matrix, seq_local, sigma_local).holds

    if full_seed_p and not rest_seed_p:
        raise InvariantViolation("seed period failed to restrict")
    if full_mat_p and not rest_mat_p:
        raise InvariantViolation("matrix period failed to restrict")
    return RestrictionExtensionReport(
        tuple(idx), full_seed_p, rest_seed_p, full_mat_p, rest_mat_p
    )


@dataclass
class BeltReport:
    epsilon: tuple[int, ...]
    seeds: list[LabeledSeed]  # positions 0..S of the belt
    return_period: int | None
    steps_requested: int
    mirror: bool
    dynkin_name: str | None = None
    coxeter_number: int | None = None


def bipartite_belt(seed: LabeledSeed, steps: int, mirror: bool = False) -> BeltReport:
    """Iterate the composite source/sink mutations of a bipartite seed.

    Forward belts apply the sink composite first, then alternate; the
    mirror direction starts on the source side.  Both composites negate
    the matrix, so position s carries (-1)^s B; the walk stops early at
    the first return to the starting seed.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    eps = seed.matrix.bipartition()
    if eps is None:
        raise NotBipartite("the exchange matrix has a vertex with arrows both ways")
    minus = [k for k in range(1, seed.rank + 1) if eps[k - 1] == -1]
    plus = [k for k in range(1, seed.rank + 1) if eps[k - 1] == 1]
    first, second = (plus, minus) if mirror else (minus, plus)

    base = seed.matrix
    seeds = [seed]
    cur = seed
    period = None
    for s in range(1, steps + 1):
        for k in first if s % 2 == 1 else second:
            cur = cur.mutate(k)
        expect = base if s % 2 == 0 else -base
        if cur.matrix != expect:
            raise InvariantViolation("belt composite did not negate the matrix")
        seeds.append(cur)
        if cur == seed:
            period = s
            break

    report = BeltReport(eps, seeds, period, steps, mirror)
    from .classify import dynkin_type  # cosmetic annotation; avoids an import cycle

    named = dynkin_type(seed.matrix)
    if named is not None:
        report.dynkin_name, report.coxeter_number = named
    return report


@dataclass(frozen=True)
class DistinguisherWitness:
    conjugator: tuple[int, ...]
    period: tuple[int, ...]
    period_holds_on: int  # 1 or 2: which mutated seed the period holds for


def _essential_sequences(n: int, max_len: int, include_empty: bool):
    """Essential sequences in (length, lex) order."""
    if include_empty:
        yield ()
    level: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for prefix in level:
            for k in range(1, n + 1):
                if prefix and prefix[-1] == k:
                    continue
                seq = prefix + (k,)
                nxt.append(seq)
                yield seq
        level = nxt


def period_set_distinguisher(
    s1: LabeledSeed,
    s2: LabeledSeed,
    depth: int,
    period_len: int,
) -> DistinguisherWitness | None:
    """Search for a period separating the two seeds' period sets.

    Tries conjugating sequences i up to the given depth and candidate
    periods j up to period_len: a witness is (i, j) with j a period of
    exactly one of apply(s1, i), apply(s2, i).  Identity relabeling
    only.  Returns None when the budget runs out; that does NOT certify
    the period sets are equal.

    Candidate periods are prefiltered at matrix level: a seed period is
    evaluated only on a side where the matrix period already holds, and
    a candidate with no matrix-side hit is skipped outright.
    """
    if s1.rank != s2.rank:
        raise ValueError("rank mismatch")
    n = s1.rank
    ident = Permutation.identity(n)
    for conj in _essential_sequences(n, depth, include_empty=True):
        t1 = apply_sequence(s1, conj)
        t2 = apply_sequence(s2, conj)
        hit = _search_separating_period(t1, t2, period_len, ident)
        if hit is not None:
            return DistinguisherWitness(conj, hit[0], hit[1])
    return None


_TropState = tuple[tuple[int, ...], ...]


def _tropical_start(s: LabeledSeed) -> _TropState:
    return tuple(p.min_exponents() for p in s.cluster)


def _tropical_mutate(state: _TropState, M: ExchangeMatrix, k: int) -> _TropState:
    """Image of the minimal-exponent vectors under the exchange at k.

    Minimal exponents add on products and take componentwise minima on
    cancellation-free sums; cluster variables have positive
    coefficients, so the exchange relation acts on them exactly with
    the products replaced by weighted sums and the sum by a min.
    """
    n = M.n
    plus = [0] * n
    minus = [0] * n
    for j in range(1, n + 1):
        b = M.entry(j, k)
        if b > 0:
            w = state[j - 1]
            for t in range(n):
                plus[t] += b * w[t]
        elif b < 0:
            w = state[j - 1]
            for t in range(n):
                minus[t] += (-b) * w[t]
    old = state[k - 1]
    new = tuple(min(plus[t], minus[t]) - old[t] for t in range(n))
    return state[: k - 1] + (new,) + state[k:]


def tropical_period_filter(t: LabeledSeed, seq: Sequence[int]) -> bool:
    """Whether the minimal-exponent trajectory of t returns along seq.

    False certifies that seq is not an identity-relabeling seed period
    of t, at integer-arithmetic cost; True says nothing either way and
    calls for the exact replay.
    """
    start = _tropical_start(t)
    state = start
    M = t.matrix
    for k in seq:
        state = _tropical_mutate(state, M, k)
        M = M.mutate(k)
    return state == start and M == t.matrix


def _search_separating_period(
    t1: LabeledSeed, t2: LabeledSeed, period_len: int, ident: Permutation
) -> tuple[tuple[int, ...], int] | None:
    n = t1.rank
    v1 = _tropical_start(t1)
    v2 = _tropical_start(t2)

    # A seed period must restore the minimal-exponent vectors, so the
    # exact Laurent replay runs only when the cheap tropical trajectory
    # returns; deep walks with exploding variables are skipped outright.
    def walk(m1, m2, w1: _TropState, w2: _TropState, prefix: tuple[int, ...]):
        for k in range(1, n + 1):
            if prefix and prefix[-1] == k:
                continue
            n1 = m1.mutate(k)
            n2 = m2.mutate(k)
            u1 = _tropical_mutate(w1, m1, k)
            u2 = _tropical_mutate(w2, m2, k)
            seq = prefix + (k,)
            hit1 = n1 == t1.matrix
            hit2 = n2 == t2.matrix
            if hit1 or hit2:
                p1 = hit1 and u1 == v1 and is_sigma_period(t1, seq, ident).holds
                p2 = hit2 and u2 == v2 and is_sigma_period(t2, seq, ident).holds
                if p1 != p2:
                    return seq, 1 if p1 else 2
            if len(seq) < period_len:
                deeper = walk(n1, n2, u1, u2, seq)
                if deeper is not None:
                    return deeper
        return None

    return walk(t1.matrix, t2.matrix, v1, v2, ())
