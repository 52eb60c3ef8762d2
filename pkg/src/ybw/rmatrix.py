"""Involutive R-matrices and their Thoma parameters.

An R-matrix here is an involutive solution of the Yang-Baxter braid
relation on V (x) V, certified by exact checks.  The module provides the
box-sum composition (summands act on their own diagonal blocks, the flip
acts on mixed tensors), normal forms realizing prescribed Thoma parameters,
the induced representations of finite permutations on V^(x n), and exact
extraction of Thoma parameters from cycle traces.

Cycle traces are evaluated by contracting the staircase product
R_1 R_2 ... R_(n-1) down to a transfer operator on V (x) V, so the cost is
polynomial in dim V instead of exponential in n.  The literal product of
amplified operators gives the same values and is kept as the test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

from .cyclo import CycloScalar, ONE, MINUS_ONE
from .errors import (
    AmbiguousMatchError,
    DimensionMismatchError,
    NoMatchError,
    NonIntegralBlocksError,
    NotInvolutiveError,
    NotUnitaryError,
    SupportExceedsLevelError,
    YBEFailsError,
)
from .matrix import ExactMatrix, SparseOperator, amplify
from .perms import FinitePermutation, adjacent_word


@dataclass(frozen=True)
class ThomaParams:
    """Two non-increasing positive rational weight lists with total mass <= 1."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        for name, seq in (("alpha", self.alpha), ("beta", self.beta)):
            for i, v in enumerate(seq):
                if v <= 0:
                    raise ValueError(f"{name}[{i}] = {v} is not positive")
                if i and seq[i - 1] < v:
                    raise ValueError(f"{name} is not non-increasing at index {i}")
        if sum(self.alpha) + sum(self.beta) > 1:
            raise ValueError("total mass exceeds 1")

    @classmethod
    def make(cls, alpha, beta) -> ThomaParams:
        return cls(tuple(Fraction(a) for a in alpha), tuple(Fraction(b) for b in beta))

    @property
    def deficit(self) -> Fraction:
        return 1 - sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))

    def is_yb_type(self) -> bool:
        """Full mass on finitely many rational weights, so some d clears denominators."""
        return self.deficit == 0

    def minimal_denominator(self) -> int:
        return lcm(1, *(v.denominator for v in self.alpha + self.beta))

    def power_sum(self, n: int) -> Fraction:
        """sum(alpha_i^n) + (-1)^(n-1) * sum(beta_i^n)."""
        sign = 1 if n % 2 == 1 else -1
        return (sum((a ** n for a in self.alpha), Fraction(0))
                + sign * sum((b ** n for b in self.beta), Fraction(0)))

    def __str__(self) -> str:
        fa = ", ".join(str(a) for a in self.alpha)
        fb = ", ".join(str(b) for b in self.beta)
        return f"alpha=[{fa}] beta=[{fb}]"


class RMatrix:
    """A certified involutive Yang-Baxter solution on V (x) V, dim V = d."""

    __slots__ = ("d", "m", "_amp_cache", "_cycle_traces")

    def __init__(self, d: int, m: ExactMatrix, _certified: bool = False):
        if not _certified:
            raise TypeError("use verify_rmatrix() to construct a certified RMatrix")
        self.d = d
        self.m = m
        self._amp_cache: dict[tuple[int, int], SparseOperator] = {}
        self._cycle_traces: list[CycloScalar] = []

    def amplified(self, i: int, n: int) -> SparseOperator:
        """R acting on tensor slots (i, i+1) of V^(x n), 1-based."""
        key = (i, n)
        op = self._amp_cache.get(key)
        if op is None:
            op = amplify(self.m, (self.d,) * n, i - 1, i + 1)
            self._amp_cache[key] = op
        return op

    def __repr__(self) -> str:
        return f"RMatrix(d={self.d})"


def verify_rmatrix(m: ExactMatrix, d: int) -> RMatrix:
    """Certify involutivity, unitarity and the braid relation, exactly."""
    if m.rows != d * d or m.cols != d * d:
        raise DimensionMismatchError(f"expected a {d * d}x{d * d} matrix, got {m.rows}x{m.cols}")
    sq = m * m
    for i in range(d * d):
        for j in range(d * d):
            v = sq.data[i][j]
            if (i == j and not v.is_one()) or (i != j and not v.is_zero()):
                raise NotInvolutiveError(
                    f"R^2 is not the identity: image of basis vector {j} has a wrong "
                    f"coefficient at {i}")
    ud = m.dagger() * m
    if not ud.is_identity():
        raise NotUnitaryError("R is not unitary")
    dims = (d, d, d)
    r12 = amplify(m, dims, 0, 2)
    r23 = amplify(m, dims, 1, 3)
    lhs = r12 * r23 * r12
    rhs = r23 * r12 * r23
    if lhs != rhs:
        for idx, (ra, rb) in enumerate(zip(lhs.rows, rhs.rows)):
            if ra != rb:
                raise YBEFailsError(
                    f"braid relation fails: row {idx} of R12 R23 R12 and R23 R12 R23 differ")
    return RMatrix(d, m, _certified=True)


def boxplus(x: RMatrix, y: RMatrix) -> RMatrix:
    """Box-sum: x on V (x) V, y on W (x) W, the flip on mixed tensors."""
    d1, d2 = x.d, y.d
    big = d1 + d2
    out = ExactMatrix.zeros(big * big, big * big)

    def v_index(u, v):
        return u * big + v

    for a in range(d1 * d1):
        arow = x.m.data[a]
        u_out, v_out = divmod(a, d1)
        r = v_index(u_out, v_out)
        for b in range(d1 * d1):
            val = arow[b]
            if not val.is_zero():
                u_in, v_in = divmod(b, d1)
                out.data[r][v_index(u_in, v_in)] = val
    # sources and targets of y live in the W block, offset by d1
    for a in range(d2 * d2):
        arow = y.m.data[a]
        u_out, v_out = divmod(a, d2)
        r = v_index(u_out + d1, v_out + d1)
        for b in range(d2 * d2):
            val = arow[b]
            if not val.is_zero():
                u_in, v_in = divmod(b, d2)
                out.data[r][v_index(u_in + d1, v_in + d1)] = val
    for u in range(d1):
        for v in range(d1, big):
            out.data[v_index(v, u)][v_index(u, v)] = ONE
            out.data[v_index(u, v)][v_index(v, u)] = ONE
    return verify_rmatrix(out, big)


def scalar_rmatrix(size: int, sign: int) -> RMatrix:
    """(+1) or (-1) times the identity on a size-dim space, as an R-matrix."""
    m = ExactMatrix.identity(size * size)
    if sign < 0:
        m = m.scaled(MINUS_ONE)
    return verify_rmatrix(m, size)


def normal_form_from_thoma(t: ThomaParams, d: int) -> RMatrix:
    """Box-sum of +identity blocks of sizes d*alpha_i and -identity blocks d*beta_i."""
    blocks: list[tuple[int, int]] = []
    offenders = []
    for v in t.alpha:
        size = v * d
        if size.denominator != 1:
            offenders.append(str(v))
        else:
            blocks.append((int(size), +1))
    for v in t.beta:
        size = v * d
        if size.denominator != 1:
            offenders.append(str(v))
        else:
            blocks.append((int(size), -1))
    if offenders:
        raise NonIntegralBlocksError(
            f"entries {', '.join(offenders)} do not give integral blocks at d={d}")
    if t.deficit != 0 or sum(size for size, _ in blocks) != d:
        raise NonIntegralBlocksError(
            f"parameters carry total mass {1 - t.deficit}, cannot fill dimension {d}")
    parts = [scalar_rmatrix(size, sign) for size, sign in blocks]
    return reduce(boxplus, parts)


def yb_rep_perm(r: RMatrix, sigma: FinitePermutation, n: int) -> SparseOperator:
    """The image of a finite permutation on V^(x n)."""
    if sigma.max_support() > n:
        raise SupportExceedsLevelError(
            f"permutation moves {sigma.max_support()} but the level is {n}")
    word = adjacent_word(sigma, n)
    if not word:
        return SparseOperator.identity(r.d ** n)
    op = r.amplified(word[0], n)
    for i in word[1:]:
        op = op * r.amplified(i, n)
    return op


def _transfer_data(r: RMatrix):
    """Start vector, transfer columns and end vector for cycle traces."""
    d = r.d
    m = r.m.data
    zero = CycloScalar.from_rational(0)
    start = [zero] * (d * d)
    end = [zero] * (d * d)
    for i in range(d):
        for mm in range(d):
            acc_s = zero
            acc_e = zero
            for x in range(d):
                acc_s = acc_s + m[x * d + i][x * d + mm]
                acc_e = acc_e + m[mm * d + x][i * d + x]
            start[i * d + mm] = acc_s
            end[i * d + mm] = acc_e
    cols: list[list[tuple[int, CycloScalar]]] = [[] for _ in range(d * d)]
    for i1 in range(d):
        for m1 in range(d):
            col = cols[i1 * d + m1]
            for i2 in range(d):
                row = m[m1 * d + i2]
                for m2 in range(d):
                    v = row[i1 * d + m2]
                    if not v.is_zero():
                        col.append((i2 * d + m2, v))
    return start, cols, end


def cycle_trace(r: RMatrix, n: int) -> CycloScalar:
    """Trace of R_1 R_2 ... R_(n-1) on V^(x n), by transfer contraction."""
    traces = cycle_trace_sequence(r, n)
    return traces[n - 2]


def cycle_trace_sequence(r: RMatrix, n_max: int) -> list[CycloScalar]:
    """Traces of the cycle operators for n = 2 .. n_max (index n-2)."""
    cached = r._cycle_traces
    if len(cached) >= n_max - 1:
        return cached[: n_max - 1]
    start, cols, end = _transfer_data(r)
    zero = CycloScalar.from_rational(0)
    out: list[CycloScalar] = [r.m.trace()]
    vec = start
    for _ in range(3, n_max + 1):
        acc = zero
        for v, e in zip(vec, end):
            if not v.is_zero() and not e.is_zero():
                acc = acc + v * e
        out.append(acc)
        nxt = [zero] * len(vec)
        for src, v in enumerate(vec):
            if not v.is_zero():
                for dst, w in cols[src]:
                    nxt[dst] = nxt[dst] + v * w
        vec = nxt
    r._cycle_traces = out
    return out[: n_max - 1]


def char_cycle(r: RMatrix, n: int) -> Fraction:
    """Normalized character on the n-cycle: trace of the cycle image over d^n."""
    if n < 1:
        raise ValueError("cycle length must be >= 1")
    if n == 1:
        return Fraction(1)
    tr = cycle_trace(r, n)
    if not tr.is_rational():
        raise NoMatchError(f"cycle trace {tr} is not rational; R is not a valid R-matrix")
    return tr.as_rational() / Fraction(r.d) ** n


def partitions(k: int) -> list[tuple[int, ...]]:
    """All non-increasing positive integer tuples summing to k."""
    if k == 0:
        return [()]
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(k, k, [])
    return out


def partition_pairs(d: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs of partitions (lam, mu) with |lam| + |mu| = d."""
    out = []
    for k in range(d + 1):
        for lam in partitions(k):
            for mu in partitions(d - k):
                out.append((lam, mu))
    return out


def extract_thoma(r: RMatrix) -> ThomaParams:
    """Recover the unique Thoma parameters of a certified R-matrix.

    The candidate set is finite: pairs of partitions of d, scaled by 1/d.
    Cycle traces for n = 2 .. 2d+1 are matched against the signed power
    sums; no match or more than one match indicates a certification bug.
    """
    d = r.d
    n_max = 2 * d + 1
    traces = cycle_trace_sequence(r, n_max)
    values = []
    for n, tr in zip(range(2, n_max + 1), traces):
        if not tr.is_rational():
            raise NoMatchError(f"trace of the {n}-cycle image is not rational")
        values.append(tr.as_rational() / Fraction(d) ** n)
    matches = []
    for lam, mu in partition_pairs(d):
        cand = ThomaParams.make([Fraction(x, d) for x in lam], [Fraction(x, d) for x in mu])
        if all(cand.power_sum(n) == v for n, v in zip(range(2, n_max + 1), values)):
            matches.append(cand)
    if not matches:
        raise NoMatchError(f"no partition pair of d={d} matches the cycle traces {values}")
    if len(matches) > 1:
        raise AmbiguousMatchError(
            f"candidates {matches[0]} and {matches[1]} agree on all cycle traces up to n={n_max}")
    return matches[0]


def merge_thoma(x: ThomaParams, dx: int, y: ThomaParams, dy: int) -> ThomaParams:
    """Weighted merge of parameters under the box-sum of R-matrices."""
    total = dx + dy
    wx, wy = Fraction(dx, total), Fraction(dy, total)
    alpha = sorted([wx * a for a in x.alpha] + [wy * a for a in y.alpha], reverse=True)
    beta = sorted([wx * b for b in x.beta] + [wy * b for b in y.beta], reverse=True)
    return ThomaParams(tuple(alpha), tuple(beta))


def normal_forms_of_dim(d: int) -> list[tuple[ThomaParams, RMatrix]]:
    """Every normal-form R-matrix of dimension d, one per partition pair."""
    out = []
    for lam, mu in partition_pairs(d):
        params = ThomaParams.make([Fraction(x, d) for x in lam], [Fraction(x, d) for x in mu])
        out.append((params, normal_form_from_thoma(params, d)))
    return out
