"""Yang-Baxter couples: a unitary representation pi of a finite group on
W (x) V paired with a certified R-matrix on V (x) V, subject to the
extended reflection equation

    R1 pi(t) R1 pi(t') = pi(t') R1 pi(t) R1   for all t, t',

with R1 = 1_W (x) R and pi(t) extended by the identity on the new factor.
A certified couple induces a representation of the wreath product on
truncated spaces W (x) V^(x n) and, through the normalized trace, an
extremal character evaluated here exactly.

Character values are computed at the truncation level n = max(support, 1);
they are independent of any larger level because the operators act as the
identity on appended factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclo import CycloScalar
from .errors import (
    DimensionMismatchError,
    ExtendedREFailsError,
    GroupMismatchError,
    NotHomomorphismError,
    NotUnitaryError,
    SupportExceedsLevelError,
    SupportsNotDisjointError,
)
from .groups import FiniteGroup
from .matrix import ExactMatrix, SparseOperator, amplify
from .rmatrix import RMatrix, yb_rep_perm
from .wreath import WreathElement


class YangBaxterCouple:
    """A certified (pi, R) pair over a finite group."""

    __slots__ = ("group", "r", "pi", "w", "_op_cache")

    def __init__(self, group: FiniteGroup, r: RMatrix, pi: tuple[ExactMatrix, ...],
                 w: int, _certified: bool = False):
        if not _certified:
            raise TypeError("use certify_couple() to construct a couple")
        self.group = group
        self.r = r
        self.pi = pi
        self.w = w
        self._op_cache: dict = {}

    @property
    def d(self) -> int:
        return self.r.d

    def layout(self, n: int) -> tuple[int, ...]:
        return (self.w,) + (self.d,) * n

    def _r_at(self, i: int, n: int) -> SparseOperator:
        """1_W (x) R acting on the V-slots (i, i+1) at level n."""
        key = ("r", i, n)
        op = self._op_cache.get(key)
        if op is None:
            op = amplify(self.r.m, self.layout(n), i, i + 2)
            self._op_cache[key] = op
        return op

    def _pi_at_origin(self, t: int, n: int) -> SparseOperator:
        """pi(t) on W (x) V_1, identity on the remaining factors."""
        key = ("pi", t, n)
        op = self._op_cache.get(key)
        if op is None:
            op = amplify(self.pi[t], self.layout(n), 0, 2)
            self._op_cache[key] = op
        return op

    def __repr__(self) -> str:
        return f"YangBaxterCouple({self.group.name}, d={self.d}, w={self.w})"


def certify_couple(group: FiniteGroup, r: RMatrix, pi_images, w: int) -> YangBaxterCouple:
    """Check that pi is a unitary representation on W (x) V and that the
    extended reflection equation holds over every pair of group elements."""
    pi = tuple(pi_images)
    if len(pi) != group.order:
        raise NotHomomorphismError(
            f"{len(pi)} pi images supplied for a group of order {group.order}")
    wd = w * r.d
    for t, m in enumerate(pi):
        if m.rows != wd or m.cols != wd:
            raise DimensionMismatchError(
                f"pi image of element {t} is {m.rows}x{m.cols}, expected {wd}x{wd}")
        if not (m.dagger() * m).is_identity():
            raise NotUnitaryError(f"pi image of element {t} is not unitary")
    for a in range(group.order):
        for b in range(group.order):
            if pi[a] * pi[b] != pi[group.mul(a, b)]:
                raise NotHomomorphismError(f"pi({a}) pi({b}) != pi({a}*{b})")
    dims = (w, r.d, r.d)
    r1 = amplify(r.m, dims, 1, 3)
    pi_amp = [amplify(m, dims, 0, 2) for m in pi]
    for t in range(group.order):
        for u in range(group.order):
            lhs = r1 * pi_amp[t] * r1 * pi_amp[u]
            rhs = pi_amp[u] * r1 * pi_amp[t] * r1
            if lhs != rhs:
                raise ExtendedREFailsError(
                    f"extended reflection equation fails on the pair ({t},{u})")
    return YangBaxterCouple(group, r, pi, w, _certified=True)


def rep_element(c: YangBaxterCouple, g: WreathElement, n: int) -> SparseOperator:
    """The image of a wreath element on W (x) V^(x n).

    The color part is the product over colored positions i of the conjugate
    of pi(t_i) into slot i by R_(i-1) ... R_1; the permutation part is the
    Yang-Baxter image of the permutation, tensored with the identity on W.
    """
    if c.group != g.group:
        raise GroupMismatchError("element is over a different group than the couple")
    if g.max_support() > n:
        raise SupportExceedsLevelError(f"support reaches {g.max_support()}, level is {n}")
    total: SparseOperator | None = None
    if g.colors:
        left: SparseOperator | None = None    # R_(i-1) ... R_1
        right: SparseOperator | None = None   # R_1 ... R_(i-1)
        depth = 0
        for i in sorted(g.colors):
            while depth < i - 1:
                depth += 1
                r_op = c._r_at(depth, n)
                left = r_op if left is None else r_op * left
                right = r_op if right is None else right * r_op
            factor = c._pi_at_origin(g.colors[i], n)
            if left is not None:
                factor = left * factor * right
            total = factor if total is None else total * factor
    if not g.perm.is_identity():
        perm_op = amplified_perm(c, g.perm, n)
        total = perm_op if total is None else total * perm_op
    if total is None:
        return SparseOperator.identity(c.w * c.d ** n)
    return total


def amplified_perm(c: YangBaxterCouple, perm, n: int) -> SparseOperator:
    """1_W (x) (Yang-Baxter image of the permutation on V^(x n))."""
    inner = yb_rep_perm(c.r, perm, n)
    if c.w == 1:
        return inner
    rows = []
    for b in range(c.w):
        base = b * inner.dim
        for row in inner.rows:
            rows.append([(base + j, v) for j, v in row])
    return SparseOperator(c.w * inner.dim, rows)


def character(c: YangBaxterCouple, g: WreathElement) -> CycloScalar:
    """Normalized trace of the image of g, evaluated at the minimal level."""
    n = max(g.max_support(), 1)
    op = rep_element(c, g, n)
    return op.trace() / (c.w * c.d ** n)


@dataclass
class ExtremalityReport:
    pairs_checked: int
    failures: list[tuple[WreathElement, WreathElement, CycloScalar, CycloScalar]]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_extremality(c: YangBaxterCouple, sample_pairs) -> ExtremalityReport:
    """Exact multiplicativity check over disjoint-support pairs."""
    failures = []
    count = 0
    for g, h in sample_pairs:
        if set(g.support()) & set(h.support()):
            raise SupportsNotDisjointError(
                f"supports {g.support()} and {h.support()} overlap")
        count += 1
        lhs = character(c, g * h)
        rhs = character(c, g) * character(c, h)
        if lhs != rhs:
            failures.append((g, h, lhs, rhs))
    return ExtremalityReport(count, failures)


@dataclass
class PsdReport:
    size: int
    hermitian: bool
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return self.hermitian and self.min_eigenvalue >= -1e-9


def gram_psd_check(c: YangBaxterCouple, elements) -> PsdReport:
    """Gram matrix of character values: exact Hermitian check, then a
    float embedding and an eigenvalue bound."""
    elems = list(elements)
    if len(elems) > 12:
        raise ValueError("gram check is limited to 12 elements")
    k = len(elems)
    inverses = [g.inverse() for g in elems]
    gram = [[character(c, inverses[j] * elems[i]) for j in range(k)] for i in range(k)]
    hermitian = all(gram[i][j] == gram[j][i].conj() for i in range(k) for j in range(k))
    embedded = np.array([[gram[i][j].to_complex() for j in range(k)] for i in range(k)])
    eigs = np.linalg.eigvalsh((embedded + embedded.conj().T) / 2)
    return PsdReport(k, hermitian, float(eigs.min()) if k else 0.0)
