"""Quantum code constructions from quaternary linear codes.

Every construction funnels through the nearly-self-orthogonal extension: a
code C of length n gains e = dim(C^perp_h) - dim(C intersect C^perp_h) new
coordinates, one per orthonormalized complement vector of the dual, and the
result is Hermitian dual containing.  A dual-containing [n', k'] code yields
an [[n', 2k' - n']] stabilizer code whose distance is the minimum weight
outside the dual (or the code distance when 2k' = n').

Distance reporting is bound-honest: exact values appear only when the
enumeration budget allowed computing them; otherwise lower bounds carry the
provenance of the theorem or budget that produced them.  k = 0 outputs are
Hermitian self-dual, hence even-weight, and lower bounds are lifted to even.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from . import distance as dist
from . import gf4, linalg
from .cyclic import CyclicCode, DefiningSet, dual_defining_set, is_dual_containing
from .distance import (
    BUDGET,
    LITERATURE,
    PARITY,
    SQUARE_ROOT,
    DistanceBound,
)
from .duadic import DuadicPair, Splitting, duadic_from_splitting
from .errors import (
    BudgetExceededError,
    InputError,
    InvariantError,
    NotApplicableError,
)
from .extfield import mult_order

PURE_YES = "yes"
PURE_NO = "no"
PURE_UNKNOWN = "unknown"


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: DistanceBound
    pure: str
    trace: tuple[str, ...]

    def __post_init__(self):
        if not (0 <= self.k <= self.n):
            raise InvariantError(f"invalid parameters [[{self.n},{self.k}]]")
        if self.pure not in (PURE_YES, PURE_NO, PURE_UNKNOWN):
            raise InvariantError(f"invalid purity flag {self.pure!r}")

    def to_json(self) -> dict:
        return {
            "n": int(self.n),
            "k": int(self.k),
            "d_lo": int(self.d.lo),
            "d_hi": None if self.d.hi is None else int(self.d.hi),
            "pure": self.pure,
            "trace": list(self.trace),
        }

    def params_str(self) -> str:
        if self.d.hi == self.d.lo:
            dstr = str(self.d.lo)
        elif self.d.hi is None:
            dstr = f">={self.d.lo}"
        else:
            dstr = f"{self.d.lo}-{self.d.hi}"
        return f"[[{self.n},{self.k},{dstr}]]"


@dataclass(frozen=True)
class SelfDualCode:
    """Hermitian self-dual code emitted by the k = 0 constructions."""

    gen: np.ndarray

    def __post_init__(self):
        m, length = self.gen.shape
        if length != 2 * m:
            raise InvariantError(f"self-dual shape must be (m, 2m), got {self.gen.shape}")
        if not linalg.is_hermitian_self_orthogonal(self.gen):
            raise InvariantError("generator matrix fails the Gram test")


def _even_lift(b: DistanceBound) -> DistanceBound:
    """Round an odd lower bound up to even; valid for even-weight codes."""
    if b.lo % 2 == 0:
        return b
    if b.hi is not None and b.hi == b.lo:
        raise InvariantError(f"exact odd distance {b.lo} contradicts an even-weight certificate")
    return DistanceBound(lo=b.lo + 1, hi=b.hi, lo_src=PARITY, hi_src=b.hi_src, work=b.work)


def _ceil_sqrt(n: int) -> int:
    return math.isqrt(n - 1) + 1 if n > 1 else 1


def _sqrt_floor_lift(b: DistanceBound, lo_min: int, src: str) -> DistanceBound:
    if b.lo >= lo_min:
        return b
    if b.hi is not None and b.hi < lo_min:
        raise InvariantError(f"bound {b} contradicts lower limit {lo_min}")
    return DistanceBound(lo=lo_min, hi=b.hi, lo_src=src, hi_src=b.hi_src, work=b.work)


# ---------------------------------------------------------------------------
# Hermitian Gram-Schmidt and the extension
# ---------------------------------------------------------------------------

def _hermitian_orthonormalize(rows: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the span, assuming the form is nondegenerate on it.

    Norms over GF(4) lie in GF(2), so a norm-1 vector always exists among
    the basis vectors or the combinations f + lambda g with <f,g> != 0, and
    scaling never changes a norm.
    """
    remaining = [row.copy() for row in rows]
    out = []
    while remaining:
        pick = None
        for v in remaining:
            if gf4.hermitian_inner(v, v) == 1:
                pick = v
                break
        if pick is None:
            found = False
            for i in range(len(remaining)):
                for j in range(len(remaining)):
                    if i == j:
                        continue
                    a = gf4.hermitian_inner(remaining[i], remaining[j])
                    if a == 0:
                        continue
                    for lam in (1, 2, 3):
                        cand = remaining[i] ^ gf4.scalar_mul(lam, remaining[j])
                        if gf4.hermitian_inner(cand, cand) == 1:
                            pick = cand
                            remaining[i] = cand
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if pick is None:
                raise InvariantError("no unit-norm vector found; form is degenerate")
        remaining = [v for v in remaining if v is not pick]
        # orthogonalize the rest against pick: f -> f + <f, pick> * pick
        remaining = [v ^ gf4.scalar_mul(gf4.hermitian_inner(v, pick), pick) for v in remaining]
        out.append(pick)
    return np.array(out, dtype=np.uint8) if out else np.zeros((0, rows.shape[1]), dtype=np.uint8)


@dataclass(frozen=True)
class Extension:
    original: np.ndarray        # row basis of the input code
    extended: np.ndarray        # generators of the length n+e dual-containing code
    extended_dual: np.ndarray   # generators of its Hermitian dual (subset of extended)
    e: int

    @property
    def n(self) -> int:
        return self.extended.shape[1]

    @property
    def k(self) -> int:
        return self.extended.shape[0]


def _as_matrix(code) -> np.ndarray:
    if isinstance(code, CyclicCode):
        return code.gen_matrix
    return np.atleast_2d(np.asarray(code, dtype=np.uint8))


def extend_nearly_self_orthogonal(
    code, budget: int | None = None
) -> tuple[Extension, QuantumParams]:
    """Extend a code to a Hermitian dual-containing one and read off the
    stabilizer parameters [[n+e, 2k-n+e]] with the distance bound
    d >= min(d(C), d(C + C^perp_h) + 1)."""
    budget = dist.default_budget() if budget is None else budget
    g = linalg.row_basis(_as_matrix(code))
    k, n = g.shape
    if k == 0:
        raise InputError("cannot extend the zero code")
    dual = linalg.hermitian_dual_space(g)
    radical = linalg.subspace_intersection(g, dual)
    e = dual.shape[0] - radical.shape[0]
    trace = [f"extension: input [{n},{k}], e={e}"]
    if e == 0:
        extended = g
        extended_dual = dual if dual.size else np.zeros((0, n), dtype=np.uint8)
    else:
        comp = linalg.complement_basis(radical, dual)
        ortho = _hermitian_orthonormalize(comp)
        if ortho.shape[0] != e:
            raise InvariantError("orthonormal complement has wrong dimension")
        extended = np.zeros((k + e, n + e), dtype=np.uint8)
        extended[:k, :n] = g
        for i, f in enumerate(ortho):
            extended[k + i, :n] = f
            extended[k + i, n + i] = 1
        extended_dual = np.zeros((radical.shape[0] + e, n + e), dtype=np.uint8)
        extended_dual[: radical.shape[0], :n] = radical
        for i, f in enumerate(ortho):
            extended_dual[radical.shape[0] + i, :n] = f
            extended_dual[radical.shape[0] + i, n + i] = 1
    # direct Gram certificate of dual containment
    for row in extended_dual:
        for other in extended:
            if gf4.hermitian_inner(row, other) != 0:
                raise InvariantError("extended code failed the dual-containment Gram test")
    if linalg.rank(extended) != k + e:
        raise InvariantError("extended generators are dependent")

    kq = 2 * k - n + e
    d_c = dist.min_distance_exact(g if not isinstance(code, CyclicCode) else code, budget=budget)
    sum_space = linalg.subspace_sum(g, dual)
    if sum_space.shape[0] == n:
        d_sum = DistanceBound.exact_value(1)
    else:
        d_sum = dist.min_distance_exact(sum_space, budget=budget)
    if d_c.lo <= d_sum.lo + 1:
        lo, lo_src = d_c.lo, d_c.lo_src
    else:
        lo, lo_src = d_sum.lo + 1, d_sum.lo_src
    trace.append(
        f"bound: d >= min(d(C) >= {d_c.lo}, d(C + dual) + 1 >= {d_sum.lo + 1})"
    )
    bound = DistanceBound(lo=lo, hi=None, lo_src=lo_src, hi_src=BUDGET,
                          work=d_c.work + d_sum.work)
    if kq == 0:
        bound = _even_lift(bound)
        if bound.lo != lo:
            trace.append(f"even-weight lift to {bound.lo}")
    params = QuantumParams(
        n=n + e, k=kq, d=bound,
        pure=PURE_YES if kq == 0 else PURE_UNKNOWN,
        trace=tuple(trace),
    )
    ext = Extension(original=g, extended=extended, extended_dual=extended_dual, e=e)
    return ext, params


# ---------------------------------------------------------------------------
# primary constructions
# ---------------------------------------------------------------------------

def quantum_from_dual_containing(code, budget: int | None = None) -> QuantumParams:
    """[[n, 2k-n, d']] from a dual-containing [n, k] code; d' is the minimum
    weight outside the dual, or d(C) for a self-dual input."""
    budget = dist.default_budget() if budget is None else budget
    g = linalg.row_basis(_as_matrix(code))
    k, n = g.shape
    if isinstance(code, CyclicCode):
        contained = code.is_dual_containing()
    else:
        contained = linalg.is_subspace(linalg.hermitian_dual_space(g), g)
    if not contained:
        raise NotApplicableError(
            "code is not Hermitian dual containing",
            failed=["C^perp_h <= C"],
        )
    kq = 2 * k - n
    trace = [f"dual-containing [{n},{k}] -> [[{n},{kq}]]"]
    if kq == 0:
        d = dist.min_distance_exact(code if isinstance(code, CyclicCode) else g, budget=budget)
        if d.exact and d.lo % 2:
            raise InvariantError("self-dual code with odd minimum distance")
        d = _even_lift(d) if not d.exact else d
        trace.append("self-dual: d' = d(C), weights all even")
        return QuantumParams(n=n, k=0, d=d, pure=PURE_YES, trace=tuple(trace))
    dual = linalg.hermitian_dual_space(g)
    try:
        d_prime, work = dist.min_weight_difference(g, dual, budget=budget)
        d_code = dist.min_distance_exact(code if isinstance(code, CyclicCode) else g, budget=budget)
        pure = PURE_YES if (d_code.exact and d_code.lo == d_prime) else (
            PURE_NO if d_code.exact else PURE_UNKNOWN
        )
        trace.append(f"d' = min weight in C minus dual = {d_prime}")
        return QuantumParams(
            n=n, k=kq,
            d=DistanceBound.exact_value(d_prime, work=work),
            pure=pure, trace=tuple(trace),
        )
    except BudgetExceededError:
        d_code = dist.min_distance_exact(code if isinstance(code, CyclicCode) else g, budget=budget)
        trace.append(f"budget-limited: d' >= d(C) >= {d_code.lo}")
        return QuantumParams(
            n=n, k=kq,
            d=DistanceBound(lo=d_code.lo, hi=None, lo_src=d_code.lo_src,
                            hi_src=BUDGET, work=d_code.work),
            pure=PURE_UNKNOWN, trace=tuple(trace),
        )


def _mu2_splitting_of(code: CyclicCode) -> Splitting:
    n = code.n
    s1 = code.defining_set.members
    s2 = frozenset((-2 * t) % n for t in s1)
    if 0 in s1 or (s1 & s2) or (s1 | s2 | {0}) != frozenset(range(n)):
        raise NotApplicableError(
            "code is not odd-like duadic with multiplier mu_-2",
            failed=["-2*S1 must be the complementary half S2"],
        )
    from .duadic import find_splittings

    for s in find_splittings(n, b=-2):
        if s.s1.members in (s1, s2) or s.s2.members in (s1, s2):
            return s
    raise InvariantError("splitting reconstruction failed")


def extended_duadic_quantum(
    odd_like: CyclicCode | DuadicPair, budget: int | None = None
) -> tuple[QuantumParams, SelfDualCode]:
    """[[n+1, 0, d]] from an odd-like duadic code with multiplier mu_-2.

    The even-like subcode extends by one coordinate (e = 1).  With an exact
    ingredient pass the distance is exact: the extended words are the
    even-like words padded by 0 and the odd-like cosets padded by a unit, so
    d = min(d(even), d_o + 1).
    """
    budget = dist.default_budget() if budget is None else budget
    if isinstance(odd_like, DuadicPair):
        pair = odd_like
        splitting = pair.splitting
        side = 1
    else:
        splitting = _mu2_splitting_of(odd_like)
        side = 1 if odd_like.defining_set.members == splitting.s1.members else 2
        pair = duadic_from_splitting(splitting)
    if not splitting.has_multiplier(-2):
        raise NotApplicableError(
            "splitting does not admit the multiplier mu_-2",
            failed=["mu_-2 witness"],
        )
    n = splitting.n
    even = pair.even1 if side == 1 else pair.even2
    odd = pair.odd1 if side == 1 else pair.odd2
    ext, _ = extend_nearly_self_orthogonal(even, budget=0)
    if ext.e != 1:
        raise InvariantError(f"duadic extension produced e = {ext.e}, expected 1")
    sd = SelfDualCode(gen=ext.extended)
    trace = [
        f"odd-like duadic n={n} leaders={list(odd.defining_set.leaders)} with mu_-2",
        "even-like subcode extended by one unit coordinate (e=1)",
    ]
    try:
        dd = dist.duadic_distances(splitting, side=side, budget=budget)
        d_exact = min(dd.d_even, dd.d_min_odd_coset + 1)
        if d_exact % 2:
            raise InvariantError("extended duadic distance must be even")
        trace.append(
            f"d = min(d(even) = {dd.d_even}, d_o + 1 = {dd.d_min_odd_coset + 1}) = {d_exact} [exact]"
        )
        bound = DistanceBound.exact_value(d_exact, work=dd.work)
    except BudgetExceededError:
        d_even_b = dist.min_distance_exact(even, budget=budget)
        d_odd_b = dist.min_distance_exact(odd, budget=budget)
        lo = min(d_even_b.lo, d_odd_b.lo + 1)
        lo_src = d_even_b.lo_src if d_even_b.lo <= d_odd_b.lo + 1 else d_odd_b.lo_src
        # even-like words pad by zero into the extension, so d <= d(even)
        bound = DistanceBound(lo=lo, hi=d_even_b.hi, lo_src=lo_src,
                              hi_src=d_even_b.hi_src if d_even_b.hi is not None else BUDGET,
                              work=d_even_b.work + d_odd_b.work)
        trace.append(f"budget-limited bound: d >= min({d_even_b.lo}, {d_odd_b.lo}+1)")
        bound = _even_lift(bound)
        if d_odd_b.exact and d_odd_b.lo % 2 == 1:
            lo_min = _ceil_sqrt(n) + 1
            lifted = _sqrt_floor_lift(bound, lo_min, SQUARE_ROOT)
            if lifted.lo != bound.lo:
                trace.append(f"square-root lift: d >= ceil(sqrt(n)) + 1 = {lo_min}")
            bound = _even_lift(lifted)
            if splitting.has_multiplier(-1):
                d_target = bound.lo
                while d_target * d_target - 3 * (d_target - 1) < n:
                    d_target += 2
                if d_target != bound.lo:
                    trace.append(f"mu_-1 strengthening: d^2 - 3(d-1) >= n gives d >= {d_target}")
                    bound = _sqrt_floor_lift(bound, d_target, SQUARE_ROOT)
    params = QuantumParams(n=n + 1, k=0, d=bound, pure=PURE_YES, trace=tuple(trace))
    return params, sd


def qr_quantum_refinements(
    params: QuantumParams, p: int, d_odd: DistanceBound
) -> QuantumParams:
    """Sharpen a QR-derived [[p+1, 0]] bound: d >= d(odd-like) + 1, and for
    p = -1 mod 8 a distance equal to d(odd-like) + 1 must be 0 mod 4."""
    if p % 8 not in (5, 7):
        raise NotApplicableError(
            f"p = {p} is {p % 8} mod 8; even-like QR codes are Hermitian "
            "self-orthogonal only for p = -1 or -3 mod 8",
            failed=["p mod 8 in {5, 7}"],
        )
    d = params.d
    trace = list(params.trace)
    floor = d_odd.lo + 1
    if d.lo < floor:
        d = _sqrt_floor_lift(d, floor, d_odd.lo_src)
        trace.append(f"QR refinement: d >= d(odd-like) + 1 = {floor}")
    if p % 8 == 7 and d_odd.exact and d.lo == d_odd.lo + 1 and d.lo % 4 != 0:
        if d.hi is not None and d.hi == d.lo:
            raise InvariantError("exact distance contradicts the 0 mod 4 rule for QR codes")
        lifted = d.lo + 2  # next even value; d != d_odd+1 here since 4 does not divide it
        trace.append(f"QR mod-4 rule: d = d_o + 1 would need 4 | d, so d >= {lifted}")
        d = DistanceBound(lo=lifted, hi=d.hi, lo_src=SQUARE_ROOT, hi_src=d.hi_src, work=d.work)
    return replace(params, d=d, trace=tuple(trace))


def _alpha_offsets(f_rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nonzero combinations sum(alpha_i f_i) with their coefficient weights."""
    n = f_rows.shape[1]
    offs = np.zeros((1, n), dtype=np.uint8)
    wts = np.zeros(1, dtype=np.int64)
    for row in f_rows:
        blocks = [offs]
        wblocks = [wts]
        for c in (1, 2, 3):
            blocks.append(offs ^ gf4.scalar_mul(c, row))
            wblocks.append(wts + 1)
        offs = np.vstack(blocks)
        wts = np.concatenate(wblocks)
    return offs[1:], wts[1:]


def _extension_distance_exact(g: np.ndarray, ext: Extension, budget: int) -> tuple[int, int]:
    """Exact distance of the extended code via one pass over the input span.

    Extended words are (c + sum alpha_i f_i | alpha), so the distance is the
    minimum over alpha of the coset minimum weight plus wt(alpha)."""
    k = g.shape[0]
    if ext.e > 5 or 4**k > budget:
        raise BudgetExceededError("extension distance pass exceeds the budget")
    f_rows = ext.extended[k:, : g.shape[1]]
    offs, wts = _alpha_offsets(f_rows)
    offsets = np.vstack([np.zeros((1, g.shape[1]), dtype=np.uint8), offs])
    hist, work = dist.weight_histograms(g, offsets=offsets, budget=budget)
    best = int(np.nonzero(hist[0][1:])[0][0]) + 1  # alpha = 0: d(C), zero word skipped
    for j in range(1, hist.shape[0]):
        nz = np.nonzero(hist[j])[0]
        cand = int(nz[0]) + int(wts[j - 1])
        if cand < best:
            best = cand
    return best, work


def general_zero_dim(
    code, budget: int | None = None
) -> tuple[QuantumParams, SelfDualCode]:
    """[[2(n-k), 0, d]] from a self-orthogonal [n, k] code, d even and
    d >= min(d(C), d(C^perp_h) + 1); also yields the classical Hermitian
    self-dual [2(n-k), n-k] code."""
    budget = dist.default_budget() if budget is None else budget
    g = linalg.row_basis(_as_matrix(code))
    k, n = g.shape
    if k == 0:
        raise InputError("refusing the zero code (dimension must be >= 1)")
    if not linalg.is_hermitian_self_orthogonal(g):
        raise NotApplicableError(
            "code is not Hermitian self-orthogonal", failed=["C <= C^perp_h"]
        )
    ext, params = extend_nearly_self_orthogonal(
        code if isinstance(code, CyclicCode) else g, budget=0
    )
    if params.k != 0 or params.n != 2 * (n - k):
        raise InvariantError("self-orthogonal extension produced wrong parameters")
    sd = SelfDualCode(gen=ext.extended)
    trace = [
        f"self-orthogonal [{n},{k}] input: [[2({n}-{k}), 0]] with e = {ext.e}",
    ]
    try:
        d_val, work = _extension_distance_exact(g, ext, budget)
        if d_val % 2:
            raise InvariantError("Hermitian self-dual code with odd minimum distance")
        bound = DistanceBound.exact_value(d_val, work=work)
        trace.append(f"d = min over cosets of (coset weight + unit weight) = {d_val} [exact]")
    except BudgetExceededError:
        d_c = dist.min_distance_exact(code if isinstance(code, CyclicCode) else g, budget=budget)
        if isinstance(code, CyclicCode):
            dual = CyclicCode(dual_defining_set(code.defining_set))
        else:
            dual = linalg.hermitian_dual_space(g)
        d_dual = dist.min_distance_exact(dual, budget=budget)
        lo = min(d_c.lo, d_dual.lo + 1)
        lo_src = d_c.lo_src if d_c.lo <= d_dual.lo + 1 else d_dual.lo_src
        # words of C pad by zeros into the output, so d <= d(C)
        bound = DistanceBound(lo=lo, hi=d_c.hi, lo_src=lo_src,
                              hi_src=d_c.hi_src if d_c.hi is not None else BUDGET,
                              work=d_c.work + d_dual.work)
        trace.append(f"budget-limited bound: d >= min(d(C) >= {d_c.lo}, d(dual) + 1 >= {d_dual.lo + 1})")
        bound = _even_lift(bound)
    out = QuantumParams(n=2 * (n - k), k=0, d=bound, pure=PURE_YES, trace=tuple(trace))
    return out, sd


def cyclic_zero_dim(a: DefiningSet, budget: int | None = None) -> tuple[QuantumParams, SelfDualCode]:
    """[[2(n-|A|), 0, d]] from a cyclic code whose defining set misses -2A."""
    for t in sorted(a.members):
        if (-2 * t) % a.n in a.members:
            raise NotApplicableError(
                f"A intersects -2A: element {t} maps to {(-2 * t) % a.n} inside A",
                failed=[f"A cap -2A empty (witness {t})"],
            )
    dual_code = CyclicCode(dual_defining_set(a))
    params, sd = general_zero_dim(dual_code, budget=budget)
    trace = list(params.trace) + [
        f"cyclic input n={a.n} leaders={list(a.leaders)}: extension applied to the Hermitian dual"
    ]
    return replace(params, trace=tuple(trace)), sd


def dual_containing_to_zero_dim(code, budget: int | None = None) -> tuple[QuantumParams, SelfDualCode]:
    """[[2k, 0, d]] from a dual-containing [n, k] code via its dual."""
    g = linalg.row_basis(_as_matrix(code))
    k, n = g.shape
    if isinstance(code, CyclicCode):
        contained = code.is_dual_containing()
        dual = CyclicCode(dual_defining_set(code.defining_set))
        if dual.dim == 0:
            raise InputError("dual is the zero code; nothing to extend")
    else:
        dual_m = linalg.hermitian_dual_space(g)
        contained = dual_m.shape[0] > 0 and linalg.is_subspace(dual_m, g)
        if dual_m.shape[0] == 0:
            raise InputError("dual is the zero code; nothing to extend")
        dual = dual_m
    if not contained:
        raise NotApplicableError(
            "code is not Hermitian dual containing", failed=["C^perp_h <= C"]
        )
    params, sd = general_zero_dim(dual, budget=budget)
    if params.n != 2 * k:
        raise InvariantError("secondary construction produced wrong length")
    return params, sd


# ---------------------------------------------------------------------------
# binary route
# ---------------------------------------------------------------------------

def binary_cyclic_quantum(a: DefiningSet, budget: int | None = None) -> tuple[QuantumParams, Extension]:
    """Quantum code from a binary cyclic code when ord_n(2) = ord_n(4).

    The quaternary lift shares the defining set (the cosets coincide), its
    Euclidean and Hermitian structure match, and when the extension stays
    binary-generated the distance of the extended code equals that of its
    binary span, which enumerates in 2^dim steps instead of 4^dim.
    """
    budget = dist.default_budget() if budget is None else budget
    n = a.n
    o2, o4 = mult_order(2, n), mult_order(4, n)
    if o2 != o4:
        raise NotApplicableError(
            f"ord_{n}(2) = {o2} differs from ord_{n}(4) = {o4}",
            failed=["ord_n(2) = ord_n(4)"],
        )
    quaternary = CyclicCode(DefiningSet(n, a.members, q=4))
    ext, params = extend_nearly_self_orthogonal(quaternary, budget=0)
    trace = [
        f"binary cyclic n={n} leaders={list(a.leaders)} lifted to GF(4) (shared cosets)",
        f"extension e={ext.e}",
    ]
    if (ext.extended <= 1).all() and 2 ** ext.k <= budget:
        hist, work = dist.weight_histograms_binary(ext.extended, budget=budget)
        d_val = int(np.nonzero(hist[0][1:])[0][0]) + 1
        if params.k == 0 and d_val % 2:
            raise InvariantError("self-dual binary-generated code with odd distance")
        bound = DistanceBound.exact_value(d_val, work=work)
        trace.append(f"binary enumeration of the extended code: d = {d_val} [exact]")
    else:
        bin_code = CyclicCode(DefiningSet(n, a.members, q=2))
        d_c = dist.min_distance_exact(bin_code, budget=budget)
        sum_code = CyclicCode(
            DefiningSet(n, a.members & bin_code.dual().defining_set.members, q=2)
        )
        d_sum = (
            DistanceBound.exact_value(1)
            if sum_code.dim == n
            else dist.min_distance_exact(sum_code, budget=budget)
        )
        lo = min(d_c.lo, d_sum.lo + 1)
        bound = DistanceBound(
            lo=lo, hi=None,
            lo_src=d_c.lo_src if d_c.lo <= d_sum.lo + 1 else d_sum.lo_src,
            hi_src=BUDGET, work=d_c.work + d_sum.work,
        )
        if params.k == 0:
            bound = _even_lift(bound)
        trace.append("budget-limited binary bound: d >= min(d(C), d(C + dual) + 1)")
    out = QuantumParams(n=params.n, k=params.k, d=bound,
                        pure=PURE_YES if params.k == 0 else PURE_UNKNOWN,
                        trace=tuple(trace))
    return out, ext


# ---------------------------------------------------------------------------
# secondary constructions and annotations
# ---------------------------------------------------------------------------

def secondary_constructions(q: QuantumParams) -> list[QuantumParams]:
    """One-step derived codes: [[n-1, k, d-1]] always, and additionally
    [[n-1, k+1, d-1]] when the input is pure."""
    if q.n < 2:
        raise InputError("secondary constructions need n >= 2")
    if q.d.lo < 2:
        raise InputError("secondary constructions need d >= 2")
    d_new = DistanceBound(
        lo=q.d.lo - 1,
        hi=None if q.d.hi is None else q.d.hi - 1,
        lo_src=q.d.lo_src,
        hi_src=q.d.hi_src,
        work=0,
    )
    out = []
    if q.pure == PURE_YES:
        out.append(
            QuantumParams(
                n=q.n - 1, k=q.k + 1, d=d_new, pure=PURE_UNKNOWN,
                trace=q.trace + (f"length-1 reduction (pure) from {q.params_str()}",),
            )
        )
    out.append(
        QuantumParams(
            n=q.n - 1, k=q.k, d=d_new, pure=PURE_UNKNOWN,
            trace=q.trace + (f"length-1 reduction from {q.params_str()}",),
        )
    )
    return out


def secondary_chain(q: QuantumParams, steps: int) -> list[QuantumParams]:
    """Iterated k-preserving reductions: [[n-i, k, d-i]] for i = 1..steps."""
    out = []
    cur = q
    for _ in range(steps):
        cur = secondary_constructions(cur)[-1]
        out.append(cur)
    return out


@dataclass(frozen=True)
class Annotation:
    n: int
    k: int
    d: int
    source: str


def load_annotations(path) -> list[Annotation]:
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    if not isinstance(raw, list):
        raise InputError("annotation file must hold a JSON list")
    out = []
    for entry in raw:
        try:
            out.append(
                Annotation(n=int(entry["n"]), k=int(entry["k"]), d=int(entry["d"]),
                           source=str(entry["source"]))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad annotation entry {entry!r}: {exc}") from exc
    return out


def params_from_annotation(a: Annotation) -> QuantumParams:
    """Wrap a literature [[n, k, d]] value; never computed, purity unknown."""
    return QuantumParams(
        n=a.n, k=a.k,
        d=DistanceBound(lo=a.d, hi=a.d, lo_src=LITERATURE, hi_src=LITERATURE),
        pure=PURE_UNKNOWN,
        trace=(f"literature annotation [[{a.n},{a.k},{a.d}]] from {a.source}",),
    )


def zero_dim_from_classical_annotation(a: Annotation) -> QuantumParams:
    """[[2k, 0]] from an annotated dual-containing classical [n, k, d] code.

    The dual is an even-weight subcode, so d(dual) >= d rounded up to even;
    combined with d(output) >= min(d(dual), d + 1) this gives d + 1 for odd
    annotated d and d otherwise.
    """
    lo = a.d + 1 if a.d % 2 else a.d
    return QuantumParams(
        n=2 * a.k, k=0,
        d=DistanceBound(lo=lo, hi=None,
                        lo_src=PARITY if a.d % 2 else LITERATURE, hi_src=BUDGET),
        pure=PURE_UNKNOWN,
        trace=(
            f"annotated dual-containing [{a.n},{a.k},{a.d}] ({a.source})",
            f"[[{2 * a.k},0]]: d >= min(d(dual), d + 1) = {lo} (dual has even weights)",
        ),
    )
