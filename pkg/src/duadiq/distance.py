"""Minimum-distance computation: exact at desk scale, interval bounds beyond.

Every distance is reported as a DistanceBound, an integer interval whose
endpoints carry provenance tags.  Exact values come from the full Gray-walk
enumeration (4^dim or 2^dim words) whenever that fits the work budget; above
the budget a single deterministic information set is enumerated by rising
message weight, which yields an honest lower bound (completed radius + 1)
and the best found word as an upper bound.  Budgets count enumeration steps;
a multi-offset pass over one span counts once per step.

Results are deterministic for a given budget regardless of backend or
worker count.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, gf4, linalg
from .cyclic import CyclicCode, DefiningSet, apply_multiplier
from .duadic import DuadicPair, Splitting
from .errors import BudgetExceededError, InputError, InvariantError, NotApplicableError
from .extfield import mult_order

# provenance tags
EXACT = "exact-enumeration"
INFO_SET = "information-set"
FIXED_SUBCODE = "fixed-subcode"
SQUARE_ROOT = "square-root"
PARITY = "parity"
BUDGET = "budget-exhausted"
LITERATURE = "literature-annotation"


def default_budget() -> int:
    env = os.environ.get("DUADIQ_BUDGET", "").strip()
    if env:
        value = int(env)
        if value < 0:
            raise InputError("DUADIQ_BUDGET must be nonnegative")
        return value
    return 1 << 30


@dataclass(frozen=True)
class DistanceBound:
    """Interval [lo, hi] for a minimum distance; hi None means unknown."""

    lo: int
    hi: int | None
    lo_src: str
    hi_src: str
    work: int = 0

    def __post_init__(self):
        if self.lo < 1:
            raise InvariantError(f"distance lower bound {self.lo} < 1")
        if self.hi is not None and self.lo > self.hi:
            raise InvariantError(f"inconsistent interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.hi == self.lo and self.lo_src in (EXACT, INFO_SET)

    @classmethod
    def exact_value(cls, d: int, work: int = 0, src: str = EXACT) -> "DistanceBound":
        return cls(lo=d, hi=d, lo_src=src, hi_src=src, work=work)

    def to_json(self) -> dict:
        return {
            "lo": int(self.lo),
            "hi": None if self.hi is None else int(self.hi),
            "lo_src": self.lo_src,
            "hi_src": self.hi_src,
            "work": int(self.work),
        }


def compose_bounds(parts: list[DistanceBound]) -> DistanceBound:
    """Interval intersection with provenance tracking; never widens."""
    if not parts:
        raise InputError("compose_bounds needs at least one part")
    lo, lo_src = parts[0].lo, parts[0].lo_src
    hi, hi_src = parts[0].hi, parts[0].hi_src
    work = parts[0].work
    for p in parts[1:]:
        work += p.work
        if p.lo > lo:
            lo, lo_src = p.lo, p.lo_src
        if p.hi is not None and (hi is None or p.hi < hi):
            hi, hi_src = p.hi, p.hi_src
    if hi is not None and lo > hi:
        raise InvariantError(
            f"inconsistent distance evidence: lo {lo} ({lo_src}) > hi {hi} ({hi_src})"
        )
    return DistanceBound(lo=lo, hi=hi, lo_src=lo_src, hi_src=hi_src, work=work)


# ---------------------------------------------------------------------------
# exact enumeration primitives
# ---------------------------------------------------------------------------

def _packed_span(g: np.ndarray):
    """Scaled generator planes (g_i, omega g_i interleaved) for the F4 span."""
    lo, hi = gf4.pack_planes(g)
    og = gf4.MUL_TABLE[2][g]
    olo, ohi = gf4.pack_planes(og)
    return _kernels._scaled_generators(lo, hi, olo, ohi)


def weight_histograms(
    g: np.ndarray,
    offsets: np.ndarray | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> tuple[np.ndarray, int]:
    """Exact per-offset weight histograms over the span of g plus offsets.

    Returns (hist, work) where hist[j, w] counts words of weight w in
    offset_j + span(g); row 0 of a default call is the code itself.
    Raises BudgetExceededError when 4^dim exceeds the budget.
    """
    g = linalg.row_basis(np.atleast_2d(np.asarray(g, dtype=np.uint8)))
    k, n = g.shape
    budget = default_budget() if budget is None else budget
    total = 4**k
    if total > budget:
        raise BudgetExceededError(f"4^{k} = {total} exceeds budget {budget}")
    if offsets is None:
        offsets = np.zeros((1, n), dtype=np.uint8)
    offsets = np.atleast_2d(np.asarray(offsets, dtype=np.uint8))
    if offsets.shape[1] != n:
        raise InputError("offset length mismatch")
    sg_lo, sg_hi = _packed_span(g)
    off_lo, off_hi = gf4.pack_planes(offsets)
    hist = _kernels.gray_weight_hists(sg_lo, sg_hi, off_lo, off_hi, n + 1, backend=backend)
    return hist, total


def weight_histograms_binary(
    g_rows: np.ndarray,
    offsets: np.ndarray | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> tuple[np.ndarray, int]:
    """Binary counterpart over the 2^dim span of GF(2) rows (0/1 symbols)."""
    g = np.atleast_2d(np.asarray(g_rows, dtype=np.uint8))
    rr, rank_, _ = linalg.rref(g & 1)  # F2 rref coincides with F4 rref on 0/1 input
    g = rr[:rank_]
    k, n = g.shape
    budget = default_budget() if budget is None else budget
    total = 2**k
    if total > budget:
        raise BudgetExceededError(f"2^{k} = {total} exceeds budget {budget}")
    if offsets is None:
        offsets = np.zeros((1, n), dtype=np.uint8)
    offsets = np.atleast_2d(np.asarray(offsets, dtype=np.uint8))
    lo, _ = gf4.pack_planes(g)
    off_lo, _ = gf4.pack_planes(offsets & 1)
    hist = _kernels.gray_weight_hists_binary(lo, off_lo, n + 1, backend=backend)
    return hist, total


def _first_nonzero_weight(hist_row: np.ndarray, skip_zero: bool) -> int:
    start = 1 if skip_zero else 0
    nz = np.nonzero(hist_row[start:])[0]
    if nz.size == 0:
        raise InvariantError("empty weight histogram")
    return int(nz[0]) + start


# ---------------------------------------------------------------------------
# budgeted information-set bounds
# ---------------------------------------------------------------------------

def _info_set_bounds(g: np.ndarray, q: int, budget: int) -> DistanceBound:
    """Single deterministic information set, messages by rising weight.

    After completing all messages of weight <= w, any unseen codeword has
    information weight >= w + 1 and hence full weight >= w + 1.
    """
    g = np.atleast_2d(g)
    k, n = g.shape
    if q == 4:
        s1 = g
        s2 = gf4.MUL_TABLE[2][g]
        s3 = s1 ^ s2  # omega^2 = 1 + omega
        scaled = (s1, s2, s3)
        nonzero = 3
    else:
        scaled = (g,)
        nonzero = 1
    best_w = n + 1
    work = 0
    completed = 0
    for w in range(1, k + 1):
        level_cost = math.comb(k, w) * nonzero**w
        if work + level_cost > budget:
            break
        chunk: list[tuple[int, ...]] = []
        CHUNK = 2048

        def flush(chunk_combos):
            nonlocal best_w
            if not chunk_combos:
                return
            idx = np.array(chunk_combos, dtype=np.int64)
            for pattern in itertools.product(range(nonzero), repeat=w):
                acc = scaled[pattern[0]][idx[:, 0]].copy()
                for pos in range(1, w):
                    acc ^= scaled[pattern[pos]][idx[:, pos]]
                wts = np.count_nonzero(acc, axis=1)
                m = int(wts.min())
                if m < best_w:
                    best_w = m

        for combo in itertools.combinations(range(k), w):
            chunk.append(combo)
            if len(chunk) >= CHUNK:
                flush(chunk)
                chunk = []
        flush(chunk)
        work += level_cost
        completed = w
        if best_w <= w:
            # every unseen codeword weighs at least w + 1 > best: exact
            return DistanceBound(
                lo=best_w, hi=best_w, lo_src=INFO_SET, hi_src=INFO_SET, work=work
            )
    lo = completed + 1
    hi = best_w if best_w <= n else None
    # the in-level exit guarantees best_w > completed here, so lo <= hi holds
    return DistanceBound(lo=max(lo, 1), hi=hi, lo_src=BUDGET, hi_src=INFO_SET, work=work)


# ---------------------------------------------------------------------------
# public distance operations
# ---------------------------------------------------------------------------

_EXACT_CACHE: dict[tuple, DistanceBound] = {}


def min_distance_exact(
    code,
    budget: int | None = None,
    backend: str | None = None,
) -> DistanceBound:
    """Exact distance by full enumeration when 4^dim fits the budget, else
    an information-set interval with budget-exhausted provenance."""
    budget = default_budget() if budget is None else budget
    cache_key = None
    if isinstance(code, CyclicCode):
        cache_key = (code.q, code.n, code.defining_set.members)
        hit = _EXACT_CACHE.get(cache_key)
        # serve a cached result only if this budget could have produced it,
        # so results stay a pure function of (input, budget)
        if hit is not None and hit.work <= budget:
            return hit
        g = code.gen_matrix
        q = code.q
    else:
        g = np.atleast_2d(np.asarray(code, dtype=np.uint8))
        q = 4
    g = linalg.row_basis(g)
    k, n = g.shape
    if k == 0:
        raise InputError("the zero code has no minimum distance")
    if k == n:
        result = DistanceBound.exact_value(1, work=0)
    else:
        total = (4 if q == 4 else 2) ** k
        if total <= budget:
            if q == 4:
                hist, work = weight_histograms(g, budget=budget, backend=backend)
            else:
                hist, work = weight_histograms_binary(g, budget=budget, backend=backend)
            result = DistanceBound.exact_value(_first_nonzero_weight(hist[0], skip_zero=True), work=work)
        else:
            result = _info_set_bounds(g, q, budget)
    if cache_key is not None and result.exact:
        _EXACT_CACHE[cache_key] = result
    return result


def weight_distribution(code, budget: int | None = None) -> np.ndarray:
    """Full weight enumerator (counts per weight, zero word included)."""
    if isinstance(code, CyclicCode):
        g = code.gen_matrix
        q = code.q
    else:
        g, q = np.atleast_2d(np.asarray(code, dtype=np.uint8)), 4
    if q == 4:
        hist, _ = weight_histograms(g, budget=budget)
    else:
        hist, _ = weight_histograms_binary(g, budget=budget)
    return hist[0]


def _coset_offsets(reps: np.ndarray) -> np.ndarray:
    """All nonzero F4-combinations of the rep rows (4^r - 1 offsets)."""
    combos = np.zeros((1, reps.shape[1]), dtype=np.uint8)
    for row in reps:
        stack = [combos]
        for c in (1, 2, 3):
            stack.append(combos ^ gf4.MUL_TABLE[c][row])
        combos = np.vstack(stack)
    return combos[1:]


def min_weight_difference(code, subcode, budget: int | None = None) -> tuple[int, int]:
    """Minimum weight over codewords of code not in subcode; returns (d, work).

    subcode must be a proper subcode.  Exact only; raises BudgetExceededError
    when the required enumeration exceeds the budget.
    """
    budget = default_budget() if budget is None else budget
    g_sup = code.gen_matrix if isinstance(code, CyclicCode) else np.atleast_2d(np.asarray(code, dtype=np.uint8))
    g_sub = subcode.gen_matrix if isinstance(subcode, CyclicCode) else np.atleast_2d(np.asarray(subcode, dtype=np.uint8))
    g_sup = linalg.row_basis(g_sup)
    g_sub = linalg.row_basis(g_sub)
    k_sup, k_sub = g_sup.shape[0], g_sub.shape[0]
    if k_sub and not linalg.is_subspace(g_sub, g_sup):
        raise InputError("subcode is not contained in code")
    if k_sub == k_sup:
        raise InputError("difference is empty: subcode equals code")
    codim = k_sup - k_sub
    if 4**codim - 1 <= 63 and k_sub > 0:
        reps = linalg.complement_basis(g_sub, g_sup)
        offsets = _coset_offsets(reps)
        hist, work = weight_histograms(g_sub, offsets=offsets, budget=budget)
        d = min(_first_nonzero_weight(hist[j], skip_zero=False) for j in range(hist.shape[0]))
        return d, work
    hist_sup, w1 = weight_histograms(g_sup, budget=budget)
    if k_sub:
        hist_sub, w2 = weight_histograms(g_sub, budget=budget)
    else:
        hist_sub = np.zeros_like(hist_sup[0])
        hist_sub[0] = 1
        hist_sub = hist_sub[None, :]
        w2 = 1
    diff = hist_sup[0] - hist_sub[0]
    if (diff < 0).any():
        raise InvariantError("histogram difference went negative; not a subcode?")
    return _first_nonzero_weight(diff, skip_zero=False), w1 + w2


# ---------------------------------------------------------------------------
# duadic ingredient pass: one walk gives d(C_e), d_o and the weight parities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DuadicDistances:
    n: int
    d_even: int          # distance of the even-like code
    d_min_odd_coset: int  # min weight over odd-like cosets (the odd-like weight d_o)
    even_hist: tuple[int, ...]
    coset_hist: tuple[int, ...]  # summed over the three nonzero cosets
    work: int

    @property
    def d_odd(self) -> int:
        """Distance of the odd-like code C_e + <all-ones>."""
        return min(self.d_even, self.d_min_odd_coset)


_DUADIC_CACHE: dict[tuple, DuadicDistances] = {}


def duadic_distances(splitting: Splitting, side: int = 1, budget: int | None = None) -> DuadicDistances:
    """Exact even-like distance and minimum odd-like weight for one side.

    Enumerates the even-like code once, tracking the three cosets of the
    all-ones vector; d(odd-like) = min(d_even, d_o) since the odd-like code
    is their union.
    """
    budget = default_budget() if budget is None else budget
    s = splitting.s1 if side == 1 else splitting.s2
    key = (splitting.n, s.members)
    hit = _DUADIC_CACHE.get(key)
    if hit is not None and hit.work <= budget:
        return hit
    n = splitting.n
    even = CyclicCode(DefiningSet(n, s.members | {0}))
    ones = np.ones(n, dtype=np.uint8)
    offsets = np.vstack([np.zeros(n, dtype=np.uint8), ones, gf4.scalar_mul(2, ones), gf4.scalar_mul(3, ones)])
    hist, work = weight_histograms(even.gen_matrix, offsets=offsets, budget=budget)
    d_even = _first_nonzero_weight(hist[0], skip_zero=True)
    d_o = min(_first_nonzero_weight(hist[j], skip_zero=False) for j in (1, 2, 3))
    coset_hist = hist[1] + hist[2] + hist[3]
    result = DuadicDistances(
        n=n,
        d_even=d_even,
        d_min_odd_coset=d_o,
        even_hist=tuple(int(x) for x in hist[0]),
        coset_hist=tuple(int(x) for x in coset_hist),
        work=work,
    )
    _DUADIC_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# fixed subcodes under multipliers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixedSubcode:
    parent: CyclicCode
    a: int
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def fixed_subcode(code: CyclicCode, a: int) -> FixedSubcode:
    """Basis of {v in C : mu_a(v) = v}, computed as the kernel of mu_a - id
    restricted to the code's coefficient space."""
    n = code.n
    if math.gcd(a, n) != 1:
        raise InputError(f"gcd({a}, {n}) != 1")
    g = code.gen_matrix
    moved = apply_multiplier(a, g)
    delta = g ^ moved  # rows: (mu_a - id) applied to each generator... see below
    # We need coefficient vectors c with mu_a(cG) = cG.  mu_a is linear and
    # permutes coordinates, so mu_a(cG) = c mu_a(G) and the condition is
    # c (mu_a(G) - G) = 0: the left nullspace of delta.
    coeffs = linalg.nullspace(delta.T)
    if coeffs.shape[0] == 0:
        return FixedSubcode(parent=code, a=a % n, basis=np.zeros((0, n), dtype=np.uint8))
    words = np.zeros((coeffs.shape[0], n), dtype=np.uint8)
    for i, c in enumerate(coeffs):
        acc = np.zeros(n, dtype=np.uint8)
        for j in np.nonzero(c)[0]:
            acc ^= gf4.MUL_TABLE[int(c[j])][g[j]]
        words[i] = acc
    return FixedSubcode(parent=code, a=a % n, basis=linalg.row_basis(words))


def order2_lower_bound(d_fixed: int) -> int:
    """d(C) >= ceil(d(C_a)/2) + 1 for an order-2 multiplier fixing the code.

    Degenerate case: when d(C_a) = 1 the minimum-weight vector is itself
    fixed and the bound collapses to d(C) = d(C_a)."""
    if d_fixed <= 1:
        return d_fixed
    return -(-d_fixed // 2) + 1


def odd_order_lower_bound(d_fixed: int, order: int) -> int:
    """d(C) >= ceil((d(C_a) - 1)/order) + 1 for odd multiplier order > 1."""
    if order <= 1 or order % 2 == 0:
        raise InputError("order must be an odd integer > 1")
    return -(-(d_fixed - 1) // order) + 1


def fixed_subcode_lower_bound(code: CyclicCode, a: int, budget: int | None = None) -> DistanceBound:
    """Sandwich d(C) between the fixed-subcode bounds: lower from the order
    formula applied to d(C_a), upper d(C) <= d(C_a)."""
    budget = default_budget() if budget is None else budget
    n = code.n
    a %= n
    if math.gcd(a, n) != 1:
        raise InputError(f"gcd({a}, {n}) != 1")
    if code.defining_set.scaled(a).members != code.defining_set.members:
        raise InputError(f"mu_{a} does not fix the code: aA != A")
    order = mult_order(a, n)
    if order != 2 and (order <= 1 or order % 2 == 0):
        raise InputError(f"multiplier order {order} is neither 2 nor odd > 1")
    sub = fixed_subcode(code, a)
    if sub.dim == 0:
        raise InvariantError("fixed subcode is trivial; no bound available")
    d_sub = min_distance_exact(sub.basis, budget=budget)
    if order == 2:
        lo = order2_lower_bound(d_sub.lo)
    else:
        lo = odd_order_lower_bound(d_sub.lo, order)
    return DistanceBound(
        lo=max(lo, 1),
        hi=d_sub.hi,
        lo_src=FIXED_SUBCODE if d_sub.exact else BUDGET,
        hi_src=FIXED_SUBCODE,
        work=d_sub.work,
    )


@dataclass(frozen=True)
class WeightCheck:
    t: int
    count: int            # A_t, the number of weight-t words in the code
    fixed_has_weight: bool
    ok: bool              # fixed_has_weight or order | count


@dataclass(frozen=True)
class CoincidenceReport:
    n: int
    a: int
    order: int
    subcodes_equal: bool  # C_{a^j} = C_a for all j
    checked_weights: tuple[WeightCheck, ...]
    complete: bool

    @property
    def all_passed(self) -> bool:
        return self.subcodes_equal and all(c.ok for c in self.checked_weights)

    @property
    def divisibility_cases(self) -> int:
        """Weights decided by the divisibility rule, not by membership."""
        return sum(1 for c in self.checked_weights if not c.fixed_has_weight)


def fixed_subcode_coincidence(
    code: CyclicCode, a: int, budget: int | None = None
) -> CoincidenceReport:
    """Verify C_a = C_{a^j} and the weight-count divisibility: for every t
    with no weight-t word in C_a, the multiplier order divides A_t."""
    budget = default_budget() if budget is None else budget
    n = code.n
    a %= n
    order = mult_order(a, n)
    from .extfield import is_prime

    if not is_prime(order):
        raise InputError(f"multiplier order {order} is not prime")
    if code.defining_set.scaled(a).members != code.defining_set.members:
        raise InputError(f"mu_{a} does not fix the code")
    base = fixed_subcode(code, a)
    equal = True
    for j in range(2, order):
        other = fixed_subcode(code, pow(a, j, n))
        if not linalg.row_space_equal(base.basis, other.basis):
            equal = False
    checked: list[WeightCheck] = []
    complete = True
    try:
        full = weight_distribution(code, budget=budget)
        sub_hist = (
            weight_distribution(base.basis, budget=budget)
            if base.dim
            else np.eye(1, n + 1, dtype=np.int64)[0]
        )
        for t in range(1, n + 1):
            a_t = int(full[t])
            if a_t == 0:
                continue
            has = int(sub_hist[t]) > 0
            checked.append(WeightCheck(t=t, count=a_t, fixed_has_weight=has,
                                       ok=has or a_t % order == 0))
    except BudgetExceededError:
        complete = False
    return CoincidenceReport(
        n=n, a=a, order=order, subcodes_equal=equal,
        checked_weights=tuple(checked), complete=complete,
    )


# ---------------------------------------------------------------------------
# square-root bound suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SquareRootReport:
    n: int
    d_o: int
    d_odd_code: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def square_root_bounds(pair: DuadicPair, budget: int | None = None) -> SquareRootReport:
    """Evaluate the odd-like-weight bounds on a computed duadic pair."""
    s = pair.splitting
    dd = duadic_distances(s, side=1, budget=budget)
    d_o = dd.d_min_odd_coset
    d_odd_code = dd.d_odd
    checks = [("d_o_squared_ge_n", d_o * d_o >= s.n)]
    if s.has_multiplier(-1):
        checks.append(("d_o_sq_minus_d_o_plus_1_ge_n", d_o * d_o - d_o + 1 >= s.n))
    from .extfield import is_prime

    if is_prime(s.n):
        qr = frozenset(x * x % s.n for x in range(1, s.n))
        if s.s1.members == qr or s.s2.members == qr:
            checks.append(("qr_distance_equals_d_o", d_odd_code == d_o))
            if s.n % 8 == 7:
                checks.append(("qr_distance_3_mod_4", d_odd_code % 4 == 3))
    return SquareRootReport(n=s.n, d_o=d_o, d_odd_code=d_odd_code, checks=tuple(checks))


# ---------------------------------------------------------------------------
# binary shadow
# ---------------------------------------------------------------------------

def binary_shadow_code(a: DefiningSet) -> CyclicCode:
    """The binary cyclic code with the same defining set, valid when the
    2- and 4-cyclotomic cosets coincide (ord_n(2) = ord_n(4))."""
    n = a.n
    o2 = mult_order(2, n)
    o4 = mult_order(4, n)
    if o2 != o4:
        raise NotApplicableError(
            f"binary shadow needs ord_n(2) = ord_n(4); got ord_{n}(2) = {o2}, ord_{n}(4) = {o4}",
            failed=[f"ord_{n}(2) = {o2} != ord_{n}(4) = {o4}"],
        )
    return CyclicCode(DefiningSet(n, a.members, q=2))


def binary_shadow_distance(a: DefiningSet, budget: int | None = None) -> DistanceBound:
    """Exact quaternary distance obtained on the binary side: the binary
    code generated by the same generators has the same minimum distance."""
    shadow = binary_shadow_code(a)
    return min_distance_exact(shadow, budget=budget)
