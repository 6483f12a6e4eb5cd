"""Cyclotomic cosets, defining sets and cyclic codes over GF(4).

A cyclic code of odd length n is identified by its defining set, the set of
exponents t with g(alpha^t) = 0 for the generator polynomial g.  Defining
sets are unions of 4-cyclotomic cosets; codes compare equal by (n, defining
set) alone.  Generator polynomials and matrices are materialized lazily and
cached; everything is immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import extfield, gf4, linalg


def cyclotomic_coset(n: int, a: int, q: int = 4) -> frozenset[int]:
    """Orbit of a under multiplication by q modulo n."""
    _check_n_q(n, q)
    a %= n
    out = {a}
    x = a * q % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return frozenset(out)


def _check_n_q(n: int, q: int) -> None:
    if q not in (2, 4):
        raise ValueError("q must be 2 or 4")
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")


@dataclass(frozen=True)
class CosetPartition:
    n: int
    q: int
    cosets: tuple[frozenset[int], ...]  # ordered by ascending leader

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.cosets)

    def coset_of(self, a: int) -> frozenset[int]:
        a %= self.n
        for c in self.cosets:
            if a in c:
                return c
        raise KeyError(a)


@lru_cache(maxsize=None)
def all_cosets(n: int, q: int = 4) -> CosetPartition:
    _check_n_q(n, q)
    seen: set[int] = set()
    cosets = []
    for a in range(n):
        if a in seen:
            continue
        c = cyclotomic_coset(n, a, q)
        seen |= c
        cosets.append(c)
    return CosetPartition(n=n, q=q, cosets=tuple(cosets))


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets mod n (q = 4 unless stated otherwise)."""

    n: int
    members: frozenset[int]
    q: int = 4

    def __post_init__(self):
        _check_n_q(self.n, self.q)
        for t in self.members:
            if not 0 <= t < self.n:
                raise ValueError(f"member {t} outside Z_{self.n}")
            if (t * self.q) % self.n not in self.members:
                raise ValueError(
                    f"set is not closed under multiplication by {self.q}: "
                    f"{t} present but {(t * self.q) % self.n} missing"
                )

    @classmethod
    def from_leaders(cls, n: int, leaders, q: int = 4) -> "DefiningSet":
        members: set[int] = set()
        for a in leaders:
            members |= cyclotomic_coset(n, a, q)
        return cls(n=n, members=frozenset(members), q=q)

    @property
    def leaders(self) -> tuple[int, ...]:
        part = all_cosets(self.n, self.q)
        return tuple(sorted(min(c) for c in part.cosets if c <= self.members))

    def __len__(self) -> int:
        return len(self.members)

    def complement(self) -> "DefiningSet":
        return DefiningSet(self.n, frozenset(range(self.n)) - self.members, self.q)

    def scaled(self, a: int) -> "DefiningSet":
        """{a*t mod n}; stays coset-closed for gcd(a, n) = 1."""
        if math.gcd(a, self.n) != 1:
            raise ValueError(f"gcd({a}, {self.n}) != 1")
        return DefiningSet(self.n, frozenset(a * t % self.n for t in self.members), self.q)


def dual_defining_set(a: DefiningSet) -> DefiningSet:
    """Defining set of the Hermitian dual: Z_n minus (-2 A)."""
    neg2 = frozenset((-2 * t) % a.n for t in a.members)
    return DefiningSet(a.n, frozenset(range(a.n)) - neg2, a.q)


def is_dual_containing(a: DefiningSet) -> bool:
    """Hermitian dual contained in the code, equivalently A and -2A disjoint."""
    neg2 = frozenset((-2 * t) % a.n for t in a.members)
    return not (a.members & neg2)


def apply_multiplier(a: int, v: np.ndarray, n: int | None = None) -> np.ndarray:
    """Coordinate permutation y_i = x_{a^{-1} i mod n}."""
    v = np.asarray(v, dtype=np.uint8)
    n = v.shape[-1] if n is None else n
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    a_inv = pow(a % n, -1, n)
    idx = (a_inv * np.arange(n)) % n
    return v[..., idx]


def apply_multiplier_set(a: int, ds: DefiningSet) -> DefiningSet:
    """Defining set of mu_a(C) for C with defining set ds: a^{-1} ds."""
    a_inv = pow(a % ds.n, -1, ds.n)
    return ds.scaled(a_inv)


class CyclicCode:
    """Length-n cyclic code over GF(4) with a fixed defining set.

    Thread-safety: instances are immutable; the generator polynomial and
    matrix caches are filled idempotently (any racing writer computes the
    same value).
    """

    def __init__(self, defining_set: DefiningSet):
        self.defining_set = defining_set
        self.n = defining_set.n
        self.q = defining_set.q
        self.dim = self.n - len(defining_set)
        self._gen_poly: np.ndarray | None = None
        self._gen_matrix: np.ndarray | None = None

    @classmethod
    def from_leaders(cls, n: int, leaders, q: int = 4) -> "CyclicCode":
        return cls(DefiningSet.from_leaders(n, leaders, q))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicCode)
            and self.n == other.n
            and self.q == other.q
            and self.defining_set.members == other.defining_set.members
        )

    def __hash__(self) -> int:
        return hash((self.n, self.q, self.defining_set.members))

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, q={self.q}, dim={self.dim}, leaders={list(self.defining_set.leaders)})"

    @property
    def gen_poly(self) -> np.ndarray:
        """Generator polynomial, product of the minimal polynomials of the
        cosets inside the defining set (1 for the full space)."""
        if self._gen_poly is None:
            if not self.defining_set.members:
                poly = np.array([1], dtype=np.uint8)
            else:
                ext = extfield.ext_build(self.n, self.q)
                part = all_cosets(self.n, self.q)
                poly = np.array([1], dtype=np.uint8)
                for coset in part.cosets:
                    if coset <= self.defining_set.members:
                        poly = gf4.poly_mul(poly, extfield.minimal_poly(ext, coset))
            self._gen_poly = poly
        return self._gen_poly

    @property
    def gen_matrix(self) -> np.ndarray:
        """dim x n matrix whose rows are the cyclic shifts of gen_poly."""
        if self._gen_matrix is None:
            g = self.gen_poly
            k = self.dim
            m = np.zeros((k, self.n), dtype=np.uint8)
            for i in range(k):
                m[i, i : i + len(g)] = g
            self._gen_matrix = m
        return self._gen_matrix

    def dual(self) -> "CyclicCode":
        if self.q == 4:
            return CyclicCode(dual_defining_set(self.defining_set))
        # Euclidean dual of a binary cyclic code: Z_n minus (-A)
        neg = frozenset((-t) % self.n for t in self.defining_set.members)
        return CyclicCode(DefiningSet(self.n, frozenset(range(self.n)) - neg, 2))

    def is_dual_containing(self) -> bool:
        if self.q == 4:
            return is_dual_containing(self.defining_set)
        return not (
            self.defining_set.members
            & frozenset((-t) % self.n for t in self.defining_set.members)
        )

    def intersection(self, other: "CyclicCode") -> "CyclicCode":
        self._check_mate(other)
        return CyclicCode(
            DefiningSet(self.n, self.defining_set.members | other.defining_set.members, self.q)
        )

    def plus(self, other: "CyclicCode") -> "CyclicCode":
        self._check_mate(other)
        return CyclicCode(
            DefiningSet(self.n, self.defining_set.members & other.defining_set.members, self.q)
        )

    def _check_mate(self, other: "CyclicCode") -> None:
        if self.n != other.n or self.q != other.q:
            raise ValueError("codes live in different ambient spaces")

    def contains_code(self, other: "CyclicCode") -> bool:
        """other is a subcode iff its defining set contains ours."""
        self._check_mate(other)
        return other.defining_set.members >= self.defining_set.members

    def to_descriptor(self) -> dict:
        """Canonical JSON descriptor (bit-exact across platforms)."""
        return {
            "n": self.n,
            "q": self.q,
            "defining_set_leaders": [int(x) for x in self.defining_set.leaders],
            "generator_polynomial": [int(c) for c in self.gen_poly],
        }


def near_orthogonality(code_or_matrix) -> int:
    """dim(E) - dim(E intersect E^perp_h); zero exactly for self-orthogonal E.

    For a cyclic code this reduces to defining-set arithmetic; for a raw
    generator matrix the subspace meet is computed directly.  Both routes
    agree (tested).
    """
    if isinstance(code_or_matrix, CyclicCode):
        c = code_or_matrix
        dual_members = dual_defining_set(c.defining_set).members
        inter_dim = c.n - len(c.defining_set.members | dual_members)
        return c.dim - inter_dim
    g = linalg.row_basis(np.atleast_2d(np.asarray(code_or_matrix, dtype=np.uint8)))
    d = linalg.hermitian_dual_space(g)
    meet = linalg.subspace_intersection(g, d)
    return g.shape[0] - meet.shape[0]


def defining_set_of_matrix(g: np.ndarray, n: int, q: int = 4) -> frozenset[int]:
    """Exponents t where every row polynomial vanishes at alpha^t.

    Independent root-by-root recovery used as the oracle against the
    defining-set arithmetic.
    """
    ext = extfield.ext_build(n, q)
    g = np.atleast_2d(np.asarray(g, dtype=np.uint8))
    out = set()
    for t in range(n):
        pt = ext.alpha_pow(t)
        if all(ext.eval_base_poly(row, pt) == 0 for row in g):
            out.add(t)
    return frozenset(out)
