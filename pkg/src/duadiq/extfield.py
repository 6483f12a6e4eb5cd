"""Extension fields of GF(2) and primitive n-th roots of unity.

Field elements are Python ints whose bits are GF(2) polynomial coefficients,
reduced modulo a fixed irreducible polynomial.  The modulus convention is
deterministic and system independent:

* degree <= 40: the lexicographically smallest primitive polynomial, where
  coefficient strings are compared low-degree-first.  The residue class of x
  is then a generator of the multiplicative group.
* degree > 40: the lexicographically smallest irreducible polynomial
  (primitivity testing would require factoring 2^d - 1, which is not desk
  scale for the degrees reached by lengths up to 241).  The generator is the
  first element, in integer encoding order, whose powers yield a root of
  unity of the exact order required.

Either way the resulting cyclic-code labeling is reproducible; it may differ
from other systems' labeling by a coset relabeling, which never changes code
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf4

_PRIMITIVITY_DEGREE_LIMIT = 40


def factorize(n: int) -> dict[int, int]:
    """Deterministic trial-division factorization (adequate below ~2^41)."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n; requires gcd(a, n) = 1."""
    import math

    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    # order divides the group exponent; walk down from lcm via factor removal
    order = 1
    x = a
    while x != 1:
        x = x * a % n
        order += 1
        if order > n:
            raise RuntimeError("order computation overflow")
    return order


# ---------------------------------------------------------------------------
# GF(2)[x] on int bitmasks
# ---------------------------------------------------------------------------

def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _pdeg(a: int) -> int:
    return a.bit_length() - 1


def _pmod(a: int, m: int) -> int:
    dm = _pdeg(m)
    while _pdeg(a) >= dm:
        a ^= m << (_pdeg(a) - dm)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _pow_x_mod(exp: int, m: int) -> int:
    """x^(2^exp) mod m via repeated squaring of the Frobenius."""
    v = 2  # the polynomial x
    for _ in range(exp):
        v = _pmod(_clmul(v, v), m)
    return v


def is_irreducible(m: int) -> bool:
    """Deterministic irreducibility test for a GF(2) polynomial bitmask."""
    d = _pdeg(m)
    if d <= 0:
        return False
    if d == 1:
        return True
    if m & 1 == 0:  # divisible by x
        return False
    if _pow_x_mod(d, m) != 2:  # x^(2^d) == x required
        return False
    for p in factorize(d):
        if _pgcd(_pow_x_mod(d // p, m) ^ 2, m) != 1:
            return False
    return True


def _lex_key_to_poly(key: int, degree: int) -> int:
    # key bit (degree-1-i) is coefficient c_i; leading coefficient implicit
    m = 1 << degree
    for i in range(degree):
        if (key >> (degree - 1 - i)) & 1:
            m |= 1 << i
    return m


@lru_cache(maxsize=None)
def smallest_irreducible(degree: int, primitive: bool) -> int:
    """Deterministic modulus search in low-degree-first lexicographic order."""
    if primitive:
        fac = factorize((1 << degree) - 1)
    # keys below 2^(degree-1) have constant term 0, hence are divisible by x
    start = 1 << (degree - 1) if degree > 1 else 0
    for key in range(start, 1 << degree):
        m = _lex_key_to_poly(key, degree)
        if not is_irreducible(m):
            continue
        if not primitive:
            return m
        group = (1 << degree) - 1
        ok = True
        for p in fac:
            if _field_pow(2, group // p, m) == 1:
                ok = False
                break
        if ok:
            return m
    raise RuntimeError(f"no irreducible polynomial of degree {degree}?")


def _field_pow(base: int, exp: int, modulus: int) -> int:
    out = 1
    b = base
    while exp:
        if exp & 1:
            out = _pmod(_clmul(out, b), modulus)
        b = _pmod(_clmul(b, b), modulus)
        exp >>= 1
    return out


# ---------------------------------------------------------------------------
# extension fields carrying a designated n-th root of unity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtField:
    """GF(q^r) with a pinned primitive n-th root of unity alpha.

    q is 2 or 4; the field is realized as GF(2)[x]/(modulus) of degree
    q_degree * r.  For q = 4 the subfield GF(4) is {0, 1, omega, omega^2}
    with omega an element of order 3, and alpha's coset labeling follows it.
    """

    q: int
    n: int
    r: int
    modulus: int
    gamma: int
    alpha: int
    omega: int  # order-3 element for q=4; 0 for q=2

    @property
    def degree(self) -> int:
        return _pdeg(self.modulus)

    @property
    def order(self) -> int:
        return (1 << self.degree) - 1

    def mul(self, a: int, b: int) -> int:
        return _pmod(_clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        e %= self.order
        return _field_pow(a, e, self.modulus) if e else 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def alpha_pow(self, e: int) -> int:
        return self.pow(self.alpha, e % self.n)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("order of 0 undefined")
        group = self.order
        order = group
        for p in factorize(group):
            while order % p == 0 and _field_pow(a, order // p, self.modulus) == 1:
                order //= p
        return order

    # -- subfield coding ----------------------------------------------------

    def to_base_symbol(self, a: int) -> int:
        """Map a subfield element back to a base-field symbol (q=4 or q=2)."""
        if a == 0:
            return 0
        if a == 1:
            return 1
        if self.q == 4:
            if a == self.omega:
                return 2
            if a == self.mul(self.omega, self.omega):
                return 3
        raise ValueError("element does not lie in the base subfield")

    def from_base_symbol(self, s: int) -> int:
        if s == 0:
            return 0
        if s == 1:
            return 1
        if self.q == 4:
            if s == 2:
                return self.omega
            if s == 3:
                return self.mul(self.omega, self.omega)
        raise ValueError(f"invalid base symbol {s} for q={self.q}")

    def eval_base_poly(self, poly: np.ndarray, point: int) -> int:
        """Evaluate a base-field polynomial (symbol array) at a field point."""
        acc = 0
        for c in reversed(np.asarray(poly, dtype=np.uint8)):
            acc = self.mul(acc, point) ^ self.from_base_symbol(int(c))
        return acc


@lru_cache(maxsize=None)
def ext_build(n: int, q: int = 4) -> ExtField:
    """Field GF(q^r) with r = ord_n(q) minimal, plus the pinned alpha.

    n must be odd and >= 3 (gcd(n, q) = 1 is then automatic).
    """
    if q not in (2, 4):
        raise ValueError("q must be 2 or 4")
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    r = mult_order(q, n)
    degree = r if q == 2 else 2 * r
    primitive = degree <= _PRIMITIVITY_DEGREE_LIMIT
    modulus = smallest_irreducible(degree, primitive)
    group = (1 << degree) - 1
    n_fac = factorize(n)
    sub_exp = group // n

    def try_gamma(g: int) -> tuple[int, int] | None:
        alpha = _field_pow(g, sub_exp, modulus)
        if alpha == 0 or _field_pow(alpha, n, modulus) != 1:
            return None
        for p in n_fac:
            if _field_pow(alpha, n // p, modulus) == 1:
                return None
        omega = 0
        if q == 4:
            omega = _field_pow(g, group // 3, modulus)
            if omega == 1 or _field_pow(omega, 3, modulus) != 1:
                return None
        return alpha, omega

    gamma = 2  # the residue class of x; always works for a primitive modulus
    found = try_gamma(gamma)
    while found is None:
        gamma += 1
        if gamma > group + 1:
            raise RuntimeError("no suitable generator found")
        found = try_gamma(gamma)
    alpha, omega = found
    return ExtField(q=q, n=n, r=r, modulus=modulus, gamma=gamma, alpha=alpha, omega=omega)


def minimal_poly(ext: ExtField, coset: frozenset[int] | set[int]) -> np.ndarray:
    """prod_{j in coset} (X - alpha^j), coefficients as base-field symbols.

    The coset must be closed under multiplication by q mod n; the product
    then has subfield coefficients by Galois invariance.
    """
    coset = set(int(c) % ext.n for c in coset)
    if not coset:
        raise ValueError("empty coset")
    for c in coset:
        if (c * ext.q) % ext.n not in coset:
            raise ValueError(f"set not closed under multiplication by {ext.q} mod {ext.n}")
    # Horner-style product in the big field, little-endian coefficients
    poly = [1]
    for j in sorted(coset):
        root = ext.alpha_pow(j)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] ^= ext.mul(c, root)  # times (-root) = root in char 2
            nxt[i + 1] ^= c
        poly = nxt
    return np.array([ext.to_base_symbol(c) for c in poly], dtype=np.uint8)


def defining_exponents(ext: ExtField, poly: np.ndarray) -> frozenset[int]:
    """{t in Z_n : poly(alpha^t) = 0} for a base-field polynomial."""
    out = set()
    for t in range(ext.n):
        if ext.eval_base_poly(poly, ext.alpha_pow(t)) == 0:
            out.add(t)
    return frozenset(out)


def binary_minimal_poly(ext: ExtField, coset) -> np.ndarray:
    if ext.q != 2:
        raise ValueError("binary minimal polynomial needs a q=2 field")
    return minimal_poly(ext, coset)


def gf4_embedding_check(ext: ExtField) -> bool:
    """omega^2 = omega + 1 must hold inside the big field (q=4 only)."""
    if ext.q != 4:
        return True
    return ext.mul(ext.omega, ext.omega) == (ext.omega ^ 1)
