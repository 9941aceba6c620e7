"""Hirzebruch-Jung continued fractions and torus bundle homology orders.

Everything here is exact integer arithmetic.  A negative continued
fraction

    [a_1, ..., a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n))

with all a_i >= 2 evaluates to a fraction p/q with p > q >= 0 and
gcd(p, q) = 1, and conversely every such fraction has a unique
expansion with entries >= 2.  The empty string evaluates to 1/0.

The monodromy of the hyperbolic torus bundle attached to a coefficient
string (a_1, ..., a_n) is conjugate to the matrix

    [[ p,  q],
     [-s, -r]]

where p/q = [a_1, ..., a_n] and s/r = [a_1, ..., a_{n-1}].  Its trace
is p - r, and the torsion subgroup of the first homology of the bundle
with monodromy +A (resp. -A) has order p - r - 2 (resp. p - r + 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ContfracError(ValueError):
    """Raised on malformed continued-fraction input."""


class NonHyperbolicError(ContfracError):
    """Raised when a homology-order formula needs trace > 2."""


@dataclass(frozen=True)
class Fraction:
    """A coprime pair p/q with p > q >= 0.  1/0 is the empty expansion."""

    p: int
    q: int

    def __post_init__(self):
        if not (self.p > self.q >= 0):
            raise ContfracError(f"need p > q >= 0, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ContfracError(f"{self.p}/{self.q} is not in lowest terms")

    def __str__(self):
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        p, _, q = text.partition("/")
        return cls(int(p), int(q) if q else 1)


@dataclass(frozen=True)
class MonodromyMatrix:
    """Entries of the normal-form monodromy [[p, q], [-s, -r]]."""

    p: int
    q: int
    s: int
    r: int

    def __post_init__(self):
        if self.q * self.s - self.p * self.r != 1:
            raise ContfracError("monodromy entries must satisfy qs - pr = 1")

    @property
    def trace(self) -> int:
        return self.p - self.r

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.p, self.q), (-self.s, -self.r))


def hj_eval(entries) -> Fraction:
    """Evaluate [a_1, ..., a_n] with entries >= 2; empty input gives 1/0."""
    p, q = 1, 0
    for x in reversed(tuple(entries)):
        if x <= 1:
            raise ContfracError(f"continued fraction entry {x} < 2")
        p, q = x * p - q, p
    return Fraction(p, q)


def hj_expand(p: int, q: int) -> tuple[int, ...]:
    """The unique entries->=2 expansion of p/q (p > q >= 0 coprime)."""
    if not (p > q >= 0):
        raise ContfracError(f"need p > q >= 0, got {p}/{q}")
    if math.gcd(p, q) != 1:
        raise ContfracError(f"{p}/{q} is not in lowest terms")
    out = []
    while q > 0:
        a = -(-p // q)  # ceil(p/q)
        out.append(a)
        p, q = q, a * q - p
    return tuple(out)


def dual_bridge_fractions(b, x: int) -> tuple[Fraction, Fraction]:
    """Closed-form values of the two chains bridging a dual pair by x+1.

    For linear-dual strings b, c with [b] = p/q and an integer x >= 1,
    the chain (b_1, ..., b_k, x+1, c_l, ..., c_1) evaluates to
    x*p^2 / (x*p*q + 1) and the companion chain (c_1, ..., c_l, x+1,
    b_k, ..., b_1) evaluates to x*p^2 / (x*p^2 - x*p*q + 1).
    """
    if x < 1:
        raise ContfracError(f"bridge parameter must be >= 1, got {x}")
    b = tuple(b)
    if not b:
        raise ContfracError("bridge needs a nonempty string")
    f = hj_eval(b)
    p, q = f.p, f.q
    return (
        Fraction(x * p * p, x * p * q + 1),
        Fraction(x * p * p, x * p * p - x * p * q + 1),
    )


def monodromy_matrix(a) -> MonodromyMatrix:
    """Normal-form monodromy data of the coefficient string a."""
    a = tuple(a)
    if not a:
        raise ContfracError("empty coefficient string")
    full = hj_eval(a)
    head = hj_eval(a[:-1])
    return MonodromyMatrix(full.p, full.q, head.p, head.q)


def torsion_order(a, sign: int) -> int:
    """|Tor H_1| of the bundle with monodromy sign*A(a), sign in {+1, -1}.

    Requires the hyperbolic condition trace = p - r > 2; all-2 strings
    (trace exactly 2) are rejected.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    m = monodromy_matrix(a)
    if m.trace <= 2:
        raise NonHyperbolicError(
            f"string {tuple(a)} has trace {m.trace} <= 2 (not hyperbolic)"
        )
    return m.trace - 2 if sign > 0 else m.trace + 2


def homology_order(a, parity: str) -> int:
    """|H_1| of the chain-link surgery with the given twisting parity."""
    if parity == "even":
        return torsion_order(a, +1)
    if parity == "odd":
        return torsion_order(a, -1)
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def s1a_square_order(a) -> int:
    """Torsion order p^2 for a string in the family S1a.

    Here p is the numerator of the half-string of any S1a decomposition
    of a; the value does not depend on the decomposition and always
    agrees with torsion_order(a, -1).
    """
    from .families import member

    hits = [w for w in member(a, mode="strict") if w.tag == "S1a"]
    if not hits:
        raise ContfracError(f"{tuple(a)} is not in the family S1a")
    orders = {hj_eval(w.params["b"]).p ** 2 for w in hits}
    if len(orders) != 1:
        raise AssertionError(f"S1a witnesses of {tuple(a)} disagree: {orders}")
    return orders.pop()


def is_square(n: int) -> bool:
    """Exact perfect-square test for n >= 0."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    r = math.isqrt(n)
    return r * r == n
