"""Cyclic coefficient strings: equivalence, duals, and blowdown transforms.

A chain of surgery coefficients (-a_1, ..., -a_n) with all a_i >= 2 is
recorded as the plain tuple (a_1, ..., a_n).  Two strings describe the
same surgery when one is a cyclic rotation and/or reversal of the
other, so everything downstream works with the canonical form: the
lexicographically smallest tuple in the dihedral orbit.

Two dualities appear throughout:

* the linear dual of a string b, the unique entries->=2 string c with
  [c] = p/(p-q) where [b] = p/q (orientation reversal of a linear
  plumbing);
* the cyclic dual, which swaps the roles of the "2^[m]" runs and the
  "3+n" entries of a cyclic string (orientation reversal of a cyclic
  plumbing, i.e. of a torus bundle).

Strings serialize as comma-separated decimal integers, e.g. "3,2,2,3,5".
"""

from __future__ import annotations

from .contfrac import hj_eval, hj_expand


class StringError(ValueError):
    """Raised on malformed coefficient strings."""


class AllTwosError(StringError):
    """Raised where an all-2 string has no defined result."""


class DegenerateCoefficientError(StringError):
    """Raised when a blowdown transform produces a 0 or +-1 coefficient.

    Such coefficients would call for further blowdowns that are not part
    of the transform, so they are reported instead of being reduced.
    """


def validate_chain(a) -> tuple[int, ...]:
    """Check entries >= 2 and length >= 1; return the tuple."""
    a = tuple(a)
    if not a:
        raise StringError("empty coefficient string")
    for x in a:
        if x < 2:
            raise StringError(f"coefficient {x} < 2 in {a}")
    return a


def validate_linear(b) -> tuple[int, ...]:
    """Check a (possibly empty) linear string with entries >= 2."""
    b = tuple(b)
    for x in b:
        if x < 2:
            raise StringError(f"coefficient {x} < 2 in {b}")
    return b


def parse_string(text: str) -> tuple[int, ...]:
    """Parse a comma-separated coefficient string like '3,2,2,3,5'."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise StringError(f"malformed string literal {text!r}") from exc


def format_string(a) -> str:
    return ",".join(str(x) for x in a)


def rotate(a, k: int) -> tuple[int, ...]:
    """Left rotation by k (mod n)."""
    a = tuple(a)
    k %= len(a)
    return a[k:] + a[:k]


def reverse(a) -> tuple[int, ...]:
    return tuple(reversed(tuple(a)))


def canonical_form(a) -> tuple[int, ...]:
    """Lexicographic minimum over all rotations of a and of reverse(a)."""
    a = validate_chain(a)
    r = reverse(a)
    return min(min(rotate(a, k), rotate(r, k)) for k in range(len(a)))


def equivalent(a, b) -> bool:
    return canonical_form(a) == canonical_form(b)


def i_invariant(a) -> int:
    """The complexity invariant I(a) = sum(a_i - 3)."""
    a = validate_chain(a)
    return sum(a) - 3 * len(a)


def is_palindrome(b) -> bool:
    b = tuple(b)
    if not b:
        raise StringError("palindrome test needs a nonempty string")
    return b == reverse(b)


def power_concat(a, p: int) -> tuple[int, ...]:
    """a repeated p times; multiplies the I invariant by p."""
    a = validate_chain(a)
    if p < 1:
        raise StringError(f"power must be >= 1, got {p}")
    return a * p


def linear_dual(b) -> tuple[int, ...]:
    """Linear dual: [dual] = p/(p-q) where [b] = p/q.

    The dual of the all-2 string of length k is (k+1), and the dual of
    the special string (1) is the empty string.
    """
    b = tuple(b)
    if b == (1,):
        return ()
    if not b:
        raise StringError("linear dual of the empty string is (1), not a string")
    b = validate_linear(b)
    f = hj_eval(b)
    return hj_expand(f.p, f.p - f.q)


def cyclic_blocks(a) -> list[tuple[int, int]]:
    """Block decomposition of a cyclic string with some entry >= 3.

    Rotates a so it starts at an entry >= 3 (the first such position of
    the canonical form) and returns [(big_1, run_1), ...]: each entry
    >= 3 together with the length of the 2-run that follows it
    cyclically.
    """
    a = canonical_form(a)
    if max(a) < 3:
        raise AllTwosError(f"{a} has no entry >= 3")
    start = next(i for i, x in enumerate(a) if x >= 3)
    a = rotate(a, start)
    blocks = []
    i = 0
    while i < len(a):
        big = a[i]
        run = 0
        i += 1
        while i < len(a) and a[i] == 2:
            run += 1
            i += 1
        blocks.append((big, run))
    return blocks


def cyclic_dual(a) -> tuple[int, ...]:
    """Cyclic dual: blockwise (2^[m], 3+n, ...) <-> (3+m, 2^[n], ...).

    Undefined (raises AllTwosError) for all-2 strings, whose bundles are
    parabolic.  Involutive up to equivalence, and I(a) + I(dual) = 0.
    """
    blocks = cyclic_blocks(a)
    out: list[int] = []
    # The run preceding each big entry (cyclically) becomes its new big
    # entry, so the run of the *previous* block pairs with each big one.
    for j, (big, _run) in enumerate(blocks):
        prev_run = blocks[j - 1][1]
        out.append(3 + prev_run)
        out.extend([2] * (big - 3))
    return canonical_form(out)


def dual_tail_coeffs(a, i: int) -> tuple[int, ...]:
    """Mixed-sign chain coefficients with the tail replaced by its dual.

    Splits a = (a_1, ..., a_i | a_{i+1}, ..., a_n), negates the head
    with its two end entries reduced by 1 (both reductions land on a_1
    when i = 1), and appends the linear dual of the tail:

        (-(a_1-1), -a_2, ..., -(a_i-1), d_1, ..., d_j).

    Raises DegenerateCoefficientError if any output coefficient is 0 or
    +-1, since those would require further blowdowns.
    """
    a = validate_chain(a)
    n = len(a)
    if not 1 <= i <= n - 1:
        raise StringError(f"split index {i} out of range for length {n}")
    head = list(a[:i])
    head[0] -= 1
    head[-1] -= 1
    tail_dual = linear_dual(a[i:])
    out = tuple(-x for x in head) + tail_dual
    for x in out:
        if abs(x) <= 1:
            raise DegenerateCoefficientError(
                f"transform of {a} at split {i} yields coefficient {x}"
            )
    return out
