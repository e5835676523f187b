"""Independent oracles for the combinatorial number families: triangle
recurrences, closed-form and series routes, brute-force counts, and rook
numbers on Ferrers boards.

Each family that admits more than one route gets more than one
implementation; the verification suites compare them.  Triangle entries
are exact integers or integer polynomials in the declared parameters;
any rational intermediate (series extraction, signed sums with a 1/2
factor, division by m^k k!) is asserted integral before it is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Iterator, Sequence, Union

from .ring import (
    Polynomial,
    coerce_polynomial,
    falling_factorial,
    sym,
    to_falling_factorial_basis,
)

ParamValue = Union[int, str, Polynomial]


def _comb0(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _as_param(value: ParamValue) -> Polynomial:
    if isinstance(value, str):
        return sym(value)
    return coerce_polynomial(value)


# -- Stirling / Bell ------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    if n == 1:
        return 1 if k == 1 else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    """Row sum of the Stirling triangle."""
    if n == 0:
        return 1
    return sum(stirling2(n, k) for k in range(1, n + 1))


# -- Eulerian families -----------------------------------------------------


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def eulerian_m(n: int, k: int, m: int) -> int:
    """Signed-sum formula for the m-Eulerian numbers.

    The declared special value at (n,k,m) = (0,0,1) is 1; everywhere else
    the halved sum must come out integral and is asserted to.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if (n, k, m) == (0, 0, 1):
        return 1
    total = 0
    for j in range(n + 2):
        v = m * (k - j) + 1
        total += (-1) ** j * comb(n + 1, j) * v**n * _sgn(v)
    half = Fraction(total, 2)
    if half.denominator != 1:
        raise ArithmeticError(f"non-integral m-Eulerian value at ({n},{k},{m})")
    return int(half)


def eulerian(n: int, k: int) -> int:
    """Classical Eulerian numbers (m = 1)."""
    return eulerian_m(n, k, 1)


# A008517; frozen reference rows for checking the derivative of the
# grammar {x -> x^2*y, y -> x^2*y}.  Row n lists k = 0..n-1.
SECOND_ORDER_EULERIAN_ROWS: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1, 2),
    3: (1, 8, 6),
    4: (1, 22, 58, 24),
    5: (1, 52, 328, 444, 120),
    6: (1, 114, 1452, 4400, 3708, 720),
    7: (1, 240, 5610, 32120, 58140, 33984, 5040),
    8: (1, 494, 19950, 195800, 644020, 785304, 341136, 40320),
}


# -- deformed Stirling families -------------------------------------------


@lru_cache(maxsize=None)
def stirling_p(n: int, k: int) -> Polynomial:
    """S_p(n,k) = (k-1+p) S_p(n-1,k) + S_p(n-1,k-1), S_p(n,1) = p^(n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > n:
        return Polynomial.zero()
    if n == 1:
        return Polynomial.one()
    return (sym("p") + (k - 1)) * stirling_p(n - 1, k) + stirling_p(n - 1, k - 1)


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> Polynomial:
    """S_q(n+1,k) = (k-1+q^n) S_q(n,k) + S_q(n,k-1), S_q(1,k) = [k=1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > n:
        return Polynomial.zero()
    if n == 1:
        return Polynomial.one()
    q = sym("q")
    return (q ** (n - 1) + (k - 1)) * q_stirling(n - 1, k) + q_stirling(n - 1, k - 1)


@lru_cache(maxsize=None)
def _gen_stirling_s1(n: int, k: int, r: int) -> int:
    # S_{r,1}(n,k) = [k + (n-1)(r-1)] S_{r,1}(n-1,k) + S_{r,1}(n-1,k-1)
    if k < 1 or k > n:
        return 0
    if n == 1:
        return 1 if k == 1 else 0
    return (k + (n - 1) * (r - 1)) * _gen_stirling_s1(n - 1, k, r) + _gen_stirling_s1(
        n - 1, k - 1, r
    )


@lru_cache(maxsize=None)
def _gen_stirling_rr(n: int, k: int, r: int) -> int:
    # S_{r,r}(n+1,k) = sum_p C(k+p-r,p) r^(falling p) S_{r,r}(n,k+p-r)
    if k < r or k > n * r:
        return 0
    if n == 1:
        return 1 if k == r else 0
    return sum(
        _comb0(k + p - r, p) * perm(r, p) * _gen_stirling_rr(n - 1, k + p - r, r)
        for p in range(r + 1)
    )


def gen_stirling_recur(n: int, k: int, r: int, s: int) -> int:
    """Recurrence route for the generalized Stirling numbers; only the
    two parameter lines s = 1 and s = r have published recurrences."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if s == 1:
        return _gen_stirling_s1(n, k, r)
    if s == r:
        return _gen_stirling_rr(n, k, r)
    raise ValueError(f"no recurrence route for s={s} (need s=1 or s=r)")


def gen_stirling_dobinski(n: int, k: int, r: int, s: int) -> int:
    """Series-extraction route: coefficient of x^k in the e^{-x}-weighted
    sum; finite because the convolution is lower-triangular in k."""
    if n < 1 or not 0 <= s <= r:
        raise ValueError("need n >= 1 and r >= s >= 0")
    if k < 0:
        return 0
    total = Fraction(0)
    for j in range(k + 1):
        product = 1
        for i in range(1, n + 1):
            product *= _falling_int(j + (i - 1) * (r - s), s)
        total += Fraction(product, factorial(j)) * Fraction((-1) ** (k - j), factorial(k - j))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral series extraction at ({n},{k},{r},{s})")
    value = int(total)
    if not s <= k <= n * s and value != 0:
        raise ArithmeticError(f"nonzero value outside support at ({n},{k},{r},{s})")
    return value


def _falling_int(x: int, s: int) -> int:
    out = 1
    for i in range(s):
        out *= x - i
    return out


def gen_bell(n: int, r: int) -> int:
    """Row sum of the (r,r) generalized Stirling triangle."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    return sum(_gen_stirling_rr(n, k, r) for k in range(r, n * r + 1))


# -- Whitney / Dowling ----------------------------------------------------


@lru_cache(maxsize=None)
def _whitney_symbolic(n: int, k: int) -> Polynomial:
    # W_{m,r}(n,k) = (r + k m) W(n-1,k) + W(n-1,k-1); W(0,k) = [k=0]
    if k < 0 or k > n:
        return Polynomial.zero()
    if n == 0:
        return Polynomial.one() if k == 0 else Polynomial.zero()
    return (sym("r") + sym("m") * k) * _whitney_symbolic(n - 1, k) + _whitney_symbolic(
        n - 1, k - 1
    )


def whitney(n: int, k: int, m: ParamValue = "m", r: ParamValue = "r") -> Polynomial:
    """Two-parameter Whitney numbers; parameters may stay symbolic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    value = _whitney_symbolic(n, k)
    return value.substitute("m", _as_param(m)).substitute("r", _as_param(r))


def dowling_poly(n: int, m: ParamValue = "m", r: ParamValue = "r", var: str = "x") -> Polynomial:
    """Generating polynomial sum_k W_{m,r}(n,k) var^k."""
    x = sym(var)
    total = Polynomial.zero()
    for k in range(n + 1):
        total = total + whitney(n, k, m, r) * x**k
    return total


def _set_partitions(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1 :]
        yield [[first]] + partition


def rstirling_bruteforce(n: int, k: int, r: int) -> int:
    """Count partitions of {1..n+r} into k+r nonempty blocks keeping the
    elements 1..r in distinct blocks, by exhaustive enumeration."""
    if n < 0 or r < 0:
        raise ValueError("need n >= 0 and r >= 0")
    if n + r > 12:
        raise ValueError("instance too large for brute force (n + r > 12)")
    total = 0
    for partition in _set_partitions(list(range(1, n + r + 1))):
        if len(partition) != k + r:
            continue
        if all(sum(1 for x in block if x <= r) <= 1 for block in partition):
            total += 1
    return total


# -- Stirling-Frobenius subset numbers -------------------------------------

SF_VARIANTS = ("plain", "bar", "tilde")


@lru_cache(maxsize=None)
def _sf_symbolic(n: int, k: int, variant: str) -> Polynomial:
    if k < 0 or k > n:
        return Polynomial.zero()
    if n == 0:
        return Polynomial.one() if k == 0 else Polynomial.zero()
    m = sym("m")
    stay = (m * (k + 1) - 1) * _sf_symbolic(n - 1, k, variant)
    if variant == "plain":
        step = _sf_symbolic(n - 1, k - 1, variant)
    elif variant == "bar":
        step = m * _sf_symbolic(n - 1, k - 1, variant)
    else:
        step = m * k * _sf_symbolic(n - 1, k - 1, variant)
    return stay + step


def sf_numbers(n: int, k: int, m: ParamValue = "m", variant: str = "plain") -> Polynomial:
    """Stirling-Frobenius subset numbers and their bar/tilde variants.

    bar = m^k * plain and tilde = m^k k! * plain; each variant also has
    its own recurrence, which is what this computes (the relations are
    asserted in the verification suite).
    """
    if variant not in SF_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    return _sf_symbolic(n, k, variant).substitute("m", _as_param(m))


def sf_from_eulerian(n: int, k: int, m: int) -> int:
    """Formula route: (1/(m^k k!)) sum_j E_m(n,j) C(j, n-k)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = sum(eulerian_m(n, j, m) * _comb0(j, n - k) for j in range(n + 1))
    value = Fraction(total, m**k * factorial(k))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral subset number at ({n},{k},{m})")
    return int(value)


# -- special polynomial families -------------------------------------------


def special_poly(family: str, n: int, var: str | None = None) -> Polynomial:
    """Closed forms for the two concluding grammar examples.

    "bessel": sum_k (n+k)!/((n-k)! k!) (x/2)^k, asserted to clear the 2^k.
    "laguerre-square": sum_k k! C(n,k)^2 y^(n-k).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if family == "bessel":
        x = sym(var or "x")
        total = Polynomial.zero()
        for k in range(n + 1):
            c = Fraction(factorial(n + k), factorial(n - k) * factorial(k) * 2**k)
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient in theta_{n}")
            total = total + x**k * Polynomial.rational(c)
        return total
    if family == "laguerre-square":
        y = sym(var or "y")
        total = Polynomial.zero()
        for k in range(n + 1):
            total = total + y ** (n - k) * Polynomial.rational(factorial(k) * comb(n, k) ** 2)
        return total
    raise ValueError(f"unknown special family {family!r}")


# -- rook numbers -----------------------------------------------------------


@dataclass(frozen=True)
class FerrersBoard:
    """Board with nondecreasing column heights."""

    heights: tuple[int, ...]

    def __post_init__(self):
        if any(h < 0 for h in self.heights):
            raise ValueError("column heights must be >= 0")
        if any(a > b for a, b in zip(self.heights, self.heights[1:])):
            raise ValueError("column heights must be nondecreasing")

    @staticmethod
    def parse(text: str) -> "FerrersBoard":
        text = text.strip()
        if not text:
            return FerrersBoard(())
        return FerrersBoard(tuple(int(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.heights)


def rook_numbers(board: FerrersBoard) -> list[int]:
    """Counts r_0..r_n of non-attacking rook placements, by exhaustive
    enumeration over columns and row assignments."""
    n = len(board.heights)
    counts = [0] * (n + 1)

    def place(col: int, used_rows: set[int], placed: int) -> None:
        if col == n:
            counts[placed] += 1
            return
        place(col + 1, used_rows, placed)
        for row in range(1, board.heights[col] + 1):
            if row not in used_rows:
                used_rows.add(row)
                place(col + 1, used_rows, placed + 1)
                used_rows.remove(row)

    place(0, set(), 0)
    return counts


def staircase_board(n: int, with_extra_column: bool = False) -> FerrersBoard:
    """Heights 1,1,3,3,...,2n-1,2n-1 and optionally a final column 2n."""
    heights: list[int] = []
    for i in range(1, n + 1):
        heights.extend((2 * i - 1, 2 * i - 1))
    if with_extra_column:
        heights.append(2 * n)
    return FerrersBoard(tuple(heights))


# -- identity checks ---------------------------------------------------------


def falling_factorial_identity_check(n: int, r: int, s: int) -> bool:
    """Expand prod_j (x + (j-1)(r-s))^(falling s) in the falling-factorial
    basis and compare every coefficient with the matching generalized
    Stirling value (recurrence route for s in {1, r}, else series route)."""
    if n < 1 or not 0 <= s <= r:
        raise ValueError("need n >= 1 and r >= s >= 0")
    x = sym("x")
    product = Polynomial.one()
    for j in range(1, n + 1):
        product = product * falling_factorial(x + (j - 1) * (r - s), s)
    coeffs = to_falling_factorial_basis(product, "x")
    for k in range(n * s + 1):
        actual = coeffs[k] if k < len(coeffs) else Polynomial.zero()
        if s in (1, r):
            expected = gen_stirling_recur(n, k, r, s) if s <= k else 0
        else:
            expected = gen_stirling_dobinski(n, k, r, s)
        if actual != Polynomial.rational(expected):
            return False
    return True


# -- triangle container -------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    """Rows of polynomial values indexed (n, k), with parameter bindings."""

    family: str
    params: dict[str, str] = field(default_factory=dict)
    entries: tuple[tuple[int, int, Polynomial], ...] = ()

    def to_csv(self) -> str:
        params = ";".join(f"{key}={value}" for key, value in sorted(self.params.items()))
        lines = ["family,params", f"{self.family},{params}"]
        lines.extend(f"{n},{k},{value}" for n, k, value in self.entries)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "params": self.params,
            "entries": [
                {"n": n, "k": k, "value": str(value)} for n, k, value in self.entries
            ],
        }
        return json.dumps(payload, indent=2)

    def to_plain(self) -> str:
        lines = []
        current_n = None
        row: list[str] = []
        for n, k, value in self.entries:
            if n != current_n:
                if row:
                    lines.append(f"n={current_n}: " + ", ".join(row))
                current_n = n
                row = []
            row.append(f"k={k}: {value}")
        if row:
            lines.append(f"n={current_n}: " + ", ".join(row))
        return "\n".join(lines) + "\n"


TRIANGLE_FAMILIES = (
    "stirling2",
    "eulerian",
    "second-order-eulerian",
    "stirling-p",
    "q-stirling",
    "gen-stirling",
    "whitney",
    "sf-plain",
    "sf-bar",
    "sf-tilde",
)


def _int_param(params: dict[str, ParamValue], name: str, default: int) -> int:
    value = params.get(name, default)
    if not isinstance(value, int):
        raise ValueError(f"parameter {name} must be an integer for this family")
    return value


def build_triangle(family: str, max_n: int, params: dict[str, ParamValue] | None = None) -> Triangle:
    """Construct the (n, k) triangle of one family up to row max_n."""
    params = dict(params or {})
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    entries: list[tuple[int, int, Polynomial]] = []
    shown: dict[str, str] = {}
    if family == "stirling2":
        for n in range(1, max_n + 1):
            entries.extend((n, k, Polynomial.rational(stirling2(n, k))) for k in range(1, n + 1))
    elif family == "eulerian":
        m = _int_param(params, "m", 1)
        shown["m"] = str(m)
        for n in range(1, max_n + 1):
            entries.extend((n, k, Polynomial.rational(eulerian_m(n, k, m))) for k in range(n))
    elif family == "second-order-eulerian":
        if max_n > max(SECOND_ORDER_EULERIAN_ROWS):
            raise ValueError("bundled reference rows stop at n=8")
        for n in range(1, max_n + 1):
            row = SECOND_ORDER_EULERIAN_ROWS[n]
            entries.extend((n, k, Polynomial.rational(row[k])) for k in range(len(row)))
    elif family == "stirling-p":
        shown["p"] = str(params.get("p", "sym"))
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                value = stirling_p(n, k)
                if isinstance(params.get("p"), int):
                    value = value.substitute("p", params["p"])
                entries.append((n, k, value))
    elif family == "q-stirling":
        shown["q"] = str(params.get("q", "sym"))
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                value = q_stirling(n, k)
                if isinstance(params.get("q"), int):
                    value = value.substitute("q", params["q"])
                entries.append((n, k, value))
    elif family == "gen-stirling":
        r = _int_param(params, "r", 2)
        s = _int_param(params, "s", r)
        shown.update(r=str(r), s=str(s))
        for n in range(1, max_n + 1):
            low, high = (1, n) if s == 1 else (r, n * r)
            entries.extend(
                (n, k, Polynomial.rational(gen_stirling_recur(n, k, r, s)))
                for k in range(low, high + 1)
            )
    elif family == "whitney":
        m = params.get("m", "m")
        r = params.get("r", "r")
        shown.update(m=str(m), r=str(r))
        for n in range(1, max_n + 1):
            entries.extend((n, k, whitney(n, k, m, r)) for k in range(n + 1))
    elif family in ("sf-plain", "sf-bar", "sf-tilde"):
        variant = family.split("-", 1)[1]
        m = params.get("m", "m")
        shown["m"] = str(m)
        for n in range(1, max_n + 1):
            entries.extend((n, k, sf_numbers(n, k, m, variant)) for k in range(n + 1))
    else:
        raise ValueError(f"unknown triangle family {family!r}")
    return Triangle(family, shown, tuple(entries))
