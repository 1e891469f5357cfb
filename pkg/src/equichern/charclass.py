"""Truncated graded power series over the rationals.

Variables carry a positive degree (``c_i`` has degree ``i``, the hyperplane
class and torus parameters have degree 1) and every series lives in a
:class:`GradedRing` that discards monomials of weighted degree above the
ring's truncation order.  Cohomology of projective space is the one-variable
ring in ``h`` truncated at ``h^n``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DegreeMismatchError, DegreeMismatchWarning, NotInvertibleError

DEFAULT_TRUNC = 8

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class GradedVariable:
    name: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name!r} needs a positive degree")


@dataclass(frozen=True)
class GradedRing:
    variables: tuple[GradedVariable, ...]
    trunc: int = DEFAULT_TRUNC

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.trunc < 0:
            raise ValueError("truncation order must be non-negative")

    @classmethod
    def of(cls, names_degrees: Iterable[tuple[str, int]] | Iterable[str], trunc: int = DEFAULT_TRUNC) -> GradedRing:
        vs = []
        for nd in names_degrees:
            vs.append(GradedVariable(nd) if isinstance(nd, str) else GradedVariable(*nd))
        return cls(tuple(vs), trunc)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(v.degree for v in self.variables)

    def weight(self, exp: Exponent) -> int:
        return sum(e * d for e, d in zip(exp, self.degrees))

    def with_trunc(self, trunc: int) -> GradedRing:
        return GradedRing(self.variables, trunc)

    def const(self, c) -> GradedSeries:
        c = Fraction(c)
        return GradedSeries(self, {(0,) * len(self.variables): c} if c else {})

    def one(self) -> GradedSeries:
        return self.const(1)

    def zero(self) -> GradedSeries:
        return GradedSeries(self, {})

    def gen(self, name: str) -> GradedSeries:
        i = self.names.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return GradedSeries(self, {exp: Fraction(1)})

    def gens(self) -> tuple[GradedSeries, ...]:
        return tuple(self.gen(n) for n in self.names)


class GradedSeries:
    """An element of a :class:`GradedRing`; immutable, exact.

    ``terms`` maps exponent vectors to nonzero rationals.  Arithmetic
    operands may be series over the same ring or plain numbers.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: Mapping[Exponent, object] | None = None):
        self.ring = ring
        clean = {}
        nv = len(ring.variables)
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match {nv} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            c = Fraction(c)
            if c and ring.weight(exp) <= ring.trunc:
                clean[exp] = clean.get(exp, 0) + c
        self.terms: dict[Exponent, Fraction] = {e: c for e, c in clean.items() if c}

    def _coerce(self, other) -> GradedSeries:
        if isinstance(other, GradedSeries):
            if other.ring != self.ring:
                raise ValueError("series live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return GradedSeries(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            c = Fraction(other)
            return GradedSeries(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        ring = self.ring
        D = ring.trunc
        right = [(e, c, ring.weight(e)) for e, c in other.terms.items()]
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            w1 = ring.weight(e1)
            for e2, c2, w2 in right:
                if w1 + w2 > D:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GradedSeries(ring, out)

    __rmul__ = __mul__

    def inverse(self) -> GradedSeries:
        c0 = self.constant_term
        if c0 == 0:
            raise NotInvertibleError("series with zero constant term has no inverse")
        # self = c0 (1 + u) with u of positive degree, so u^(D+1) = 0
        u = (self - c0) * (1 / c0)
        result = self.ring.one()
        power = self.ring.one()
        for _ in range(self.ring.trunc):
            power = power * (-u)
            if not power.terms:
                break
            result = result + power
        return result * (1 / c0)

    def __truediv__(self, other):
        if isinstance(other, GradedSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = self.ring.one()
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, GradedSeries):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring.variables), Fraction(0))

    def coeff(self, exp: Exponent | Mapping[str, int]) -> Fraction:
        if isinstance(exp, Mapping):
            exp = tuple(exp.get(n, 0) for n in self.ring.names)
        return self.terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({self.ring.weight(e) for e in self.terms})

    def homogeneous_part(self, d: int) -> GradedSeries:
        return GradedSeries(self.ring, {e: c for e, c in self.terms.items() if self.ring.weight(e) == d})

    def lowest_degree(self) -> int | None:
        ds = self.degrees()
        return ds[0] if ds else None

    def lowest_part(self) -> GradedSeries:
        d = self.lowest_degree()
        return self if d is None else self.homogeneous_part(d)

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or ds[0] == d)

    def truncate(self, trunc: int) -> GradedSeries:
        return GradedSeries(self.ring.with_trunc(trunc), self.terms)

    def _sorted_terms(self):
        ring = self.ring
        return sorted(self.terms.items(), key=lambda t: (ring.weight(t[0]), tuple(-x for x in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self._sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.ring.names, exp) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}" if c.denominator == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"GradedSeries({self})"


# -- functional forms ----------------------------------------------------

def series_mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a * b


def series_inverse(a: GradedSeries) -> GradedSeries:
    return a.inverse()


def series_div(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a / b


def torus_ring(rank: int, trunc: int = DEFAULT_TRUNC) -> GradedRing:
    return GradedRing.of([f"t{j + 1}" for j in range(rank)], trunc)


def linear_form(ring: GradedRing, weight: Sequence[int]) -> GradedSeries:
    """``sum_j w_j t_j`` in a ring whose variables are the torus parameters."""
    if len(weight) != len(ring.variables):
        raise ValueError(f"weight {list(weight)} has length {len(weight)}, ring has {len(ring.variables)} variables")
    return sum((g * w for g, w in zip(ring.gens(), weight)), ring.zero())


def chern_of_weights(weights: Sequence[Sequence[int]], rank: int, trunc: int = DEFAULT_TRUNC,
                     ring: GradedRing | None = None) -> GradedSeries:
    """Total equivariant Chern class of a torus representation with the given weights."""
    ring = ring if ring is not None else torus_ring(rank, trunc)
    out = ring.one()
    for w in weights:
        out = out * (1 + linear_form(ring, w))
    return out


def chern_ring(n: int, trunc: int = DEFAULT_TRUNC, prefix: str = "c") -> GradedRing:
    """Ring of universal Chern classes ``c1..cn`` (``ci`` of degree ``i``)."""
    return GradedRing(tuple(GradedVariable(f"{prefix}{i}", i) for i in range(1, n + 1)), trunc)


def hankel_det(entries: Callable[[int], GradedSeries], size: int, shift: int,
               ring: GradedRing | None = None) -> GradedSeries:
    """Determinant of the ``size x size`` matrix with ``(j, l)`` entry ``c_{shift+j-l}``.

    ``entries(i)`` is only consulted for ``i >= 1``; ``c_0 = 1`` and
    negative-index entries vanish.  If ``ring`` is omitted it is taken from
    ``entries(1)``.
    """
    if size < 0:
        raise ValueError("size must be non-negative")
    if ring is None:
        ring = entries(1).ring
    if size == 0:
        return ring.one()

    @lru_cache(maxsize=None)
    def c(i: int) -> GradedSeries:
        if i < 0:
            return ring.zero()
        if i == 0:
            return ring.one()
        return entries(i)

    @lru_cache(maxsize=None)
    def minor(row: int, used: int) -> GradedSeries:
        # Laplace expansion along ``row`` over the columns not yet in ``used``
        if row == size:
            return ring.one()
        total = ring.zero()
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            entry = c(shift + row - col)
            if entry.terms:
                sub = minor(row + 1, used | 1 << col)
                total = total + entry * sub if sign > 0 else total - entry * sub
            sign = -sign
        return total

    return minor(0, 0)


def proj_ring(n: int) -> GradedRing:
    """``H^*(P^n)`` as the ring in ``h`` truncated at ``h^n``."""
    return GradedRing((GradedVariable("h", 1),), n)


def proj_substitute(series: GradedSeries, assignment: Mapping[str, GradedSeries],
                    target: GradedRing | None = None, strict: bool = False) -> GradedSeries:
    """Replace every variable of ``series`` by the assigned element of ``target``.

    A degree-``d`` variable should be sent to something homogeneous of degree
    ``d``; otherwise a :class:`DegreeMismatchWarning` is issued, or
    :class:`DegreeMismatchError` raised when ``strict`` is set.
    """
    if target is None:
        target = next(iter(assignment.values())).ring if assignment else proj_ring(0)
    for v in series.ring.variables:
        if v.name not in assignment:
            raise KeyError(f"no value assigned to variable {v.name!r}")
        val = assignment[v.name]
        if val.ring != target:
            raise ValueError(f"value for {v.name!r} is not in the target ring")
        if not val.is_homogeneous(v.degree):
            msg = f"{v.name} has degree {v.degree} but is sent to {val}"
            if strict:
                raise DegreeMismatchError(msg)
            warnings.warn(msg, DegreeMismatchWarning, stacklevel=2)

    powers: dict[tuple[str, int], GradedSeries] = {}

    def power(name, e):
        key = (name, e)
        if key not in powers:
            powers[key] = assignment[name] ** e
        return powers[key]

    out = target.zero()
    for exp, c in series.terms.items():
        term = target.const(c)
        for name, e in zip(series.ring.names, exp):
            if e:
                term = term * power(name, e)
        out = out + term
    return out


def proj_integrate(e: GradedSeries) -> Fraction:
    """Degree of the top class: the coefficient of ``h^n`` over ``P^n``."""
    if len(e.ring.variables) != 1:
        raise ValueError("integration needs the one-variable ring of a projective space")
    return e.coeff((e.ring.trunc,))


def proj_class(ring: GradedRing, coeffs: Sequence) -> GradedSeries:
    """``sum_i coeffs[i] h^i``."""
    return GradedSeries(ring, {(i,): c for i, c in enumerate(coeffs)})


@dataclass(frozen=True)
class TruncatedHomology:
    """Stage ``m`` of the GL(1) approximation: truncated homology of ``P^m``.

    ``shifted_degrees[j] = -2j`` labels the summand ``H_{2m-2j}(P^m)``;
    ``inclusion`` maps stage ``m`` into stage ``m+1`` (rows: stage ``m+1``
    degrees, columns: stage ``m`` degrees).
    """

    m: int
    shifted_degrees: tuple[int, ...]
    homology_degrees: tuple[int, ...]
    ranks: tuple[int, ...]
    inclusion: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "shifted_degrees": list(self.shifted_degrees),
            "homology_degrees": list(self.homology_degrees),
            "ranks": list(self.ranks),
            "inclusion": [list(r) for r in self.inclusion],
        }


def bgl1_truncated(m: int) -> TruncatedHomology:
    if m < 0:
        raise ValueError("m must be non-negative")
    shifted = tuple(-2 * j for j in range(m + 1))
    hdeg = tuple(2 * m - 2 * j for j in range(m + 1))
    # each H_{2i}(P^m) is free of rank one, generated by a linear subspace
    ranks = tuple(1 for _ in range(m + 1))
    inclusion = tuple(tuple(1 if r == c else 0 for c in range(m + 1)) for r in range(m + 2))
    return TruncatedHomology(m, shifted, hdeg, ranks, inclusion)


def bgl1_stage_map(m: int, m2: int) -> tuple[tuple[int, ...], ...]:
    """Composite of the stage inclusions from ``m`` to ``m2 >= m``."""
    if m2 < m:
        raise ValueError("target stage must not be below the source stage")
    mat = [[1 if r == c else 0 for c in range(m + 1)] for r in range(m + 1)]
    for s in range(m, m2):
        inc = bgl1_truncated(s).inclusion
        mat = [[sum(inc[r][k] * mat[k][c] for k in range(s + 1)) for c in range(m + 1)] for r in range(s + 2)]
    return tuple(tuple(r) for r in mat)
