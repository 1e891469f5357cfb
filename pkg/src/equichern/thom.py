"""Degeneracy-locus classes and Segre-SM series.

* Thom-Porteous: the locus where a generic map ``E -> F`` (ranks ``e <= f``)
  has a kernel of dimension at least ``i`` has codimension ``i(f-e+i)`` and
  class ``det(c_{f-e+i+j-l}(F - E))`` of size ``i``.
* For a smooth invariant linear subspace cut out by coordinates of weights
  ``w_j``, the Segre-SM series is ``prod w_j / (1 + w_j)``.  Evaluated on
  ``P^n`` against ``c(TP^n) = (1+h)^(n+1)`` it gives the Euler
  characteristic of the zero locus of a generic section of split bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .charclass import (GradedRing, GradedSeries, chern_ring, hankel_det, proj_integrate,
                        proj_ring, proj_substitute)
from .errors import InvalidSpecError


@dataclass(frozen=True)
class PorteousSpec:
    """Ranks ``e`` of E and ``f`` of F, and the kernel-dimension bound ``i``."""

    e: int
    f: int
    i: int

    def __post_init__(self):
        if self.e < 1:
            raise InvalidSpecError(f"rank of E must be at least 1, got {self.e}")
        if self.f < self.e:
            raise InvalidSpecError(f"rank of F ({self.f}) must be at least rank of E ({self.e})")
        if not 0 <= self.i <= self.e:
            raise InvalidSpecError(f"kernel dimension {self.i} outside 0..{self.e}")

    @property
    def shift(self) -> int:
        return self.f - self.e + self.i

    @property
    def codim(self) -> int:
        return self.i * self.shift


@dataclass(frozen=True)
class BundleData:
    """Split bundles ``E = sum O(a)``, ``F = sum O(b)`` over ``P^n``."""

    n: int
    e_degrees: tuple[int, ...]
    f_degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e_degrees", tuple(self.e_degrees))
        object.__setattr__(self, "f_degrees", tuple(self.f_degrees))
        if self.n < 0:
            raise InvalidSpecError("base dimension must be non-negative")

    def check(self, spec: PorteousSpec):
        if len(self.e_degrees) != spec.e or len(self.f_degrees) != spec.f:
            raise InvalidSpecError(
                f"bundle ranks ({len(self.e_degrees)}, {len(self.f_degrees)}) do not match the Porteous ranks ({spec.e}, {spec.f})")


def porteous_tp(spec: PorteousSpec, trunc: int | None = None) -> GradedSeries:
    """Thom polynomial of the kernel-rank locus, in the Chern classes of ``F - E``."""
    D = spec.codim if trunc is None else trunc
    if D < spec.codim:
        raise InvalidSpecError(f"truncation {D} below the codimension {spec.codim}")
    nvars = max(spec.shift + spec.i - 1, 1)
    ring = chern_ring(nvars, D)
    return hankel_det(lambda j: ring.gen(f"c{j}"), spec.i, spec.shift, ring)


def virtual_chern(bundles: BundleData, ring: GradedRing | None = None) -> GradedSeries:
    """``c(F - E) = prod (1 + b h) / prod (1 + a h)`` in ``H^*(P^n)``."""
    ring = ring if ring is not None else proj_ring(bundles.n)
    h = ring.gen("h")
    cf = ring.one()
    for b in bundles.f_degrees:
        cf = cf * (1 + b * h)
    ce = ring.one()
    for a in bundles.e_degrees:
        ce = ce * (1 + a * h)
    return cf / ce


def degeneracy_class(spec: PorteousSpec, bundles: BundleData) -> GradedSeries:
    """Class of the degeneracy locus of a generic map ``E -> F`` over ``P^n``.

    Zero when the codimension exceeds ``n``.
    """
    bundles.check(spec)
    ring = proj_ring(bundles.n)
    if spec.codim > bundles.n:
        return ring.zero()
    c = virtual_chern(bundles, ring)
    tp = porteous_tp(spec)
    assignment = {name: c.homogeneous_part(v.degree) for name, v in zip(tp.ring.names, tp.ring.variables)}
    return proj_substitute(tp, assignment, ring, strict=True)


def segre_sm_smooth(normal_weights: Sequence[GradedSeries], ring: GradedRing | None = None) -> GradedSeries:
    """``prod w / (1 + w)`` over the normal weights; ``ring`` is needed only when the list is empty."""
    if ring is None:
        if not normal_weights:
            ring = GradedRing((), 0)
        else:
            ring = normal_weights[0].ring
    out = ring.one()
    for w in normal_weights:
        if w.is_zero():
            raise ValueError("normal weights must be nonzero")
        out = out * w / (1 + w)
    return out


def euler_of_singular_locus(normal_degrees: Sequence[int], n: int) -> Fraction:
    """Euler characteristic of the zero locus of a generic section of ``sum O(a_j)`` on ``P^n``."""
    if len(normal_degrees) > n:
        raise InvalidSpecError(f"{len(normal_degrees)} equations exceed the dimension {n}")
    return proj_integrate(locus_integrand(normal_degrees, n))


def locus_integrand(normal_degrees: Sequence[int], n: int) -> GradedSeries:
    """``tp^SM(c) * c(TP^n)`` in ``H^*(P^n)``, before integration."""
    ring = proj_ring(n)
    h = ring.gen("h")
    tp = segre_sm_smooth([a * h for a in normal_degrees], ring)
    return tp * (1 + h) ** (n + 1)
