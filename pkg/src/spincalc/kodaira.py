"""Canonical-class decomposition and rigidity bookkeeping at genus 8.

On the even-spin moduli space of genus 8 the canonical class decomposes
exactly as

    K = 1/2 * (pullback of the plane-septic Brill-Noether class)
        + 8 * (theta-null class)
        + sum_i (a_i alpha_i + b_i beta_i),

with strictly positive coefficients (a_i, b_i) = (4,8), (10,14), (13,17),
(14,18).  Each summand is covered by a pencil pairing negatively with it
and zero with the others, which certifies that the whole class is rigid.
This module replays exactly that numeric skeleton; the bridging geometric
steps are quoted, not recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import (btilde_curve, covering_degree, gamma_curve, pair,
                     r_curve_g8, septic_pencil_curve)
from .picard import (ALPHA0, BETA0, LAMBDA, DivisorClass, alpha, beta,
                     brill_noether_g8, canonical_class, divisor_class,
                     pullback_to_spin, spin_plus, theta_null)


class ResidualNonzeroError(ValueError):
    """The decomposition does not close on the pinned part."""


class NonPositiveCoefficientError(ValueError):
    """A boundary coefficient of the decomposition fails positivity."""


@dataclass(frozen=True)
class DecompositionResult:
    """Boundary coefficients of the canonical decomposition; `residual`
    is what is left after removing all three pinned pieces and must be
    the zero class."""

    a: dict
    b: dict
    residual: DivisorClass


def canonical_decomposition_g8(theta: DivisorClass | None = None,
                               bn: DivisorClass | None = None
                               ) -> DecompositionResult:
    """Solve for the boundary part of the genus-8 canonical class.

    Subtracts half the spin pullback of the Brill-Noether class and eight
    times the theta-null class from the canonical class, reads off the
    alpha_i / beta_i coefficients, and demands an exactly zero residual
    and strict positivity.  The eight coefficients are derived values:
    they follow from the three pinned classes.
    """
    theta = theta if theta is not None else theta_null(8)
    bn = bn if bn is not None else brill_noether_g8()
    k = canonical_class(spin_plus(8))
    d = k - Fraction(1, 2) * pullback_to_spin(bn) - 8 * theta
    a = {i: d.coeff(alpha(i)) for i in range(1, 5)}
    b = {i: d.coeff(beta(i)) for i in range(1, 5)}
    boundary = [(alpha(i), a[i]) for i in range(1, 5)]
    boundary += [(beta(i), b[i]) for i in range(1, 5)]
    residual = d - divisor_class(d.space, boundary)
    if not residual.is_zero():
        raise ResidualNonzeroError(f"residual {residual}")
    if any(v <= 0 for v in a.values()) or any(v <= 0 for v in b.values()):
        raise NonPositiveCoefficientError(f"a={a}, b={b}")
    return DecompositionResult(a=a, b=b, residual=residual)


@dataclass(frozen=True)
class RigidityRow:
    """One component of an effective decomposition, its covering curve,
    the (negative) self-pairing and the (zero) cross-pairings."""

    component: str
    curve: str
    self_pairing: Fraction
    cross_pairings: tuple


@dataclass(frozen=True)
class RigidityReport:
    rows: tuple
    notes: tuple = ()
    #: exact-value conditions imposed by the constructing operation, on
    #: top of the sign pattern (negative self, vanishing cross) below
    extra_conditions: bool = True

    @property
    def verdict(self) -> bool:
        signs = all(r.self_pairing < 0 and
                    all(v == 0 for _, v in r.cross_pairings)
                    for r in self.rows)
        return signs and self.extra_conditions


def rigidity_report_g8(theta: DivisorClass | None = None,
                       bn: DivisorClass | None = None) -> RigidityReport:
    """Pair every component of the canonical decomposition with its
    covering curve.

    The doubly-elliptic pencil covers the theta-null divisor (pairing -1,
    zero against the Brill-Noether pullback and the higher boundary); the
    spin lift of the septic pencil covers the Brill-Noether pullback with
    pairing -covering_degree(8) in units of the positive normalization
    constant of that divisor.  Rigidity of the higher boundary components
    themselves is quoted, not recomputed.
    """
    theta = theta if theta is not None else theta_null(8)
    bn = bn if bn is not None else brill_noether_g8()
    bn_pull = pullback_to_spin(bn)
    r = r_curve_g8()
    crosses = [("pullback of bn8", pair(r, bn_pull))]
    for i in range(1, 5):
        crosses.append((alpha(i), r.pairing(alpha(i))))
        crosses.append((beta(i), r.pairing(beta(i))))
    row_theta = RigidityRow("theta_null", r.label, pair(r, theta),
                            tuple(crosses))
    lift = btilde_curve(septic_pencil_curve())
    row_bn = RigidityRow("pullback of bn8", lift.label, pair(lift, bn_pull),
                         ())
    notes = (
        "the Brill-Noether self-pairing is the coefficient of the positive "
        "normalization constant of that divisor",
        f"covering degree of the lift: {covering_degree(8)}",
        "theta-null pairing of the lift is undefined (its alpha_0/beta_0 "
        "split is not determined) and is not needed",
        "rigidity of the higher boundary components alpha_i, beta_i: "
        "cited, not replayed",
    )
    return RigidityReport(rows=(row_theta, row_bn), notes=notes)


def theta_rigidity_report(g: int,
                          theta: DivisorClass | None = None
                          ) -> RigidityReport:
    """Covering-curve certificate for the theta-null divisor, genus 4..9.

    The pencil pairs -2 with the theta-null class for genus >= 5 and -1
    at genus 4, pairs zero with every higher boundary class, and its
    alpha_0/beta_0 pairings exhaust the Noether budget.
    """
    theta = theta if theta is not None else theta_null(g)
    c = gamma_curve(g)
    crosses = []
    for i in range(1, g // 2 + 1):
        crosses.append((alpha(i), c.pairing(alpha(i))))
        crosses.append((beta(i), c.pairing(beta(i))))
    row = RigidityRow("theta_null", c.label, pair(c, theta), tuple(crosses))
    expected = Fraction(-1 if g == 4 else -2)
    budget = c.pairing(ALPHA0) + 2 * c.pairing(BETA0)
    notes = (
        f"lambda={c.pairing(LAMBDA)}, alpha_0={c.pairing(ALPHA0)}, "
        f"beta_0={c.pairing(BETA0)}, alpha_0+2*beta_0={budget}",
        f"expected theta-null pairing at genus {g}: {expected}",
    )
    return RigidityReport(rows=(row,), notes=notes,
                          extra_conditions=row.self_pairing == expected)
