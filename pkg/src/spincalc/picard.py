"""Exact divisor-class calculus on three moduli-space Picard groups.

Divisor classes on the moduli space of stable curves of genus g, on the
Prym moduli space of etale double covers, and on the moduli space of even
spin curves are sparse vectors over a named basis:

    stable curves     lambda, delta_0, delta_1, ..., delta_{g//2}
    Prym curves       lambda, delta_0', delta_0'', delta_0^ram,
                      pi_delta_1, ..., pi_delta_{g//2}
    even spin curves  lambda, alpha_0, beta_0, alpha_1, beta_1, ...,
                      alpha_{g//2}, beta_{g//2}

Coefficients are exact rationals.  A basis symbol may instead be declared
*opaque*: its coefficient is unknown (divisor classes quoted in the
literature routinely trail off into unspecified boundary terms), and any
computation that would consume it raises instead of silently assuming
zero.  Opacity is absorbing under sums, nonzero scalings and pullbacks.

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

MBAR = "mbar"
RBAR = "rbar"
SPIN = "spin"

LAMBDA = "lambda"
DELTA0 = "delta_0"
D0P = "delta_0'"
D0PP = "delta_0''"
D0RAM = "delta_0^ram"
ALPHA0 = "alpha_0"
BETA0 = "beta_0"


def delta(i: int) -> str:
    return f"delta_{i}"


def pi_delta(i: int) -> str:
    return f"pi_delta_{i}"


def alpha(i: int) -> str:
    return f"alpha_{i}"


def beta(i: int) -> str:
    return f"beta_{i}"


class UnknownSymbolError(ValueError):
    """Symbol does not belong to the basis of the ambient space."""


class DuplicateSymbolError(ValueError):
    """Symbol listed twice, or both pinned and opaque."""


class SpaceMismatchError(ValueError):
    """Operands live on different moduli spaces."""


class ZeroDenominatorError(ValueError):
    """Slope of a class with vanishing delta_0 coefficient."""


class OpaqueCoefficientError(ValueError):
    """A needed coefficient is opaque."""


class BadParamError(ValueError):
    """Named divisor requested with inconsistent parameters."""


@dataclass(frozen=True)
class ModuliSpace:
    """One of the three moduli spaces, at a fixed genus >= 2."""

    kind: str
    genus: int

    def __post_init__(self):
        if self.kind not in (MBAR, RBAR, SPIN):
            raise ValueError(f"unknown moduli-space kind {self.kind!r}")
        if self.genus < 2:
            raise ValueError("genus must be at least 2")

    def __str__(self):
        base = {MBAR: "Mbar", RBAR: "Rbar", SPIN: "Sbar+"}[self.kind]
        return f"{base}_{self.genus}"


def mbar(g: int) -> ModuliSpace:
    return ModuliSpace(MBAR, g)


def rbar(g: int) -> ModuliSpace:
    return ModuliSpace(RBAR, g)


def spin_plus(g: int) -> ModuliSpace:
    return ModuliSpace(SPIN, g)


@lru_cache(maxsize=None)
def basis_symbols(space: ModuliSpace) -> tuple[str, ...]:
    """Ordered Picard-group basis of `space`."""
    h = space.genus // 2
    if space.kind == MBAR:
        return (LAMBDA,) + tuple(delta(i) for i in range(h + 1))
    if space.kind == RBAR:
        return (LAMBDA, D0P, D0PP, D0RAM) + tuple(
            pi_delta(i) for i in range(1, h + 1))
    parts = [LAMBDA, ALPHA0, BETA0]
    for i in range(1, h + 1):
        parts += [alpha(i), beta(i)]
    return tuple(parts)


@dataclass(frozen=True)
class DivisorClass:
    """Sparse exact-rational divisor class with an opaque tail.

    `coeffs` maps basis symbols to nonzero rationals; symbols in `opaque`
    have unknown coefficients; everything else is exactly zero.
    """

    space: ModuliSpace
    coeffs: dict
    opaque: frozenset = frozenset()

    def __post_init__(self):
        basis = set(basis_symbols(self.space))
        for sym in self.coeffs:
            if sym not in basis:
                raise UnknownSymbolError(f"{sym!r} not in basis of {self.space}")
        for sym in self.opaque:
            if sym not in basis:
                raise UnknownSymbolError(f"{sym!r} not in basis of {self.space}")
        clash = set(self.coeffs) & set(self.opaque)
        if clash:
            raise DuplicateSymbolError(f"pinned and opaque: {sorted(clash)}")

    def coeff(self, sym: str) -> Fraction:
        """Pinned coefficient of `sym` (exact zero when absent)."""
        if sym not in basis_symbols(self.space):
            raise UnknownSymbolError(f"{sym!r} not in basis of {self.space}")
        if sym in self.opaque:
            raise OpaqueCoefficientError(f"coefficient of {sym!r} is opaque")
        return self.coeffs.get(sym, Fraction(0))

    def is_opaque(self, sym: str) -> bool:
        return sym in self.opaque

    def is_zero(self) -> bool:
        return not self.coeffs and not self.opaque

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatchError(f"{self.space} vs {other.space}")
        opaque = self.opaque | other.opaque
        coeffs = {}
        for sym in set(self.coeffs) | set(other.coeffs):
            if sym in opaque:
                continue
            c = self.coeffs.get(sym, 0) + other.coeffs.get(sym, 0)
            if c:
                coeffs[sym] = c
        return DivisorClass(self.space, coeffs, opaque)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __neg__(self) -> "DivisorClass":
        return (-1) * self

    def __mul__(self, c) -> "DivisorClass":
        c = Fraction(c)
        if c == 0:
            return DivisorClass(self.space, {}, frozenset())
        return DivisorClass(self.space,
                            {s: c * v for s, v in self.coeffs.items()},
                            self.opaque)

    __rmul__ = __mul__

    def __str__(self):
        return format_class(self)


def format_class(d: DivisorClass) -> str:
    """Render a class in basis order; opaque coefficients print as `?`."""
    parts = []
    for sym in basis_symbols(d.space):
        if sym in d.opaque:
            parts.append((None, sym))
        elif d.coeffs.get(sym):
            parts.append((d.coeffs[sym], sym))
    if not parts:
        return "0"
    out = []
    for c, sym in parts:
        if c is None:
            out.append(f"+ ?*{sym}" if out else f"?*{sym}")
            continue
        mag = abs(c)
        body = sym if mag == 1 else f"{mag}*{sym}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def divisor_class(space: ModuliSpace, entries=(), opaque=()) -> DivisorClass:
    """Build a class from (symbol, rational) pairs plus an opaque set.

    Zero coefficients are dropped; repeated symbols and pinned-and-opaque
    clashes raise.

    >>> str(divisor_class(mbar(8), [("lambda", 22), ("delta_0", -3)]))
    '22*lambda - 3*delta_0'
    """
    basis = set(basis_symbols(space))
    coeffs = {}
    for sym, value in entries:
        if sym not in basis:
            raise UnknownSymbolError(f"{sym!r} not in basis of {space}")
        if sym in coeffs:
            raise DuplicateSymbolError(f"{sym!r} listed twice")
        coeffs[sym] = Fraction(value)
    coeffs = {s: v for s, v in coeffs.items() if v}
    return DivisorClass(space, coeffs, frozenset(opaque))


def zero_class(space: ModuliSpace) -> DivisorClass:
    return DivisorClass(space, {}, frozenset())


def _push_symbol(sym: str, images: dict, coeffs: dict, opaque: set, value):
    """Accumulate `value * images[sym]`; opaque value marks all images."""
    for img, mult in images[sym]:
        if value is None:
            opaque.add(img)
        else:
            coeffs[img] = coeffs.get(img, Fraction(0)) + mult * value


def _pullback(d: DivisorClass, target: ModuliSpace, images: dict) -> DivisorClass:
    if d.space.kind != MBAR:
        raise SpaceMismatchError("pullbacks start from the stable-curve space")
    coeffs: dict = {}
    opaque: set = set()
    for sym, value in d.coeffs.items():
        _push_symbol(sym, images, coeffs, opaque, value)
    for sym in d.opaque:
        _push_symbol(sym, images, coeffs, opaque, None)
    coeffs = {s: v for s, v in coeffs.items() if v and s not in opaque}
    return DivisorClass(target, coeffs, frozenset(opaque))


def pullback_to_prym(d: DivisorClass) -> DivisorClass:
    """Pullback along the Prym covering of the stable-curve space.

    lambda -> lambda,  delta_0 -> delta_0' + delta_0'' + 2*delta_0^ram,
    delta_i -> pi_delta_i.
    """
    g = d.space.genus
    images = {LAMBDA: [(LAMBDA, 1)],
              DELTA0: [(D0P, 1), (D0PP, 1), (D0RAM, 2)]}
    for i in range(1, g // 2 + 1):
        images[delta(i)] = [(pi_delta(i), 1)]
    return _pullback(d, rbar(g), images)


def pullback_to_spin(d: DivisorClass) -> DivisorClass:
    """Pullback along the even-spin covering of the stable-curve space.

    lambda -> lambda,  delta_0 -> alpha_0 + 2*beta_0,
    delta_i -> alpha_i + beta_i.
    """
    g = d.space.genus
    images = {LAMBDA: [(LAMBDA, 1)],
              DELTA0: [(ALPHA0, 1), (BETA0, 2)]}
    for i in range(1, g // 2 + 1):
        images[delta(i)] = [(alpha(i), 1), (beta(i), 1)]
    return _pullback(d, spin_plus(g), images)


def canonical_class(space: ModuliSpace) -> DivisorClass:
    """Canonical divisor class of the moduli space.

    On the spin space the class is pinned completely,
    13*lambda - 2*alpha_0 - 3*beta_0 - 2*sum(alpha_i+beta_i) - (alpha_1+beta_1).
    On the Prym space the higher boundary coefficients are opaque,
    13*lambda - 2*(delta_0'+delta_0'') - 3*delta_0^ram - (...).
    On the stable-curve space only 13*lambda - 2*delta_0 is pinned.
    """
    g = space.genus
    h = g // 2
    if space.kind == SPIN:
        entries = [(LAMBDA, 13), (ALPHA0, -2), (BETA0, -3)]
        for i in range(1, h + 1):
            c = -3 if i == 1 else -2
            entries += [(alpha(i), c), (beta(i), c)]
        return divisor_class(space, entries)
    if space.kind == RBAR:
        entries = [(LAMBDA, 13), (D0P, -2), (D0PP, -2), (D0RAM, -3)]
        opaque = {pi_delta(i) for i in range(1, h + 1)}
        return divisor_class(space, entries, opaque)
    entries = [(LAMBDA, 13), (DELTA0, -2)]
    opaque = {delta(i) for i in range(1, h + 1)}
    return divisor_class(space, entries, opaque)


def theta_null(g: int) -> DivisorClass:
    """Class of the theta-null divisor on the even-spin space:

    1/4*lambda - 1/16*alpha_0 - 1/2*sum_i beta_i.
    """
    entries = [(LAMBDA, Fraction(1, 4)), (ALPHA0, Fraction(-1, 16))]
    entries += [(beta(i), Fraction(-1, 2)) for i in range(1, g // 2 + 1)]
    return divisor_class(spin_plus(g), entries)


def prym_green(i: int) -> DivisorClass:
    """Virtual class of the Prym-Green syzygy locus on the Prym space of
    genus 2i+6:

    C(2i+2, i) * ( 3(2i+7)/(i+3)*lambda - 3/2*delta_0^ram - delta_0' ),

    with the delta_0'' coefficient and the higher boundary terms opaque.
    """
    if i < 0:
        raise BadParamError("syzygy index must be nonnegative")
    g = 2 * i + 6
    factor = comb(2 * i + 2, i)
    entries = [(LAMBDA, factor * Fraction(3 * (2 * i + 7), i + 3)),
               (D0RAM, factor * Fraction(-3, 2)),
               (D0P, Fraction(-factor))]
    opaque = {D0PP} | {pi_delta(j) for j in range(1, g // 2 + 1)}
    return divisor_class(rbar(g), entries, opaque)


def prym_nikulin_g6() -> DivisorClass:
    """Closure of the genus-6 Nikulin-section locus on the Prym space:

    7*lambda - 3/2*delta_0^ram - (delta_0' + delta_0''), higher terms opaque.
    """
    entries = [(LAMBDA, 7), (D0RAM, Fraction(-3, 2)), (D0P, -1), (D0PP, -1)]
    opaque = {pi_delta(j) for j in range(1, 4)}
    return divisor_class(rbar(6), entries, opaque)


def brill_noether_g8() -> DivisorClass:
    """Normalized class of the genus-8 plane-septic Brill-Noether divisor:

    22*lambda - 3*delta_0 - 14*delta_1 - 24*delta_2 - 30*delta_3 - 32*delta_4.

    Normalized means the positive integral multiple relating it to the
    underlying irreducible divisor is divided out; pairings against it are
    reported in units of that constant.
    """
    entries = [(LAMBDA, 22), (DELTA0, -3), (delta(1), -14), (delta(2), -24),
               (delta(3), -30), (delta(4), -32)]
    return divisor_class(mbar(8), entries)


def non_very_ample_g5() -> DivisorClass:
    """Closure of the genus-5 locus where the Prym-canonical bundle fails
    to be very ample:

    14*lambda - 2*(delta_0'+delta_0'') - 5/2*delta_0^ram, higher terms opaque.
    """
    entries = [(LAMBDA, 14), (D0P, -2), (D0PP, -2), (D0RAM, Fraction(-5, 2))]
    opaque = {pi_delta(j) for j in range(1, 3)}
    return divisor_class(rbar(5), entries, opaque)


def twisted_hodge_c1(i: int, g: int = 5) -> DivisorClass:
    """First Chern class of the i-th twisted Hodge bundle on the Prym space:

    C(i, 2)*(12*lambda - delta_0' - delta_0'' - 2*delta_0^ram)
        + lambda - i^2/4*delta_0^ram,

    higher boundary terms opaque.
    """
    if i < 1:
        raise BadParamError("twist index must be positive")
    c = comb(i, 2)
    entries = [(LAMBDA, 12 * c + 1),
               (D0P, -c), (D0PP, -c),
               (D0RAM, -2 * c - Fraction(i * i, 4))]
    opaque = {pi_delta(j) for j in range(1, g // 2 + 1)}
    return divisor_class(rbar(g), entries, opaque)


def sym_power_c1(c1: DivisorClass, rank: int, power: int) -> DivisorClass:
    """c1 of the `power`-th symmetric power of a bundle of the given rank
    and first Chern class: (power * C(rank+power-1, power) / rank) * c1.
    """
    if rank < 1 or power < 1:
        raise BadParamError("rank and power must be positive")
    return Fraction(power * comb(rank + power - 1, power), rank) * c1


def slope(d: DivisorClass) -> Fraction:
    """Slope a/b_0 of a stable-curve class a*lambda - b_0*delta_0 - ...

    >>> slope(brill_noether_g8())
    Fraction(22, 3)
    """
    if d.space.kind != MBAR:
        raise SpaceMismatchError("slope is defined on the stable-curve space")
    if d.is_opaque(LAMBDA) or d.is_opaque(DELTA0):
        raise OpaqueCoefficientError("slope needs pinned lambda and delta_0")
    b = d.coeff(DELTA0)
    if b == 0:
        raise ZeroDenominatorError("delta_0 coefficient vanishes")
    return d.coeff(LAMBDA) / (-b)


#: Names accepted by the command line and the check harness.
NAMED_DIVISORS = ("theta_null", "prym_green", "nikulin_N6", "bn8",
                  "d2_nonveryample", "hodge_c1", "canonical")


def named_divisor(name: str, space: ModuliSpace | None = None,
                  genus: int | None = None, param: int | None = None
                  ) -> DivisorClass:
    """Resolve one of the named divisor classes.

    Raises ``BadParamError`` when the requested genus, ambient space or
    index parameter is inconsistent with the name.
    """
    if space is not None and genus is not None and space.genus != genus:
        raise BadParamError("genus does not match the requested space")
    if space is not None:
        genus = space.genus

    def check(expected_space):
        if space is not None and space != expected_space:
            raise BadParamError(
                f"{name} lives on {expected_space}, not {space}")

    if name == "canonical":
        if space is None:
            raise BadParamError("canonical class needs an ambient space")
        return canonical_class(space)
    if name == "theta_null":
        if genus is None:
            raise BadParamError("theta_null needs a genus")
        check(spin_plus(genus))
        return theta_null(genus)
    if name == "prym_green":
        if param is None:
            if genus is None or genus < 6 or genus % 2:
                raise BadParamError("prym_green needs genus 2i+6")
            param = (genus - 6) // 2
        if genus is not None and genus != 2 * param + 6:
            raise BadParamError("prym_green needs genus = 2i+6")
        check(rbar(2 * param + 6))
        return prym_green(param)
    if name == "nikulin_N6":
        if genus not in (None, 6):
            raise BadParamError("the Nikulin-section divisor lives in genus 6")
        check(rbar(6))
        return prym_nikulin_g6()
    if name == "bn8":
        if genus not in (None, 8):
            raise BadParamError("the plane-septic divisor lives in genus 8")
        check(mbar(8))
        return brill_noether_g8()
    if name == "d2_nonveryample":
        if genus not in (None, 5):
            raise BadParamError("the non-very-ample divisor lives in genus 5")
        check(rbar(5))
        return non_very_ample_g5()
    if name == "hodge_c1":
        if param is None:
            raise BadParamError("hodge_c1 needs an index parameter")
        g = genus if genus is not None else 5
        check(rbar(g))
        return twisted_hodge_c1(param, g)
    raise BadParamError(f"unknown divisor name {name!r}")
