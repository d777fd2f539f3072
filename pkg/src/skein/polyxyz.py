"""Polynomials in the boundary-curve generators x, y, z (and t) over the
localized coefficient ring.

x, y, z are the curves around hole 1, hole 2 and both holes of the twice
punctured disk; t is the extra theta-shaped generator of the graph algebra.
Monomials are exponent 4-tuples (i, j, k, eps); the data structure is the
free commutative polynomial ring, with no skein reduction applied.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .rings import ZERO, LocalizedElement

Monomial = tuple[int, int, int, int]

_VARS = ("x", "y", "z", "t")


class PolyXYZ:
    """A polynomial in x, y, z, t with LocalizedElement coefficients."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[Monomial, LocalizedElement]
        | Iterable[tuple[Monomial, LocalizedElement]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, LocalizedElement] = {}
        for mono, coeff in items:
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
            if not coeff.is_zero():
                prev = acc.get(mono)
                s = coeff if prev is None else prev + coeff
                if s.is_zero():
                    acc.pop(mono, None)
                else:
                    acc[mono] = s
        self._terms = acc

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def zero() -> "PolyXYZ":
        return PolyXYZ()

    @staticmethod
    def constant(c: LocalizedElement) -> "PolyXYZ":
        return PolyXYZ({(0, 0, 0, 0): c})

    @staticmethod
    def monomial(mono: Monomial, coeff: LocalizedElement) -> "PolyXYZ":
        return PolyXYZ({mono: coeff})

    @staticmethod
    def gen(name: str) -> "PolyXYZ":
        from .rings import ONE

        idx = _VARS.index(name)
        mono = tuple(1 if i == idx else 0 for i in range(4))
        return PolyXYZ({mono: ONE})

    # -- queries ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, mono: Monomial) -> LocalizedElement:
        return self._terms.get(mono, ZERO)

    def items(self) -> Iterator[tuple[Monomial, LocalizedElement]]:
        return iter(sorted(self._terms.items()))

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ------------------------------------------------------------------

    def __add__(self, other: "PolyXYZ") -> "PolyXYZ":
        if not isinstance(other, PolyXYZ):
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            prev = acc.get(mono)
            s = c if prev is None else prev + c
            if s.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = s
        out = PolyXYZ.__new__(PolyXYZ)
        out._terms = acc
        return out

    def __sub__(self, other: "PolyXYZ") -> "PolyXYZ":
        return self + (-other)

    def __neg__(self) -> "PolyXYZ":
        out = PolyXYZ.__new__(PolyXYZ)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __mul__(self, other: "PolyXYZ") -> "PolyXYZ":
        if not isinstance(other, PolyXYZ):
            return NotImplemented
        acc: dict[Monomial, LocalizedElement] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                c = c1 * c2
                prev = acc.get(mono)
                s = c if prev is None else prev + c
                if s.is_zero():
                    acc.pop(mono, None)
                else:
                    acc[mono] = s
        out = PolyXYZ.__new__(PolyXYZ)
        out._terms = acc
        return out

    def scale(self, c: LocalizedElement) -> "PolyXYZ":
        if c.is_zero():
            return PolyXYZ()
        out = PolyXYZ.__new__(PolyXYZ)
        out._terms = {m: v * c for m, v in self._terms.items()}
        return out

    def __pow__(self, n: int) -> "PolyXYZ":
        if n < 0:
            raise ValueError("negative power")
        from .rings import ONE

        result = PolyXYZ.constant(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, images: Mapping[str, "PolyXYZ"]) -> "PolyXYZ":
        """Apply the ring homomorphism sending each variable to its image."""
        gens = [images.get(v, PolyXYZ.gen(v)) for v in _VARS]
        total = PolyXYZ()
        for mono, c in self._terms.items():
            term = PolyXYZ.constant(c)
            for g, e in zip(gens, mono):
                if e:
                    term = term * g**e
            total = total + term
        return total

    # -- comparisons ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyXYZ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items(), key=lambda kv: kv[0])))

    def __repr__(self) -> str:
        return f"PolyXYZ({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for mono in sorted(self._terms, key=lambda m: (sum(m), m), reverse=True):
            c = self._terms[mono]
            body = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(_VARS, mono) if e
            )
            # integers render with a bare sign; compound coefficients in parens
            as_int = None
            if c.d_power == 0 and len(c.num) == 1 and c.num.coeff(0):
                as_int = c.num.coeff(0)
            if as_int is not None:
                sign = "-" if as_int < 0 else "+"
                mag = abs(as_int)
                text = body if (mag == 1 and body) else (
                    f"{mag}*{body}" if body else str(mag)
                )
            else:
                d_form = c.d_form()
                sign = "+"
                text = f"({d_form if d_form is not None else c})"
                if body:
                    text = f"{text}*{body}"
            if not out:
                out = f"-{text}" if sign == "-" else text
            else:
                out += f" {sign} {text}"
        return out


def mono_str(mono: Monomial) -> str:
    """Readable name for a monomial, '1' for the constant."""
    body = "*".join((v if e == 1 else f"{v}^{e}") for v, e in zip(_VARS, mono) if e)
    return body or "1"
