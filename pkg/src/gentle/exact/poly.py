"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import SpecializationError

Exponent = tuple


def _grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


def _embed(exp: tuple, positions: tuple, width: int) -> tuple:
    out = [0] * width
    for e, pos in zip(exp, positions):
        out[pos] = e
    return tuple(out)


def _coerce_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


class MultiPoly:
    """A polynomial over Q in an ordered tuple of named indeterminates.

    ``terms`` maps exponent vectors (one entry per variable) to nonzero
    :class:`~fractions.Fraction` coefficients.  Instances are treated as
    immutable.  Binary operations between polynomials over different variable
    tuples first merge the tuples (left operand's order first), so callers can
    mix ``MultiPoly.var("lambda")`` and ``MultiPoly.var("mu")`` freely.

    Terms are ordered graded-lexicographically with respect to the variable
    order; that order drives both printing and exact division.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        self.variables = tuple(variables)
        width = len(self.variables)
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} does not match {width} variables")
            coeff = _coerce_scalar(coeff)
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, value, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _coerce_scalar(value)})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: Fraction(1)})

    @classmethod
    def lift(cls, value, variables: Iterable[str] = ()) -> "MultiPoly":
        """Return ``value`` as a polynomial (identity on MultiPoly)."""
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value, variables)

    # context handling ---------------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over ``variables``; it must contain every variable in use."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: k for k, v in enumerate(variables)}
        used = self.used_variables()
        missing = [v for v in used if v not in index]
        if missing:
            raise ValueError(f"variables {missing} missing from target context")
        positions = tuple(index.get(v, -1) for v in self.variables)
        width = len(variables)
        terms = {}
        for exp, coeff in self.terms.items():
            out = [0] * width
            for e, pos in zip(exp, positions):
                if e:
                    out[pos] = e
            terms[tuple(out)] = coeff
        return MultiPoly(variables, terms)

    def used_variables(self) -> tuple:
        return tuple(
            v for k, v in enumerate(self.variables) if any(exp[k] for exp in self.terms)
        )

    def _align(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if self.variables == other.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    def _other(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return None

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        k = self.variables.index(name)
        return max((exp[k] for exp in self.terms), default=-1)

    def leading_term(self) -> tuple[tuple, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    # arithmetic ---------------------------------------------------------

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        if not a.terms or not b.terms:
            return MultiPoly(a.variables)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                raise ZeroDivisionError("division by zero")
            return MultiPoly(self.variables, {e: c / other for e, c in self.terms.items()})
        if isinstance(other, MultiPoly):
            return self.exquo(other)
        return NotImplemented

    def divmod_exact(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Divide by ``other``; returns (quotient, remainder).

        The remainder is nonzero exactly when a leading term stops being
        divisible, so a zero remainder certifies exact divisibility.
        """
        a, b = self._align(other)
        if not b.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lead_exp, lead_coeff = b.leading_term()
        quotient: dict = {}
        rest = dict(a.terms)
        while rest:
            exp = max(rest, key=_grlex_key)
            if any(x < y for x, y in zip(exp, lead_exp)):
                break
            shift = tuple(x - y for x, y in zip(exp, lead_exp))
            factor = rest[exp] / lead_coeff
            quotient[shift] = quotient.get(shift, 0) + factor
            for e2, c2 in b.terms.items():
                target = tuple(x + y for x, y in zip(shift, e2))
                value = rest.get(target, 0) - factor * c2
                if value:
                    rest[target] = value
                else:
                    rest.pop(target, None)
        return MultiPoly(a.variables, quotient), MultiPoly(a.variables, rest)

    def exquo(self, other: "MultiPoly") -> "MultiPoly":
        quotient, remainder = self.divmod_exact(other)
        if remainder.terms:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient

    def divides(self, other: "MultiPoly") -> bool:
        """True iff ``self`` divides ``other`` exactly."""
        return self.terms != {} and not other.divmod_exact(self)[1].terms

    # evaluation ---------------------------------------------------------

    def subs(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Substitute rationals (or polynomials) for some variables."""
        result = MultiPoly(self.variables)
        for exp, coeff in self.terms.items():
            term = MultiPoly.constant(coeff, self.variables)
            for name, e in zip(self.variables, exp):
                if not e:
                    continue
                if name in assignment:
                    value = MultiPoly.lift(assignment[name], self.variables)
                    term = term * value**e
                else:
                    term = term * MultiPoly.var(name, self.variables) ** e
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            value = coeff
            for name, e in zip(self.variables, exp):
                if not e:
                    continue
                if name not in assignment:
                    raise SpecializationError(f"no value assigned to variable {name!r}")
                value *= Fraction(assignment[name]) ** e
            total += value
        return total

    # comparison / printing ----------------------------------------------

    def _canonical(self) -> frozenset:
        return frozenset(
            (tuple(sorted((v, e) for v, e in zip(self.variables, exp) if e)), c)
            for exp, c in self.terms.items()
        )

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        """Graded-lex, variables in name order, so the text ignores the context."""
        if not self.terms:
            return "0"
        names = tuple(sorted(self.used_variables()))
        terms = self.with_variables(names).terms
        pieces = []
        for exp in sorted(terms, key=_grlex_key, reverse=True):
            coeff = terms[exp]
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exp)
                if e
            )
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"
