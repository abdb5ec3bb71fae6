"""
Sparse multivariate polynomials over GF(p).

Terms are stored as a tuple of (monomial, residue) pairs, strictly descending
in the ring's monomial order, residues in [1, p). That makes the term tuple a
canonical form: equal polynomials have identical term tuples.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from algebra.field import FieldElement
from algebra.monomial import Monomial, check_exponents, monomial_mul, monomial_pow
from algebra.ring import RingContext
from config import Config
from core.error_handling import ContextMismatchError, ExponentOverflowError

Term = Tuple[Monomial, int]


class Polynomial:
    """Immutable sparse polynomial in a RingContext."""

    __slots__ = ("context", "_terms", "_hash")

    def __init__(self, context: RingContext, terms: Union[Mapping[Monomial, int], Iterable[Term]] = ()):
        p = context.characteristic
        acc: Dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != context.nvars:
                raise ContextMismatchError(f"monomial {mono} has width {len(mono)}, ring has {context.nvars} variables")
            acc[mono] = (acc.get(mono, 0) + int(coeff)) % p
        key = context.key
        ordered = sorted(((m, c) for m, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        for mono, _ in ordered:
            check_exponents(mono)
        self.context = context
        self._terms: Tuple[Term, ...] = tuple(ordered)
        self._hash: Optional[int] = None

    @classmethod
    def _from_canonical(cls, context: RingContext, terms: Tuple[Term, ...]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.context = context
        obj._terms = terms
        obj._hash = None
        return obj

    # ---------------------------------------------------------------------
    # Constructors
    # ---------------------------------------------------------------------

    @classmethod
    def zero(cls, context: RingContext) -> "Polynomial":
        return cls._from_canonical(context, ())

    @classmethod
    def constant(cls, context: RingContext, c: int = 1) -> "Polynomial":
        return cls(context, [(context.one_monomial, c)])

    @classmethod
    def one(cls, context: RingContext) -> "Polynomial":
        return cls.constant(context, 1)

    @classmethod
    def variable(cls, context: RingContext, name: str) -> "Polynomial":
        return cls._from_canonical(context, ((context.variable_monomial(name), 1),))

    @classmethod
    def from_monomial(cls, context: RingContext, mono: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls(context, [(tuple(mono), coeff)])

    # ---------------------------------------------------------------------
    # Accessors
    # ---------------------------------------------------------------------

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        """Single-term polynomial (the coefficient is a unit, so it spans a monomial ideal)."""
        return len(self._terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self._terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._terms[0][1]

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self._terms), default=-1)

    def monomials(self) -> Iterator[Monomial]:
        return (m for m, _ in self._terms)

    def coefficient(self, mono: Sequence[int]) -> FieldElement:
        mono = tuple(mono)
        for m, c in self._terms:
            if m == mono:
                return FieldElement(c, self.context.characteristic)
        return FieldElement(0, self.context.characteristic)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    # ---------------------------------------------------------------------
    # Arithmetic
    # ---------------------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ContextMismatchError(f"{self.context} vs {other.context}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.context, int(other))
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.context.characteristic
        return Polynomial._from_canonical(self.context, tuple((m, p - c) for m, c in self._terms))

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, FieldElement)):
            return self.scale(int(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        """Generic exponentiation by repeated squaring."""
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.context)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.context.characteristic
        c %= p
        if c == 0:
            return Polynomial.zero(self.context)
        return Polynomial._from_canonical(self.context, tuple((m, cf * c % p) for m, cf in self._terms))

    def mul_term(self, mono: Monomial, c: int = 1) -> "Polynomial":
        """self · c·mono; multiplying by a monomial keeps the term order."""
        p = self.context.characteristic
        c %= p
        if c == 0 or not self._terms:
            return Polynomial.zero(self.context)
        return Polynomial._from_canonical(
            self.context, tuple((monomial_mul(m, mono), cf * c % p) for m, cf in self._terms)
        )

    def monic(self) -> "Polynomial":
        if not self._terms or self._terms[0][1] == 1:
            return self
        return self.scale(self.context.prime_field.inverse(self._terms[0][1]))

    def frobenius_power(self, e: int) -> "Polynomial":
        return poly_frobenius_power(self, e)

    # ---------------------------------------------------------------------
    # Equality / hashing / text
    # ---------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self == Polynomial.constant(self.context, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.context, self._terms))
        return self._hash

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r}, p={self.context.characteristic})"


# =============================================================================
# OPERATIONS
# =============================================================================


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    """Merge two descending term lists."""
    f._check(g)
    if not g._terms:
        return f
    if not f._terms:
        return g
    p = f.context.characteristic
    key = f.context.key
    a, b = f._terms, g._terms
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = (ca + cb) % p
            if c:
                out.append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return Polynomial._from_canonical(f.context, tuple(out))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if not f._terms or not g._terms:
        return Polynomial.zero(f.context)
    if len(g._terms) == 1:
        m, c = g._terms[0]
        return f.mul_term(m, c)
    if len(f._terms) == 1:
        m, c = f._terms[0]
        return g.mul_term(m, c)
    p = f.context.characteristic
    limit = Config.MAX_EXPONENT
    if max(max(m) for m, _ in f._terms) + max(max(m) for m, _ in g._terms) > limit:
        raise ExponentOverflowError(f"product exponents exceed ceiling {limit}")
    acc: Dict[Monomial, int] = {}
    for ma, ca in f._terms:
        for mb, cb in g._terms:
            m = tuple(x + y for x, y in zip(ma, mb))
            acc[m] = (acc.get(m, 0) + ca * cb) % p
    return Polynomial(f.context, acc)


def poly_frobenius_power(f: Polynomial, e: int) -> Polynomial:
    """
    f^(p^e), termwise: in characteristic p, (sum t_i)^q = sum t_i^q.

    Coefficients are fixed by Frobenius on GF(p), and scaling every exponent by q
    keeps the term order, so the result is already canonical.
    """
    if e < 0:
        raise ValueError("Frobenius exponent e must be non-negative")
    if e == 0 or not f._terms:
        return f
    p = f.context.characteristic
    q = p**e
    return Polynomial._from_canonical(
        f.context, tuple((monomial_pow(m, q), pow(c, q, p)) for m, c in f._terms)
    )


# =============================================================================
# CHANGE OF RING (auxiliary variable for elimination)
# =============================================================================


def lift_polynomial(f: Polynomial, target: RingContext) -> Polynomial:
    """Embed f into target, whose variables are f's with extra leading ones."""
    extra = target.nvars - f.context.nvars
    if extra < 0 or target.variables[extra:] != f.context.variables:
        raise ContextMismatchError(f"cannot lift {f.context} into {target}")
    pad = (0,) * extra
    return Polynomial(target, [(pad + m, c) for m, c in f._terms])


def project_polynomial(f: Polynomial, target: RingContext) -> Polynomial:
    """Inverse of lift_polynomial for polynomials free of the leading variables."""
    extra = f.context.nvars - target.nvars
    if extra < 0 or f.context.variables[extra:] != target.variables:
        raise ContextMismatchError(f"cannot project {f.context} onto {target}")
    terms = []
    for m, c in f._terms:
        if any(m[:extra]):
            raise ValueError(f"{render_polynomial(f)} still involves eliminated variables")
        terms.append((m[extra:], c))
    return Polynomial(target, terms)


# =============================================================================
# CANONICAL TEXT
# =============================================================================


def render_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for name, k in zip(variables, mono):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def render_polynomial(f: Polynomial) -> str:
    """Descending terms joined by ' + ', residues in [1, p), explicit '^' and '*'."""
    if not f._terms:
        return "0"
    out = []
    for m, c in f._terms:
        body = render_monomial(m, f.context.variables)
        if c == 1:
            out.append(body)
        elif body == "1":
            out.append(str(c))
        else:
            out.append(f"{c}*{body}")
    return " + ".join(out)
