"""Exact fields: the rationals, prime fields GF(p), binary fields GF(2^k) and a
single quadratic extension K(sqrt(D)) of Q or GF(p).

Rationals are plain :class:`fractions.Fraction` values. Finite-field and
extension elements are small immutable classes that support the usual
operators and mix with Python ``int`` (coerced into the field). Mixing two
different fields raises :class:`FieldMismatch`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterator

from sympy.ntheory import isprime, sqrt_mod
from sympy.ntheory.factor_ import core

from .errors import ExtensionRequired, FieldMismatch, LeonardError

MAX_WORD = 2**63


class Field:
    """Common interface of the field specs."""

    characteristic: int

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def sqrt(self, x):
        """A square root of ``x`` in this field, or None."""
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def quadratic_extension(self, disc):
        """Return ``(K, w)`` with ``K`` an extension of this field and ``w**2 == disc``."""
        raise ExtensionRequired(f"no quadratic extension available over {self.name}", disc)

    @property
    def name(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.name


# --------------------------------------------------------------------------
# Q
# --------------------------------------------------------------------------

_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_INT_RE = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot coerce {x!r} into Q")

    def contains(self, x):
        return isinstance(x, (int, Fraction))

    def sqrt(self, x):
        x = self(x)
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def format(self, x):
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, text):
        text = text.strip()
        if not _RAT_RE.fullmatch(text):
            raise ValueError(f"malformed rational {text!r}")
        value = Fraction(text)
        return value

    def random_element(self, rng):
        return Fraction(rng.randint(-12, 12), rng.randint(1, 5))

    def quadratic_extension(self, disc):
        disc = self(disc)
        if self.sqrt(disc) is not None:
            raise ValueError(f"{disc} is a square in Q")
        # sqrt(n/m) = sqrt(n*m)/m = k*sqrt(D0)/m with D0 squarefree
        n, m = disc.numerator, disc.denominator
        sign = -1 if n < 0 else 1
        nm = abs(n) * m
        d0 = core(nm)
        k = math.isqrt(nm // d0)
        ext = QuadraticExtension(self, Fraction(sign * d0))
        return ext, ext.element(0, Fraction(k, m))

    @property
    def name(self):
        return "Q"


QQ = Rationals()


# --------------------------------------------------------------------------
# GF(p)
# --------------------------------------------------------------------------


class Mod:
    """Residue class modulo a prime, stored as its least nonnegative representative."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if type(other) is Mod:
            if other.field.p != self.field.p:
                raise FieldMismatch(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, QuadElement):
            return NotImplemented
        if isinstance(other, (Fraction, float, complex, Bin)):
            raise FieldMismatch(f"cannot combine GF({self.field.p}) with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        if o % p == 0:
            raise ZeroDivisionError(f"division by zero in GF({p})")
        return Mod(self.value * pow(o, -1, p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.field) / self

    def __neg__(self):
        return Mod(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Mod(1, self.field) / Mod(pow(self.value, -n, self.field.p), self.field)
        return Mod(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if type(other) is Mod:
            return other.field.p == self.field.p and other.value == self.value
        if isinstance(other, int):
            return (other - self.value) % self.field.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(("GF", self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.field.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not (1 < self.p < MAX_WORD) or not isprime(self.p):
            raise ValueError(f"GF(p) needs a prime modulus below 2^63, got {self.p}")

    @property
    def characteristic(self):
        return self.p

    def __call__(self, x):
        if type(x) is Mod:
            if x.field.p != self.p:
                raise FieldMismatch(f"GF({x.field.p}) element given to GF({self.p})")
            return x
        if isinstance(x, int):
            return Mod(x, self)
        if isinstance(x, Fraction):
            return Mod(x.numerator, self) / Mod(x.denominator, self)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot coerce {x!r} into GF({self.p})")

    def contains(self, x):
        return type(x) is Mod and x.field.p == self.p

    def sqrt(self, x):
        x = self(x)
        r = sqrt_mod(x.value, self.p)
        return None if r is None else Mod(r, self)

    def format(self, x):
        return str(self(x).value)

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.fullmatch(text):
            raise ValueError(f"malformed GF({self.p}) element {text!r}")
        return Mod(int(text), self)

    def random_element(self, rng):
        return Mod(rng.randrange(self.p), self)

    def elements(self) -> Iterator[Mod]:
        return (Mod(v, self) for v in range(self.p))

    @cached_property
    def nonsquare(self) -> Mod:
        if self.p == 2:
            raise ExtensionRequired("GF(2) has no sqrt-type quadratic extension")
        v = 2
        while pow(v, (self.p - 1) // 2, self.p) != self.p - 1:
            v += 1
        return Mod(v, self)

    def quadratic_extension(self, disc):
        disc = self(disc)
        if self.sqrt(disc) is not None:
            raise ValueError(f"{disc} is a square in {self.name}")
        n = self.nonsquare
        ext = QuadraticExtension(self, n)
        # disc/n is a square since the nonsquares form one coset
        return ext, ext.element(0, self.sqrt(disc / n))

    @property
    def name(self):
        return f"GF({self.p})"


# --------------------------------------------------------------------------
# GF(2^k)
# --------------------------------------------------------------------------


def _poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _irreducible(f: int) -> bool:
    deg = f.bit_length() - 1
    for g in range(2, 1 << (deg // 2 + 1)):
        if _poly_mod(f, g) == 0:
            return False
    return True


def _first_irreducible(k: int) -> int:
    for f in range(1 << k, 1 << (k + 1)):
        if f & 1 and _irreducible(f):
            return f
    raise AssertionError("unreachable")


class Bin:
    """Element of GF(2^k) as a bit mask of polynomial coefficients."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: BinaryField):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if type(other) is Bin:
            if other.field.k != self.field.k:
                raise FieldMismatch(f"GF(2^{self.field.k}) vs GF(2^{other.field.k})")
            return other.value
        if isinstance(other, int):
            return other & 1
        if isinstance(other, (Fraction, float, complex, Mod, QuadElement)):
            raise FieldMismatch(f"cannot combine GF(2^{self.field.k}) with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Bin(self.value ^ o, self.field)

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Bin(self.field.mul(self.value, o), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in {self.field.name}")
        return Bin(self.field.mul(self.value, self.field.inv(o)), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Bin(o, self.field) / self

    def __neg__(self):
        return self

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        f = self.field
        if n < 0:
            return Bin(f.inv(f.pow(self.value, -n)), f) if self.value else 1 / self
        return Bin(f.pow(self.value, n), f)

    def __eq__(self, other):
        if type(other) is Bin:
            return other.field.k == self.field.k and other.value == self.value
        if isinstance(other, int):
            return (other & 1) == self.value
        return NotImplemented

    def __hash__(self):
        return hash(("GF2", self.field.k, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Bin({self.value}, 2^{self.field.k})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class BinaryField(Field):
    """GF(2^k) modulo the numerically smallest irreducible polynomial of degree k."""

    k: int
    characteristic = 2

    def __post_init__(self):
        if not 1 <= self.k <= 16:
            raise ValueError("GF(2^k) is supported for 1 <= k <= 16")

    @cached_property
    def modulus(self) -> int:
        return _first_irreducible(self.k)

    @property
    def order(self) -> int:
        return 1 << self.k

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.k:
                a ^= self.modulus
        return r

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return self.pow(a, self.order - 2)

    def __call__(self, x):
        if type(x) is Bin:
            if x.field.k != self.k:
                raise FieldMismatch(f"{x.field.name} element given to {self.name}")
            return x
        if isinstance(x, int):
            return Bin(x & 1, self)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot coerce {x!r} into {self.name}")

    def from_code(self, code: int) -> Bin:
        """Element whose coefficient bit mask is ``code``."""
        if not 0 <= code < self.order:
            raise ValueError(f"{code} is not an element code of {self.name}")
        return Bin(code, self)

    def contains(self, x):
        return type(x) is Bin and x.field.k == self.k

    def sqrt(self, x):
        x = self(x)
        # Frobenius is a bijection; its inverse is x -> x^(2^(k-1))
        return Bin(self.pow(x.value, 1 << (self.k - 1)), self)

    def format(self, x):
        return str(self(x).value)

    def parse(self, text):
        text = text.strip()
        if not re.fullmatch(r"\d+", text):
            raise ValueError(f"malformed {self.name} element {text!r}")
        return self.from_code(int(text))

    def random_element(self, rng):
        return Bin(rng.randrange(self.order), self)

    def elements(self) -> Iterator[Bin]:
        return (Bin(v, self) for v in range(self.order))

    @property
    def name(self):
        return f"GF(2^{self.k})"


# --------------------------------------------------------------------------
# K(sqrt(D))
# --------------------------------------------------------------------------


class QuadElement:
    """``a + b*sqrt(D)`` with ``a``, ``b`` in the base field."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field: QuadraticExtension):
        self.a = a
        self.b = b
        self.field = field

    def _coerce(self, other):
        if type(other) is QuadElement:
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
            return other
        if isinstance(other, (int, Fraction, Mod, Bin)):
            return QuadElement(self.field.base(other), self.field.base.zero, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElement(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElement(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D = self.field.D
        return QuadElement(self.a * o.a + D * self.b * o.b, self.a * o.b + self.b * o.a, self.field)

    __rmul__ = __mul__

    def conjugate(self) -> QuadElement:
        return QuadElement(self.a, -self.b, self.field)

    def norm(self):
        return self.a * self.a - self.field.D * self.b * self.b

    def trace(self):
        return self.a + self.a

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"division by zero in {self.field.name}")
        return QuadElement(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if type(other) is QuadElement:
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction, Mod, Bin)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def in_base(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadElement({self.a!r}, {self.b!r}, D={self.field.D})"

    def __str__(self):
        return self.field.format(self)


@dataclass(frozen=True)
class QuadraticExtension(Field):
    """K(w) with w^2 = D for a non-square D of K. No towers."""

    base: Field
    D: Any

    def __post_init__(self):
        if isinstance(self.base, QuadraticExtension):
            raise ValueError("only one quadratic extension layer is supported")
        if self.base.characteristic == 2:
            raise ValueError("sqrt-type extensions need characteristic != 2")
        D = self.base(self.D)
        object.__setattr__(self, "D", D)
        if self.base.sqrt(D) is not None:
            raise ValueError(f"{D} is a square in {self.base.name}")

    @property
    def characteristic(self):
        return self.base.characteristic

    def element(self, a, b) -> QuadElement:
        return QuadElement(self.base(a), self.base(b), self)

    @property
    def generator(self) -> QuadElement:
        return self.element(0, 1)

    def __call__(self, x):
        if type(x) is QuadElement:
            if x.field != self:
                raise FieldMismatch(f"{x.field.name} element given to {self.name}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return QuadElement(self.base(x), self.base.zero, self)

    def contains(self, x):
        return type(x) is QuadElement and x.field == self

    def to_base(self, x):
        """Project an element with zero sqrt-part down to the base field."""
        x = self(x)
        if x.b != 0:
            raise ValueError(f"{self.format(x)} does not lie in {self.base.name}")
        return x.a

    def sqrt(self, x):
        x = self(x)
        B = self.base
        if x.b == 0:
            r = B.sqrt(x.a)
            if r is not None:
                return self.element(r, 0)
            r = B.sqrt(x.a / self.D)
            return None if r is None else self.element(0, r)
        n = B.sqrt(x.norm())
        if n is None:
            return None
        for sign in (n, -n):
            c = B.sqrt((x.a + sign) / 2)
            if c is not None and c != 0:
                return self.element(c, x.b / (2 * c))
        return None

    def format(self, x):
        x = self(x)
        B = self.base
        if x.b == 0:
            return B.format(x.a)
        b = x.b
        sign = "+"
        if isinstance(B, Rationals) and b < 0:
            sign, b = "-", -b
        bs = B.format(b)
        term = ("" if bs == "1" else bs + "*") + f"sqrt({B.format(self.D)})"
        if x.a == 0:
            return ("-" if sign == "-" else "") + term
        return f"{B.format(x.a)}{sign}{term}"

    def parse(self, text):
        s = text.strip().replace(" ", "")
        B = self.base
        if "sqrt(" not in s:
            return self(B.parse(s))
        idx = s.rfind("sqrt(")
        if not s.endswith(")"):
            raise ValueError(f"malformed extension element {text!r}")
        if B.parse(s[idx + 5:-1]) != self.D:
            raise ValueError(f"{text!r} uses a different sqrt than {self.name}")
        head = s[:idx]
        if head.endswith("*"):
            head = head[:-1]
            if not head or head[-1] in "+-":
                raise ValueError(f"malformed extension element {text!r}")
        pos = max(head.rfind("+"), head.rfind("-"))
        if pos > 0:
            a_txt, b_txt = head[:pos], head[pos:]
        else:
            a_txt, b_txt = "0", head
        if b_txt in ("", "+"):
            b = B.one
        elif b_txt == "-":
            b = -B.one
        else:
            neg = b_txt.startswith("-")
            b = B.parse(b_txt.lstrip("+-"))
            b = -b if neg else b
        return QuadElement(B.parse(a_txt), b, self)

    def random_element(self, rng):
        return QuadElement(self.base.random_element(rng), self.base.random_element(rng), self)

    def minimal_polynomial(self, x) -> tuple:
        """Coefficients (c1, c0) of x^2 + c1*x + c0 over the base field."""
        x = self(x)
        return (-x.trace(), x.norm())

    @property
    def name(self):
        return f"{self.base.name}(sqrt({self.base.format(self.D)}))"


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def field_of(x) -> Field:
    if isinstance(x, (int, Fraction)):
        return QQ
    if isinstance(x, (Mod, Bin, QuadElement)):
        return x.field
    raise FieldMismatch(f"{x!r} is not a field element")


_FIELD_RE = re.compile(
    r"(?P<base>Q|GF\((?P<q>\d+)(?:\^(?P<k>\d+))?\)|GF(?P<q2>\d+))(?:\(sqrt\((?P<D>-?\d+)\)\))?",
    re.IGNORECASE,
)


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``GF(7)``, ``GF(2^3)``, ``GF(8)``, ``Q(sqrt(5))`` or ``GF(7)(sqrt(3))``."""
    s = text.strip().replace(" ", "")
    m = _FIELD_RE.fullmatch(s)
    if not m:
        raise ValueError(f"unrecognised field {text!r}")
    if m["base"].upper() == "Q":
        base: Field = QQ
    else:
        q = int(m["q"] or m["q2"])
        k = int(m["k"]) if m["k"] else 1
        if k > 1:
            if q != 2:
                raise ValueError("only prime fields and GF(2^k) are supported")
            base = BinaryField(k)
        elif isprime(q):
            base = PrimeField(q)
        elif q > 2 and q & (q - 1) == 0:
            base = BinaryField(q.bit_length() - 1)
        else:
            raise ValueError(f"GF({q}): order must be a prime or a power of 2")
    if m["D"] is None:
        return base
    return QuadraticExtension(base, int(m["D"]))


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of a monic quadratic inside its coefficient field.

    ``requires_extension`` is set when no root lies in the field; for odd
    characteristic ``discriminant`` then holds the non-square b^2 - 4c.
    """

    roots: tuple
    discriminant: Any = None
    requires_extension: bool = False


def _sort_key(x):
    if isinstance(x, Fraction):
        return (0, x)
    if isinstance(x, (Mod, Bin)):
        return (0, x.value)
    return (1, 0)


def solve_quadratic(b, c, field: Field | None = None) -> QuadraticRoots:
    """Roots of x^2 + b*x + c in the field of the coefficients."""
    F = field or field_of(b)
    b, c = F(b), F(c)
    if F.characteristic == 2:
        if b == 0:
            return QuadraticRoots((F.sqrt(c),))
        if isinstance(F, BinaryField):
            roots = tuple(x for x in F.elements() if x * x + b * x + c == 0)
            return QuadraticRoots(roots, None, not roots)
        raise LeonardError(f"quadratic solving over {F.name} is not supported")
    disc = b * b - 4 * c
    s = F.sqrt(disc)
    if s is None:
        return QuadraticRoots((), disc, True)
    r1, r2 = (-b + s) / 2, (-b - s) / 2
    if r1 == r2:
        return QuadraticRoots((r1,), disc)
    return QuadraticRoots(tuple(sorted((r1, r2), key=_sort_key)), disc)
