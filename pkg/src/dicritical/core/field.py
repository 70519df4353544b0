"""Exact coefficient fields: the rationals, prime fields, and one-step
simple extensions of either.

Rationals are represented by :class:`fractions.Fraction`; prime-field and
extension elements get small wrapper classes with the usual operators, so
polynomial code can use ``+``, ``*``, ``/`` and ``== 0`` uniformly.
"""

from fractions import Fraction
from itertools import product
from math import isqrt

from . import upoly
from ..errors import FieldMismatch, ParseError

MAX_PRIME = 2**31


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def parse_rational(s):
    s = str(s).strip().replace("−", "-")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError("c", f"not a rational number: {s!r}") from None


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalField:
    characteristic = 0
    is_finite = False
    degree = 1
    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def prime_field(self):
        return self

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        raise FieldMismatch(f"cannot coerce {x!r} into Q")

    def contains(self, x):
        return isinstance(x, (Fraction, int))

    def format(self, x):
        return format_rational(x)

    def to_json(self):
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class GF:
    """Element of the prime field of order ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return GF(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(o, self.p) / self

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pow__(self, e):
        if e < 0:
            return GF(1, self.p) / GF(pow(self.v, -e, self.p), self.p)
        return GF(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (GF, int, Fraction)) else None
        return o is not None and o == self.v

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"GF({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    characteristic = None
    is_finite = True
    degree = 1

    def __init__(self, p):
        if not isinstance(p, int) or p > MAX_PRIME or not is_prime(p):
            raise ParseError("p", "not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = GF(0, p)
        self.one = GF(1, p)
        self.name = f"F{p}"

    @property
    def prime_field(self):
        return self

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x):
        if isinstance(x, GF):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, int):
            return GF(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return GF(x.numerator, self.p) / GF(x.denominator, self.p)
        if isinstance(x, str):
            return self.convert(parse_rational(x))
        raise FieldMismatch(f"cannot coerce {x!r} into F_{self.p}")

    def contains(self, x):
        return isinstance(x, int) or (isinstance(x, GF) and x.p == self.p)

    def elements(self):
        return [GF(i, self.p) for i in range(self.p)]

    def format(self, x):
        return str(self.convert(x).v)

    def to_json(self):
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GFp(p):
    return PrimeField(p)


class ExtElement:
    """Element of a simple extension ``base[a]/(minpoly)``."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        n = field.degree
        coords = list(coords)[:n] + [field.base.zero] * (n - len(coords))
        self.coords = tuple(coords)

    def _lift(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise FieldMismatch("elements of different extensions")
            return other
        try:
            return self.field.convert(other)
        except (FieldMismatch, ParseError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        K = self.field.base
        prod = upoly.mul(K, upoly.trim(self.coords), upoly.trim(o.coords))
        return ExtElement(self.field, upoly.divmod_(K, prod, self.field.minpoly)[1])

    __rmul__ = __mul__

    def inverse(self):
        K = self.field.base
        f = upoly.trim(self.coords)
        if not f:
            raise ZeroDivisionError("division by zero in extension field")
        d, s, _ = upoly.xgcd(K, f, self.field.minpoly)
        return ExtElement(self.field, s)

    def __truediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        result = self.field.one
        e = abs(e)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return other.field == self.field and other.coords == self.coords
        try:
            o = self.field.convert(other)
        except (FieldMismatch, ParseError):
            return False
        return o.coords == self.coords

    def __hash__(self):
        if all(c == 0 for c in self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self):
        return any(c != 0 for c in self.coords)

    def __repr__(self):
        return f"ExtElement({self.field.format(self)})"

    __str__ = lambda self: self.field.format(self)


class SimpleExtension:
    """``base[a]/(m(a))`` for a monic irreducible ``m``.

    Over the rationals only quadratic ``m`` are accepted.
    """

    is_extension = True

    def __init__(self, base, minpoly, gen="a"):
        if isinstance(base, SimpleExtension):
            raise FieldMismatch("only one-step extensions are supported")
        m = upoly.trim([base.convert(c) for c in minpoly])
        if len(m) < 3 or m[-1] != 1:
            raise ParseError("minpoly", "must be monic of degree >= 2")
        if base.characteristic == 0 and len(m) != 3:
            raise ParseError("minpoly", "extensions of Q are limited to degree 2")
        self.base = base
        self.minpoly = m
        self.degree = len(m) - 1
        self.gen = gen
        if not _is_irreducible(base, m):
            raise ParseError("minpoly", "not irreducible over the base field")
        self.characteristic = base.characteristic
        self.is_finite = base.is_finite
        if self.is_finite:
            self.order = base.order ** self.degree
        self.zero = ExtElement(self, [base.zero])
        self.one = ExtElement(self, [base.one])

    @property
    def prime_field(self):
        return self.base

    @property
    def generator(self):
        return ExtElement(self, [self.base.zero, self.base.one])

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x):
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch("element of a different extension")
            return x
        if isinstance(x, (list, tuple)):
            return ExtElement(self, [self.base.convert(c) for c in x])
        return ExtElement(self, [self.base.convert(x)])

    def contains(self, x):
        return isinstance(x, ExtElement) and x.field == self

    def elements(self):
        if not self.is_finite:
            raise ValueError("infinite field")
        base = self.base.elements()
        return [ExtElement(self, c) for c in product(base, repeat=self.degree)]

    def to_base(self, x):
        """Coordinates of ``x`` in the power basis ``1, a, a^2, ...``."""
        return list(self.convert(x).coords)

    def format(self, x):
        x = self.convert(x)
        parts = []
        for i, c in reversed(list(enumerate(x.coords))):
            if c == 0:
                continue
            cs = self.base.format(c)
            mono = "" if i == 0 else (self.gen if i == 1 else f"{self.gen}^{i}")
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    def to_json(self):
        out = dict(self.base.to_json())
        out["minpoly"] = [self.base.format(c) for c in self.minpoly]
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SimpleExtension)
            and other.base == self.base
            and other.minpoly == self.minpoly
        )

    def __hash__(self):
        return hash((self.base, tuple(self.minpoly)))

    def __repr__(self):
        return f"SimpleExtension({self.base!r}, {[str(c) for c in self.minpoly]})"


def _is_irreducible(K, m):
    n = len(m) - 1
    if K.characteristic == 0:
        # quadratic: irreducible iff the discriminant is not a rational square
        c0, c1 = Fraction(m[0]), Fraction(m[1])
        disc = c1 * c1 - 4 * c0
        return not _is_rational_square(disc)
    # Rabin's test
    t = [K.zero, K.one]
    p = K.order
    if upoly.trim(upoly.sub(K, upoly.pow_mod(K, t, p**n, m), t)):
        return False
    for q in _prime_divisors(n):
        h = upoly.sub(K, upoly.pow_mod(K, t, p ** (n // q), m), t)
        if upoly.degree(upoly.gcd(K, h, m)) > 0:
            return False
    return True


def _prime_divisors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _isqrt_exact(n):
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _is_rational_square(q):
    q = Fraction(q)
    return _isqrt_exact(q.numerator) is not None and _isqrt_exact(q.denominator) is not None


def field_from_json(obj):
    if obj is None:
        return QQ
    if not isinstance(obj, dict) or "type" not in obj:
        raise ParseError("field", "expected an object with a 'type'")
    kind = obj["type"]
    if kind == "Q":
        base = QQ
    elif kind == "Fp":
        if "p" not in obj:
            raise ParseError("p", "required")
        p = obj["p"]
        if not isinstance(p, int):
            raise ParseError("p", "not an integer")
        base = PrimeField(p)
    else:
        raise ParseError("field", f"unknown field type {kind!r}")
    if "minpoly" in obj:
        return SimpleExtension(base, [base.convert(c) for c in obj["minpoly"]])
    return base
