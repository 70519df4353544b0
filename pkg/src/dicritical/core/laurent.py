"""Finite Laurent sums ``sum f_n Y^n`` with polynomial coefficients."""

from ..errors import DimensionMismatch


class AuxLaurent:
    """Immutable map ``n -> f_n`` over one polynomial ring, zero parts dropped."""

    __slots__ = ("ring", "components")

    def __init__(self, ring, components=None):
        self.ring = ring
        comps = {}
        for n, f in (components or {}).items():
            f = ring(f)
            if not f.is_zero:
                comps[int(n)] = f
        self.components = comps

    @property
    def is_zero(self):
        return not self.components

    def support(self):
        return sorted(self.components)

    def __getitem__(self, n):
        return self.components.get(n, self.ring.zero)

    def items(self):
        return sorted(self.components.items())

    def _check(self, other):
        if other.ring != self.ring:
            raise DimensionMismatch("Laurent sums over different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.components)
        for n, f in other.components.items():
            out[n] = out.get(n, self.ring.zero) + f
        return type(self)(self.ring, out)

    def __neg__(self):
        return type(self)(self.ring, {n: -f for n, f in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, AuxLaurent):
            return type(self)(self.ring, {n: f * other for n, f in self.components.items()})
        self._check(other)
        out = {}
        for n, f in self.components.items():
            for k, g in other.components.items():
                out[n + k] = out.get(n + k, self.ring.zero) + f * g
        return type(self)(self.ring, out)

    def shift(self, k):
        """Multiply by ``Y^k``."""
        return type(self)(self.ring, {n + k: f for n, f in self.components.items()})

    def __eq__(self, other):
        return isinstance(other, AuxLaurent) and self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash(tuple(sorted((n, hash(f)) for n, f in self.components.items())))

    def __repr__(self):
        if not self.components:
            return "0"
        return " + ".join(f"({f})*Y^{n}" for n, f in self.items())

    def to_json(self):
        return {
            "vars": list(self.ring.names),
            "field": self.ring.field.to_json(),
            "components": [{"n": n, "terms": f.to_json(with_ring=False)} for n, f in self.items()],
        }
