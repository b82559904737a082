"""Exact coefficient arithmetic for the three base rings.

Plain Python integers serve the ordinary ring Z.  ``IntPoly`` is Z[t]
(equivariant homology coefficients) and ``LaurentPoly`` is Z[q, q^-1]
(equivariant K coefficients, q a formal stand-in for an exponential).
Everything is arbitrary precision and purely formal -- no floating point
appears anywhere in the engine.
"""


class _SparsePoly:
    """Shared machinery for sparse one-variable integer polynomials.

    Subclasses fix the variable name and the legal exponent range.
    Instances are immutable in practice: every operation returns a fresh
    object and nothing mutates ``terms`` after construction.
    """

    __slots__ = ("terms",)
    var = "x"

    def __init__(self, terms=0):
        if isinstance(terms, int):
            terms = {0: terms}
        elif isinstance(terms, _SparsePoly):
            terms = terms.terms
        clean = {}
        for e, c in dict(terms).items():
            if not isinstance(e, int):
                raise TypeError("exponent must be an integer: %r" % (e,))
            self._check_exponent(e)
            if not isinstance(c, int):
                raise TypeError("coefficient must be an exact integer: %r" % (c,))
            if c:
                clean[e] = c
        self.terms = clean

    def _check_exponent(self, e):
        pass

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)(other)
        if isinstance(other, type(self)):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self)(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons and hashing --------------------------------------

    def is_constant(self):
        return all(e == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_term() == other
        if isinstance(other, type(self)) and type(other) is type(self):
            return self.terms == other.terms
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self.var, tuple(sorted(self.terms.items()))))

    # -- presentation --------------------------------------------------

    def sorted_terms(self):
        """Term list [[exponent, coefficient], ...] by ascending exponent."""
        return [[e, self.terms[e]] for e in sorted(self.terms)]

    def _monomial(self, e, c, power_fmt):
        if e == 0:
            return str(abs(c))
        core = self.var if e == 1 else power_fmt % (self.var, e)
        if abs(c) == 1:
            return core
        return "%d%s" % (abs(c), core)

    def _render(self, power_fmt):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = self._monomial(e, c, power_fmt)
            if not pieces:
                pieces.append(mono if c > 0 else "-" + mono)
            else:
                pieces.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(pieces)

    def __str__(self):
        return self._render("%s^%d")

    def latex(self):
        return self._render("%s^{%d}")

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self.terms)

    def to_json(self):
        return {"var": self.var, "terms": self.sorted_terms()}


class IntPoly(_SparsePoly):
    """A polynomial in t with integer coefficients, stored sparsely."""

    __slots__ = ()
    var = "t"

    def _check_exponent(self, e):
        if e < 0:
            raise ValueError("exponent of %s must be nonnegative: %d" % (self.var, e))

    def at_t_zero(self):
        """Evaluate at t = 0 (the constant term)."""
        return self.constant_term()


class LaurentPoly(_SparsePoly):
    """A Laurent polynomial in q with integer coefficients.

    Negative exponents are legal, though every quantity the tiling engine
    produces happens to use only nonnegative ones.
    """

    __slots__ = ()
    var = "q"

    def at_q_one(self):
        """Evaluate at q = 1."""
        return sum(self.terms.values())

    def at_q_one_minus_t(self):
        """Substitute q = 1 - t and expand, returning an IntPoly.

        Raises on negative exponents, where the image is not polynomial.
        """
        one_minus_t = IntPoly({0: 1, 1: -1})
        out = IntPoly(0)
        for e, c in self.terms.items():
            if e < 0:
                raise ValueError("cannot substitute q = 1 - t into q^%d" % e)
            out = out + c * one_minus_t ** e
        return out


IntPoly.ZERO = IntPoly(0)
IntPoly.ONE = IntPoly(1)
IntPoly.T = IntPoly({1: 1})
LaurentPoly.ZERO = LaurentPoly(0)
LaurentPoly.ONE = LaurentPoly(1)
LaurentPoly.Q = LaurentPoly({1: 1})
LaurentPoly.ONE_MINUS_Q = LaurentPoly({0: 1, 1: -1})


def coef_substitute(x, target):
    """Apply one of the named specializations to a LaurentPoly.

    ``q_to_one`` gives the integer value at q = 1; ``q_to_one_minus_t``
    gives the IntPoly image under q = 1 - t.
    """
    if not isinstance(x, LaurentPoly):
        raise TypeError("substitution targets a LaurentPoly, got %r" % (x,))
    if target == "q_to_one":
        return x.at_q_one()
    if target == "q_to_one_minus_t":
        return x.at_q_one_minus_t()
    raise ValueError("unknown substitution target: %r" % (target,))


def coeff_to_json(x):
    """JSON form of a coefficient: plain int, or a var/terms object."""
    if isinstance(x, int):
        return x
    if isinstance(x, (IntPoly, LaurentPoly)):
        return x.to_json()
    raise TypeError("not a coefficient: %r" % (x,))


def coeff_from_json(obj):
    """Inverse of coeff_to_json.  Accepts decimal strings for integers."""
    if isinstance(obj, bool):
        raise TypeError("not a coefficient: %r" % (obj,))
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        return int(obj)
    if isinstance(obj, dict):
        var = obj.get("var")
        terms = {int(e): int(c) for e, c in obj.get("terms", [])}
        if var == "t":
            return IntPoly(terms)
        if var == "q":
            return LaurentPoly(terms)
        raise ValueError("unknown coefficient variable: %r" % (var,))
    raise TypeError("not a coefficient encoding: %r" % (obj,))
