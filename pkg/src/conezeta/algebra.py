"""
Exact rational functions in two variables q and t.

Every generating function in this package is a Laurent polynomial in
(q, t) over a product of binomials (1 - q^a t^b).  Here t stands for
q^{-s}; the symbol s itself never appears.

Denominators are kept factored.  Inversion q -> 1/q, t -> 1/t acts on a
single factor by (1 - x^{-1}) = -x^{-1} (1 - x), so it never needs to
expand anything; expansion only happens when two values are compared.
"""
from collections import Counter
from fractions import Fraction
from itertools import chain

SAFE_INT = 2 ** 53


class LaurentPoly:
    """Finite sum of c * q^i * t^j with rational c.

    Terms are stored in a dict keyed by the exponent pair (i, j).  Zero
    coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                c = Fraction(c)
                if c:
                    key = (int(i), int(j))
                    c = clean.get(key, 0) + c
                    if c:
                        clean[key] = c
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        return cls({(i, j): c})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls):
        return cls()

    def terms(self):
        """(e_q, e_t, coeff) triples sorted by (e_t, e_q)."""
        return [(i, j, self._terms[i, j]) for (i, j) in sorted(self._terms, key=lambda k: (k[1], k[0]))]

    def items(self):
        return self._terms.items()

    def coeff(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(c=other) if other else LaurentPoly()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({k: c * other for k, c in self._terms.items()})
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def shift(self, a, b):
        """Multiply by the monomial q^a t^b."""
        return LaurentPoly._raw({(i + a, j + b): c for (i, j), c in self._terms.items()})

    def invert(self):
        """Substitute q -> 1/q and t -> 1/t."""
        return LaurentPoly._raw({(-i, -j): c for (i, j), c in self._terms.items()})

    def times_binomial(self, a, b, power=1):
        """Multiply by (1 - q^a t^b)^power."""
        p = self
        for _ in range(power):
            p = p - p.shift(a, b)
        return p

    def divide_binomial(self, a, b):
        """Exact quotient by (1 - q^a t^b), or None if it does not divide.

        Exponents differing by a multiple of (a, b) form chains; along a
        chain the division is a running sum, which must end at zero.
        """
        if (a, b) == (0, 0):
            raise ZeroDivisionError("1 - q^0 t^0 is zero")
        chains = {}
        for (i, j), c in self._terms.items():
            pos = j // b if b else i // a
            key = (i - pos * a, j - pos * b)
            chains.setdefault(key, {})[pos] = c
        out = {}
        for (i0, j0), chain_ in chains.items():
            acc = Fraction(0)
            lo, hi = min(chain_), max(chain_)
            for pos in range(lo, hi + 1):
                acc += chain_.get(pos, 0)
                if pos == hi:
                    if acc:
                        return None
                elif acc:
                    out[i0 + pos * a, j0 + pos * b] = acc
        return LaurentPoly._raw(out)

    def leading(self):
        """Largest exponent pair under the (e_t, e_q) order, with its coefficient."""
        k = max(self._terms, key=lambda k: (k[1], k[0]))
        return k, self._terms[k]

    def t_degrees(self):
        return [j for (_, j) in self._terms]

    def substitute_t(self, t_value):
        """Evaluate the t-variable at a rational number, returning {e_q: coeff}."""
        out = {}
        for (i, j), c in self._terms.items():
            out[i] = out.get(i, 0) + c * Fraction(t_value) ** j
        return {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def __repr__(self):
        return "LaurentPoly(%s)" % format_poly(self)


def canonical_factor(a, b):
    """Orient (1 - q^a t^b) so that b > 0, or b == 0 and a > 0.

    Returns (sign, (ma, mb), (a', b')) meaning
    1/(1 - q^a t^b) = sign * q^ma t^mb / (1 - q^a' t^b').
    """
    if a == 0 and b == 0:
        raise ValueError("(1 - q^0 t^0) is identically zero")
    if b > 0 or (b == 0 and a > 0):
        return 1, (0, 0), (a, b)
    return -1, (-a, -b), (-a, -b)


class FactoredRational:
    """A LaurentPoly numerator over a multiset of (1 - q^a t^b) factors.

    The denominator is stored as a sorted tuple of (a, b) pairs, repeated
    according to multiplicity, each in canonical orientation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.monomial(c=num) if num else LaurentPoly()
        sign, mi, mj = 1, 0, 0
        factors = []
        for a, b in den:
            s, (da, db), f = canonical_factor(int(a), int(b))
            sign *= s
            mi += da
            mj += db
            factors.append(f)
        if sign != 1 or mi or mj:
            num = num.shift(mi, mj) * sign
        if num.is_zero():
            factors = []
        self.num = num
        self.den = tuple(sorted(factors, key=lambda f: (f[1], f[0])))

    @classmethod
    def zero(cls):
        return cls(LaurentPoly())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @classmethod
    def monomial(cls, a=0, b=0, c=1):
        return cls(LaurentPoly.monomial(a, b, c))

    def is_zero(self):
        return self.num.is_zero()

    def den_counter(self):
        return Counter(self.den)

    def __repr__(self):
        return "FactoredRational(%s)" % render(self)

    # ring operations

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return FactoredRational._raw(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredRational._raw(self.num * other, self.den if other else ())
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        """Structural equality; use eq_rational for equality as functions."""
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den if not num.is_zero() else ()
        return obj


def _expand_missing(num, have, want):
    for f, k in want.items():
        extra = k - have.get(f, 0)
        if extra > 0:
            num = num.times_binomial(f[0], f[1], extra)
    return num


def common_denominator(*xs):
    """Bring values to their least common factor multiset; returns (numerators, factors)."""
    lcd = Counter()
    for x in xs:
        for f, k in Counter(x.den).items():
            if k > lcd[f]:
                lcd[f] = k
    nums = [_expand_missing(x.num, Counter(x.den), lcd) for x in xs]
    return nums, lcd


def add(x, y):
    """x + y over the least common multiset of denominator factors."""
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    (nx, ny), lcd = common_denominator(x, y)
    return FactoredRational(nx + ny, lcd.elements())


def sum_rationals(xs):
    xs = [x for x in xs if not x.is_zero()]
    if not xs:
        return FactoredRational.zero()
    nums, lcd = common_denominator(*xs)
    total = LaurentPoly()
    for n in nums:
        total = total + n
    return FactoredRational(total, lcd.elements())


def mul(x, y):
    return FactoredRational(x.num * y.num, x.den + y.den)


def normalize(x):
    """Cancel denominator factors that divide the numerator exactly."""
    num = x.num
    if num.is_zero():
        return FactoredRational.zero()
    remaining = list(x.den)
    changed = True
    while changed:
        changed = False
        for idx, (a, b) in enumerate(remaining):
            q = num.divide_binomial(a, b)
            if q is not None:
                num = q
                del remaining[idx]
                changed = True
                break
    return FactoredRational(num, remaining)


def eq_rational(x, y):
    """Equality as rational functions, by comparing numerators over a common denominator."""
    (nx, ny), _ = common_denominator(x, y)
    return nx == ny


def invert_variables(x):
    """Substitute q -> 1/q, t -> 1/t, keeping the factors in canonical form."""
    num = x.num.invert()
    sign = 1
    mi = mj = 0
    for a, b in x.den:
        # 1/(1 - q^-a t^-b) = -q^a t^b / (1 - q^a t^b)
        sign = -sign
        mi += a
        mj += b
    return FactoredRational._raw(num.shift(mi, mj) * sign, x.den)


def monomial_ratio_test(x, y):
    """Return (sign, a, b) with x == sign * q^a t^b * y, or None.

    Raises ZeroDivisionError if y is zero.
    """
    if y.is_zero():
        raise ZeroDivisionError("ratio test against the zero function")
    if x.is_zero():
        return None
    (nx, ny), _ = common_denominator(x, y)
    if len(nx) != len(ny):
        return None
    (i1, j1), c1 = nx.leading()
    (i2, j2), c2 = ny.leading()
    ratio = c1 / c2
    if ratio not in (1, -1):
        return None
    a, b = i1 - i2, j1 - j2
    if ny.shift(a, b) * ratio != nx:
        return None
    return int(ratio), a, b


def scale_monomial(x, sign, a, b):
    return FactoredRational._raw(x.num.shift(a, b) * sign, x.den)


class MultiGenFun:
    """Rational function in formal variables X_1..X_m.

    numerator: dict {exponent tuple: coefficient}; denominator: list of
    exponent tuples u, each standing for a factor (1 - X^u).
    """

    def __init__(self, numerator, denominator):
        self.numerator = {tuple(e): Fraction(c) for e, c in numerator.items() if c}
        self.denominator = [tuple(u) for u in denominator]
        dims = {len(e) for e in chain(self.numerator, self.denominator)}
        if len(dims) > 1:
            raise ValueError("exponent vectors of mixed length")
        self.m = dims.pop() if dims else 0

    def __repr__(self):
        def mono(e):
            parts = []
            for i, k in enumerate(e, 1):
                if k == 1:
                    parts.append("X%d" % i)
                elif k:
                    parts.append("X%d^%d" % (i, k))
            return "*".join(parts) or "1"
        num = " + ".join(
            (("" if c == 1 else "%s*" % c) + mono(e)) for e, c in sorted(self.numerator.items())
        )
        den = "*".join("(1 - %s)" % mono(u) for u in self.denominator)
        return "(%s)/(%s)" % (num, den or "1")


def specialize_monomials(g, C, B):
    """Map each X^e to q^{C.e} t^{B.e}.

    Every denominator exponent u needs B.u > 0; otherwise the underlying
    series has no t-adic meaning and ValueError is raised.
    """
    if len(C) != g.m or len(B) != g.m:
        raise ValueError("C and B must have length %d" % g.m)
    for u in g.denominator:
        if sum(b * x for b, x in zip(B, u)) <= 0:
            raise ValueError("denominator exponent %r has B.u <= 0" % (u,))
    num = LaurentPoly([((sum(c * x for c, x in zip(C, e)), sum(b * x for b, x in zip(B, e))), v)
                       for e, v in g.numerator.items()])
    den = [(sum(c * x for c, x in zip(C, u)), sum(b * x for b, x in zip(B, u))) for u in g.denominator]
    return FactoredRational(num, den)


# serialization

def _jsonable_int(n):
    n = int(n)
    return str(n) if abs(n) >= SAFE_INT else n


def _parse_int(v):
    if isinstance(v, bool):
        raise ValueError("boolean is not an integer")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v)
    raise ValueError("expected an integer, got %r" % (v,))


def to_json(x):
    """Canonical form: numerator [[num, den, e_q, e_t], ...] sorted by (e_t, e_q); denominator [[a, b], ...]."""
    return {
        "numerator": [[_jsonable_int(c.numerator), _jsonable_int(c.denominator), i, j]
                      for i, j, c in x.num.terms()],
        "denominator": [[a, b] for a, b in x.den],
    }


def from_json(doc):
    num = LaurentPoly([((_parse_int(i), _parse_int(j)), Fraction(_parse_int(n), _parse_int(d)))
                       for n, d, i, j in doc["numerator"]])
    return FactoredRational(num, [(_parse_int(a), _parse_int(b)) for a, b in doc["denominator"]])


def _format_monomial(i, j, style):
    parts = []
    if style == "s":
        if i or j:
            if j == 0:
                parts.append("q" if i == 1 else "q^%d" % i)
            else:
                s = ("%ds" % -j) if j not in (1, -1) else ("-s" if j == 1 else "s")
                if i:
                    expo = "%d%s%s" % (i, "" if s.startswith("-") else "+", s)
                else:
                    expo = s
                parts.append("q^(%s)" % expo)
    else:
        if i:
            parts.append("q" if i == 1 else "q^%d" % i)
        if j:
            parts.append("t" if j == 1 else "t^%d" % j)
    return "*".join(parts)


def format_poly(p, style="t"):
    if p.is_zero():
        return "0"
    out = []
    for i, j, c in p.terms():
        mono = _format_monomial(i, j, style)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else "%s*%s" % (mag, mono)
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def render(x, style="t"):
    """Human-readable string; style "t" uses t, style "s" writes t as q^(-s)."""
    num = format_poly(x.num, style)
    if not x.den:
        return num
    counts = Counter(x.den)
    parts = []
    for (a, b) in sorted(counts, key=lambda f: (f[1], f[0])):
        k = counts[a, b]
        f = "(1 - %s)" % _format_monomial(a, b, style)
        parts.append(f if k == 1 else "%s^%d" % (f, k))
    if len(x.num.terms()) > 1:
        num = "(%s)" % num
    den = parts[0] if len(parts) == 1 else "(%s)" % "*".join(parts)
    return "%s/%s" % (num, den)
