"""Finite fields GF(p^e) in a polynomial basis over GF(p).

An element is the coefficient tuple (c_0, ..., c_{e-1}) of sum c_i t^i,
where t is the class of X modulo the defining polynomial f.  Its integer
encoding is sum c_i p^i, so 0 and 1 encode to 0 and 1.

Polynomials over GF(p) (used for defining polynomials) are plain lists of
ints, lowest degree first.
"""
from __future__ import annotations

import itertools
import math
from functools import cached_property, lru_cache

import numpy as np

from . import linalg

# Enumerations (embedding root search, subfield listing) refuse beyond this.
ENUM_LIMIT = 2**24


class FieldError(Exception):
    pass


class NotPrime(FieldError, ValueError):
    pass


class NotIrreducible(FieldError, ValueError):
    pass


class CtxMismatch(FieldError, TypeError):
    pass


class DegreeMismatch(FieldError, ValueError):
    pass


class IncompatibleDegrees(FieldError, ValueError):
    pass


class NonResidue(FieldError, ValueError):
    pass


class OddCharOnly(FieldError, ValueError):
    pass


class FieldTooLarge(FieldError):
    pass


class NoRootFound(FieldError, RuntimeError):
    pass


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n):
    out, i = [], 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) ----------------------------------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _trim(a)
    return quot, a


def poly_mulmod(a, b, f, p):
    prod = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return poly_divmod(prod, f, p)[1]


def poly_gcd(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def poly_powmod(a, t, f, p):
    result, base = [1], poly_divmod(a, f, p)[1]
    while t:
        if t & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        t >>= 1
    return result


def is_irreducible(f, p):
    """gcd(f, X^{p^i} - X) = 1 for every 1 <= i <= deg(f)/2."""
    f = _trim(x % p for x in f)
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    h = [0, 1]
    for _ in range(e // 2):
        h = poly_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(f, diff, p)) != 1:
            return False
    return True


def default_poly(p, e):
    """Monic irreducible of degree e with the smallest integer encoding."""
    for low in itertools.product(range(p), repeat=e):
        f = list(reversed(low)) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise NoRootFound(f"no irreducible polynomial of degree {e} over GF({p})")


# -- fields ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _make_field(p, e, f):
    return FieldCtx(p, e, f)


def make_field(p, e, f=None):
    """GF(p^e) as GF(p)[X]/(f); f defaults to :func:`default_poly`."""
    if not is_prime(p):
        raise NotPrime(p)
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if f is None:
        f = default_poly(p, e)
    else:
        f = tuple(int(c) % p for c in f)
        if len(_trim(f)) != e + 1 or f[e] != 1:
            raise ValueError(f"defining polynomial must be monic of degree {e}")
        f = tuple(_trim(f))
        if not is_irreducible(f, p):
            raise NotIrreducible(f)
    return _make_field(p, e, tuple(f))


class FieldCtx:
    """GF(p^e) with a fixed defining polynomial.  Immutable; caches are pure."""

    def __init__(self, p, e, f):
        self.p = p
        self.e = e
        self.f = tuple(f)
        self.order = p**e
        self.id = (p, self.f)
        # t^{e+i} mod f, used to fold the high half of a product
        self._red = []
        cur = [(-c) % p for c in self.f[:e]]
        for _ in range(e - 1):
            self._red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * fc) % p for c, fc in zip(cur, self.f)]
        self.zero = Elt(self, (0,) * e)
        self.one = self(1)

    def __repr__(self):
        return f"GF({self.p}^{self.e}, f={poly_str(self.f)})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.id == other.id

    def __hash__(self):
        return hash(self.id)

    def __call__(self, v):
        """Element from an integer encoding or a coefficient sequence."""
        if isinstance(v, Elt):
            if v.ctx != self:
                raise CtxMismatch(f"{v.ctx} vs {self}")
            return v
        if isinstance(v, (int, np.integer)):
            v = int(v)
            if not 0 <= v < self.order:
                raise ValueError(f"encoding {v} out of range for {self}")
            digits = []
            for _ in range(self.e):
                v, r = divmod(v, self.p)
                digits.append(r)
            return Elt(self, tuple(digits))
        c = [int(x) % self.p for x in v]
        if len(c) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(c)}")
        return Elt(self, tuple(c))

    @property
    def gen(self):
        """The class t of X."""
        if self.e == 1:
            return self((-self.f[0]) % self.p)
        return self([0, 1] + [0] * (self.e - 2))

    def elements(self, start=0):
        for v in range(start, self.order):
            yield self(v)

    def random(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return self(int(rng.integers(lo, self.order)))

    # -- arithmetic kernels on coefficient tuples --

    def _mul(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        res = prod[:e]
        for i in range(e, 2 * e - 1):
            c = prod[i] % p
            if c:
                red = self._red[i - e]
                for j in range(e):
                    res[j] += c * red[j]
        return tuple(x % p for x in res)

    @cached_property
    def frobenius_matrix(self):
        """e x e matrix M over GF(p) with M @ coeffs(x) = coeffs(x^p)."""
        cols = [pow(self([0] * i + [1] + [0] * (self.e - i - 1)), self.p).c for i in range(self.e)]
        return np.array(cols, dtype=np.int64).T

    @lru_cache(maxsize=None)
    def frobenius_power(self, j):
        """Matrix of x -> x^{p^j}."""
        j %= self.e
        M = np.eye(self.e, dtype=np.int64)
        F = self.frobenius_matrix
        for _ in range(j):
            M = (F @ M) % self.p
        return M

    @lru_cache(maxsize=None)
    def _frob_cols(self, j):
        M = self.frobenius_power(j)
        return tuple(tuple(int(v) for v in M[:, i]) for i in range(self.e))

    def matrix_of(self, fn):
        """Matrix over GF(p) of a GF(p)-linear map fn: ctx -> ctx."""
        cols = [fn(self([0] * i + [1] + [0] * (self.e - i - 1))).c for i in range(self.e)]
        return np.array(cols, dtype=np.int64).T

    def to_array(self, elts):
        return np.array([x.c for x in elts], dtype=np.int64).reshape(-1, self.e)

    def from_array(self, arr):
        return [Elt(self, tuple(int(v) % self.p for v in row)) for row in np.asarray(arr)]

    def encode_array(self, arr):
        """Integer encodings of the rows of arr."""
        return np.asarray(arr, dtype=np.int64) @ (self.p ** np.arange(self.e, dtype=np.int64))

    @lru_cache(maxsize=None)
    def subfield_basis(self, sub_e):
        """GF(p)-basis (rows) of the degree-sub_e subfield, the kernel of Frob^sub_e - I."""
        if self.e % sub_e:
            raise DegreeMismatch(f"{sub_e} does not divide {self.e}")
        M = (self.frobenius_power(sub_e) - np.eye(self.e, dtype=np.int64)) % self.p
        return linalg.nullspace(M, self.p)

    @lru_cache(maxsize=None)
    def subfield_elements(self, sub_e):
        """All elements of the degree-sub_e subfield, sorted by encoding."""
        if self.p**sub_e > ENUM_LIMIT:
            raise FieldTooLarge(f"GF({self.p}^{sub_e}) too large to enumerate")
        vecs = linalg.span(self.subfield_basis(sub_e), self.p)
        order = np.argsort(self.encode_array(vecs), kind="stable")
        return tuple(self.from_array(vecs[order]))

    @cached_property
    def primitive(self):
        """Smallest-encoded generator of the multiplicative group."""
        n = self.order - 1
        primes = prime_factors(n)
        for g in self.elements(1):
            if all(pow(g, n // r) != self.one for r in primes):
                return g
        raise NoRootFound("no primitive element")

    @cached_property
    def _nonresidue(self):
        if self.p == 2:
            raise OddCharOnly("no quadratic non-residues in characteristic 2")
        half = (self.order - 1) // 2
        minus_one = -self.one
        for z in self.elements(2):
            if pow(z, half) == minus_one:
                return z
        raise NoRootFound("no non-residue")


class Elt:
    """Element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx, c):
        self.ctx = ctx
        self.c = c

    def _check(self, other):
        if not isinstance(other, Elt):
            return self.ctx(other)
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise CtxMismatch(f"{self.ctx} vs {other.ctx}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ctx.p
        return Elt(self.ctx, tuple((a + b) % p for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        p = self.ctx.p
        return Elt(self.ctx, tuple((a - b) % p for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        p = self.ctx.p
        return Elt(self.ctx, tuple((-a) % p for a in self.c))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.ctx.p
            return Elt(self.ctx, tuple((a * other) % p for a in self.c))
        other = self._check(other)
        return Elt(self.ctx, self.ctx._mul(self.c, other.c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._check(other).inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def __pow__(self, t):
        if t < 0:
            return self.inv() ** (-t)
        if not any(self.c):
            return self.ctx.one if t == 0 else self
        t %= self.ctx.order - 1
        result, base = self.ctx.one.c, self.c
        mul = self.ctx._mul
        while t:
            if t & 1:
                result = mul(result, base)
            base = mul(base, base)
            t >>= 1
        return Elt(self.ctx, result)

    def inv(self):
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.ctx.order - 2)

    def frob(self, j=1):
        """x^{p^j}."""
        j %= self.ctx.e
        if j == 0:
            return self
        cols = self.ctx._frob_cols(j)
        p, e = self.ctx.p, self.ctx.e
        out = [0] * e
        for ci, col in zip(self.c, cols):
            if ci:
                for r in range(e):
                    out[r] += ci * col[r]
        return Elt(self.ctx, tuple(x % p for x in out))

    def __eq__(self, other):
        if isinstance(other, int):
            # integers compare as prime-field constants
            return self.c == self.ctx(other % self.ctx.p).c
        return isinstance(other, Elt) and self.ctx == other.ctx and self.c == other.c

    def __hash__(self):
        return hash((self.ctx.id, self.c))

    def __bool__(self):
        return any(self.c)

    def __int__(self):
        v = 0
        for x in reversed(self.c):
            v = v * self.ctx.p + x
        return v

    def __lt__(self, other):
        return int(self) < int(other)

    def __repr__(self):
        return f"<{int(self)} in GF({self.ctx.p}^{self.ctx.e})>"


# -- module-level operations ---------------------------------------------------

def add(x, y):
    return x + y


def sub(x, y):
    return x - y


def mul(x, y):
    return x * y


def inv(x):
    return x.inv()


def power(x, t):
    return x**t


def frobenius(x, j):
    """x^{p^j} via the Frobenius matrix."""
    return x.frob(j)


def _check_rel(ctx, L, l):
    if L < 1 or l < 1 or ctx.e % (L * l):
        raise DegreeMismatch(f"{L}*{l} does not divide {ctx.e}")


def trace_rel(x, L, l):
    """sum_{i<l} x^{p^{L i}}; the trace GF(p^{Ll}) -> GF(p^L) on that subfield."""
    _check_rel(x.ctx, L, l)
    out = x.ctx.zero
    for i in range(l):
        out = out + x.frob(L * i)
    return out


def norm_rel(x, L, l):
    """prod_{i<l} x^{p^{L i}}."""
    _check_rel(x.ctx, L, l)
    out = x.ctx.one
    for i in range(l):
        out = out * x.frob(L * i)
    return out


def in_subfield(x, sub_e):
    if sub_e < 1 or x.ctx.e % sub_e:
        raise DegreeMismatch(f"{sub_e} does not divide {x.ctx.e}")
    return x.frob(sub_e) == x


def sqrt_in_subfield(x, sub_e):
    """Square root of x inside GF(p^sub_e); of +-y the smaller encoding wins."""
    ctx = x.ctx
    if ctx.p == 2:
        return x ** (2 ** (ctx.e - 1))
    if not in_subfield(x, sub_e):
        raise DegreeMismatch(f"{x!r} is not in GF({ctx.p}^{sub_e})")
    if not x:
        return x
    if x ** ((ctx.p**sub_e - 1) // 2) != ctx.one:
        raise NonResidue(repr(x))
    y = _tonelli_shanks(x)
    return min(y, -y, key=int)


def _tonelli_shanks(x):
    ctx = x.ctx
    n = ctx.order - 1
    s, t = 0, n
    while t % 2 == 0:
        s, t = s + 1, t // 2
    z = ctx._nonresidue ** t
    y = x ** ((t + 1) // 2)
    b = x**t
    r = s
    while b != ctx.one:
        i, bb = 0, b
        while bb != ctx.one:
            bb, i = bb * bb, i + 1
        g = z ** (2 ** (r - i - 1))
        y, z = y * g, g * g
        b, r = b * z, i
    return y


# -- embeddings -----------------------------------------------------------------

def _horner(coeffs, x):
    acc = x.ctx.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def embedding_matrix(src, dst):
    """dst.e x src.e matrix whose column i is the image of t^i.

    t maps to the smallest-encoded root of src.f in dst, found by scanning
    the degree-src.e subfield of dst.
    """
    if src.p != dst.p or dst.e % src.e:
        raise IncompatibleDegrees(f"cannot embed {src} into {dst}")
    if src == dst:
        return np.eye(src.e, dtype=np.int64)
    root = None
    for r in dst.subfield_elements(src.e):
        if not _horner(src.f, r):
            root = r
            break
    if root is None:
        raise NoRootFound(f"{poly_str(src.f)} has no root in {dst}")
    cols, cur = [], dst.one
    for _ in range(src.e):
        cols.append(cur.c)
        cur = cur * root
    return np.array(cols, dtype=np.int64).T


def embed(src, dst, x):
    if x.ctx != src:
        raise CtxMismatch(f"{x.ctx} vs {src}")
    M = embedding_matrix(src, dst)
    return dst((M @ np.array(x.c, dtype=np.int64)) % dst.p)


def descend(src, dst, y):
    """Inverse of :func:`embed`: the x in src with embed(x) = y.

    Raises ValueError if y is outside the image of src.
    """
    if y.ctx != dst:
        raise CtxMismatch(f"{y.ctx} vs {dst}")
    M = embedding_matrix(src, dst)
    x = linalg.solve(M, np.array(y.c, dtype=np.int64), dst.p)
    if x is None:
        raise ValueError(f"{y!r} does not lie in the image of {src}")
    return src(x)


def poly_str(f):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "1" if i == 0 else ("X" if i == 1 else f"X^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) or "0"
