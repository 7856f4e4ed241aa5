"""Exact arithmetic substrate.

Base rings (Z, F_p, Z[t], F_p[t]), sparse multivariate polynomials in
graded-lex canonical form, fraction-free determinants, univariate
factorization over F_p, necklace counts, and integer-polynomial
discriminants.

Element encodings per base ring:
  Z    -> python int
  Fp   -> int in [0, p)
  ZX   -> tuple of ints, constant term first, no trailing zeros; () is zero
  FpX  -> tuple of ints in [0, p), same normalization
"""

from __future__ import annotations

import json
from math import gcd, isqrt

from .errors import (
    ArityMismatch,
    BaseRingMismatch,
    InexactDivision,
    MonogenError,
    NonMonic,
    NonSquare,
    ZeroPolynomial,
)

# ---------------------------------------------------------------------------
# primality


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 2^31 (bases 2,3,5,7)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
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


def factor_int(n: int) -> dict:
    """Trial-division factorization; returns {prime: exponent}. n may be negative."""
    n = abs(n)
    out = {}
    if n <= 1:
        return out
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense univariate helpers over Z (tuples, constant first)


def _tup_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _tup_add(a, b, p=None):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    if p is not None:
        out = [v % p for v in out]
    return _tup_trim(out)


def _tup_neg(a, p=None):
    if p is None:
        return tuple(-v for v in a)
    return tuple((-v) % p for v in a)


def _tup_mul(a, b, p=None):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] += u * v
    if p is not None:
        out = [v % p for v in out]
    return _tup_trim(out)


def _tup_exact_div(a, b, p=None):
    """Schoolbook exact division a / b; raises InexactDivision if not exact."""
    if not b:
        raise InexactDivision("division by zero polynomial")
    if not a:
        return ()
    if len(a) < len(b):
        raise InexactDivision("degree of dividend below divisor")
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    if p is not None:
        lb_inv = pow(lb, p - 2, p)
    for k in range(len(a) - len(b), -1, -1):
        lead = rem[k + len(b) - 1]
        if lead == 0:
            continue
        if p is None:
            if lead % lb != 0:
                raise InexactDivision("coefficient not divisible")
            c = lead // lb
        else:
            c = lead * lb_inv % p
        q[k] = c
        for j, v in enumerate(b):
            rem[k + j] -= c * v
            if p is not None:
                rem[k + j] %= p
    if any(rem):
        raise InexactDivision("nonzero remainder")
    return _tup_trim(q)


# ---------------------------------------------------------------------------
# base rings


class BaseRing:
    """One of Z, F_p, Z[t], F_p[t], with decidable arithmetic and unit test."""

    KINDS = ("Z", "Fp", "ZX", "FpX")

    def __init__(self, kind: str, p: int | None = None):
        if kind not in self.KINDS:
            raise MonogenError(f"unknown base ring kind {kind!r}")
        if kind in ("Fp", "FpX"):
            if p is None or p >= 2**31 or not is_prime(p):
                raise MonogenError(f"modulus {p!r} is not a prime < 2^31")
        else:
            p = None
        self.kind = kind
        self.p = p

    # -- identity / hashing

    def __eq__(self, other):
        return isinstance(other, BaseRing) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"BaseRing({self.kind}{'' if self.p is None else f', p={self.p}'})"

    @property
    def is_polynomial(self) -> bool:
        return self.kind in ("ZX", "FpX")

    @property
    def char_p(self) -> int | None:
        return self.p

    # -- element construction

    def coerce(self, v):
        """Accept ints, or coefficient lists/tuples for polynomial kinds."""
        if self.kind == "Z":
            if isinstance(v, int):
                return v
        elif self.kind == "Fp":
            if isinstance(v, int):
                return v % self.p
        elif self.kind == "ZX":
            if isinstance(v, int):
                return _tup_trim((v,))
            if isinstance(v, (list, tuple)) and all(isinstance(c, int) for c in v):
                return _tup_trim(v)
        elif self.kind == "FpX":
            if isinstance(v, int):
                return _tup_trim((v % self.p,))
            if isinstance(v, (list, tuple)) and all(isinstance(c, int) for c in v):
                return _tup_trim(c % self.p for c in v)
        raise MonogenError(f"cannot coerce {v!r} into {self!r}")

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    # -- arithmetic

    def add(self, a, b):
        if self.kind == "Z":
            return a + b
        if self.kind == "Fp":
            return (a + b) % self.p
        return _tup_add(a, b, self.p)

    def neg(self, a):
        if self.kind == "Z":
            return -a
        if self.kind == "Fp":
            return (-a) % self.p
        return _tup_neg(a, self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "Z":
            return a * b
        if self.kind == "Fp":
            return a * b % self.p
        return _tup_mul(a, b, self.p)

    def exact_div(self, a, b):
        if self.is_zero(b):
            raise InexactDivision("division by zero")
        if self.kind == "Z":
            q, r = divmod(a, b)
            if r:
                raise InexactDivision(f"{a} not divisible by {b}")
            return q
        if self.kind == "Fp":
            return a * pow(b, self.p - 2, self.p) % self.p
        return _tup_exact_div(a, b, self.p)

    def is_zero(self, a) -> bool:
        if self.kind in ("Z", "Fp"):
            return a == 0
        return a == ()

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        if self.kind == "Fp":
            return a % self.p != 0
        if self.kind == "ZX":
            return a in ((1,), (-1,))
        return len(a) == 1 and a[0] % self.p != 0

    def is_negative(self, a) -> bool:
        """Canonical-sign convention: Z/ZX by leading sign, F_p by upper half."""
        if self.is_zero(a):
            return False
        if self.kind == "Z":
            return a < 0
        if self.kind == "Fp":
            return a > self.p // 2
        if self.kind == "ZX":
            return a[-1] < 0
        return a[-1] > self.p // 2

    # -- serialization

    def elem_to_json(self, a):
        if self.kind in ("Z", "Fp"):
            return a
        return list(a)

    def elem_from_json(self, v):
        return self.coerce(v)

    def format_elem(self, a, var: str = "t") -> str:
        if self.kind in ("Z", "Fp"):
            return str(a)
        if not a:
            return "0"
        parts = []
        for e in range(len(a) - 1, -1, -1):
            c = a[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}{var}" + (f"^{e}" if e > 1 else ""))
        s = parts[0]
        for part in parts[1:]:
            s += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return s

    def sort_key(self, a):
        if self.kind in ("Z", "Fp"):
            return (0, (a,))
        return (len(a), a)

    def to_json(self):
        d = {"kind": self.kind}
        if self.p is not None:
            d["p"] = self.p
        return d

    @classmethod
    def from_json(cls, d):
        return cls(d["kind"], d.get("p"))


ZZ = BaseRing("Z")
ZX = BaseRing("ZX")


def Fp(p: int) -> BaseRing:
    return BaseRing("Fp", p)


def FpX(p: int) -> BaseRing:
    return BaseRing("FpX", p)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


def _grlex_key(exps):
    return (sum(exps), exps)


class SparsePoly:
    """Sparse multivariate polynomial over a BaseRing, graded-lex canonical."""

    __slots__ = ("base", "arity", "terms")

    def __init__(self, base: BaseRing, arity: int, terms=None):
        self.base = base
        self.arity = arity
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != arity:
                raise ArityMismatch(f"exponent vector {exps} has wrong arity")
            if not base.is_zero(c):
                clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, base, arity):
        return cls(base, arity)

    @classmethod
    def constant(cls, base, arity, c):
        c = base.coerce(c)
        if base.is_zero(c):
            return cls(base, arity)
        return cls(base, arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, base, arity, i):
        exps = [0] * arity
        exps[i] = 1
        return cls(base, arity, {tuple(exps): base.one})

    # -- predicates and views

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def variables_used(self):
        """Sorted indices of variables with a positive exponent somewhere."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return sorted(used)

    def leading(self):
        """(exponent vector, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def _check_compatible(self, other):
        if self.base != other.base:
            raise BaseRingMismatch(f"{self.base!r} vs {other.base!r}")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    # -- arithmetic

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = self.base.add(terms.get(exps, self.base.zero), c)
            if self.base.is_zero(s):
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return SparsePoly(self.base, self.arity, terms)

    def __neg__(self):
        return SparsePoly(
            self.base, self.arity, {e: self.base.neg(c) for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compatible(other)
        base = self.base
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = base.mul(c1, c2)
                s = base.add(terms.get(e, base.zero), c)
                if base.is_zero(s):
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return SparsePoly(base, self.arity, terms)

    def scale(self, c):
        c = self.base.coerce(c)
        return SparsePoly(
            self.base, self.arity, {e: self.base.mul(v, c) for e, v in self.terms.items()}
        )

    def __pow__(self, k: int):
        if k < 0:
            raise MonogenError("negative power")
        out = SparsePoly.constant(self.base, self.arity, 1)
        b = self
        while k:
            if k & 1:
                out = out * b
            b = b * b
            k >>= 1
        return out

    def exact_div(self, other):
        """Exact division; raises InexactDivision unless other divides self."""
        self._check_compatible(other)
        if other.is_zero:
            raise InexactDivision("division by zero polynomial")
        base = self.base
        rem = self
        qterms = {}
        de, dc = other.leading()
        while not rem.is_zero:
            ne, nc = rem.leading()
            diff = tuple(a - b for a, b in zip(ne, de))
            if any(d < 0 for d in diff):
                raise InexactDivision("leading monomial not divisible")
            c = base.exact_div(nc, dc)
            qterms[diff] = c
            rem = rem - SparsePoly(base, self.arity, {diff: c}) * other
        return SparsePoly(base, self.arity, qterms)

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.base == other.base
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.base, self.arity, frozenset(self.terms.items())))

    # -- evaluation / reduction

    def evaluate(self, values):
        """Substitute a base-ring element for each variable."""
        if len(values) != self.arity:
            raise ArityMismatch(f"expected {self.arity} values, got {len(values)}")
        base = self.base
        vals = [base.coerce(v) for v in values]
        acc = base.zero
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(vals, exps):
                for _ in range(e):
                    t = base.mul(t, v)
            acc = base.add(acc, t)
        return acc

    def reduce_mod_p(self, p: int) -> "SparsePoly":
        """Map Z -> F_p or Z[t] -> F_p[t] coefficientwise."""
        if self.base.kind == "Z":
            tgt = Fp(p)
        elif self.base.kind == "ZX":
            tgt = FpX(p)
        else:
            raise BaseRingMismatch("reduction mod p needs an integral base")
        return SparsePoly(
            tgt, self.arity, {e: tgt.coerce(c) for e, c in self.terms.items()}
        )

    def map_base(self, new_base: BaseRing):
        """Re-coerce coefficients into a compatible base ring (e.g. Z -> ZX)."""
        return SparsePoly(
            new_base, self.arity, {e: new_base.coerce(c) for e, c in self.terms.items()}
        )

    def canonical_sign(self) -> "SparsePoly":
        """Negate if the graded-lex leading coefficient is negative."""
        if self.is_zero:
            return self
        _, lc = self.leading()
        return -self if self.base.is_negative(lc) else self

    def integer_coefficients(self):
        """Flat list of all integer coefficients (Z and ZX bases)."""
        if self.base.kind == "Z":
            return list(self.terms.values())
        if self.base.kind == "ZX":
            out = []
            for c in self.terms.values():
                out.extend(c)
            return out
        raise BaseRingMismatch("integer coefficients need base Z or Z[t]")

    # -- serialization

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def text(self, var_names=None) -> str:
        """Canonical text form, graded-lex descending: c*x1^e1*...*xn^en + ..."""
        if not self.terms:
            return "0"
        names = var_names or [f"x{i + 1}" for i in range(self.arity)]
        base = self.base
        chunks = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e > 0
            )
            neg = base.is_negative(c) and base.kind in ("Z", "ZX")
            cc = base.neg(c) if neg else c
            cs = base.format_elem(cc)
            if base.is_polynomial and len(cc) > 1 and mono:
                cs = f"({cs})"
            body = cs if not mono else (mono if cs == "1" else f"{cs}*{mono}")
            chunks.append(("-" if neg else "+", body))
        sign, body = chunks[0]
        s = body if sign == "+" else f"-{body}"
        for sign, body in chunks[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "vars": [f"x{i + 1}" for i in range(self.arity)],
            "terms": [
                [self.base.elem_to_json(c), list(e)] for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, d):
        base = BaseRing.from_json(d["base"])
        arity = len(d["vars"])
        terms = {tuple(e): base.elem_from_json(c) for c, e in d["terms"]}
        return cls(base, arity, terms)

    def __repr__(self):
        return f"SparsePoly({self.text()})"


# ---------------------------------------------------------------------------
# determinants


def determinant_cofactor(m):
    """Cofactor expansion along the first column."""
    n = _check_square(m)
    base, arity = m[0][0].base, m[0][0].arity
    if n == 1:
        return m[0][0]
    acc = SparsePoly.zero(base, arity)
    for i in range(n):
        if m[i][0].is_zero:
            continue
        minor = [row[1:] for j, row in enumerate(m) if j != i]
        term = m[i][0] * determinant_cofactor(minor)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def determinant_bareiss(m):
    """Fraction-free elimination; every division is exact over a domain."""
    n = _check_square(m)
    base, arity = m[0][0].base, m[0][0].arity
    a = [list(row) for row in m]
    sign = 1
    prev = SparsePoly.constant(base, arity, 1)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return SparsePoly.zero(base, arity)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = SparsePoly.zero(base, arity)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def determinant(m):
    """Exact determinant: cofactor for size <= 4, Bareiss beyond."""
    n = _check_square(m)
    return determinant_cofactor(m) if n <= 4 else determinant_bareiss(m)


def _check_square(m):
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise NonSquare("matrix is not square and nonempty")
    return n


def int_determinant(m):
    """Bareiss determinant of a square integer matrix."""
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        raise NonSquare("matrix is not square and nonempty")
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# content primes


def content_primes(f: SparsePoly) -> set:
    """Primes dividing every integer coefficient of f (base Z or Z[t])."""
    if f.is_zero:
        raise ZeroPolynomial("content of the zero polynomial is undefined")
    g = 0
    for c in f.integer_coefficients():
        g = gcd(g, c)
        if g == 1:
            return set()
    return set(factor_int(g))


# ---------------------------------------------------------------------------
# univariate polynomials over F_p


class UniPolyFp:
    """Dense univariate polynomial over F_p, constant term first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if not is_prime(p):
            raise MonogenError(f"{p} is not prime")
        self.p = p
        self.coeffs = _tup_trim(c % p for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _wrap(self, coeffs):
        return UniPolyFp(self.p, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, UniPolyFp)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        return self._wrap(_tup_add(self.coeffs, other.coeffs, self.p))

    def __sub__(self, other):
        return self._wrap(_tup_add(self.coeffs, _tup_neg(other.coeffs, self.p), self.p))

    def __mul__(self, other):
        return self._wrap(_tup_mul(self.coeffs, other.coeffs, self.p))

    def __mod__(self, other):
        _, r = self.divmod(other)
        return r

    def divmod(self, other):
        if other.is_zero:
            raise ZeroPolynomial("division by zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return self._wrap(()), self
        q = [0] * (self.degree - db + 1)
        inv = pow(other.coeffs[-1], p - 2, p)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + db] * inv % p
            if c:
                q[k] = c
                for j, v in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * v) % p
        return self._wrap(q), self._wrap(rem)

    def monic(self):
        if self.is_zero:
            return self
        inv = pow(self.coeffs[-1], self.p - 2, self.p)
        return self._wrap(c * inv % self.p for c in self.coeffs)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return self._wrap(
            (i * c) % self.p for i, c in enumerate(self.coeffs) if i > 0
        )

    def pow_mod(self, k: int, mod):
        out = self._wrap((1,))
        b = self % mod
        while k:
            if k & 1:
                out = (out * b) % mod
            b = (b * b) % mod
            k >>= 1
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise InexactDivision("nonzero remainder")
        return q

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def text(self, var: str = "x") -> str:
        return BaseRing("FpX", self.p).format_elem(self.coeffs, var)

    def __repr__(self):
        return f"UniPolyFp(p={self.p}, {self.text()})"


def _squarefree_decomposition(f: UniPolyFp):
    """Char-p squarefree decomposition of monic f: list of (g_i, multiplicity)."""
    p = f.p
    out = {}

    def add(g, mult):
        if g.degree >= 1:
            out[g] = out.get(g, 0) + mult

    def recurse(f, outer):
        if f.degree < 1:
            return
        d = f.derivative()
        if d.is_zero:
            # f = g(x^p); p-th root: Frobenius fixes F_p, so just deflate
            g = UniPolyFp(p, f.coeffs[::p])
            recurse(g, outer * p)
            return
        c = f.gcd(d)
        w = f.exact_div(c)
        i = 1
        while w.degree >= 1:
            y = w.gcd(c)
            z = w.exact_div(y)
            if z.degree >= 1:
                add(z, outer * i)
            w = y
            c = c.exact_div(y)
            i += 1
        recurse(c, outer)  # remaining part is a p-th power

    recurse(f.monic(), 1)
    merged = {}
    for g, m in out.items():
        merged[g] = merged.get(g, 0) + m
    return list(merged.items())


def _fp_kernel_basis(rows, p):
    """Kernel basis of the matrix with the given rows, over F_p."""
    n = len(rows[0]) if rows else 0
    m = [list(r) for r in rows]
    pivots = {}
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(m)):
            if m[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], p - 2, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                c = m[i][col]
                m[i] = [(a - c * b) % p for a, b in zip(m[i], m[r])]
        pivots[col] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for col, row in pivots.items():
            v[col] = (-m[row][fc]) % p
        basis.append(tuple(v))
    return basis


def _berlekamp_squarefree(f: UniPolyFp):
    """Factor a squarefree monic f via Berlekamp's kernel plus gcd splitting."""
    p = f.p
    n = f.degree
    if n <= 1:
        return [f]
    x = UniPolyFp(p, (0, 1))
    xp = x.pow_mod(p, f)
    # rows of (Q - I): image of x^i under Frobenius, minus x^i
    rows = []
    power = UniPolyFp(p, (1,))
    for i in range(n):
        coeffs = list(power.coeffs) + [0] * (n - len(power.coeffs))
        coeffs[i] = (coeffs[i] - 1) % p
        rows.append(coeffs)
        power = (power * xp) % f
    kernel = _fp_kernel_basis(list(map(list, zip(*rows))), p)
    r = len(kernel)
    if r == 1:
        return [f]
    factors = [f]
    for v in kernel:
        if len(factors) >= r:
            break
        vp = UniPolyFp(p, v)
        if vp.degree < 1:
            continue
        new = []
        for u in factors:
            if u.degree <= 1:
                new.append(u)
                continue
            pieces = []
            rest = u
            for c in range(p):
                if rest.degree < 1:
                    break
                g = rest.gcd(vp - UniPolyFp(p, (c,)))
                if 1 <= g.degree:
                    pieces.append(g)
                    rest = rest.exact_div(g)
            if rest.degree >= 1:
                pieces.append(rest)
            new.extend(pieces if pieces else [u])
        factors = new
    return factors


def berlekamp_factor(f: UniPolyFp):
    """Complete factorization of monic f over F_p.

    Returns [(irreducible monic factor, multiplicity)], sorted by degree
    then coefficient tuple.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if not f.is_monic:
        raise NonMonic("factorization requires a monic input")
    out = {}
    for g, mult in _squarefree_decomposition(f):
        for irr in _berlekamp_squarefree(g):
            irr = irr.monic()
            out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda kv: kv[0].sort_key())


def is_irreducible(f: UniPolyFp) -> bool:
    """Rabin test: f monic of degree d is irreducible iff x^(p^d) = x mod f
    and gcd(x^(p^(d/q)) - x, f) = 1 for prime q | d."""
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    p = f.p
    x = UniPolyFp(p, (0, 1))
    for q in factor_int(d):
        h = x.pow_mod(p ** (d // q), f) - x
        if f.gcd(h).degree != 0:
            return False
    return x.pow_mod(p**d, f) == x % f


# ---------------------------------------------------------------------------
# counting and discriminants


def _mobius(n: int) -> int:
    fac = factor_int(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def necklace_count(p: int, f: int) -> int:
    """Number of monic irreducible degree-f polynomials over F_p."""
    if not is_prime(p):
        raise MonogenError(f"{p} is not prime")
    if f < 1:
        raise MonogenError("degree must be positive")
    total = sum(_mobius(d) * p ** (f // d) for d in range(1, f + 1) if f % d == 0)
    return total // f


def discriminant_unipoly(f) -> int:
    """Discriminant of a monic integer polynomial, via the Sylvester resultant.

    f is a list of integer coefficients, constant term first.
    """
    f = _tup_trim(f)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise NonMonic("discriminant requires a monic polynomial of degree >= 1")
    if n == 1:
        return 1
    fp = [i * c for i, c in enumerate(f)][1:]
    res = _resultant(list(f), fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res


def _resultant(a, b):
    a = list(_tup_trim(a))
    b = list(_tup_trim(b))
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return 0
    size = da + db
    m = [[0] * size for _ in range(size)]
    for i in range(db):
        for j, c in enumerate(reversed(a)):
            m[i][i + j] = c
    for i in range(da):
        for j, c in enumerate(reversed(b)):
            m[db + i][i + j] = c
    return int_determinant(m)


def poly_to_text(f: SparsePoly, var_names=None) -> str:
    return f.text(var_names)


def poly_to_json_str(f: SparsePoly) -> str:
    return json.dumps(f.to_json(), separators=(",", ":"))
