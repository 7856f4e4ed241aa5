"""Rank-n free algebras given by structure constants.

A StructureAlgebra stores the multiplication table e_i * e_j = sum_k
c[i][j][k] e_k over a BaseRing, together with the coordinates of 1 in the
basis.  Orders in number fields enter through OrderPresentation (a monic
minimal polynomial plus a rational basis matrix in the power basis).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    InvalidAlgebra,
    LengthMismatch,
    MonogenError,
    NonMonic,
    NonUnimodular,
    NotClosedUnderMultiplication,
    NotIntegerBase,
    SingularBasisMatrix,
    ValidationError,
)
from .exactring import (
    BaseRing,
    Fp,
    SparsePoly,
    ZZ,
    int_determinant,
    is_prime,
)

RANK_CAP = 12
COEFF_BIT_SOFT_CAP = 512


class StructureAlgebra:
    """Free rank-n algebra over a base ring, immutable after construction."""

    __slots__ = ("base", "rank", "constants", "identity", "label", "_validated")

    def __init__(self, base: BaseRing, rank: int, constants, identity, label: str = ""):
        if not (1 <= rank <= RANK_CAP):
            raise InvalidAlgebra(f"rank must be in 1..{RANK_CAP}, got {rank}")
        self.base = base
        self.rank = rank
        self.constants = tuple(
            tuple(tuple(base.coerce(c) for c in row) for row in plane)
            for plane in constants
        )
        if len(self.constants) != rank or any(
            len(plane) != rank or any(len(row) != rank for row in plane)
            for plane in self.constants
        ):
            raise InvalidAlgebra("structure constants must form an n x n x n array")
        self.identity = tuple(base.coerce(u) for u in identity)
        if len(self.identity) != rank:
            raise InvalidAlgebra("identity coordinates must have length n")
        self.label = label
        self._validated = False

    # -- coordinate arithmetic

    def vec_mul(self, v, w):
        """Product of two coordinate vectors through the structure constants."""
        base = self.base
        n = self.rank
        if len(v) != n or len(w) != n:
            raise LengthMismatch("coordinate vectors must have length n")
        out = [base.zero] * n
        for i in range(n):
            if base.is_zero(v[i]):
                continue
            for j in range(n):
                if base.is_zero(w[j]):
                    continue
                c = base.mul(v[i], w[j])
                for k in range(n):
                    t = self.constants[i][j][k]
                    if not base.is_zero(t):
                        out[k] = base.add(out[k], base.mul(c, t))
        return tuple(out)

    def vec_add(self, v, w):
        return tuple(self.base.add(a, b) for a, b in zip(v, w))

    def basis_vector(self, i):
        return tuple(
            self.base.one if j == i else self.base.zero for j in range(self.rank)
        )

    def element_power(self, v, k: int):
        out = self.identity
        for _ in range(k):
            out = self.vec_mul(out, v)
        return out

    def mult_matrix(self, v):
        """Matrix of multiplication by sum v_i e_i; columns are images of e_j."""
        n = self.rank
        if len(v) != n:
            raise LengthMismatch("coordinate vector must have length n")
        v = tuple(self.base.coerce(c) for c in v)
        cols = [self.vec_mul(v, self.basis_vector(j)) for j in range(n)]
        return [[cols[j][k] for j in range(n)] for k in range(n)]

    def trace(self, v) -> object:
        m = self.mult_matrix(v)
        acc = self.base.zero
        for i in range(self.rank):
            acc = self.base.add(acc, m[i][i])
        return acc

    # -- validation

    def validate(self):
        """Return the list of violated axioms (empty iff valid)."""
        base, n = self.base, self.rank
        violations = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    if self.constants[i][j][k] != self.constants[j][i][k]:
                        violations.append(f"commutativity: c[{i}][{j}][{k}] != c[{j}][{i}][{k}]")
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(n):
                eij = self.vec_mul(ei, self.basis_vector(j))
                for k in range(n):
                    left = self.vec_mul(eij, self.basis_vector(k))
                    right = self.vec_mul(ei, self.vec_mul(self.basis_vector(j), self.basis_vector(k)))
                    if left != right:
                        violations.append(f"associativity: (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")
        for i in range(n):
            if self.vec_mul(self.identity, self.basis_vector(i)) != self.basis_vector(i):
                violations.append(f"identity: 1*e{i} != e{i}")
        if not violations:
            self._validated = True
        return violations

    def require_valid(self):
        if self._validated:
            return self
        violations = self.validate()
        if violations:
            raise ValidationError(violations)
        return self

    # -- transformations

    def reduce_mod_p(self, p: int) -> "StructureAlgebra":
        if self.base.kind != "Z":
            raise NotIntegerBase("reduction mod p needs base Z")
        if not is_prime(p):
            raise MonogenError(f"{p} is not prime")
        tgt = Fp(p)
        return StructureAlgebra(
            tgt,
            self.rank,
            self.constants,
            self.identity,
            label=f"{self.label} mod {p}",
        )

    def change_basis(self, U) -> "StructureAlgebra":
        """New basis e'_i = sum_a U[i][a] e_a; U must be unimodular over Z."""
        n = self.rank
        if len(U) != n or any(len(row) != n for row in U):
            raise LengthMismatch("U must be n x n")
        if self.base.kind not in ("Z", "Fp"):
            raise NotIntegerBase("change of basis implemented for Z and F_p bases")
        det = int_determinant(U)
        if self.base.kind == "Z":
            if det not in (1, -1):
                raise NonUnimodular(f"det(U) = {det} is not a unit")
            Uinv = _int_matrix_inverse_unimodular(U)
            red = lambda x: x
        else:
            p = self.base.p
            if det % p == 0:
                raise NonUnimodular("det(U) = 0 mod p")
            Uinv = _fp_matrix_inverse(U, p)
            red = lambda x: x % p
        base = self.base
        new_constants = [[[base.zero] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                w = [base.zero] * n
                for a in range(n):
                    ua = base.coerce(red(U[i][a]))
                    if base.is_zero(ua):
                        continue
                    for b in range(n):
                        ub = base.coerce(red(U[j][b]))
                        if base.is_zero(ub):
                            continue
                        c = base.mul(ua, ub)
                        for k in range(n):
                            t = self.constants[a][b][k]
                            if not base.is_zero(t):
                                w[k] = base.add(w[k], base.mul(c, t))
                for m in range(n):
                    acc = base.zero
                    for k in range(n):
                        acc = base.add(acc, base.mul(w[k], base.coerce(red(Uinv[k][m]))))
                    new_constants[i][j][m] = acc
        new_identity = [
            _dot(self.base, self.identity, [base.coerce(red(Uinv[k][m])) for k in range(n)])
            for m in range(n)
        ]
        return StructureAlgebra(
            base, n, new_constants, new_identity, label=f"{self.label} (basis changed)"
        )

    def discriminant(self) -> int:
        """det of the trace-pairing Gram matrix Tr(e_i e_j); base Z only."""
        if self.base.kind != "Z":
            raise NotIntegerBase("discriminant needs base Z")
        self.require_valid()
        n = self.rank
        gram = [
            [
                self.trace(self.vec_mul(self.basis_vector(i), self.basis_vector(j)))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return int_determinant(gram)

    def identity_basis_index(self):
        """Index k if the identity coordinates are the k-th unit vector, else None."""
        base = self.base
        idx = None
        for k, u in enumerate(self.identity):
            if base.is_zero(u):
                continue
            if u != base.one or idx is not None:
                return None
            idx = k
        return idx

    # -- serialization

    def to_json(self):
        b = self.base
        return {
            "base": b.to_json(),
            "rank": self.rank,
            "constants": [
                [[b.elem_to_json(c) for c in row] for row in plane]
                for plane in self.constants
            ],
            "identity": [b.elem_to_json(u) for u in self.identity],
            "label": self.label,
        }

    @classmethod
    def from_json(cls, d):
        base = BaseRing.from_json(d["base"])
        return cls(base, d["rank"], d["constants"], d["identity"], d.get("label", ""))

    def __repr__(self):
        return f"StructureAlgebra({self.label or 'rank %d' % self.rank})"


def _dot(base, v, w):
    acc = base.zero
    for a, b in zip(v, w):
        acc = base.add(acc, base.mul(a, b))
    return acc


def _int_matrix_inverse_unimodular(U):
    n = len(U)
    inv = _rational_inverse([[Fraction(x) for x in row] for row in U])
    return [[int(x) for x in row] for row in inv]


def _fp_matrix_inverse(U, p):
    n = len(U)
    m = [[U[i][j] % p for j in range(n)] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] % p), None)
        if piv is None:
            raise NonUnimodular("matrix singular mod p")
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], p - 2, p)
        m[col] = [v * inv % p for v in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                c = m[i][col]
                m[i] = [(a - c * b) % p for a, b in zip(m[i], m[col])]
    return [row[n:] for row in m]


def _rational_inverse(rows):
    n = len(rows)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise SingularBasisMatrix("basis matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        d = m[col][col]
        m[col] = [v / d for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[col])]
    return [row[n:] for row in m]


class OrderPresentation:
    """Monic integer minimal polynomial plus a rational basis matrix.

    Row i of the basis matrix gives the coordinates of the i-th basis
    element in the power basis 1, eta, ..., eta^(n-1).
    """

    def __init__(self, minpoly, basis):
        self.minpoly = [int(c) for c in minpoly]
        n = len(self.minpoly) - 1
        if n < 1 or self.minpoly[-1] != 1:
            raise NonMonic("minimal polynomial must be monic of degree >= 1")
        self.n = n
        self.basis = [[Fraction(x) for x in row] for row in basis]
        if len(self.basis) != n or any(len(row) != n for row in self.basis):
            raise SingularBasisMatrix("basis matrix must be n x n")

    def _mulmod(self, a, b):
        """Product in Q[eta]/(minpoly), dense rational coefficient lists."""
        n = self.n
        out = [Fraction(0)] * (2 * n - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        for d in range(2 * n - 2, n - 1, -1):
            c = out[d]
            if c == 0:
                continue
            out[d] = Fraction(0)
            for j in range(n):
                out[d - n + j] -= c * self.minpoly[j]
        return out[:n]

    def to_algebra(self, label: str = "") -> StructureAlgebra:
        """Structure constants of the module spanned by the basis rows.

        Raises NotClosedUnderMultiplication if some product of basis
        elements falls outside the integer span.
        """
        n = self.n
        Tinv = _rational_inverse(self.basis)
        constants = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = self._mulmod(self.basis[i], self.basis[j])
                coords = [
                    sum(prod[a] * Tinv[a][k] for a in range(n)) for k in range(n)
                ]
                ints = []
                for k, c in enumerate(coords):
                    if c.denominator != 1:
                        raise NotClosedUnderMultiplication(
                            f"product b{i + 1}*b{j + 1} has non-integral coordinate {c} "
                            f"on basis element {k + 1}"
                        )
                    ints.append(int(c))
                for k in range(n):
                    constants[i][j][k] = ints[k]
                    constants[j][i][k] = ints[k]
        one = [Fraction(int(k == 0)) for k in range(n)]
        identity = []
        for k in range(n):
            c = sum(one[a] * Tinv[a][k] for a in range(n))
            if c.denominator != 1:
                raise NotClosedUnderMultiplication(
                    "1 is not in the integer span of the basis"
                )
            identity.append(int(c))
        alg = StructureAlgebra(ZZ, n, constants, identity, label=label)
        alg.require_valid()
        return alg

    def to_json(self):
        return {
            "minpoly": self.minpoly,
            "basis": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, d):
        basis = [[Fraction(x) for x in row] for row in d["basis"]]
        return cls(d["minpoly"], basis)


def power_basis_algebra(minpoly, label: str = "") -> StructureAlgebra:
    """Z[x]/(f) with the power basis."""
    n = len(minpoly) - 1
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return OrderPresentation(minpoly, ident).to_algebra(label=label)


def split_algebra(n: int, label: str = "") -> StructureAlgebra:
    """Z^n with the idempotent basis; identity coordinates all 1."""
    constants = [
        [[1 if i == j == k else 0 for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    alg = StructureAlgebra(ZZ, n, constants, [1] * n, label=label or f"Z^{n}")
    alg.require_valid()
    return alg
