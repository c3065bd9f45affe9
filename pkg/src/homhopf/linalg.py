"""Exact arithmetic over a prime field F_p and dense tensor helpers.

Matrices and tensors are plain ``numpy.int64`` arrays whose entries are kept
reduced to ``[0, p)``.  A linear map ``A`` acts on column vectors, ``y = A @ x``,
so ``A[i, j]`` is the ``i``-th coordinate of the image of the ``j``-th basis
vector.  Multi-indices are flattened row-major in declared axis order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, FieldError, NotInvertibleError, ShapeError

DEFAULT_PRIME = 101


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field F_p."""

    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.prime, (int, np.integer)) or self.prime < 3 or not _is_prime(int(self.prime)):
            raise FieldError(f"field modulus must be a prime >= 3, got {self.prime!r}")
        # products of two residues summed over ~1e5 terms must fit in int64
        if self.prime > 46337:
            raise FieldError("field modulus too large for int64 accumulation")

    # scalar operations on plain ints
    def add(self, a, b):
        return (int(a) + int(b)) % self.prime

    def sub(self, a, b):
        return (int(a) - int(b)) % self.prime

    def mul(self, a, b):
        return (int(a) * int(b)) % self.prime

    def neg(self, a):
        return (-int(a)) % self.prime

    def inv(self, a):
        a = int(a) % self.prime
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.prime}")
        return pow(a, -1, self.prime)

    def __call__(self, value) -> "Scalar":
        return Scalar(int(value) % self.prime, self)

    # array helpers
    def array(self, data, shape=None) -> np.ndarray:
        out = np.asarray(data, dtype=np.int64) % self.prime
        if shape is not None:
            out = out.reshape(shape)
        return out

    def zeros(self, *shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, *mats: np.ndarray) -> np.ndarray:
        out = mats[0]
        for m in mats[1:]:
            out = (out @ m) % self.prime
        return out

    def kron(self, *mats: np.ndarray) -> np.ndarray:
        out = np.ones((1, 1), dtype=np.int64)
        for m in mats:
            out = np.kron(out, m) % self.prime
        return out

    def einsum(self, subscripts: str, *operands: np.ndarray) -> np.ndarray:
        return einsum_mod(subscripts, *operands, prime=self.prime)

    def inverse(self, m: np.ndarray) -> np.ndarray:
        return mat_inverse(m, self)


@dataclass(frozen=True)
class Scalar:
    """An element of F_p."""

    value: int
    field: FieldSpec

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError("scalars from different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._coerce(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._coerce(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        return self * Scalar(self._coerce(other) % self.field.prime, self.field).inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.prime
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.prime))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.prime})"


def einsum_mod(subscripts: str, *operands: np.ndarray, prime: int) -> np.ndarray:
    """``numpy.einsum`` reduced mod ``prime``, folding operands pairwise left to right.

    Each intermediate keeps only the indices still needed later and is reduced
    before the next product, so int64 never overflows.  Operand order is the
    contraction order; callers put cheap pairings first.
    """
    inputs, output = subscripts.replace(" ", "").split("->")
    terms = inputs.split(",")
    if len(terms) != len(operands):
        raise ShapeError(f"{len(terms)} subscripts for {len(operands)} operands")
    acc, acc_idx = np.asarray(operands[0], dtype=np.int64), terms[0]
    for k in range(1, len(terms)):
        needed = set("".join(terms[k + 1:])) | set(output)
        nxt = terms[k]
        keep = "".join(dict.fromkeys(c for c in acc_idx + nxt if c in needed))
        acc = np.einsum(f"{acc_idx},{nxt}->{keep}", acc, np.asarray(operands[k], dtype=np.int64)) % prime
        acc_idx = keep
    return np.einsum(f"{acc_idx}->{output}", acc) % prime


def tensor_contract(t: np.ndarray, u: np.ndarray, pairs: Sequence[tuple[int, int]], field: FieldSpec) -> np.ndarray:
    """Contract axis ``i`` of ``t`` with axis ``j`` of ``u`` for each ``(i, j)`` in ``pairs``.

    The result's axes are the free axes of ``t`` followed by those of ``u``,
    each in original order.
    """
    t = np.asarray(t, dtype=np.int64)
    u = np.asarray(u, dtype=np.int64)
    ta = [i for i, _ in pairs]
    ua = [j for _, j in pairs]
    for i, j in pairs:
        if not (0 <= i < t.ndim and 0 <= j < u.ndim):
            raise ShapeError(f"axis pair ({i}, {j}) out of range")
        if t.shape[i] != u.shape[j]:
            raise ShapeError(f"axis {i} of length {t.shape[i]} paired with axis {j} of length {u.shape[j]}")
    return np.tensordot(t, u, axes=(ta, ua)) % field.prime


def row_reduce(a: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` over F_p and the pivot columns."""
    p = field.prime
    r = np.array(a, dtype=np.int64) % p
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * pow(int(r[row, col]), -1, p)) % p
        others = np.nonzero(r[:, col])[0]
        for i in others:
            if i != row:
                r[i] = (r[i] - r[i, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, field: FieldSpec) -> int:
    return len(row_reduce(a, field)[1])


def mat_inverse(m: np.ndarray, field: FieldSpec) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"cannot invert a matrix of shape {m.shape}")
    n = m.shape[0]
    reduced, pivots = row_reduce(np.hstack([m % field.prime, field.identity(n)]), field)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise NotInvertibleError("matrix is singular", rank=rank(m, field))
    return reduced[:, n:].copy()


def solve_linear(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> tuple[np.ndarray | None, np.ndarray]:
    """Solve ``a @ x = b`` over F_p.

    Returns ``(x, kernel)`` where ``x`` is one solution (``None`` if the system
    is inconsistent) and ``kernel`` has the null-space basis as its rows.
    """
    a = np.asarray(a, dtype=np.int64) % field.prime
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1) % field.prime
    n = a.shape[1]
    reduced, pivots = row_reduce(np.hstack([a, b]), field)
    if n in pivots:
        x = None
    else:
        x = np.zeros(n, dtype=np.int64)
        for row, col in enumerate(pivots):
            x[col] = reduced[row, n]
    free = [c for c in range(n) if c not in pivots]
    kernel = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        kernel[k, f] = 1
        for row, col in enumerate(pivots):
            if col < n:
                kernel[k, col] = (-reduced[row, f]) % field.prime
    return x, kernel
