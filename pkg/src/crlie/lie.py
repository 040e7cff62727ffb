"""Lie algebras given by exact rational structure constants."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (
    Matrix, Subspace, Vector,
    basis_vector, is_zero, kernel, rat, vadd, vector, vscale, zero_vector,
)


class StructureError(ValueError):
    """Structure-constant tensor violates antisymmetry or Jacobi.

    `violations` holds (kind, indices) pairs, 0-based, usable as witnesses.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        msgs = []
        for kind, idx in self.violations:
            one_based = tuple(i + 1 for i in idx)
            msgs.append(f"{kind} violated at {one_based}")
        super().__init__("; ".join(msgs))


def validate_structure(c: Sequence[Sequence[Vector]]) -> list:
    """Collect antisymmetry and Jacobi violations of a bracket tensor."""
    n = len(c)
    bad = []
    for i in range(n):
        for j in range(i, n):
            if any(a != -b for a, b in zip(c[i][j], c[j][i])):
                bad.append(("antisymmetry", (i, j)))
    if bad:
        return bad

    def brk(x: Vector, y: Vector) -> Vector:
        acc = zero_vector(n)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                acc = vadd(acc, vscale(xi * yj, c[i][j]))
        return acc

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = vadd(vadd(brk(basis_vector(n, i), c[j][k]),
                              brk(basis_vector(n, k), c[i][j])),
                         brk(basis_vector(n, j), tuple(-e for e in c[i][k])))
                if not is_zero(s):
                    bad.append(("jacobi", (i, j, k)))
    return bad


class LieAlgebra:
    """Finite-dimensional real Lie algebra over exact rational coordinates.

    `c[i][j]` is the coordinate vector of [e_i, e_j]; construction rejects
    tensors violating antisymmetry or the Jacobi identity.
    """

    __slots__ = ("dim", "names", "c")

    def __init__(self, c: Sequence[Sequence[Iterable]], names: Optional[Sequence[str]] = None,
                 validate: bool = True):
        n = len(c)
        tensor = tuple(tuple(vector(v) for v in row) for row in c)
        if any(len(row) != n or any(len(v) != n for v in row) for row in tensor):
            raise ValueError("structure tensor must be n x n x n")
        if names is None:
            names = [f"e{i + 1}" for i in range(n)]
        if len(names) != n:
            raise ValueError("need one name per basis vector")
        if validate:
            bad = validate_structure(tensor)
            if bad:
                raise StructureError(bad)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "c", tensor)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Iterable],
                      names: Optional[Sequence[str]] = None,
                      validate: bool = True) -> "LieAlgebra":
        """Build from a sparse table {(i, j): [e_i, e_j]} with i < j, 0-based."""
        c = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices out of range or not i<j: {(i, j)}")
            w = vector(v)
            if len(w) != dim:
                raise ValueError(f"bracket value at {(i, j)} has wrong dimension")
            c[i][j] = list(w)
            c[j][i] = [-e for e in w]
        return cls(c, names=names, validate=validate)

    @classmethod
    def abelian(cls, dim: int, names: Optional[Sequence[str]] = None) -> "LieAlgebra":
        return cls.from_brackets(dim, {}, names=names)

    # -- basic operations --------------------------------------------------

    def bracket(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch in bracket")
        acc = zero_vector(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                acc = vadd(acc, vscale(xi * yj, self.c[i][j]))
        return acc

    def ad(self, x: Vector) -> Matrix:
        """Matrix of y -> [x, y] in the standard basis."""
        if len(x) != self.dim:
            raise ValueError("dimension mismatch in ad")
        cols = [self.bracket(x, basis_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def killing_form(self) -> Matrix:
        ads = [self.ad(basis_vector(self.dim, i)) for i in range(self.dim)]
        return Matrix([[(ads[i] * ads[j]).trace() for j in range(self.dim)]
                       for i in range(self.dim)])

    def is_semisimple(self) -> bool:
        """Cartan's criterion: Killing form nondegenerate."""
        return self.killing_form().det() != 0

    def center(self) -> Subspace:
        rows = []
        for i in range(self.dim):
            rows.extend(self.ad(basis_vector(self.dim, i)).data)
        # center = {x : [y, x] = 0 for all y} = common kernel of the ad maps
        return kernel(Matrix(rows))

    def centralizer(self, x: Vector) -> Subspace:
        return kernel(self.ad(x))

    def is_subalgebra(self, s: Subspace) -> bool:
        self._check_space(s)
        return all(s.contains(self.bracket(u, v))
                   for a, u in enumerate(s.basis) for v in s.basis[a + 1:])

    def is_ideal(self, s: Subspace) -> bool:
        self._check_space(s)
        return all(s.contains(self.bracket(basis_vector(self.dim, i), v))
                   for i in range(self.dim) for v in s.basis)

    def quotient(self, ideal: Subspace) -> "LieAlgebra":
        """Quotient by an ideal, realized on the coordinate complement."""
        self._check_space(ideal)
        if not self.is_ideal(ideal):
            raise ValueError("quotient requires an ideal")
        comp = [c for c in range(self.dim) if c not in ideal.pivots]
        m = len(comp)

        def project(v: Vector) -> Vector:
            r = ideal.reduce(v)
            return tuple(r[c] for c in comp)

        c = [[project(self.bracket(basis_vector(self.dim, a), basis_vector(self.dim, b)))
              for b in comp] for a in comp]
        return LieAlgebra(c, names=[self.names[a] for a in comp])

    def direct_sum(self, other: "LieAlgebra",
                   names: Optional[Sequence[str]] = None) -> "LieAlgebra":
        n, m = self.dim, other.dim
        brackets = {}
        for i in range(n):
            for j in range(i + 1, n):
                v = self.c[i][j]
                if not is_zero(v):
                    brackets[(i, j)] = tuple(v) + zero_vector(m)
        for i in range(m):
            for j in range(i + 1, m):
                v = other.c[i][j]
                if not is_zero(v):
                    brackets[(i + n, j + n)] = zero_vector(n) + tuple(v)
        if names is None:
            right = [nm if nm not in self.names else nm + "'" for nm in other.names]
            names = list(self.names) + right
        return LieAlgebra.from_brackets(n + m, brackets, names=names, validate=False)

    def _check_space(self, s: Subspace) -> None:
        if s.ambient_dim != self.dim:
            raise ValueError(
                f"dimension mismatch: subspace ambient {s.ambient_dim} vs algebra {self.dim}")

    def format_vector(self, v: Vector) -> str:
        from .linalg import format_rat
        terms = []
        for name, e in zip(self.names, v):
            if e == 0:
                continue
            if e == 1:
                terms.append(name)
            elif e == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{format_rat(e)}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.c == other.c)

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={list(self.names)})"


# -- standard algebras used throughout the test-bed -------------------------

def so3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {
        (0, 1): [0, 0, 1],    # [e1,e2] = e3
        (0, 2): [0, -1, 0],   # [e1,e3] = -e2
        (1, 2): [1, 0, 0],    # [e2,e3] = e1
    })


def sl2() -> LieAlgebra:
    # basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    return LieAlgebra.from_brackets(3, {
        (0, 1): [0, 0, 1],
        (0, 2): [-2, 0, 0],   # [e,h] = -2e
        (1, 2): [0, 2, 0],    # [f,h] = 2f
    }, names=["e", "f", "h"])


def heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})


def aff_r() -> LieAlgebra:
    # [e1,e2] = e2
    return LieAlgebra.from_brackets(2, {(0, 1): [0, 1]})
