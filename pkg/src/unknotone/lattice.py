"""Exact linear algebra on integral quadratic forms.

Everything here is exact: Gram matrices and their adjugates are integer
matrices, and rational values are `fractions.Fraction`.  Floating point is
deliberately never used, because downstream code compares correction terms
for exact equality.

Conventions.  A form is stored as a symmetric integer Gram matrix G on a
lattice V = Z^m.  The induced map q: V -> V* sends v to the covector G v,
and the rational extension of the form to V* is (v, w) -> v^t G^{-1} w,
computed as v^t adj(G) w / det(G).  Covectors are plain integer tuples in
the dual coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Optional, Sequence

import sympy
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors

from .errors import NonCyclicCokernelError, SingularFormError, ValidationError

Vector = tuple[int, ...]


def _validated_rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(entry for entry in row) for row in rows)
    m = len(out)
    for row in out:
        if len(row) != m:
            raise ValidationError("Gram matrix must be square")
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ValidationError(f"Gram entries must be integers, got {entry!r}")
    for i in range(m):
        for j in range(i):
            if out[i][j] != out[j][i]:
                raise ValidationError(
                    f"Gram matrix is not symmetric at ({i}, {j}): "
                    f"{out[i][j]} != {out[j][i]}"
                )
    return out


@dataclass(frozen=True)
class QuadraticForm:
    """A symmetric integral bilinear form with exact derived data."""

    gram: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "QuadraticForm":
        return QuadraticForm(_validated_rows(rows))

    @property
    def dim(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return int(sympy.Matrix(self.dim, self.dim, lambda i, j: self.gram[i][j]).det())

    @cached_property
    def adjugate(self) -> tuple[tuple[int, ...], ...]:
        adj = sympy.Matrix(self.dim, self.dim, lambda i, j: self.gram[i][j]).adjugate()
        return tuple(tuple(int(adj[i, j]) for j in range(self.dim)) for i in range(self.dim))

    @cached_property
    def inverse_numerator(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix N with G^{-1} = N / |det G|."""
        if self.det == 0:
            raise SingularFormError("form is singular")
        if self.det > 0:
            return self.adjugate
        return tuple(tuple(-entry for entry in row) for row in self.adjugate)

    @cached_property
    def is_negative_definite(self) -> bool:
        mat = sympy.Matrix(self.dim, self.dim, lambda i, j: self.gram[i][j])
        for k in range(1, self.dim + 1):
            minor = mat[:k, :k].det()
            if (-1) ** k * minor <= 0:
                return False
        return True

    def evaluate(self, v: Sequence[int]) -> int:
        """Q(v, v) for a lattice vector v."""
        self._check_dim(v)
        return sum(v[i] * self.gram[i][j] * v[j] for i in range(self.dim) for j in range(self.dim))

    def q_map(self, v: Sequence[int]) -> Vector:
        """The covector q(v) = G v."""
        self._check_dim(v)
        return tuple(sum(row[j] * v[j] for j in range(self.dim)) for row in self.gram)

    def pairing(self, v: Sequence[int], w: Sequence[int]) -> Fraction:
        """The rational pairing v^t G^{-1} w on covectors; exact."""
        self._check_dim(v)
        self._check_dim(w)
        if self.dim == 0:
            return Fraction(0)
        num = self.inverse_numerator
        total = sum(v[i] * num[i][j] * w[j] for i in range(self.dim) for j in range(self.dim))
        return Fraction(total, abs(self.det))

    def pairing_numerator(self, v: Sequence[int]) -> int:
        """Integer n with v^t G^{-1} v = n / |det G|; the hot-loop form of pairing."""
        num = self.inverse_numerator
        rng = range(self.dim)
        return sum(v[i] * num[i][j] * v[j] for i in rng for j in rng)

    def _check_dim(self, v: Sequence[int]) -> None:
        if len(v) != self.dim:
            raise ValidationError(f"vector length {len(v)} does not match dimension {self.dim}")


def characteristic_candidates(form: QuadraticForm) -> Iterator[Vector]:
    """All characteristic covectors that can maximise length in their coset.

    These are the integer covectors x with x_i = G_ii (mod 2) and
    |x_i| <= |G_ii|; any characteristic covector outside this box has an
    equivalent one of larger squared length.  Requires a negative-definite
    form, which in particular forces every diagonal entry to be nonzero.
    """
    if not form.is_negative_definite:
        raise ValidationError("candidate enumeration requires a negative-definite form")
    ranges = [range(form.gram[i][i], -form.gram[i][i] + 1, 2) for i in range(form.dim)]
    diag = [form.gram[i][i] for i in range(form.dim)]
    for x in product(*ranges):
        # Parity against every basis vector is the characteristic condition.
        assert all((x[i] - diag[i]) % 2 == 0 for i in range(form.dim))
        yield x


@dataclass
class CokernelStructure:
    """The finite group V*/q(V) together with a coset labelling.

    Labels are tuples (N v mod |det|) where N is the integer numerator of
    G^{-1}; two covectors get the same label exactly when their difference
    is in the image of q.  Labels add componentwise mod |det|, so the label
    map is a group homomorphism.
    """

    form: QuadraticForm
    invariant_factors: tuple[int, ...]
    order: int
    is_cyclic: bool
    generator: Optional[Vector]

    def to_coset(self, v: Sequence[int]) -> Vector:
        num = self.form.inverse_numerator
        rng = range(self.form.dim)
        return tuple(sum(num[i][j] * v[j] for j in rng) % self.order for i in rng)

    def add(self, a: Vector, b: Vector) -> Vector:
        return tuple((x + y) % self.order for x, y in zip(a, b))

    def scale(self, n: int, a: Vector) -> Vector:
        return tuple((n * x) % self.order for x in a)

    @property
    def zero_label(self) -> Vector:
        return (0,) * self.form.dim

    def element_order(self, label: Vector) -> int:
        zero = self.zero_label
        current = label
        n = 1
        while current != zero:
            current = self.add(current, label)
            n += 1
            if n > self.order:
                raise AssertionError("element order exceeded group order")
        return n

    def elements(self) -> dict[Vector, Vector]:
        """All coset labels, each with a small representative covector."""
        basis_labels = [
            self.to_coset(tuple(1 if j == i else 0 for j in range(self.form.dim)))
            for i in range(self.form.dim)
        ]
        reps: dict[Vector, Vector] = {self.zero_label: (0,) * self.form.dim}
        frontier = [self.zero_label]
        while frontier:
            new_frontier = []
            for label in frontier:
                rep = reps[label]
                for i, blabel in enumerate(basis_labels):
                    nxt = self.add(label, blabel)
                    if nxt not in reps:
                        vec = list(rep)
                        vec[i] = (vec[i] + 1) % self.order
                        reps[nxt] = tuple(vec)
                        new_frontier.append(nxt)
            frontier = new_frontier
        if len(reps) != self.order:
            raise AssertionError(
                f"coset enumeration found {len(reps)} classes, expected {self.order}"
            )
        return reps


def cokernel(form: QuadraticForm) -> CokernelStructure:
    """Invariant factors and coset labelling of coker(q: V -> V*)."""
    if form.dim == 0:
        return CokernelStructure(form, (), 1, True, generator=())
    if form.det == 0:
        raise SingularFormError("cokernel requires a nonsingular form")
    mat = sympy.Matrix(form.dim, form.dim, lambda i, j: form.gram[i][j])
    factors = tuple(sorted(abs(int(d)) for d in _sympy_invariant_factors(mat)))
    nontrivial = tuple(d for d in factors if d != 1)
    order = prod(factors)
    if order != abs(form.det):
        raise AssertionError("invariant factor product disagrees with |det|")
    is_cyclic = len(nontrivial) <= 1
    structure = CokernelStructure(form, nontrivial, order, is_cyclic, generator=None)
    if is_cyclic:
        structure.generator = _choose_generator(structure)
    return structure


def _choose_generator(structure: CokernelStructure) -> Vector:
    """Pick a deterministic covector whose coset generates a cyclic cokernel.

    Preference goes to the coordinate covector with the smallest label that
    generates; when no single coordinate covector generates (the cokernel
    can be cyclic without that), fall back to the smallest-label generating
    element of the whole group.
    """
    order = structure.order
    dim = structure.form.dim
    if order == 1:
        return (0,) * dim
    basis = []
    for i in range(dim):
        vec = tuple(1 if j == i else 0 for j in range(dim))
        basis.append((structure.to_coset(vec), vec))
    basis.sort()
    for label, vec in basis:
        if structure.element_order(label) == order:
            return vec
    for label, rep in sorted(structure.elements().items()):
        if structure.element_order(label) == order:
            return rep
    raise NonCyclicCokernelError(structure.invariant_factors)
