"""L-space certification for negative-definite plumbings by class counting.

Characteristic covectors of a plumbing form carry an equivalence relation
generated by full-length pushes at the preferred basis vectors v: when
<k, v> = -Q(v, v) the covector k is equivalent to k + 2 q(v) (and when
<k, v> = Q(v, v), to k - 2 q(v)).  Pushes preserve the characteristic
condition and the squared length, so every class is finite.  Counting the
classes that stay entirely inside the coordinate box
|<k, v>| <= |Q(v, v)| decides the question: the bounded manifold is an
L-space exactly when that count equals |det|, and in that case the
coset maxima of the form compute its correction terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .corrections import CorrectionVector, correction_vector
from .errors import ValidationError
from .lattice import QuadraticForm, Vector, characteristic_candidates


@dataclass(frozen=True)
class PlumbingForm:
    """A negative-definite form together with its preferred (vertex) basis."""

    form: QuadraticForm

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "PlumbingForm":
        return PlumbingForm(QuadraticForm.from_rows(rows))

    def __post_init__(self) -> None:
        if not self.form.is_negative_definite:
            raise ValidationError("plumbing checks require a negative-definite form")


@dataclass(frozen=True)
class ClassCount:
    count: int
    determinant: int
    is_lspace: bool


def class_count(plumbing: PlumbingForm) -> ClassCount:
    """Count in-box equivalence classes of characteristic covectors."""
    form = plumbing.form
    dim = form.dim
    if dim == 0:
        return ClassCount(count=1, determinant=1, is_lspace=True)
    gram = form.gram
    diag = [gram[i][i] for i in range(dim)]
    double_cols = [tuple(2 * gram[j][i] for j in range(dim)) for i in range(dim)]

    def in_box(vec: Vector) -> bool:
        return all(abs(vec[i]) <= -diag[i] for i in range(dim))

    def neighbours(vec: Vector):
        for i in range(dim):
            if vec[i] == -diag[i]:
                yield tuple(a + b for a, b in zip(vec, double_cols[i]))
            elif vec[i] == diag[i]:
                yield tuple(a - b for a, b in zip(vec, double_cols[i]))

    visited: set[Vector] = set()
    good = 0
    for seed in characteristic_candidates(form):
        if seed in visited:
            continue
        stack = [seed]
        members = {seed}
        stays_inside = True
        while stack:
            current = stack.pop()
            if not in_box(current):
                stays_inside = False
            for nxt in neighbours(current):
                if nxt not in members:
                    members.add(nxt)
                    stack.append(nxt)
        visited.update(members)
        if stays_inside:
            good += 1
    determinant = abs(form.det)
    return ClassCount(count=good, determinant=determinant, is_lspace=good == determinant)


def plumbing_corrections(
    plumbing: PlumbingForm, generator: Optional[Sequence[int]] = None
) -> CorrectionVector:
    """Correction terms of a certified plumbing, via the coset maxima.

    The caller owns the orientation question: the boundary orientation may
    be opposite to the one wanted, which negates the vector; the sign
    search in the matching stage absorbs this.
    """
    counted = class_count(plumbing)
    if not counted.is_lspace:
        raise ValidationError(
            f"plumbing is not certified: {counted.count} classes for determinant "
            f"{counted.determinant}"
        )
    return correction_vector(plumbing.form, generator=generator)
