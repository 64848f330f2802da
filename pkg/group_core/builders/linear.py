import numpy as np
from sympy import primitive_root

from group_core.domain import FiniteGroup
from group_core.services import make_matrix_group

from .base import GroupBuilder


def transvections(n: int) -> list[list[list[int]]]:
    """
    Elementary matrices I + E_ij (i != j); they generate SL_n over a prime field.
    """
    result = []
    for i in range(n):
        for j in range(n):
            if i != j:
                matrix = np.eye(n, dtype=np.int64)
                matrix[i, j] = 1
                result.append(matrix.tolist())
    return result or [np.eye(n, dtype=np.int64).tolist()]


class SpecialLinearBuilder(GroupBuilder):
    """
    SL_n(p) acting on nonzero vectors of F_p^n
    """

    arity = 2

    def build(self, n: int, p: int, cap: int | None = None) -> FiniteGroup:
        return make_matrix_group(n, p, transvections(n), cap=cap, name=f"SL{n}({p})")


class GeneralLinearBuilder(GroupBuilder):
    """
    GL_n(p): transvections plus diag(g, 1, ..., 1) for a primitive root g
    """

    arity = 2

    def build(self, n: int, p: int, cap: int | None = None) -> FiniteGroup:
        diagonal = np.eye(n, dtype=np.int64)
        diagonal[0, 0] = primitive_root(p)
        gens = transvections(n) + [diagonal.tolist()]
        return make_matrix_group(n, p, gens, cap=cap, name=f"GL{n}({p})")
