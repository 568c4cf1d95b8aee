"""
Classical Rings Module

Cohomology presentations of the classifying spaces and homogeneous spaces
the catalog refers to. Polynomial rings are free presentations; the
Grassmannian and the quadric carry relations. Integral rings are stored over
Q and reduced with Presentation.reduce_mod.
"""

from typing import List

from algebra import QQ, Field, GradedAlgebra, GradedPoly, Presentation
from algebra.presented import DEFAULT_DEGREE_BOUND
from steenrod import chern_algebra


def bu_ring(m: int, field: Field = QQ, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """H*(BU(m)) = k[c_1..c_m], |c_i| = 2i."""
    if m < 1:
        raise ValueError(f"BU(m) needs m >= 1, got {m}")
    return Presentation(chern_algebra(m, field), (), degree_bound, f"H*(BU({m}))")


def bsp_ring(n: int, field: Field = QQ, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """H*(BSp(n)) = k[q_1..q_n], |q_i| = 4i."""
    if n < 1:
        raise ValueError(f"BSp(n) needs n >= 1, got {n}")
    algebra = GradedAlgebra.free(((f"q_{i}", 4 * i) for i in range(1, n + 1)), field)
    return Presentation(algebra, (), degree_bound, f"H*(BSp({n}))")


def bso_even_ring(n: int, field: Field = QQ, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """
    H*(BSO(2n); Q) = Q[e, p_1..p_{n-1}] with the Euler class e of degree 2n
    declared first.
    """
    if n < 2:
        raise ValueError(f"BSO(2n) needs n >= 2, got {n}")
    spec = [("e", 2 * n)] + [(f"p_{i}", 4 * i) for i in range(1, n)]
    return Presentation(GradedAlgebra.free(spec, field), (), degree_bound, f"H*(BSO({2 * n}))")


def torus_ring(N: int, field: Field = QQ, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """H*(BT^N) = k[t_1..t_N], |t_i| = 2."""
    if N < 1:
        raise ValueError(f"BT^N needs N >= 1, got {N}")
    algebra = GradedAlgebra.free(((f"t_{i}", 2) for i in range(1, N + 1)), field)
    return Presentation(algebra, (), degree_bound, f"H*(BT^{N})")


def grassmannian_ring(m: int, n: int, field: Field = QQ, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """
    H*(G_{m,n}) = k[c_1..c_m, cbar_1..cbar_n] / (sum_{i+j=k} c_i cbar_j, k = 1..m+n),
    the Chern classes of the tautological bundle and of its complement.
    """
    if m < 1 or n < 1:
        raise ValueError(f"G_(m,n) needs m, n >= 1, got ({m}, {n})")
    spec = [(f"c_{i}", 2 * i) for i in range(1, m + 1)] + [(f"cbar_{j}", 2 * j) for j in range(1, n + 1)]
    algebra = GradedAlgebra.free(spec, field)

    def c(i: int) -> GradedPoly:
        return algebra.one() if i == 0 else algebra.gen(f"c_{i}")

    def cbar(j: int) -> GradedPoly:
        return algebra.one() if j == 0 else algebra.gen(f"cbar_{j}")

    relations: List[GradedPoly] = []
    for k in range(1, m + n + 1):
        rel = algebra.zero()
        for i in range(max(0, k - n), min(m, k) + 1):
            rel = rel + c(i) * cbar(k - i)
        relations.append(rel)
    return Presentation(algebra, tuple(relations), degree_bound, f"H*(G_({m},{n}))")


def quadric_ring(m: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """
    H*(Q_{2m-1}; Z) = Z[t, e] / (t^m - 2e, e^2), |t| = 2, |e| = 2m, stored over Q.
    Reduced mod 2 this is F_2[t, e] / (t^m, e^2).
    """
    if m < 2:
        raise ValueError(f"The quadric ring needs m >= 2, got {m}")
    algebra = GradedAlgebra.free((("t", 2), ("e", 2 * m)), QQ)
    t, e = algebra.gen("t"), algebra.gen("e")
    return Presentation(algebra, (t ** m - 2 * e, e ** 2), degree_bound, f"H*(Q_{2 * m - 1})")
