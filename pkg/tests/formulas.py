"""Randomized exact checks of the closed-form structure formulas.

Each ``check_*`` draws one sample from a ``random.Random`` and returns True
when the closed form agrees with the literal matrix computation.
"""

from fractions import Fraction

from g2hol.catalog import (Phi3, TypeIElement, TypeIIElement, act_on_poly, ad_exp_type2, ad_exp_u, ad_exp_v,
                           ad_exp_y, ad_gl2_type1, ad_gl2_type2, embed_gl2_type1, embed_gl2_type2, eta, exact_root,
                           gl2_group_matrix_R4, gl2_group_on_R4, gl2_on_R4, h_type1, h_type2, phi1, phi2, rho,
                           sigma, theta, w_join, wedge2_action, wedge3_action)
from g2hol.linalg import Matrix, exp_nilpotent
from g2hol.scalar import Scalar


def rand_scalar(r, irrational=True):
    a = Fraction(r.randint(-6, 6), r.randint(1, 4))
    b = Fraction(r.randint(-3, 3), r.randint(1, 3)) if irrational and r.random() < 0.5 else 0
    return Scalar(a, b)


def rand_vec(r, n):
    return tuple(rand_scalar(r) for _ in range(n))


def rand_m2(r):
    return Matrix([[rand_scalar(r) for _ in range(2)] for _ in range(2)])


def rand_gl2(r):
    while True:
        g = Matrix([[rand_scalar(r, irrational=False) for _ in range(2)] for _ in range(2)])
        if g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]:
            return g


def rand_t1(r):
    return TypeIElement(rand_m2(r), rand_scalar(r), rand_vec(r, 2), rand_vec(r, 2))


def rand_t2(r):
    return TypeIIElement(rand_m2(r), rand_vec(r, 4), rand_scalar(r))


def _conj(g, m, ginv=None):
    return g @ m @ (g.inverse() if ginv is None else ginv)


def _exp_conj(x, m):
    return _conj(exp_nilpotent(x), m, exp_nilpotent(-x))


def check_m_bracket(r):
    v, u, y = rand_scalar(r), rand_vec(r, 2), rand_vec(r, 2)
    vb, ub, yb = rand_scalar(r), rand_vec(r, 2), rand_vec(r, 2)
    lhs = h_type1(v=v, u=u, y=y).bracket(h_type1(v=vb, u=ub, y=yb))
    rhs = h_type1(v=2 * theta(u, ub), y=tuple(3 * (vb * a - v * b) for a, b in zip(u, ub)))
    return lhs == rhs


def check_eta(r):
    z, c, zh, ch = rand_vec(r, 4), rand_scalar(r), rand_vec(r, 4), rand_scalar(r)
    return h_type2(z=z, c=c).bracket(h_type2(z=zh, c=ch)) == h_type2(c=eta(z, zh))


def check_gl2_on_m(r):
    A, v, u, y = rand_m2(r), rand_scalar(r), rand_vec(r, 2), rand_vec(r, 2)
    tr = A.trace()
    lhs = h_type1(A).bracket(h_type1(v=v, u=u, y=y))
    Ay = A.apply(y)
    return lhs == h_type1(v=tr * v, u=A.apply(u), y=tuple(a + tr * b for a, b in zip(Ay, y)))


def check_gl2_on_n(r):
    A, z, c = rand_m2(r), rand_vec(r, 4), rand_scalar(r)
    return h_type2(A).bracket(h_type2(z=z, c=c)) == h_type2(z=gl2_on_R4(A, z), c=A.trace() * c)


def check_gl2_on_R4(r):
    A, z = rand_m2(r), rand_vec(r, 4)
    return sigma(gl2_on_R4(A, z)) == A @ sigma(z) - sigma(z) @ rho(A)


def check_EAdv(r):
    x, vb = rand_t1(r), rand_scalar(r)
    return _exp_conj(h_type1(v=vb), x.matrix()) == ad_exp_v(vb, x).matrix()


def check_EAdu(r):
    x, ub = rand_t1(r), rand_vec(r, 2)
    return _exp_conj(h_type1(u=ub), x.matrix()) == ad_exp_u(ub, x).matrix()


def check_EAdy(r):
    x, yb = rand_t1(r), rand_vec(r, 2)
    return _exp_conj(h_type1(y=yb), x.matrix()) == ad_exp_y(yb, x).matrix()


def check_EAdA(r):
    x, g = rand_t1(r), rand_gl2(r)
    return _conj(embed_gl2_type1(g), x.matrix()) == ad_gl2_type1(g, x).matrix()


def check_EAdII(r):
    x, zb = rand_t2(r), rand_vec(r, 4)
    return _exp_conj(h_type2(z=zb), x.matrix()) == ad_exp_type2(zb, x).matrix()


def check_AdII_group(r):
    x, g = rand_t2(r), rand_gl2(r)
    return _conj(embed_gl2_type2(g), x.matrix()) == ad_gl2_type2(g, x).matrix()


STRUCTURAL = {
    "m-bracket": check_m_bracket,
    "eta": check_eta,
    "gl2 on m": check_gl2_on_m,
    "gl2 on n": check_gl2_on_n,
    "gl2 on R4": check_gl2_on_R4,
    "EAdv": check_EAdv,
    "EAdu": check_EAdu,
    "EAdy": check_EAdy,
    "EAdA": check_EAdA,
    "EAdII": check_EAdII,
    "Ad GL2 (Type II)": check_AdII_group,
}


# --- equivariance of phi1, phi2, Phi3 on generator sets ---------------------

SHEARS = [Matrix([[1, 1], [0, 1]]), Matrix([[1, 0], [1, 1]]), Matrix([[1, Fraction(1, 2)], [0, 1]]),
          Matrix([[1, 0], [-3, 1]])]
# determinants are cubes, so det^(1/3) is rational
PHI1_GENERATORS = SHEARS + [Matrix.diag([8, 1]), Matrix.diag([1, 8]), Matrix.diag([2, 4]), Matrix.diag([-1, 1]),
                            Matrix.diag([1, -1]), Matrix.diag([-1, -1]), Matrix([[0, 1], [1, 0]])]
# determinants are positive fourth powers in Q(sqrt 2)
PHI2_POSITIVE = SHEARS + [Matrix.diag([2, 2]), Matrix.diag([4, 1]), Matrix.diag([16, 1]), Matrix.diag([-1, -1])]
PHI2_NEGATIVE = [Matrix.diag([1, -1]), Matrix([[0, 1], [1, 0]])]
PHI3_GENERATORS = PHI1_GENERATORS + [Matrix.diag([2, 1])]


def _det(g):
    return g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]


def _signed_root(x, n):
    """Real n-th root; negative only for odd n."""
    root = exact_root(abs(x), n)
    return -root if n % 2 and x.sign() < 0 else root


def phi1_equivariant(g, z):
    lam_inv = g.scale(_signed_root(_det(g), 3).inverse())
    return phi1(gl2_group_on_R4(g, z)) == act_on_poly(lam_inv, phi1(z))


def rand_wprime(r):
    return w_join(0, *rand_vec(r, 5))


def phi2_equivariant(g, u, sign_on_polynomial=False):
    """``sign_on_polynomial`` applies sgn(det) to the quartic rather than to the matrix."""
    d = _det(g)
    gu = wedge2_action(gl2_group_matrix_R4(g)) @ u
    if sign_on_polynomial:
        rhs = tuple(c * d.sign() for c in act_on_poly(g.scale(_signed_root(d, 4).inverse()), phi2(u)))
    else:
        rhs = act_on_poly(g.scale(_signed_root(d, 4).inverse() * d.sign()), phi2(u))
    return phi2(gu) == rhs


def Phi3_equivariant(g, w):
    return Phi3(wedge3_action(gl2_group_matrix_R4(g)) @ w) == act_on_poly(g, Phi3(w))
