"""Transcribed explicit lifting tables (conformance fixtures only).

The production cup products use the solver-derived liftings; these tables are
kept to cross-check that route, exactly as published: the m even N = 1
table, the m even N > 1 table, and the m = 2 N > 1 table.  Every entry below
is validated against the two lifting conditions by the test-suite before it
is used for products.

Generic expressions are mapped through ``word_path``, which sends words of
length 2N to the socle and longer or negative-length words to nothing; that
is exactly the algebra's normal form, so printed terms that die in the
algebra simply drop out.  One family is printed non-composably and is
transcribed as its mirror image (the m = 2 family of abar-valued degree-one
classes; see the ledger).
"""

from .algebra import idem, word_path
from .homcomplex import Cochain
from .products import Lifting
from .resolution import ResolutionElement, Summand, gen_weight, projective


def _sgn(e):
    return -1 if e % 2 else 1


class _Builder:
    def __init__(self, params, degree, q):
        self.params = params
        self.q = q
        self.n = degree
        self.out = {}

    def add(self, dom, coef, left, s, right):
        """dom: (vertex, offset) of the P^{n+q} generator; drops dead terms."""
        if left is None or right is None or coef == 0:
            return
        i, k = dom
        if (self.n + self.q - k) % 2:
            raise AssertionError("offset parity mismatch")
        r = (self.n + self.q - k) // 2
        if not (0 <= r <= self.n + self.q) or not (0 <= s.r <= s.n):
            return
        key = Summand(self.n + self.q, i % self.params.m, r)
        el = self.out.setdefault(key, ResolutionElement(self.params, self.q))
        f = self.params.field
        term = ResolutionElement(self.params, self.q,
                                 {(s, left, right): f.of_int(coef)})
        self.out[key] = el.add(term)

    def idem_at(self, v):
        return idem(v % self.params.m)

    def summand(self, i, r):
        return Summand(self.q, i % self.params.m, r)


def _target(params, q, i, ell):
    return (i + q - 2 * ell) % params.m


def _lift_m_even_N1(params, cid, q):
    m, N = params.m, params.N
    fam, n = cid.family, cid.n
    b = _Builder(params, n, q)
    if fam == "chi":
        alpha = cid.args[0]
        for i in range(m):
            s0 = _sgn((n // 2 - alpha * m // 2) * i)
            for ell in range(q + 1):
                b.add((i, alpha * m + q - 2 * ell), s0, b.idem_at(i),
                      b.summand(i, ell), b.idem_at(_target(params, q, i, ell)))
    elif fam == "pi":
        alpha = cid.args[0]
        for ell in range(q + 1):
            b.add((0, alpha * m + q - 2 * ell), 1, word_path(params, 0, "a", 2 * N),
                  b.summand(0, ell), b.idem_at(_target(params, q, 0, ell)))
    elif fam == "phi":
        g = cid.args[0]
        for i in range(m):
            s0 = _sgn(((n - 1 - g * m) // 2) * i + q)
            for ell in range(q + 1):
                tv = _target(params, q, i, ell)
                b.add((i, g * m + 1 + q - 2 * ell), s0, b.idem_at(i),
                      b.summand(i, ell), word_path(params, tv, "a", 1))
    elif fam == "psi":
        beta = cid.args[0]
        for i in range(m):
            s0 = _sgn(((n - 1 - beta * m) // 2) * i)
            for ell in range(q + 1):
                tv = _target(params, q, i, ell)
                b.add((i, beta * m - 1 + q - 2 * ell), s0, b.idem_at(i),
                      b.summand(i, ell), word_path(params, tv, "b", 1))
    else:
        raise KeyError(f"no N=1 lifting table for family {fam}")
    return b.out


def _lift_m_even(params, cid, q, m2_signs=False):
    """The m even N > 1 table; with m2_signs=True, the m = 2 variant."""
    m, N = params.m, params.N
    fam, n = cid.family, cid.n
    b = _Builder(params, n, q)
    W = lambda v, h, L: word_path(params, v, h, L)

    def chi_sign(alpha, i):
        if m2_signs:
            return _sgn((n // 2 - alpha) * i)
        return _sgn(((n - alpha * m) // 2) * i)

    if fam == "chi":
        alpha = cid.args[0]
        for i in range(m):
            s0 = chi_sign(alpha, i)
            for ell in range(q + 1):
                k = q - 2 * ell
                dom = (i, alpha * m + k)
                if k * alpha >= 0:
                    b.add(dom, s0, b.idem_at(i), b.summand(i, ell),
                          b.idem_at(_target(params, q, i, ell)))
                elif abs(k) > 2:
                    pass
                elif alpha < 0 and k == 2:
                    b.add(dom, s0, W(i, "a", 2 * N - 2), b.summand(i, ell),
                          W(i + 2, "b", 2 * N - 2))
                elif alpha > 0 and k == -2:
                    b.add(dom, s0, W(i, "b", 2 * N - 2), b.summand(i, ell),
                          W(i - 2, "a", 2 * N - 2))
                elif alpha < 0 and k == 1:
                    for v in range(N):
                        b.add(dom, s0, W(i, "a", 2 * v),
                              b.summand(i, (q - 1) // 2),
                              W(i + 1, "b", 2 * (N - v - 1)))
                    for v in range(N - 1):
                        b.add(dom, s0 * _sgn((q + 1) // 2), W(i, "a", 2 * v + 1),
                              b.summand(i + 1, (q + 1) // 2),
                              W(i, "a", 2 * (N - v - 2) + 1))
                elif alpha > 0 and k == -1:
                    for v in range(N):
                        b.add(dom, s0, W(i, "b", 2 * v),
                              b.summand(i, (q + 1) // 2),
                              W(i - 1, "a", 2 * (N - v - 1)))
                    for v in range(N - 1):
                        b.add(dom, s0 * _sgn((q + 1) // 2), W(i, "b", 2 * v + 1),
                              b.summand(i - 1, (q - 1) // 2),
                              W(i, "b", 2 * (N - v - 2) + 1))
    elif fam == "pi":
        alpha = cid.args[0]
        soc = W(0, "a", 2 * N)
        for ell in range(q + 1):
            k = q - 2 * ell
            dom = (0, alpha * m + k)
            if alpha * k >= 0:
                b.add(dom, 1, soc, b.summand(0, ell),
                      b.idem_at(_target(params, q, 0, ell)))
            elif k == 1 and alpha < 0:
                b.add(dom, 1, soc, b.summand(0, (q - 1) // 2),
                      W(1, "b", 2 * N - 2))
            elif k == -1 and alpha > 0:
                b.add(dom, 1, soc, b.summand(0, (q + 1) // 2),
                      W(m - 1, "a", 2 * N - 2))
    elif fam == "F":
        j, s = cid.args
        for ell in range(q + 1):
            b.add((j, q - 2 * ell), 1, W(j, "a", 2 * s), b.summand(j, ell),
                  b.idem_at(_target(params, q, j, ell)))
            j1 = (j + 1) % m
            b.add((j1, q - 2 * ell), _sgn(n // 2), W(j1, "b", 2 * s),
                  b.summand(j1, ell), b.idem_at(_target(params, q, j1, ell)))
    elif fam == "theta":
        j = cid.args[0] if cid.args else 1
        for ell in range(q + 1):
            b.add((j, q - 2 * ell), 1, W(j, "a", 2 * N), b.summand(j, ell),
                  b.idem_at(_target(params, q, j, ell)))
    elif fam == "phi":
        g = cid.args[0]
        for i in range(m):
            if m2_signs:
                base = ((n - 1) // 2 - g) * i
            else:
                base = ((n - 1 - g * m) // 2) * i
            for ell in range(q + 1):
                k = q - 2 * ell
                dom = (i, g * m + 1 + k)
                tv = _target(params, q, i, ell)
                if g < 0:
                    s0 = _sgn(base)
                    if k > 1:
                        pass
                    elif k == 1:
                        b.add(dom, -s0, W(i, "a", 2 * N - 2),
                              b.summand(i, (q - 1) // 2),
                              W(i + 1, "a", 2 * N - 1))
                    else:
                        # the m=2 printing omits the (-1)^q here; validity of
                        # the lifting conditions forces it (see ledger)
                        b.add(dom, s0 * _sgn(q), b.idem_at(i), b.summand(i, ell),
                              W(tv, "a", 2 * N - 1))
                elif g > 0:
                    s0 = _sgn(base)
                    if k >= 0:
                        b.add(dom, s0 * _sgn(q), b.idem_at(i), b.summand(i, ell),
                              W(tv, "a", 1))
                    elif k == -1:
                        # the m=2 printing adds a spurious (-1)^q here; the
                        # lifting conditions force the m-even reading
                        sq = -s0
                        for v in range(N):
                            b.add(dom, sq, W(i, "b", 2 * v),
                                  b.summand(i, (q + 1) // 2),
                                  W(i - 1, "a", 2 * (N - v - 1) + 1))
                        for v in range(N - 1):
                            b.add(dom, sq * _sgn((q + 1) // 2), W(i, "b", 2 * v + 1),
                                  b.summand(i - 1, (q - 1) // 2),
                                  W(i, "b", 2 * (N - v - 1)))
                    elif k == -2:
                        b.add(dom, s0, W(i, "b", 2 * N - 2), b.summand(i, ell),
                              W(i - 2, "a", 2 * N - 1))
                else:
                    s0 = _sgn(base)
                    if k == q:
                        b.add(dom, s0 * _sgn(q), b.idem_at(i), b.summand(i, 0),
                              W(tv, "a", 1))
                    elif 0 <= k < q:
                        b.add(dom, s0 * _sgn(q), b.idem_at(i), b.summand(i, ell),
                              W(tv, "a", 1))
                        b.add(dom, -s0 * (N - 1), b.idem_at(i),
                              b.summand(i, ell - 1), W(tv + 2, "b", 2 * N - 1))
                    elif k < -1:
                        b.add(dom, s0 * _sgn(q) * N, b.idem_at(i),
                              b.summand(i, ell), W(tv, "a", 2 * N - 1))
                    else:  # k == -1
                        for v in range(N):
                            if v <= N - 2:
                                c = N - 1 - v
                                b.add(dom, -s0 * c, W(i, "a", 2 * v),
                                      b.summand(i, (q - 1) // 2),
                                      W(i + 1, "b", 2 * (N - v - 1) + 1))
                                b.add(dom, -s0 * c * _sgn((q + 1) // 2),
                                      W(i, "a", 2 * v + 1),
                                      b.summand(i + 1, (q + 1) // 2),
                                      W(i, "a", 2 * (N - v - 1)))
                                b.add(dom, -s0 * c * _sgn((q + 1) // 2),
                                      W(i, "b", 2 * v + 1),
                                      b.summand(i - 1, (q - 1) // 2),
                                      W(i, "b", 2 * (N - v - 1)))
                            b.add(dom, -s0 * (N - v), W(i, "b", 2 * v),
                                  b.summand(i, (q + 1) // 2),
                                  W(i - 1, "a", 2 * (N - v - 1) + 1))
    elif fam == "psi":
        beta = cid.args[0]
        special = -1 if m2_signs else 0
        for i in range(m):
            if m2_signs:
                base = ((n + 1) // 2 - beta) * i
            else:
                base = ((n - 1 - beta * m) // 2) * i
            if m2_signs and beta == -1:
                base = ((n - 1) // 2) * i
            s0 = _sgn(base)
            for ell in range(q + 1):
                k = q - 2 * ell
                if m2_signs:
                    dom = (i, 2 * beta + 1 + k)
                else:
                    dom = (i, beta * m - 1 + k)
                tv = _target(params, q, i, ell)
                if beta > 0 or (m2_signs and beta >= 0):
                    if k < -1:
                        pass
                    elif k == -1:
                        b.add(dom, s0, W(i, "b", 2 * N - 2),
                              b.summand(i, (q + 1) // 2), W(i - 1, "b", 2 * N - 1))
                    else:
                        b.add(dom, s0, b.idem_at(i), b.summand(i, ell),
                              W(tv, "b", 2 * N - 1))
                elif beta < special:
                    if k < 1:
                        b.add(dom, s0, b.idem_at(i), b.summand(i, ell),
                              W(tv, "b", 1))
                    elif k == 1:
                        for v in range(N):
                            b.add(dom, s0, W(i, "a", 2 * v),
                                  b.summand(i, (q - 1) // 2),
                                  W(i + 1, "b", 2 * (N - v - 1) + 1))
                        for v in range(N - 1):
                            b.add(dom, s0 * _sgn((q + 1) // 2), W(i, "a", 2 * v + 1),
                                  b.summand(i + 1, (q + 1) // 2),
                                  W(i, "a", 2 * (N - v - 1)))
                    elif k == 2:
                        b.add(dom, s0, W(i, "a", 2 * N - 2), b.summand(i, ell),
                              W(i + 2, "b", 2 * N - 1))
                else:  # beta == special (the boundary member)
                    if k == -q:
                        b.add(dom, s0, b.idem_at(i), b.summand(i, q),
                              W(tv, "b", 1))
                    elif -q < k <= 0:
                        b.add(dom, s0, b.idem_at(i), b.summand(i, ell),
                              W(tv, "b", 1))
                        b.add(dom, -s0 * _sgn(q) * (N - 1), b.idem_at(i),
                              b.summand(i, ell + 1), W(tv - 2, "a", 2 * N - 1))
                    elif k > 1:
                        b.add(dom, s0 * N, b.idem_at(i), b.summand(i, ell),
                              W(tv, "b", 2 * N - 1))
                    else:  # k == 1
                        for v in range(N):
                            if v <= N - 2:
                                c = N - 1 - v
                                b.add(dom, s0 * c, W(i, "b", 2 * v),
                                      b.summand(i, (q + 1) // 2),
                                      W(i - 1, "a", 2 * (N - v - 1) + 1))
                                b.add(dom, s0 * c * _sgn((q + 1) // 2),
                                      W(i, "b", 2 * v + 1),
                                      b.summand(i - 1, (q - 1) // 2),
                                      W(i, "b", 2 * (N - v - 1)))
                                b.add(dom, s0 * c * _sgn((q + 1) // 2),
                                      W(i, "a", 2 * v + 1),
                                      b.summand(i + 1, (q + 1) // 2),
                                      W(i, "a", 2 * (N - v - 1)))
                            b.add(dom, s0 * (N - v), W(i, "a", 2 * v),
                                  b.summand(i, (q - 1) // 2),
                                  W(i + 1, "b", 2 * (N - v - 1) + 1))
    elif fam == "E":
        if m2_signs:
            # The printed m=2 row for this family is not a lifting under any
            # reading (non-composable letters, and no valid lifting exists on
            # its support pattern); see the ledger.  Conformance checks skip
            # it as a right factor.
            raise KeyError("the printed m=2 lifting row for E is defective")
        j, s = cid.args
        if q % 2 == 0:
            b.add((j, 1), 1, W(j, "a", 2 * s), b.summand(j, q // 2),
                  W(j, "a", 1))
        else:
            for v in range(N - s + 1):
                c = v + 1
                b.add((j, 0), c, W(j, "a", 2 * (v + s)), b.summand(j, (q - 1) // 2),
                      W(j + 1, "b", 2 * (N - v - 1) + 1))
                b.add((j, 0), c * _sgn((q + 1) // 2), W(j, "a", 2 * (v + s) + 1),
                      b.summand(j + 1, (q + 1) // 2), W(j, "a", 2 * (N - v - 1)))
            s1 = _sgn((n - 1) // 2)
            for v in range(N - s + 1):
                c = min(v + 1, N - s)
                b.add(((j + 1) % m, 0), s1 * c * _sgn((q + 1) // 2),
                      W(j + 1, "b", 2 * (v + s) + 1), b.summand(j, (q - 1) // 2),
                      W(j + 1, "b", 2 * (N - v - 1)))
                b.add(((j + 1) % m, 0), s1 * c, W(j + 1, "b", 2 * (v + s + 1)),
                      b.summand(j + 1, (q + 1) // 2), W(j, "a", 2 * (N - v - 2) + 1))
    elif fam == "omega":
        j = cid.args[0] if cid.args else 0
        if q % 2 == 1:
            for v in range(N - 1):
                c = N - 1 - v
                b.add((j, 0), c * _sgn((q - 1) // 2), W(j, "a", 2 * v + 1),
                      b.summand(j + 1, (q + 1) // 2), W(j, "a", 2 * (N - v - 1)))
                b.add((j, 0), -c, W(j, "a", 2 * v), b.summand(j, (q - 1) // 2),
                      W(j + 1, "b", 2 * (N - v - 1) + 1))
            s1 = _sgn((n + 1) // 2)
            for v in range(N - 1):
                c = N - 1 - v
                b.add(((j + 1) % m, 0), s1 * c, W(j + 1, "b", 2 * (v + 1)),
                      b.summand(j + 1, (q + 1) // 2), W(j, "a", 2 * (N - v - 2) + 1))
                b.add(((j + 1) % m, 0), s1 * c * _sgn((q + 1) // 2),
                      W(j + 1, "b", 2 * v + 1), b.summand(j, (q - 1) // 2),
                      W(j + 1, "b", 2 * (N - v - 1)))
            for v in range(1, (q + 1) // 2 + 1):
                s2 = _sgn(((n - 1) // 2) * v)
                if 2 * v - 1 <= q:
                    b.add(((j - v) % m, 2 * v), s2 * _sgn(v + (q + 1) // 2),
                          W(j - v, "a", 1), b.summand(j - v + 1, (q - 2 * v + 1) // 2),
                          b.idem_at(j - v + 1 + (2 * v - 1)))
                if 2 * v + 1 <= q:
                    b.add(((j - v) % m, 2 * v), s2, b.idem_at(j - v),
                          b.summand(j - v, (q - 2 * v - 1) // 2),
                          W(j - v + 2 * v + 1, "b", 2 * N - 1))
        else:
            for v in range(0, q // 2 + 1):
                s2 = _sgn(((n - 1) // 2) * v)
                if 2 * v <= q:
                    b.add(((j - v) % m, 2 * v + 1), s2, b.idem_at(j - v),
                          b.summand(j - v, (q - 2 * v) // 2),
                          W(j - v + 2 * v, "a", 1))
                if 2 * v + 2 <= q:
                    b.add(((j - v) % m, 2 * v + 1), -s2 * _sgn(v + q // 2),
                          W(j - v, "b", 2 * N - 1),
                          b.summand(j - v - 1, (q - 2 * v - 2) // 2),
                          b.idem_at(j - v - 1 + (2 * v + 2)))
    else:
        raise KeyError(f"no lifting table entry for family {fam}")
    return b.out


def transcribed_level(params, cid, q):
    """L^q of the published lifting of the named cocycle cid."""
    m, N = params.m, params.N
    if m >= 3 and m % 2 == 0:
        if N == 1:
            return _lift_m_even_N1(params, cid, q)
        return _lift_m_even(params, cid, q)
    if m == 2 and N > 1:
        return _lift_m_even(params, cid, q, m2_signs=True)
    raise KeyError("no published lifting table for these parameters")


def transcribed_lifting(params, cid, q_max):
    maps = [transcribed_level(params, cid, q) for q in range(q_max + 1)]
    return Lifting(cid.n, maps)
