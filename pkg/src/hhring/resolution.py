"""Minimal projective bimodule resolution (P^n, d^n) of the algebra.

P^n has one summand e_i (x)_r e_{i+n-2r} per vertex i and 0 <= r <= n.  The
integer offset k = n-2r is never reduced mod m: it is what identifies the
summand.  The differential follows the three-case definition (k > 0, k < 0,
k = 0), with the conventions that summand indices r-1 < 0 and r > n-1 drop
the corresponding terms.

Everything here is homogeneous for the path-length grading: the labelling
element of summand (n, i, r) has length ell(n, r) = n + (2N-2).min(r, n-r),
and each differential term's left/right coefficients make up the weight
difference.  Ranks are computed blockwise per weight, which keeps the
underlying-space matrices small.
"""

from dataclasses import dataclass

from . import scalars
from .algebra import (AlgebraElement, BasisPath, idem, path_mul, word_path,
                      basis_corner)


class DegreeZero(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Summand:
    """Generator e_i (x)_r e_{i+n-2r} of the r-th summand at vertex i."""
    n: int
    i: int
    r: int

    @property
    def offset(self):
        return self.n - 2 * self.r

    def target_vertex(self, m):
        return (self.i + self.offset) % m


def gen_weight(params, n, r):
    return n + (2 * params.N - 2) * min(r, n - r)


def projective(params, n):
    if n < 0:
        raise IndexOutOfRange("degree must be >= 0")
    return [Summand(n, i, r) for i in range(params.m) for r in range(n + 1)]


def generator_boundary(params, s):
    """d^n of the generator of summand s, as (coef, left, summand', right) terms.

    Coefficients are plain ints; left/right are BasisPaths with
    left.target == summand'.i and right.src == summand'.target_vertex.
    """
    m, N = params.m, params.N
    n, i, r = s.n, s.i, s.r
    if n < 1:
        raise DegreeZero("the augmentation handles degree 0")
    k = s.offset
    terms = []
    if k > 0:
        v1 = (i + (n - 1) - 2 * r) % m
        terms.append((1, idem(i), Summand(n - 1, i, r), BasisPath(v1, "a", 1)))
        s2 = Summand(n - 1, (i + 1) % m, r)
        terms.append(((-1) ** (n + r), BasisPath(i, "a", 1), s2, idem(s2.target_vertex(m))))
        if r >= 1:
            s3 = Summand(n - 1, (i - 1) % m, r - 1)
            terms.append(((-1) ** (n + r), BasisPath(i, "b", 2 * N - 1), s3,
                          idem(s3.target_vertex(m))))
            v4 = (i + (n - 1) - 2 * (r - 1)) % m
            terms.append(((-1) ** n, idem(i), Summand(n - 1, i, r - 1),
                          BasisPath(v4, "b", 2 * N - 1)))
    elif k < 0:
        if r <= n - 1:
            v1 = (i + (n - 1) - 2 * r) % m
            terms.append((1, idem(i), Summand(n - 1, i, r), BasisPath(v1, "a", 2 * N - 1)))
            s2 = Summand(n - 1, (i + 1) % m, r)
            terms.append(((-1) ** (n + r), BasisPath(i, "a", 2 * N - 1), s2,
                          idem(s2.target_vertex(m))))
        s3 = Summand(n - 1, (i - 1) % m, r - 1)
        terms.append(((-1) ** (n + r), BasisPath(i, "b", 1), s3, idem(s3.target_vertex(m))))
        v4 = (i + (n - 1) - 2 * (r - 1)) % m
        terms.append(((-1) ** n, idem(i), Summand(n - 1, i, r - 1), BasisPath(v4, "b", 1)))
    else:
        half = n // 2
        sign = (-1) ** half
        for j in range(N):
            # (abar a)^j [e_i (x) e_{i-1} a + sign abar e_{i-1} (x) e_i] (abar a)^{N-j-1}
            left = word_path(params, i, "b", 2 * j)
            terms.append((1, left, Summand(n - 1, i, half),
                          BasisPath((i - 1) % m, "a", 2 * (N - j - 1) + 1)))
            rt = word_path(params, i, "b", 2 * (N - j - 1))
            terms.append((sign, BasisPath(i, "b", 2 * j + 1),
                          Summand(n - 1, (i - 1) % m, half - 1), rt))
            # (a abar)^j [sign a e_{i+1} (x) e_i + e_i (x) e_{i+1} abar] (a abar)^{N-j-1}
            rt = word_path(params, i, "a", 2 * (N - j - 1))
            terms.append((sign, BasisPath(i, "a", 2 * j + 1),
                          Summand(n - 1, (i + 1) % m, half), rt))
            left = word_path(params, i, "a", 2 * j)
            terms.append((1, left, Summand(n - 1, i, half - 1),
                          BasisPath((i + 1) % m, "b", 2 * (N - j - 1) + 1)))
    return terms


class ResolutionElement:
    """Element of P^n: scalar combination of (summand, left, right) triples."""

    __slots__ = ("params", "n", "terms")

    def __init__(self, params, n, terms=None):
        self.params = params
        self.n = n
        self.terms = {}
        if terms:
            f = params.field
            for key, c in terms.items():
                if not f.is_zero(c):
                    self.terms[key] = c

    @classmethod
    def generator(cls, params, s):
        key = (s, idem(s.i), idem(s.target_vertex(params.m)))
        return cls(params, s.n, {key: params.field.one()})

    def is_zero(self):
        return not self.terms

    def add(self, other):
        f = self.params.field
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = f.add(out.get(key, f.zero()), c)
            if f.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
        return ResolutionElement(self.params, self.n, out)

    def scale(self, c):
        f = self.params.field
        return ResolutionElement(self.params, self.n,
                                 {k: f.mul(c, v) for k, v in self.terms.items()})

    def lmul(self, path):
        """Left multiply by a basis path."""
        out = {}
        f = self.params.field
        for (s, l, rt), c in self.terms.items():
            ll = path_mul(self.params, path, l)
            if ll is not None:
                key = (s, ll, rt)
                out[key] = f.add(out.get(key, f.zero()), c)
        return ResolutionElement(self.params, self.n, out)

    def rmul(self, path):
        out = {}
        f = self.params.field
        for (s, l, rt), c in self.terms.items():
            rr = path_mul(self.params, rt, path)
            if rr is not None:
                key = (s, l, rr)
                out[key] = f.add(out.get(key, f.zero()), c)
        return ResolutionElement(self.params, self.n, out)

    def __eq__(self, other):
        return (isinstance(other, ResolutionElement) and self.n == other.n
                and self.terms == other.terms)


def differential_apply(params, x):
    """d^n applied to a resolution element of degree n >= 1."""
    if x.n < 1:
        raise DegreeZero("degree-0 elements go through the augmentation")
    f = params.field
    out = {}
    for (s, l, rt), c in x.terms.items():
        for coef, bl, s2, br in generator_boundary(params, s):
            ll = path_mul(params, l, bl)
            if ll is None:
                continue
            rr = path_mul(params, br, rt)
            if rr is None:
                continue
            key = (s2, ll, rr)
            v = f.add(out.get(key, f.zero()), f.mul(f.of_int(coef), c))
            if f.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
    return ResolutionElement(params, x.n - 1, out)


def augmentation(params, x):
    """d^0: P^0 -> Lambda, the multiplication map."""
    f = params.field
    out = AlgebraElement.zero(params)
    for (s, l, rt), c in x.terms.items():
        p = path_mul(params, l, rt)
        if p is not None:
            out = out.add(AlgebraElement.from_path(params, p, c))
    return out


def underlying_basis(params, n):
    """Ordered K-basis of P^n as (summand, left, right) triples."""
    m = params.m
    out = []
    for s in projective(params, n):
        tv = s.target_vertex(m)
        for li in range(m):
            for l in basis_corner(params, li, s.i):
                for rj in range(m):
                    for rt in basis_corner(params, tv, rj):
                        out.append((s, l, rt))
    return out


def triple_weight(params, key):
    s, l, rt = key
    return l.length + gen_weight(params, s.n, s.r) + rt.length


def _blocked_int_matrix(params, n, dom_basis, cod_index, cod_weights):
    """Integer matrix of d^n per weight block: weight -> (rows, cols, entries)."""
    blocks = {}
    cols_by_weight = {}
    for cidx, key in enumerate(dom_basis):
        cols_by_weight.setdefault(triple_weight(params, key), []).append(cidx)
    rows_by_weight = {}
    for ridx, w in enumerate(cod_weights):
        rows_by_weight.setdefault(w, []).append(ridx)
    for w, cols in cols_by_weight.items():
        rows = rows_by_weight.get(w, [])
        rowpos = {r: a for a, r in enumerate(rows)}
        ent = [[0] * len(cols) for _ in rows]
        for a, cidx in enumerate(cols):
            x = ResolutionElement(params, n, {dom_basis[cidx]: params.field.one()})
            y = differential_apply(params, x)
            for key, c in y.terms.items():
                ridx = cod_index[key]
                ent[rowpos[ridx]][a] = int(c)
        blocks[w] = (rows, cols, ent)
    return blocks


def _block_rank(entries, ncols, char):
    rows = [row[:] for row in entries]
    return len(scalars.int_echelon(rows, ncols, char))


def exactness_check(params, n_max):
    """rank d^n == nullity d^{n-1} for 1 <= n <= n_max (d^0 the augmentation).

    Returns {"degrees": {n: bool}, "ok": bool}.  Ranks are computed per
    path-length weight block; the differential is weight-homogeneous.
    """
    char = params.field.characteristic
    f = params.field
    bases = {n: underlying_basis(params, n) for n in range(n_max + 1)}
    # rank of the augmentation and nullity bookkeeping
    alg_basis = []
    for i in range(params.m):
        for j in range(params.m):
            alg_basis.extend(basis_corner(params, i, j))
    alg_index = {p: k for k, p in enumerate(alg_basis)}
    aug_rows_by_w = {}
    for cidx, key in enumerate(bases[0]):
        s, l, rt = key
        p = path_mul(params, l, rt)
        if p is not None:
            w = triple_weight(params, key)
            aug_rows_by_w.setdefault(w, {}).setdefault(alg_index[p], {})[cidx] = 1
    rank_prev = 0
    cols_by_w = {}
    for cidx, key in enumerate(bases[0]):
        cols_by_w.setdefault(triple_weight(params, key), []).append(cidx)
    for w, cols in cols_by_w.items():
        rows = aug_rows_by_w.get(w, {})
        ent = []
        pos = {c: a for a, c in enumerate(cols)}
        for _, entries in sorted(rows.items()):
            row = [0] * len(cols)
            for cidx, v in entries.items():
                row[pos[cidx]] = v
            ent.append(row)
        rank_prev += _block_rank(ent, len(cols), char)

    report = {"degrees": {}, "ok": True}
    for n in range(1, n_max + 1):
        cod_index = {key: k for k, key in enumerate(bases[n - 1])}
        cod_weights = [triple_weight(params, key) for key in bases[n - 1]]
        blocks = _blocked_int_matrix(params, n, bases[n], cod_index, cod_weights)
        rank_n = sum(_block_rank(ent, len(cols), char)
                     for (rows, cols, ent) in blocks.values())
        nullity_prev = len(bases[n - 1]) - rank_prev
        ok = (rank_n == nullity_prev)
        report["degrees"][n] = ok
        report["ok"] = report["ok"] and ok
        rank_prev = rank_n
    return report


# ---------------------------------------------------------------------------
# labelling elements g^n_{r,i} in the free path algebra (test fixtures)

class FreeElement:
    """Scalar combination of arrow words in the free path algebra KQ."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, m, word, coeff=1):
        return cls(m, {tuple(word): coeff})

    def add(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElement(self.m, out)

    def scale(self, c):
        return FreeElement(self.m, {w: c * v for w, v in self.terms.items()})

    def append_word(self, word):
        return FreeElement(self.m, {w + tuple(word): c for w, c in self.terms.items()})

    def prepend_word(self, word):
        return FreeElement(self.m, {tuple(word) + w: c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.terms == other.terms


def _a_word_at(m, v):
    return [("a", v % m)]


def _bab_word_at(m, v, length):
    """abar(a abar)^k word starting at vertex v, of odd length."""
    out = []
    for pos in range(length):
        if pos % 2 == 0:
            out.append(("b", (v - 1) % m))
            v -= 1
        else:
            out.append(("a", v % m))
            v += 1
    return out


def _aba_word_at(m, v, length):
    """a(abar a)^k word starting at vertex v, of odd length."""
    out = []
    for pos in range(length):
        if pos % 2 == 0:
            out.append(("a", v % m))
            v += 1
        else:
            out.append(("b", (v - 1) % m))
            v -= 1
    return out


def word_endpoints(m, start, word):
    v = start
    for kind, index in word:
        if kind == "a":
            assert index % m == v % m
            v += 1
        else:
            assert (index + 1) % m == v % m
            v -= 1
    return v


def g_element(params, n, r, i):
    """The labelling element g^n_{r,i} of KQ, by the defining recursion."""
    m, N = params.m, params.N
    if not (0 <= r <= n):
        raise IndexOutOfRange(f"need 0 <= r <= n, got r={r}, n={n}")
    if n == 0:
        return FreeElement(m, {(): 1})

    def g(nn, rr, ii):
        if rr < 0 or rr > nn:
            return FreeElement(m, {})
        if nn == 0:
            return FreeElement(m, {(): 1})
        k = nn - 2 * rr
        tgt_r = ii + (nn - 1) - 2 * rr       # target vertex of g^{n-1}_{rr,ii}
        tgt_r1 = ii + (nn - 1) - 2 * (rr - 1)
        if k > 0:
            first = g(nn - 1, rr, ii).append_word(_a_word_at(m, tgt_r))
            second = g(nn - 1, rr - 1, ii).append_word(_bab_word_at(m, tgt_r1, 2 * N - 1))
            return first.add(second.scale((-1) ** nn))
        if k < 0:
            first = g(nn - 1, rr, ii).append_word(_aba_word_at(m, tgt_r, 2 * N - 1))
            second = g(nn - 1, rr - 1, ii).append_word(_bab_word_at(m, tgt_r1, 1))
            return first.add(second.scale((-1) ** nn))
        first = g(nn - 1, rr, ii).append_word(_aba_word_at(m, tgt_r, 2 * N - 1))
        second = g(nn - 1, rr - 1, ii).append_word(_bab_word_at(m, tgt_r1, 2 * N - 1))
        return first.add(second)

    return g(n, r, i % m)
