"""Independent dimension oracle: the vertex-reduced bar complex.

Cochains in degree n are functions on composable n-tuples of radical basis
paths (tensors over the span of the trivial paths), valued in the corner
algebra between the word's endpoints.  The differential is the usual
alternating sum: left multiplication into the value, inner merges, right
multiplication.  This computes the same cohomology as the minimal
resolution but shares none of its machinery, so it cross-validates the
dimensions at small degree.

The complex splits by the path-length weight (value length minus word
length); ranks are computed per weight block with sparse column elimination
so the next-higher cochain space never has to be materialized densely.
"""

import os
from fractions import Fraction
from math import gcd

from .algebra import basis_corner, path_mul

DEFAULT_MAX_COORDS = 10 ** 5


class TooLarge(RuntimeError):
    pass


def _max_coords():
    env = os.environ.get("HH_MAX_COORDS")
    return int(env) if env else DEFAULT_MAX_COORDS


def radical_paths(params):
    out = []
    for i in range(params.m):
        for j in range(params.m):
            out.extend(p for p in basis_corner(params, i, j) if p.length > 0)
    return out


class BarComplex:
    def __init__(self, params, max_coords=None):
        self.params = params
        self.paths = radical_paths(params)
        self.max_coords = max_coords if max_coords is not None else _max_coords()
        self._words = {0: [()]}
        self._rank = {}

    def words(self, n):
        """Composable n-tuples of radical paths."""
        if n not in self._words:
            prev = self.words(n - 1)
            m = self.params.m
            out = []
            for w in prev:
                v = w[-1].target(m) if w else None
                for p in self.paths:
                    if v is None or p.src == v:
                        out.append(w + (p,))
            self._words[n] = out
        return self._words[n]

    def dim(self, n):
        m = self.params.m
        total = 0
        for w in self.words(n):
            src = w[0].src if w else None
            for i in range(m):
                s = i if src is None else src
                t = w[-1].target(m) if w else s
                total += len(basis_corner(self.params, s, t))
                if src is not None:
                    break
        return total

    def _coords_by_weight(self, n):
        """weight -> list of (word, value path) coordinates."""
        m = self.params.m
        out = {}
        for w in self.words(n):
            wl = sum(p.length for p in w)
            if w:
                corners = [(w[0].src, w[-1].target(m))]
            else:
                corners = [(i, i) for i in range(m)]
            for (s, t) in corners:
                for v in basis_corner(self.params, s, t):
                    out.setdefault(v.length - wl, []).append((w, v))
        return out

    def _column(self, n, word, value):
        """Sparse image of the elementary degree-n cochain under the differential."""
        params = self.params
        m = params.m
        col = {}

        def add(key, c):
            col[key] = col.get(key, 0) + c
            if not col[key]:
                del col[key]

        # outer faces: prepend / append a radical path
        for u in self.paths:
            if word:
                if u.target(m) == word[0].src:
                    uv = path_mul(params, u, value)
                    if uv is not None:
                        add(((u,) + word, uv), 1)
                if word[-1].target(m) == u.src:
                    vu = path_mul(params, value, u)
                    if vu is not None:
                        add((word + (u,), vu), (-1) ** (n + 1))
            else:
                if u.target(m) == value.src:
                    uv = path_mul(params, u, value)
                    if uv is not None:
                        add(((u,), uv), 1)
                if value.target(m) == u.src:
                    vu = path_mul(params, value, u)
                    if vu is not None:
                        add(((u,), vu), (-1) ** (n + 1))
        # inner faces: split one letter into a composable product
        for pos, w in enumerate(word):
            for a in self.paths:
                if a.src != w.src:
                    continue
                for bpath in self.paths:
                    if path_mul(params, a, bpath) == w:
                        new = word[:pos] + (a, bpath) + word[pos + 1:]
                        add((new, value), (-1) ** (pos + 1))
        return col

    def rank(self, n):
        """Rank of the differential C^{n-1} -> C^n (exact, per weight block)."""
        if n < 1:
            return 0
        if n in self._rank:
            return self._rank[n]
        char = self.params.field.characteristic
        total = 0
        for w, coords in sorted(self._coords_by_weight(n - 1).items()):
            pivots = {}
            for word, value in coords:
                col = self._column(n - 1, word, value)
                if char:
                    col = {k: c % char for k, c in col.items() if c % char}
                total += _sparse_reduce(col, pivots, char)
        self._rank[n] = total
        return total

    def cohomology_dimension(self, n):
        if self.dim(n) > self.max_coords:
            raise TooLarge(
                f"bar cochain space in degree {n} has {self.dim(n)} coordinates "
                f"(limit {self.max_coords}; set HH_MAX_COORDS to override)")
        return self.dim(n) - self.rank(n + 1) - self.rank(n)


def _sparse_reduce(col, pivots, char):
    """Reduce a sparse column against pivot columns; install if independent."""
    while col:
        lead = min(col)
        if lead not in pivots:
            # normalize: monic over GF(p), content-reduced over QQ
            if char:
                inv = pow(col[lead], char - 2, char)
                col = {k: c * inv % char for k, c in col.items()}
            else:
                g = 0
                for c in col.values():
                    g = gcd(g, abs(c))
                if g > 1:
                    col = {k: c // g for k, c in col.items()}
                if col[lead] < 0:
                    col = {k: -c for k, c in col.items()}
            pivots[lead] = col
            return 1
        piv = pivots[lead]
        if char:
            factor = col[lead] * pow(piv[lead], char - 2, char) % char
            new = {}
            for k in set(col) | set(piv):
                c = (col.get(k, 0) - factor * piv.get(k, 0)) % char
                if c:
                    new[k] = c
            col = new
        else:
            a, b = piv[lead], col[lead]
            new = {}
            for k in set(col) | set(piv):
                c = a * col.get(k, 0) - b * piv.get(k, 0)
                if c:
                    new[k] = c
            g = 0
            for c in new.values():
                g = gcd(g, abs(c))
            if g > 1:
                new = {k: c // g for k, c in new.items()}
            col = new
    return 0


def bar_hh_dimension(params, n, max_coords=None):
    return BarComplex(params, max_coords).cohomology_dimension(n)


def bar_cross_check(session, n_max, max_coords=None):
    """bar dimensions vs minimal-resolution dimensions, degree by degree."""
    bar = BarComplex(session.params, max_coords)
    report = {"degrees": {}, "ok": True}
    for n in range(n_max + 1):
        b = bar.cohomology_dimension(n)
        h = session.hh_dimension(n)
        report["degrees"][n] = {"bar": b, "minimal": h, "ok": b == h}
        report["ok"] = report["ok"] and b == h
    return report
