"""The cochain complex Hom_{Lambda^e}(P^n, Lambda) and its cohomology.

A cochain is determined by its values f(e_i (x)_r e_{i+n-2r}) in the corner
e_i.Lambda.e_{target}; the coordinate system pairs each summand with the
corner basis.  The induced differential sends f to the map
s |-> sum c * l * f(s') * rt over the boundary terms of s, so its matrix has
integer entries in every characteristic.

The complex splits by path-length weight (value length minus the length of
the summand's labelling element); all ranks, kernels and representative
choices are computed per weight block, in a fixed order, so results are
deterministic run to run.
"""

from fractions import Fraction

from . import scalars
from .algebra import AlgebraElement, basis_corner
from .resolution import (Summand, projective, generator_boundary, gen_weight,
                         path_mul)


class NotACocycle(ValueError):
    pass


class Cochain:
    """Element of Hom(P^n, Lambda): summand -> corner algebra element."""

    __slots__ = ("params", "n", "values")

    def __init__(self, params, n, values=None):
        self.params = params
        self.n = n
        self.values = {}
        if values:
            for s, v in values.items():
                if not v.is_zero():
                    self.values[s] = v

    def value(self, s):
        return self.values.get(s, AlgebraElement.zero(self.params))

    def add(self, other):
        out = dict(self.values)
        for s, v in other.values.items():
            w = out.get(s)
            out[s] = v if w is None else w.add(v)
        return Cochain(self.params, self.n, out)

    def scale(self, c):
        return Cochain(self.params, self.n,
                       {s: v.scale(c) for s, v in self.values.items()})

    def sub(self, other):
        return self.add(other.scale(self.params.field.of_int(-1)))

    def is_zero(self):
        return all(v.is_zero() for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, Cochain) or self.n != other.n:
            return False
        return self.sub(other).is_zero()

    def render(self):
        bits = []
        for s in sorted(self.values, key=lambda t: (t.i, t.r)):
            bits.append(f"e{s.i}(x){s.r}e{s.i + s.offset} -> {self.values[s].render()}")
        return "; ".join(bits) if bits else "0"


def cochain_differential(params, f):
    """The induced differential applied to a cochain of degree n-1 ... -> degree n."""
    n = f.n + 1
    out = {}
    for s in projective(params, n):
        acc = AlgebraElement.zero(params)
        for c, l, s2, rt in generator_boundary(params, s):
            v = f.values.get(s2)
            if v is None:
                continue
            cc = params.field.of_int(c)
            for p, coeff in v.terms.items():
                q = path_mul(params, l, p)
                if q is None:
                    continue
                q = path_mul(params, q, rt)
                if q is None:
                    continue
                acc = acc.add(AlgebraElement.from_path(
                    params, q, params.field.mul(cc, coeff)))
        if not acc.is_zero():
            out[s] = acc
    return Cochain(params, n, out)


class _Block:
    __slots__ = ("rows", "cols", "ent", "_echelon", "_pivots")

    def __init__(self, rows, cols, ent):
        self.rows = rows      # global row coordinate indices
        self.cols = cols      # global column coordinate indices
        self.ent = ent        # integer entries, len(rows) x len(cols)
        self._echelon = None
        self._pivots = None


class CohomologySession:
    """Caches hom coordinates, induced matrices and cohomology data per degree."""

    def __init__(self, params, degree_cap=None):
        self.params = params
        self.degree_cap = degree_cap if degree_cap is not None else 2 * params.m + 4
        self._hom = {}
        self._index = {}
        self._weights = {}
        self._blocks = {}
        self._rank = {}
        self._kernel = {}
        self._image = {}
        self._cohom = {}

    # -- coordinates -------------------------------------------------------

    def hom_space(self, n):
        if n not in self._hom:
            coords = []
            for s in projective(self.params, n):
                for p in basis_corner(self.params, s.i, s.target_vertex(self.params.m)):
                    coords.append((s, p))
            self._hom[n] = coords
            self._index[n] = {c: k for k, c in enumerate(coords)}
            self._weights[n] = [p.length - gen_weight(self.params, s.n, s.r)
                                for (s, p) in coords]
        return self._hom[n]

    def vector(self, f):
        coords = self.hom_space(f.n)
        zero = self.params.field.zero()
        out = [zero] * len(coords)
        idx = self._index[f.n]
        for s, v in f.values.items():
            for p, c in v.terms.items():
                out[idx[(s, p)]] = c
        return out

    def cochain(self, n, vec):
        coords = self.hom_space(n)
        vals = {}
        f = self.params.field
        for (s, p), c in zip(coords, vec):
            if not f.is_zero(c):
                vals.setdefault(s, {})[p] = c
        return Cochain(self.params, n,
                       {s: AlgebraElement(self.params, t) for s, t in vals.items()})

    # -- induced matrices ----------------------------------------------------

    def blocks(self, n):
        """Weight blocks of the induced map Hom(P^{n-1}) -> Hom(P^n)."""
        if n in self._blocks:
            return self._blocks[n]
        params = self.params
        dom = self.hom_space(n - 1)
        cod = self.hom_space(n)
        dom_w = self._weights[n - 1]
        cod_w = self._weights[n]
        dom_idx = self._index[n - 1]
        cod_idx = self._index[n]
        cols_by_w = {}
        for k, w in enumerate(dom_w):
            cols_by_w.setdefault(w, []).append(k)
        rows_by_w = {}
        for k, w in enumerate(cod_w):
            rows_by_w.setdefault(w, []).append(k)
        blocks = {}
        for w in sorted(set(cols_by_w) | set(rows_by_w)):
            blocks[w] = _Block(rows_by_w.get(w, []), cols_by_w.get(w, []), None)
            blocks[w].ent = [[0] * len(blocks[w].cols) for _ in blocks[w].rows]
        colpos = {}
        for w, b in blocks.items():
            for a, cidx in enumerate(b.cols):
                colpos[cidx] = (w, a)
        rowpos = {}
        for w, b in blocks.items():
            for a, ridx in enumerate(b.rows):
                rowpos[ridx] = a
        for s in projective(params, n):
            for c, l, s2, rt in generator_boundary(params, s):
                for p in basis_corner(params, s2.i, s2.target_vertex(params.m)):
                    q = path_mul(params, l, p)
                    if q is None:
                        continue
                    q = path_mul(params, q, rt)
                    if q is None:
                        continue
                    cidx = dom_idx[(s2, p)]
                    ridx = cod_idx[(s, q)]
                    w, a = colpos[cidx]
                    blocks[w].ent[rowpos[ridx]][a] += c
        self._blocks[n] = blocks
        return blocks

    def induced_matrix(self, n):
        """Dense Matrix of the induced map (column j = image of coordinate j)."""
        f = self.params.field
        dom = self.hom_space(n - 1)
        cod = self.hom_space(n)
        ent = [[f.zero()] * len(dom) for _ in cod]
        for b in self.blocks(n).values():
            for rpos, ridx in enumerate(b.rows):
                for cpos, cidx in enumerate(b.cols):
                    v = b.ent[rpos][cpos]
                    if v:
                        ent[ridx][cidx] = f.of_int(v)
        return scalars.Matrix(f, len(cod), len(dom), ent)

    def _eliminated(self, n):
        """Echelonized copies of the degree-n blocks (cached)."""
        char = self.params.field.characteristic
        for b in self.blocks(n).values():
            if b._echelon is None:
                rows = [[x % char for x in row] for row in b.ent] if char else \
                       [row[:] for row in b.ent]
                b._pivots = scalars.int_echelon(rows, len(b.cols), char)
                b._echelon = rows
        return self._blocks[n]

    def rank(self, n):
        if n == 0:
            return 0
        if n not in self._rank:
            self._rank[n] = sum(len(b._pivots)
                                for b in self._eliminated(n).values())
        return self._rank[n]

    def kernel(self, n):
        """Kernel of the degree-n induced map, as {weight: [global vectors]}."""
        if n in self._kernel:
            return self._kernel[n]
        f = self.params.field
        dim = len(self.hom_space(n - 1))
        out = {}
        for w, b in sorted(self._eliminated(n).items()):
            if not b.cols:
                continue
            vecs = []
            pivset = set(b._pivots)
            for free in range(len(b.cols)):
                if free in pivset:
                    continue
                v = [f.zero()] * dim
                v[b.cols[free]] = f.one()
                for i, c in enumerate(b._pivots):
                    a = b._echelon[i][free]
                    if a:
                        if f.characteristic == 0:
                            v[b.cols[c]] = Fraction(-a, b._echelon[i][c])
                        else:
                            v[b.cols[c]] = f.neg(f.mul(a, f.inv(b._echelon[i][c])))
                vecs.append(v)
            if vecs:
                out[w] = vecs
        self._kernel[n] = out
        return out

    def image(self, n):
        """Image of the degree-n induced map inside Hom(P^n), per weight."""
        if n in self._image:
            return self._image[n]
        f = self.params.field
        char = f.characteristic
        out = {}
        if n >= 1:
            dim = len(self.hom_space(n))
            for w, b in sorted(self.blocks(n).items()):
                if not b.rows or not b.cols:
                    continue
                cols = [[(b.ent[r][c] % char if char else b.ent[r][c])
                         for r in range(len(b.rows))]
                        for c in range(len(b.cols))]
                pivots = scalars.int_echelon(cols, len(b.rows), f.characteristic)
                vecs = []
                for i in range(len(pivots)):
                    v = [f.zero()] * dim
                    for rpos, val in enumerate(cols[i]):
                        if val:
                            v[b.rows[rpos]] = f.of_int(val) if f.characteristic == 0 else val
                    vecs.append(v)
                if vecs:
                    out[w] = vecs
        self._image[n] = out
        return out

    # -- cohomology ----------------------------------------------------------

    def hh_dimension(self, n):
        nullity = len(self.hom_space(n)) - self.rank(n + 1)
        if n == 0 and not getattr(self, "_hh0_checked", False):
            # built-in self-check: degree 0 must agree with the commutant
            from .algebra import centre
            self._hh0_checked = True
            assert nullity == len(centre(self.params)), \
                "degree-0 cohomology disagrees with the centre"
        return nullity - self.rank(n)

    def cohomology_basis(self, n):
        """Representatives extending the coboundary space to the kernel."""
        if n in self._cohom:
            return self._cohom[n]
        f = self.params.field
        ker = self.kernel(n + 1)
        img = self.image(n)
        reps = []
        data = {}
        for w in sorted(ker):
            red = _SpanReducer(f, [v[:] for v in img.get(w, [])])
            chosen = []
            for v in ker[w]:
                if red.add(v):
                    chosen.append(v)
            data[w] = (img.get(w, []), chosen)
            reps.extend((w, v) for v in chosen)
        group = CohomologyGroup(self, n, reps, data)
        self._cohom[n] = group
        return group

    def is_cocycle(self, fch):
        g = cochain_differential(self.params, fch)
        return g.is_zero()

    def reduce_mod_coboundaries(self, fch):
        """Coordinates of the class of fch in the cohomology_basis representatives."""
        if not self.is_cocycle(fch):
            raise NotACocycle(f"degree-{fch.n} cochain is not a cocycle")
        group = self.cohomology_basis(fch.n)
        return group.coordinates_of(fch)


class _SpanReducer:
    """Incremental row-echelon span with deterministic least-index pivots."""

    def __init__(self, field, seed_rows):
        self.f = field
        self.rows = []     # (pivot index, normalized row)
        for r in seed_rows:
            self.add([x for x in r])

    def _reduce(self, v):
        f = self.f
        for piv, row in self.rows:
            c = v[piv]
            if not f.is_zero(c):
                for j in range(len(v)):
                    if not f.is_zero(row[j]):
                        v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def add(self, v):
        f = self.f
        v = self._reduce(v[:])
        piv = None
        for j, x in enumerate(v):
            if not f.is_zero(x):
                piv = j
                break
        if piv is None:
            return False
        inv = f.inv(v[piv])
        v = [f.mul(inv, x) for x in v]
        self.rows.append((piv, v))
        return True


class CohomologyGroup:
    """HH^n data: dimension, cocycle representatives, reduction machinery."""

    def __init__(self, session, n, reps, data):
        self.session = session
        self.n = n
        self._reps = reps            # list of (weight, global vector)
        self._data = data            # weight -> (image vectors, representative vectors)
        self._solvers = {}

    @property
    def dimension(self):
        return len(self._reps)

    @property
    def representatives(self):
        return [self.session.cochain(self.n, v) for (_, v) in self._reps]

    def representative_vectors(self):
        return [v for (_, v) in self._reps]

    def _solver(self, w):
        # coordinates of weight w, columns [image basis | representatives]
        if w not in self._solvers:
            f = self.session.params.field
            weights = self.session._weights[self.n]
            support = [k for k, ww in enumerate(weights) if ww == w]
            img, chosen = self._data[w]
            ent = [[v[k] for v in img] + [v[k] for v in chosen] for k in support]
            mat = scalars.Matrix(f, len(support), len(img) + len(chosen), ent)
            self._solvers[w] = (support, len(img), len(chosen), mat)
        return self._solvers[w]

    def coordinates_of(self, fch):
        f = self.session.params.field
        vec = self.session.vector(fch)
        weights = self.session._weights[fch.n]
        by_w = {}
        for k, c in enumerate(vec):
            if not f.is_zero(c):
                by_w.setdefault(weights[k], set()).add(k)
        out = []
        for w in sorted(self._data):
            _, chosen = self._data[w]
            if w not in by_w:
                out.extend([f.zero()] * len(chosen))
                continue
            support, n_img, n_rep, mat = self._solver(w)
            rhs = [vec[k] for k in support]
            sol = scalars.solve_linear(mat, rhs)
            if sol is None:
                raise NotACocycle("cocycle does not reduce into the kernel span")
            out.extend(sol[n_img:])
            by_w.pop(w)
        if by_w:
            raise NotACocycle("cocycle has weight components outside the kernel")
        return out
