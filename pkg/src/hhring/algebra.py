"""The bound quiver algebra under study: canonical basis and multiplication.

The quiver has m vertices 0..m-1, clockwise arrows a_i : i -> i+1 and
anticlockwise arrows abar_i : i+1 -> i; the ideal is generated by
a_i a_{i+1}, abar_{i-1} abar_{i-2} and (a_i abar_i)^N - (abar_{i-1} a_{i-1})^N.
Paths compose left to right.

A nonzero monomial is therefore an alternating word in a/abar of length at
most 2N, and the closed words of length exactly 2N at a vertex are all
identified.  A ``BasisPath`` stores the start vertex, the letter the word
starts with ('a' or 'b' for abar, '' for a trivial path) and the length; the
canonical socle representative is the 'a'-headed word (a_i abar_i)^N, i.e.
(abar_{i-1} a_{i-1})^N is rewritten left-to-right into it.
"""

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Field


class InvalidParams(ValueError):
    pass


class NonComposableWord(ValueError):
    pass


class ParamsMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraParams:
    m: int
    N: int
    field: Field

    def __post_init__(self):
        if self.m < 1 or self.N < 1:
            raise InvalidParams(f"need m >= 1 and N >= 1, got m={self.m}, N={self.N}")

    @property
    def dimension(self):
        return 4 * self.m * self.N


def algebra_create(m, N, field):
    return AlgebraParams(m, N, field)


# shape tags, in the canonical basis order
IDEM, POW_AB, POW_BA, SOCLE, A_HEAD, B_HEAD = range(6)


@dataclass(frozen=True, order=True)
class BasisPath:
    """Alternating monomial: start vertex, first letter ('a'/'b'/''), length."""
    src: int
    head: str
    length: int

    def target(self, m):
        if self.length % 2 == 0:
            return self.src
        return (self.src + 1) % m if self.head == "a" else (self.src - 1) % m

    def letter_at(self, pos):
        # 1-based position in the word
        if (pos % 2) == 1:
            return self.head
        return "b" if self.head == "a" else "a"

    def shape(self, N):
        L = self.length
        if L == 0:
            return (IDEM, 0)
        if L == 2 * N:
            return (SOCLE, N)
        if L % 2 == 0:
            return (POW_AB, L // 2) if self.head == "a" else (POW_BA, L // 2)
        return (A_HEAD, L // 2) if self.head == "a" else (B_HEAD, L // 2)

    def sort_key(self, N):
        tag, k = self.shape(N)
        return (self.src, tag, k)

    def is_idempotent(self):
        return self.length == 0

    def arrows(self, m):
        """The word as a list of (kind, index) arrows; 'a' i is a_i, 'b' i is abar_i."""
        out = []
        v = self.src
        for pos in range(1, self.length + 1):
            if self.letter_at(pos) == "a":
                out.append(("a", v % m))
                v = v + 1
            else:
                out.append(("b", (v - 1) % m))
                v = v - 1
        return out

    def render(self, params):
        m, N = params.m, params.N
        tag, k = self.shape(N)
        if tag == IDEM:
            return f"e{self.src}"
        i = self.src
        if tag == SOCLE:
            return f"(a{i} abar{i})^{N}"
        if tag == POW_AB:
            return f"(a{i} abar{i})^{k}"
        if tag == POW_BA:
            j = (i - 1) % m
            return f"(abar{j} a{j})^{k}"
        if tag == A_HEAD:
            return f"a{i}" if k == 0 else f"a{i}(abar{i} a{i})^{k}"
        j = (i - 1) % m
        return f"abar{j}" if k == 0 else f"abar{j}(a{j} abar{j})^{k}"


def idem(i):
    return BasisPath(i, "", 0)


def word_path(params, src, head, length):
    """The class of the alternating word of given head/length, or None if zero.

    Lengths above 2N vanish; length exactly 2N is the socle in canonical
    'a'-headed form.  Negative lengths denote absent terms in generic
    formulas and also map to None.
    """
    if length < 0 or length > 2 * params.N:
        return None
    if length == 0:
        return idem(src % params.m)
    if length == 2 * params.N:
        return BasisPath(src % params.m, "a", length)
    return BasisPath(src % params.m, head, length)


def path_mul(params, p, q):
    """Product of two basis paths: a basis path or None (coefficient is 0/1)."""
    m, N = params.m, params.N
    if p.target(m) != q.src:
        return None
    if p.length == 0:
        return q
    if q.length == 0:
        return p
    if p.letter_at(p.length) == q.head:
        return None
    return word_path(params, p.src, p.head, p.length + q.length)


def basis_corner(params, i, j):
    """Ordered basis of e_i * Lambda * e_j."""
    m, N = params.m, params.N
    i %= m
    j %= m
    out = []
    if i == j:
        out.append(idem(i))
        for k in range(1, N):
            out.append(BasisPath(i, "a", 2 * k))
        for k in range(1, N):
            out.append(BasisPath(i, "b", 2 * k))
        out.append(BasisPath(i, "a", 2 * N))
    if j == (i + 1) % m:
        for k in range(N):
            out.append(BasisPath(i, "a", 2 * k + 1))
    if j == (i - 1) % m:
        for k in range(N):
            out.append(BasisPath(i, "b", 2 * k + 1))
    out.sort(key=lambda p: p.sort_key(N))
    return out


def basis_all(params):
    out = []
    for i in range(params.m):
        seen = set()
        for j in range(params.m):
            for p in basis_corner(params, i, j):
                if p not in seen:
                    seen.add(p)
                    out.append(p)
    out.sort(key=lambda p: p.sort_key(params.N))
    return out


class AlgebraElement:
    """Finitely supported scalar combination of basis paths."""

    __slots__ = ("params", "terms")

    def __init__(self, params, terms=None):
        self.params = params
        self.terms = {}
        if terms:
            f = params.field
            for p, c in terms.items():
                if not f.is_zero(c):
                    self.terms[p] = c

    @classmethod
    def from_path(cls, params, path, coeff=None):
        c = params.field.one() if coeff is None else coeff
        return cls(params, {path: c})

    @classmethod
    def zero(cls, params):
        return cls(params)

    @classmethod
    def unit(cls, params):
        one = params.field.one()
        return cls(params, {idem(i): one for i in range(params.m)})

    def is_zero(self):
        return not self.terms

    def add(self, other):
        f = self.params.field
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = f.add(out.get(p, f.zero()), c)
            if f.is_zero(s):
                out.pop(p, None)
            else:
                out[p] = s
        return AlgebraElement(self.params, out)

    def scale(self, c):
        f = self.params.field
        if f.is_zero(c):
            return AlgebraElement.zero(self.params)
        return AlgebraElement(self.params, {p: f.mul(c, v) for p, v in self.terms.items()})

    def sub(self, other):
        return self.add(other.scale(self.params.field.of_int(-1)))

    def mul(self, other):
        if self.params != other.params:
            raise ParamsMismatch("elements over different algebras")
        f = self.params.field
        out = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                r = path_mul(self.params, p, q)
                if r is None:
                    continue
                s = f.add(out.get(r, f.zero()), f.mul(cp, cq))
                if f.is_zero(s):
                    out.pop(r, None)
                else:
                    out[r] = s
        return AlgebraElement(self.params, out)

    def coeff(self, path):
        return self.terms.get(path, self.params.field.zero())

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self):
        if not self.terms:
            return "0"
        bits = []
        for p in sorted(self.terms, key=lambda q: q.sort_key(self.params.N)):
            c = self.terms[p]
            bits.append(f"{c}*{p.render(self.params)}" if c != 1 else p.render(self.params))
        return " + ".join(bits)

    def __repr__(self):
        return f"<{self.render()}>"


def arrow_element(params, kind, index):
    """a_i or abar_i as an algebra element."""
    i = index % params.m
    if kind == "a":
        return AlgebraElement.from_path(params, BasisPath(i, "a", 1))
    return AlgebraElement.from_path(params, BasisPath((i + 1) % params.m, "b", 1))


def normal_form(params, start, word):
    """Canonical form of an arrow word; ``word`` is a list of (kind, index).

    Raises NonComposableWord when consecutive arrow endpoints do not match.
    """
    m = params.m
    v = start % m
    prev_kind = None
    for kind, index in word:
        if kind not in ("a", "b"):
            raise NonComposableWord(f"unknown arrow kind {kind!r}")
        src = index % m if kind == "a" else (index + 1) % m
        if src != v:
            raise NonComposableWord(f"arrow ({kind},{index}) does not start at vertex {v}")
        v = (index + 1) % m if kind == "a" else index % m
        if prev_kind == kind:
            return AlgebraElement.zero(params)
        prev_kind = kind
    if not word:
        return AlgebraElement.from_path(params, idem(start % m))
    p = word_path(params, start % m, word[0][0], len(word))
    if p is None:
        return AlgebraElement.zero(params)
    return AlgebraElement.from_path(params, p)


def radical_membership(x):
    """True iff x has no trivial-path component."""
    return all(not p.is_idempotent() for p in x.terms)


class CentreBasis:
    def __init__(self, elements):
        self.elements = elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def centre(params):
    """Basis of {z : zx = xz for all x}, by solving the commutant system."""
    from . import scalars

    f = params.field
    paths = basis_all(params)
    index = {p: k for k, p in enumerate(paths)}
    gens = [arrow_element(params, "a", i) for i in range(params.m)]
    gens += [arrow_element(params, "b", i) for i in range(params.m)]
    rows = []
    for g in gens:
        block = {}
        for k, p in enumerate(paths):
            e = AlgebraElement.from_path(params, p)
            diff = e.mul(g).sub(g.mul(e))
            for q, c in diff.terms.items():
                block.setdefault(q, [f.zero()] * len(paths))[k] = c
        rows.extend(block[q] for q in sorted(block, key=lambda r: r.sort_key(params.N)))
    mat = scalars.Matrix(f, len(rows), len(paths), rows)
    _, null = scalars.rank_nullspace(mat)
    elems = []
    for v in null:
        elems.append(AlgebraElement(params, {paths[k]: c for k, c in enumerate(v)
                                             if not f.is_zero(c)}))
    return CentreBasis(elems)
