"""The published cocycle bases: chi, pi, phi, psi, F, E, theta, omega.

Each (m-parity, characteristic) case is a separate enumeration function
returning the named cocycles in published order, so a transcription slip
stays local to its table.  Indices follow the published conventions:
for m >= 2 the second index is the offset multiplier, for m = 1
it is the summand index r.  All offsets are exact integers; the summand of a
value at offset k in degree n is r = (n - k) / 2.

Two places deviate from the printed text, where the printed version is not
composable or over-counts (see the verification suite, which arbitrates):
the second value of F_{n,m-1,s} and the index range of omega/theta for m odd
in characteristic 2.
"""

from dataclasses import dataclass

from .algebra import AlgebraElement, BasisPath, idem
from .homcomplex import Cochain
from .resolution import Summand


class InadmissibleId(ValueError):
    pass


@dataclass(frozen=True)
class NamedCocycleId:
    family: str
    n: int
    args: tuple

    def render(self):
        bits = [str(self.n)] + [str(a) for a in self.args]
        return f"{self.family}[{','.join(bits)}]"

    def __str__(self):
        return self.render()


def parse_id(text):
    text = text.strip()
    if "[" not in text or not text.endswith("]"):
        raise InadmissibleId(f"malformed cocycle id {text!r}")
    fam, rest = text.split("[", 1)
    items = rest[:-1].split(",")
    n = int(items[0])
    args = []
    for it in items[1:]:
        it = it.strip()
        args.append(it if it in ("+", "-") else int(it))
    return NamedCocycleId(fam.strip(), n, tuple(args))


def _ahead(params, i, depth):
    return BasisPath(i % params.m, "a", 2 * depth + 1)


def _bhead(params, i, depth):
    return BasisPath(i % params.m, "b", 2 * depth + 1)


def _socle(params, i):
    return BasisPath(i % params.m, "a", 2 * params.N)


def _cochain(params, n, entries):
    """entries: list of (vertex i, offset k, path, integer sign)."""
    values = {}
    f = params.field
    for i, k, path, sgn in entries:
        assert (n - k) % 2 == 0, (n, k)
        r = (n - k) // 2
        assert 0 <= r <= n, (n, k)
        s = Summand(n, i % params.m, r)
        v = AlgebraElement.from_path(params, path, f.of_int(sgn))
        values[s] = values[s].add(v) if s in values else v
    return Cochain(params, n, values)


def _char_divides(params):
    c = params.field.characteristic
    return c != 0 and params.N % c == 0


def _enumerate_m_even(params, n):
    m, N = params.m, params.N
    p, t = divmod(n, m)
    out = []
    if n % 2 == 0:
        for alpha in range(-p, p + 1):
            ent = [(i, alpha * m, idem(i), (-1) ** ((n // 2 - alpha * m // 2) * i))
                   for i in range(m)]
            out.append((NamedCocycleId("chi", n, (alpha,)), _cochain(params, n, ent)))
        for alpha in range(-p, p + 1):
            out.append((NamedCocycleId("pi", n, (alpha,)),
                        _cochain(params, n, [(0, alpha * m, _socle(params, 0), 1)])))
        for j in range(m):
            for s in range(1, N):
                ent = [(j, 0, BasisPath(j, "a", 2 * s), 1),
                       ((j + 1) % m, 0, BasisPath((j + 1) % m, "b", 2 * s),
                        (-1) ** (n // 2))]
                out.append((NamedCocycleId("F", n, (j, s)), _cochain(params, n, ent)))
        if _char_divides(params):
            for j in range(1, m):
                out.append((NamedCocycleId("theta", n, (j,)),
                            _cochain(params, n, [(j, 0, _socle(params, j), 1)])))
    else:
        gammas = list(range(-p, p + 1))
        if t == m - 1:
            gammas = [-p - 1] + gammas
        for g in gammas:
            depth = N - 1 if g < 0 else 0
            ent = [(i, g * m + 1, _ahead(params, i, depth),
                    (-1) ** (((n - 1 - g * m) // 2) * i)) for i in range(m)]
            out.append((NamedCocycleId("phi", n, (g,)), _cochain(params, n, ent)))
        betas = list(range(-p, p + 1))
        if t == m - 1:
            betas = betas + [p + 1]
        for b in betas:
            depth = N - 1 if b > 0 else 0
            ent = [(i, b * m - 1, _bhead(params, i, depth),
                    (-1) ** (((n - 1 - b * m) // 2) * i)) for i in range(m)]
            out.append((NamedCocycleId("psi", n, (b,)), _cochain(params, n, ent)))
        for j in range(m):
            for s in range(1, N):
                out.append((NamedCocycleId("E", n, (j, s)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, s), 1)])))
        if _char_divides(params):
            for j in range(1, m):
                out.append((NamedCocycleId("omega", n, (j,)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, 0), 1)])))
    return out


def _enumerate_m_odd_char_not2(params, n):
    m, N = params.m, params.N
    p, t = divmod(n, m)
    out = []
    if n % 2 == 0:
        deltas = []
        if t % 2 == 1:
            deltas = [p - 2 * a - 1 for a in range(p) if (a + (m - t) // 2) % 2 == 1]
        else:
            deltas = [p - 2 * a for a in range(p + 1) if (a + t // 2) % 2 == 0]
        for d in deltas:
            ent = [(i, d * m, idem(i), 1) for i in range(m)]
            out.append((NamedCocycleId("chi", n, (d,)), _cochain(params, n, ent)))
        if t % 2 == 1:
            pds = [p - 2 * a - 1 for a in range(p) if (a + (m - t) // 2) % 2 == 0]
        else:
            pds = [p - 2 * a for a in range(p + 1) if (a + t // 2) % 2 == 1]
        for d in pds:
            out.append((NamedCocycleId("pi", n, (d,)),
                        _cochain(params, n, [(0, d * m, _socle(params, 0), 1)])))
        for j in range(m):
            for s in range(1, N):
                ent = [(j, 0, BasisPath(j, "a", 2 * s), 1),
                       ((j + 1) % m, 0, BasisPath((j + 1) % m, "b", 2 * s),
                        (-1) ** (n // 2))]
                out.append((NamedCocycleId("F", n, (j, s)), _cochain(params, n, ent)))
        if t == m - 1:
            sg = -(p + 1)
            ent = [(i, sg * m + 1, _ahead(params, i, N - 1), 1) for i in range(m)]
            out.append((NamedCocycleId("phi", n, (sg,)), _cochain(params, n, ent)))
            tau = p + 1
            ent = [(i, tau * m - 1, _bhead(params, i, N - 1), 1) for i in range(m)]
            out.append((NamedCocycleId("psi", n, (tau,)), _cochain(params, n, ent)))
        if _char_divides(params):
            lo = 0 if (n // 2) % 2 == 0 else 1
            for j in range(lo, m):
                out.append((NamedCocycleId("theta", n, (j,)),
                            _cochain(params, n, [(j, 0, _socle(params, j), 1)])))
    else:
        if t == 0:
            for d in (p, -p):
                out.append((NamedCocycleId("pi", n, (d,)),
                            _cochain(params, n, [(0, d * m, _socle(params, 0), 1)])))
        phis = []
        if t % 2 == 1:
            for g in range(0, p + 1):
                if (g + (t - 1) // 2) % 2 != 0:
                    continue
                phis.append((p - 2 * g, N - 1 if 2 * g > p else 0))
        else:
            for g in range(0, p + 1):
                if t == m - 1:
                    if g % 2 != 0 or g > p:
                        continue
                    if 2 * g > p - 1:
                        phis.append((p - 2 * g - 1, N - 1))
                    else:
                        phis.append((p - 2 * g - 1, 0))
                else:
                    if (g + (m - 1) // 2 + t // 2) % 2 != 0:
                        continue
                    if g <= p - 1 and 2 * g > p - 1:
                        phis.append((p - 2 * g - 1, N - 1))
                    elif 2 * g <= p - 1:
                        phis.append((p - 2 * g - 1, 0))
        for sg, depth in phis:
            ent = [(i, sg * m + 1, _ahead(params, i, depth), 1) for i in range(m)]
            out.append((NamedCocycleId("phi", n, (sg,)), _cochain(params, n, ent)))
        psis = []
        if t % 2 == 1:
            for b in range(0, p + 1):
                if (b + (t - 1) // 2) % 2 != 0:
                    continue
                psis.append((p - 2 * b, N - 1 if 2 * b < p else 0))
        else:
            for b in range(-1, p + 1):
                if t == m - 1:
                    if b % 2 != 0:
                        continue
                    if 2 * b < p - 1:
                        psis.append((p - 2 * b - 1, N - 1))
                    elif b <= p - 1 and 2 * b >= p - 1:
                        psis.append((p - 2 * b - 1, 0))
                else:
                    if b < 0 or (b + (m - 1) // 2 + t // 2) % 2 != 0:
                        continue
                    if 2 * b < p - 1:
                        psis.append((p - 2 * b - 1, N - 1))
                    elif b <= p - 1:
                        psis.append((p - 2 * b - 1, 0))
        for tau, depth in psis:
            ent = [(i, tau * m - 1, _bhead(params, i, depth), 1) for i in range(m)]
            out.append((NamedCocycleId("psi", n, (tau,)), _cochain(params, n, ent)))
        for j in range(m):
            for s in range(1, N):
                out.append((NamedCocycleId("E", n, (j, s)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, s), 1)])))
        if _char_divides(params):
            lo = 0 if ((n - 1) // 2) % 2 == 1 else 1
            for j in range(lo, m):
                out.append((NamedCocycleId("omega", n, (j,)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, 0), 1)])))
    return out


def _enumerate_m_odd_char2(params, n):
    m, N = params.m, params.N
    p, t = divmod(n, m)
    out = []
    if t % 2 == 1:
        deltas = [p - 2 * a - 1 for a in range(p)]
    else:
        deltas = [p - 2 * a for a in range(p + 1)]
    for d in deltas:
        ent = [(i, d * m, idem(i), 1) for i in range(m)]
        out.append((NamedCocycleId("chi", n, (d,)), _cochain(params, n, ent)))
    for d in deltas:
        out.append((NamedCocycleId("pi", n, (d,)),
                    _cochain(params, n, [(0, d * m, _socle(params, 0), 1)])))
    phis = []
    if t % 2 == 1:
        for g in range(0, p + 1):
            phis.append((p - 2 * g, 0 if 2 * g <= p else N - 1))
    else:
        hi = p if t == m - 1 else p - 1
        for g in range(0, hi + 1):
            phis.append((p - 2 * g - 1, 0 if 2 * g <= p - 1 else N - 1))
    for sg, depth in phis:
        ent = [(i, sg * m + 1, _ahead(params, i, depth), 1) for i in range(m)]
        out.append((NamedCocycleId("phi", n, (sg,)), _cochain(params, n, ent)))
    psis = []
    if t % 2 == 1:
        for b in range(0, p + 1):
            psis.append((p - 2 * b, N - 1 if 2 * b < p else 0))
    else:
        lo = -1 if t == m - 1 else 0
        for b in range(lo, p):
            psis.append((p - 2 * b - 1, N - 1 if 2 * b < p - 1 else 0))
    for tau, depth in psis:
        ent = [(i, tau * m - 1, _bhead(params, i, depth), 1) for i in range(m)]
        out.append((NamedCocycleId("psi", n, (tau,)), _cochain(params, n, ent)))
    if n % 2 == 0:
        for j in range(m):
            for s in range(1, N):
                ent = [(j, 0, BasisPath(j, "a", 2 * s), 1),
                       ((j + 1) % m, 0, BasisPath((j + 1) % m, "b", 2 * s), 1)]
                out.append((NamedCocycleId("F", n, (j, s)), _cochain(params, n, ent)))
        if _char_divides(params):
            for j in range(1, m):
                out.append((NamedCocycleId("theta", n, (j,)),
                            _cochain(params, n, [(j, 0, _socle(params, j), 1)])))
    else:
        for j in range(m):
            for s in range(1, N):
                out.append((NamedCocycleId("E", n, (j, s)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, s), 1)])))
        if _char_divides(params):
            for j in range(1, m):
                out.append((NamedCocycleId("omega", n, (j,)),
                            _cochain(params, n, [(j, 1, _ahead(params, j, 0), 1)])))
    return out


def _enumerate_m2(params, n):
    m, N = params.m, params.N
    out = []
    if N == 1:
        if n % 2 == 0:
            p = n // 2
            for alpha in range(-p, p + 1):
                ent = [(i, 2 * alpha, idem(i), (-1) ** ((p + alpha) * i)) for i in (0, 1)]
                out.append((NamedCocycleId("chi", n, (alpha,)), _cochain(params, n, ent)))
            for alpha in range(-p, p + 1):
                out.append((NamedCocycleId("pi", n, (alpha,)),
                            _cochain(params, n, [(0, 2 * alpha, _socle(params, 0), 1)])))
        else:
            p = (n - 1) // 2
            for g in range(-p - 1, p + 1):
                ent = [(i, 2 * g + 1, _ahead(params, i, 0), (-1) ** ((p + g) * i))
                       for i in (0, 1)]
                out.append((NamedCocycleId("phi", n, (g,)), _cochain(params, n, ent)))
            for b in range(-p - 1, p + 1):
                ent = [(i, 2 * b + 1, _bhead(params, i, 0), (-1) ** ((p + b + 1) * i))
                       for i in (0, 1)]
                out.append((NamedCocycleId("psi", n, (b,)), _cochain(params, n, ent)))
        return out
    if n % 2 == 0:
        p = n // 2
        for alpha in range(-p, p + 1):
            ent = [(i, 2 * alpha, idem(i), (-1) ** ((n // 2 - alpha) * i)) for i in (0, 1)]
            out.append((NamedCocycleId("chi", n, (alpha,)), _cochain(params, n, ent)))
        for alpha in range(-p, p + 1):
            out.append((NamedCocycleId("pi", n, (alpha,)),
                        _cochain(params, n, [(0, 2 * alpha, _socle(params, 0), 1)])))
        for j in (0, 1):
            for s in range(1, N):
                ent = [(j, 0, BasisPath(j, "a", 2 * s), 1),
                       ((j + 1) % 2, 0, BasisPath((j + 1) % 2, "b", 2 * s),
                        (-1) ** (n // 2))]
                out.append((NamedCocycleId("F", n, (j, s)), _cochain(params, n, ent)))
        if _char_divides(params):
            out.append((NamedCocycleId("theta", n, ()),
                        _cochain(params, n, [(1, 0, _socle(params, 1), 1)])))
    else:
        p = (n - 1) // 2
        for g in range(-p - 1, p + 1):
            depth = N - 1 if g < 0 else 0
            ent = [(i, 2 * g + 1, _ahead(params, i, depth),
                    (-1) ** (((n - 1) // 2 - g) * i)) for i in (0, 1)]
            out.append((NamedCocycleId("phi", n, (g,)), _cochain(params, n, ent)))
        for b in range(-p - 1, p + 1):
            depth = N - 1 if b >= 0 else 0
            ent = [(i, 2 * b + 1, _bhead(params, i, depth),
                    (-1) ** (((n + 1) // 2 - b) * i)) for i in (0, 1)]
            out.append((NamedCocycleId("psi", n, (b,)), _cochain(params, n, ent)))
        for j in (0, 1):
            for s in range(1, N):
                out.append((NamedCocycleId("E", n, (j, s)),
                            _cochain(params, n, [(j, -1, _bhead(params, j, s), 1)])))
        if _char_divides(params):
            out.append((NamedCocycleId("omega", n, ()),
                        _cochain(params, n, [(0, 1, _ahead(params, 0, 0), 1)])))
    return out


def _enumerate_m1(params, n):
    m, N = params.m, params.N
    if N == 1:
        raise InadmissibleId("no published cocycle basis for m=1, N=1")
    out = []
    char2 = params.field.characteristic == 2
    if char2:
        for r in range(n + 1):
            out.append((NamedCocycleId("chi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, idem(0), 1)])))
        for r in range(n + 1):
            out.append((NamedCocycleId("pi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, _socle(params, 0), 1)])))
        if n % 2 == 0:
            for r in range(0, (n - 2) // 2 + 1):
                out.append((NamedCocycleId("phi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, 0), 1)])))
            for r in range(n // 2, n + 1):
                out.append((NamedCocycleId("phi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, N - 1), 1)])))
            for r in range(0, n // 2 + 1):
                out.append((NamedCocycleId("psi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, N - 1), 1)])))
            for r in range((n + 2) // 2, n + 1):
                out.append((NamedCocycleId("psi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, 0), 1)])))
            for j in range(1, N):
                ent = [(0, 0, BasisPath(0, "a", 2 * j), 1),
                       (0, 0, BasisPath(0, "b", 2 * j), 1)]
                out.append((NamedCocycleId("F", n, (j,)), _cochain(params, n, ent)))
        else:
            for r in range(0, (n - 1) // 2 + 1):
                out.append((NamedCocycleId("phi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, 0), 1)])))
            for r in range((n + 1) // 2, n + 1):
                out.append((NamedCocycleId("phi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, N - 1), 1)])))
            for r in range(0, (n - 1) // 2 + 1):
                out.append((NamedCocycleId("psi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, N - 1), 1)])))
            for r in range((n + 1) // 2, n + 1):
                out.append((NamedCocycleId("psi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, 0), 1)])))
            for j in range(1, N):
                out.append((NamedCocycleId("E", n, (j,)),
                            _cochain(params, n, [(0, n - 2 * (n + 1) // 2,
                                                  _bhead(params, 0, j), 1)])))
        return out
    # char != 2; the chi family only exists in even degrees (at odd n the
    # (-1)^n sign pairing makes 1 (x)_r 1 -> 1 fail the cocycle condition,
    # and the dimension count confirms it does not belong)
    if n % 2 == 0:
        for r in range(0, n + 1, 2):
            out.append((NamedCocycleId("chi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, idem(0), 1)])))
    if n % 2 == 0:
        out.append((NamedCocycleId("psi", n, (0,)),
                    _cochain(params, n, [(0, n, _bhead(params, 0, N - 1), 1)])))
        out.append((NamedCocycleId("phi", n, (n,)),
                    _cochain(params, n, [(0, -n, _ahead(params, 0, N - 1), 1)])))
        for r in range(1, n + 1, 2):
            out.append((NamedCocycleId("pi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, _socle(params, 0), 1)])))
        for s in range(1, N):
            ent = [(0, 0, BasisPath(0, "a", 2 * s), 1),
                   (0, 0, BasisPath(0, "b", 2 * s), (-1) ** (n // 2))]
            out.append((NamedCocycleId("F", n, (s,)), _cochain(params, n, ent)))
        if _char_divides(params) and n % 4 == 0:
            out.append((NamedCocycleId("theta", n, ()),
                        _cochain(params, n, [(0, 0, _socle(params, 0), 1)])))
    else:
        for r in range(0, (n - 1) // 2 + 1, 2):
            out.append((NamedCocycleId("phi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, 0), 1)])))
        for r in range((n + 1) // 2, n, 1):
            if r % 2 == 0:
                out.append((NamedCocycleId("phi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _ahead(params, 0, N - 1), 1)])))
        for r in range(1, (n - 1) // 2 + 1, 2):
            out.append((NamedCocycleId("psi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, N - 1), 1)])))
        for r in range((n + 1) // 2, n + 1):
            if r % 2 == 1:
                out.append((NamedCocycleId("psi", n, (r,)),
                            _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, 0), 1)])))
        out.append((NamedCocycleId("pi", n, ("+",)),
                    _cochain(params, n, [(0, n, _socle(params, 0), 1)])))
        out.append((NamedCocycleId("pi", n, ("-",)),
                    _cochain(params, n, [(0, -n, _socle(params, 0), 1)])))
        for s in range(1, N):
            out.append((NamedCocycleId("E", n, (s,)),
                        _cochain(params, n, [(0, 1, _ahead(params, 0, s), 1)])))
        if _char_divides(params) and n % 4 == 3:
            r = (n + 1) // 2
            out.append((NamedCocycleId("psi", n, (r,)),
                        _cochain(params, n, [(0, n - 2 * r, _bhead(params, 0, 0), 1)])))
    return out


def enumerate_basis(params, n):
    """The published basis of HH^n as (id, cochain) pairs, in table order."""
    if n < 1:
        raise InadmissibleId("degree-0 classes come from the centre")
    m = params.m
    if m == 1:
        return _enumerate_m1(params, n)
    if m == 2:
        return _enumerate_m2(params, n)
    if m % 2 == 0:
        return _enumerate_m_even(params, n)
    if params.field.characteristic == 2:
        return _enumerate_m_odd_char2(params, n)
    return _enumerate_m_odd_char_not2(params, n)


def paper_basis(params, n):
    return [cid for cid, _ in enumerate_basis(params, n)]


def named_cocycle(params, cid):
    """The cochain of a published basis element; InadmissibleId otherwise."""
    for other, ch in enumerate_basis(params, cid.n):
        if other == cid:
            return ch
    raise InadmissibleId(f"{cid.render()} is not admissible for "
                         f"(m={params.m}, N={params.N}, {params.field!r})")


def verify_paper_basis(session, n):
    """Checks the published degree-n family: cocycles, independent, complete."""
    params = session.params
    failures = []
    pairs = enumerate_basis(params, n)
    vectors = []
    for cid, ch in pairs:
        if not session.is_cocycle(ch):
            failures.append((cid.render(), "not a cocycle"))
            continue
        vectors.append(session.reduce_mod_coboundaries(ch))
    dim = session.hh_dimension(n)
    ok_count = len(pairs) == dim
    if not ok_count:
        failures.append((f"degree {n}", f"family size {len(pairs)} != dim {dim}"))
    if not failures:
        from . import scalars
        f = params.field
        mat = scalars.Matrix(f, len(vectors), dim, [list(v) for v in vectors])
        rank, _ = scalars.rank_nullspace(mat)
        if rank != len(vectors):
            failures.append((f"degree {n}", "classes are linearly dependent"))
    return {"n": n, "ok": not failures, "failures": failures,
            "count": len(pairs), "dimension": dim}
