"""Closed-form dimension statements, transcribed as pure reference functions.

These are the published case tables that the computed pipeline is tested
against; nothing here is derived.  Congruence conditions written "x = y (4)"
compare modulo 4.  Where a degree satisfies several rows (t = m-1 is also
even, say), the explicit t = m-1 rows take precedence: most-specific first.

Degrees are decomposed as n = p*m + t with 0 <= t <= m-1.
"""

from dataclasses import dataclass

from .algebra import AlgebraElement, BasisPath, idem, word_path


class UnsupportedM(ValueError):
    pass


class NoClosedForm(ValueError):
    pass


@dataclass(frozen=True)
class DegreeDecomposition:
    n: int
    p: int
    t: int


def degree_decomposition(m, n):
    p, t = divmod(n, m)
    return DegreeDecomposition(n, p, t)


def hom_dim_formula(m, N, n):
    """dim Hom(P^n, Lambda)."""
    if m <= 2:
        return 4 * N * (n + 1)
    p, t = divmod(n, m)
    return (4 * p + 4) * m * N if t == m - 1 else (4 * p + 2) * m * N


def kernel_dim_formula(m, N, char, n):
    """dim ker of the induced map out of degree n (cocycles in degree n)."""
    if m < 3:
        raise UnsupportedM("the kernel tables are stated for m >= 3 only")
    p, t = divmod(n, m)
    divides = char != 0 and N % char == 0
    if not divides:
        if m % 2 == 0:
            if t == m - 1:
                return (2 * p + 1) * (m * N + 1) + m * (N - 1) + 2
            if t % 2 == 0:
                return (2 * p + 1) * (m * N + 1)
            return (2 * p + 1) * (m * N + 1) + m * (N - 1)
        if char == 2:
            if t == m - 1:
                if p % 2 == 0:
                    return (2 * p + 1) * (m * N + 1) + 2
                return (2 * p + 1) * (m * N + 1) + m * (N - 1) + 2
            if (p + t) % 2 == 0:
                return (2 * p + 1) * (m * N + 1)
            return (2 * p + 1) * (m * N + 1) + m * (N - 1)
        # m odd, char != 2, char does not divide N
        if t == m - 1:
            if p % 2 == 1:
                return (2 * p + 1) * m * N + m * (N - 1) + (p + 1) // 2
            if t % 4 == 0:
                return (2 * p + 1) * m * N + p // 2 + 3
            return (2 * p + 1) * m * N + p // 2 + 2
        if t % 2 == 0:
            if p % 2 == 0:
                extra = p // 2 + 1 if t % 4 == 0 else p // 2
                return (2 * p + 1) * m * N + extra
            extra = (p + 1) // 2 if (m + t) % 4 == 1 else (p - 1) // 2
            return (2 * p + 1) * m * N + m * (N - 1) + extra
        if p % 2 == 0:
            extra = p // 2 + 1 if t % 4 == 1 else p // 2
            return (2 * p + 1) * m * N + m * (N - 1) + extra
        extra = (p - 1) // 2 if t % 4 == m % 4 else (p + 1) // 2
        return (2 * p + 1) * m * N + extra
    # char divides N
    if m % 2 == 0:
        if t == m - 1:
            return (2 * p + 2) * (m * N + 1)
        if t % 2 == 0:
            return (2 * p + 1) * (m * N + 1)
        return (2 * p + 2) * m * N + 2 * p
    if char == 2:
        if t == m - 1:
            if p % 2 == 0:
                return (2 * p + 1) * (m * N + 1) + 2
            return (2 * p + 2) * (m * N + 1)
        if (p + t) % 2 == 0:
            return (2 * p + 1) * (m * N + 1)
        return (2 * p + 2) * m * N + 2 * p
    # m odd, char != 2, char divides N
    if t == m - 1:
        if p % 2 == 0:
            return (2 * p + 1) * m * N + (p // 2 + 3 if t % 4 == 0 else p // 2 + 2)
        return (2 * p + 2) * m * N + ((p + 1) // 2 if p % 4 == 3 else (p - 1) // 2)
    if t % 2 == 0:
        if p % 2 == 0:
            return (2 * p + 1) * m * N + (p // 2 + 1 if t % 4 == 0 else p // 2)
        if p % 4 == 1:
            return (2 * p + 2) * m * N + (p - 1) // 2
        return (2 * p + 2) * m * N + ((p + 1) // 2 if (m + t) % 4 == 1 else (p - 3) // 2)
    if p % 4 == 0:
        return (2 * p + 2) * m * N + p // 2
    if p % 4 == 2:
        return (2 * p + 2) * m * N + (p // 2 + 1 if t % 4 == 1 else p // 2 - 1)
    return (2 * p + 1) * m * N + ((p - 1) // 2 if t % 4 == m % 4 else (p + 1) // 2)


def hh_dim_formula(m, N, char, n):
    """dim HH^n, exact transcription of the published case tables."""
    if n == 0:
        return N * m + 1 if m >= 2 else N + 3
    divides = char != 0 and N % char == 0
    if m == 1:
        if N == 1:
            raise NoClosedForm("no closed dimension table for m=1, N=1 in degree >= 1")
        if char == 2:
            return 4 * n + N + 3
        if divides:
            return N + n + 3 if n % 4 in (0, 3) else N + n + 2
        return N + n + 2
    if m == 2:
        if N == 1:
            return 2 * (n + 1)
        return 2 * N + 2 * n + 1 if divides else 2 * N + 2 * n
    p, t = divmod(n, m)
    if m % 2 == 0 or char == 2:
        if divides:
            return 4 * p + 3 + m * N if t == m - 1 else 4 * p + 1 + m * N
        return 4 * p + 4 + m * (N - 1) if t == m - 1 else 4 * p + 2 + m * (N - 1)
    if not divides:
        base = m * (N - 1) + p
        if t == 0:
            if p % 2 == 0:
                return base + 1
            return base + 3 if ((m - 1) // 2) % 2 == 0 else base + 1
        if t == m - 1:
            return base + 3 if p % 2 == 0 else base + 1
        if t % 2 == 0:
            if p % 2 == 0:
                return base + 1
            return base - 1 if (m + t) % 4 == 3 else base + 1
        if p % 2 == 0:
            return base + 2 if t % 4 == 1 else base
        return base
    base = m * N + p
    if t == 0:
        if p % 4 in (0, 1):
            return base + 1
        if p % 4 == 2:
            return base
        return base + 3 if m % 4 == 1 else base
    if t == m - 1:
        if (p + m) % 4 == 1:
            return base + 3
        if (p + m) % 4 == 3:
            return base + 2
        return base if p % 4 == 1 else base + 1
    if t % 2 == 0:
        if p % 2 == 0:
            return base + 1 if (p + t) % 4 == 0 else base
        if p % 4 == 1:
            return base if (m + t) % 4 == 1 else base - 1
        return base + 1 if (m + t) % 4 == 1 else base - 2
    if p % 4 == 0:
        return base + 1 if t % 4 == 1 else base
    if p % 4 == 2:
        return base + 2 if t % 4 == 1 else base - 1
    return base - 1 if (p + m - t) % 4 == 1 else base


def centre_basis_formula(params):
    """The published centre basis, as algebra elements."""
    m, N = params.m, params.N
    one = params.field.one()
    out = [AlgebraElement.unit(params)]
    if m >= 2:
        for i in range(m):
            out.append(AlgebraElement.from_path(params, BasisPath(i, "a", 2 * N)))
        for i in range(m):
            for s in range(1, N):
                el = AlgebraElement(params, {
                    BasisPath(i, "a", 2 * s): one,
                    BasisPath((i + 1) % m, "b", 2 * s): one,
                })
                out.append(el)
        return out
    out.append(AlgebraElement.from_path(params, BasisPath(0, "a", 2 * N)))
    for s in range(1, N):
        out.append(AlgebraElement(params, {BasisPath(0, "a", 2 * s): one,
                                           BasisPath(0, "b", 2 * s): one}))
    out.append(AlgebraElement.from_path(params, BasisPath(0, "a", 2 * N - 1)))
    out.append(AlgebraElement.from_path(params, BasisPath(0, "b", 2 * N - 1)))
    return out
