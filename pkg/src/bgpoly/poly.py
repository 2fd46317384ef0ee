"""Exact integer polynomials and the coefficient/root tests used on h*-polynomials.

Coefficients are stored constant term first.  Every decision (real-rootedness,
root isolation, interlacing) is made with integer or rational arithmetic;
there is no floating point in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .limits import InputError


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Dense polynomial with Python-int coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def binomial_power(cls, n: int) -> "IntPolynomial":
        """(1 + x)**n."""
        return cls([comb(n, i) for i in range(n + 1)])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == _trim(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return " + ".join(terms)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content, making the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def reversed(self, d: int | None = None) -> "IntPolynomial":
        d = self.degree if d is None else d
        return IntPolynomial(self[d - k] for k in range(d + 1))


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    return IntPolynomial(p)


def as_poly(p) -> IntPolynomial:
    return _coerce(p)


# ---------------------------------------------------------------------------
# coefficient shape tests


def is_palindromic(f, d: int) -> bool:
    f = _coerce(f)
    if f.degree > d:
        raise InputError(f"degree {f.degree} exceeds d={d}")
    padded = [f[k] for k in range(d + 1)]
    return padded == padded[::-1]


def is_unimodal(f) -> bool:
    a = _coerce(f).coeffs
    k = 0
    while k + 1 < len(a) and a[k] <= a[k + 1]:
        k += 1
    while k + 1 < len(a) and a[k] >= a[k + 1]:
        k += 1
    return k + 1 >= len(a)


def is_log_concave(f) -> bool:
    a = _coerce(f).coeffs
    return all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))


# ---------------------------------------------------------------------------
# gamma calculus


@dataclass(frozen=True)
class GammaVector:
    gammas: tuple
    degree: int

    def polynomial(self) -> IntPolynomial:
        """The gamma-polynomial sum_i gamma_i x^i."""
        return IntPolynomial(self.gammas)

    def reconstruct(self) -> IntPolynomial:
        total = IntPolynomial()
        for i, g in enumerate(self.gammas):
            if g:
                total = total + IntPolynomial.monomial(i, g) * IntPolynomial.binomial_power(self.degree - 2 * i)
        return total

    def is_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def gamma_extract(f, d: int) -> GammaVector:
    """Write a palindromic ``f`` of degree <= d as sum gamma_i x^i (1+x)^(d-2i)."""
    f = _coerce(f)
    if not is_palindromic(f, d):
        raise InputError("polynomial is not palindromic with respect to d")
    rest = f
    gammas = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            rest = rest - IntPolynomial.monomial(i, g) * IntPolynomial.binomial_power(d - 2 * i)
    if not rest.is_zero():
        raise InputError("gamma expansion did not terminate")
    while len(gammas) > 1 and gammas[-1] == 0:
        gammas.pop()
    return GammaVector(tuple(gammas), d)


def gamma_substitute(g, d: int) -> IntPolynomial:
    """Return (x+1)^d g(4x/(x+1)^2) = sum_k g_k 4^k x^k (x+1)^(d-2k)."""
    g = _coerce(g)
    if 2 * g.degree > d:
        raise InputError(f"2*deg(g) = {2 * g.degree} exceeds d={d}")
    total = IntPolynomial()
    for k, c in enumerate(g.coeffs):
        if c:
            total = total + IntPolynomial.monomial(k, c * 4**k) * IntPolynomial.binomial_power(d - 2 * k)
    return total


# ---------------------------------------------------------------------------
# exact division, gcd, squarefree decomposition


def _qdivmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _to_int_primitive(qs: Sequence[Fraction]) -> IntPolynomial:
    qs = list(_trim(qs))
    if not qs:
        return IntPolynomial()
    den = 1
    for c in qs:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial(int(c * den) for c in qs).primitive()


def prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b, scaled by |lc(b)|^(deg a - deg b + 1) > 0."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    lb = b.coeffs[-1]
    scale = abs(lb)
    sign = 1 if lb > 0 else -1
    db = b.degree
    steps = a.degree - db + 1
    for _ in range(max(steps, 0)):
        if len(r) - 1 < db:
            r = [scale * c for c in r]
            continue
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [scale * c for c in r]
        for i, bc in enumerate(b.coeffs):
            r[i + shift] -= sign * lead * bc
        r.pop()
    return IntPolynomial(r)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive part of a/b when b divides a over the rationals."""
    q, r = _qdivmod([Fraction(c) for c in a], [Fraction(c) for c in b])
    if r:
        raise ArithmeticError("division is not exact")
    return _to_int_primitive(q)


def poly_gcd(a, b) -> IntPolynomial:
    """Primitive gcd over Z[x] by the primitive Euclidean algorithm."""
    a, b = _coerce(a).primitive(), _coerce(b).primitive()
    while not b.is_zero():
        a, b = b, prem(a, b).primitive()
    return a.primitive()


def squarefree_part(f) -> IntPolynomial:
    f = _coerce(f)
    if f.degree <= 0:
        return IntPolynomial([1])
    return exact_quotient(f, poly_gcd(f, f.derivative()))


def _qmonic(a):
    a = list(_trim(a))
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _qgcd(a, b):
    a, b = _qmonic(a), _qmonic(b)
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, _qmonic(r)
    return a


def _qderiv(a):
    return [k * c for k, c in enumerate(a) if k]


def _qsub(a, b):
    n = max(len(a), len(b))
    return list(_trim((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)))


def squarefree_decomposition(f) -> list:
    """Yun's algorithm: primitive factors a_1, a_2, ... with f ~ prod a_i^i.

    Factors equal to 1 are kept so that index i-1 always holds the part of
    multiplicity i.
    """
    f = _coerce(f)
    if f.degree <= 0:
        return []
    fq = [Fraction(c) for c in f]
    fp = _qderiv(fq)
    a0 = _qgcd(fq, fp)
    b, _ = _qdivmod(fq, a0)
    c, _ = _qdivmod(fp, a0)
    d = _qsub(c, _qderiv(b))
    factors = []
    while len(_trim(b)) > 1:
        a = _qgcd(b, d)
        factors.append(_to_int_primitive(a))
        b, _ = _qdivmod(b, a)
        c, _ = _qdivmod(d, a)
        d = _qsub(c, _qderiv(b))
    return factors


# ---------------------------------------------------------------------------
# Sturm sequences and real roots


def sturm_sequence(f) -> list:
    """Sturm chain of ``f`` with primitive-part reduction at every step."""
    f = _coerce(f)
    seq = [f]
    d = f.derivative()
    if d.is_zero():
        return seq
    seq.append(d)
    while True:
        r = prem(seq[-2], seq[-1])
        if r.is_zero():
            break
        # positive scalings keep the sign pattern intact
        g = r.content()
        seq.append(IntPolynomial(-c // g for c in r.coeffs))
    return seq


def _sign_at(p: IntPolynomial, x) -> int:
    if x == "inf" or x == "-inf":
        if p.is_zero():
            return 0
        s = 1 if p.coeffs[-1] > 0 else -1
        if x == "-inf" and p.degree % 2:
            s = -s
        return s
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    n = p.degree
    acc = 0
    # homogenised evaluation: sign(sum c_k num^k den^(n-k)) = sign(p(x)) since den > 0
    for k, c in enumerate(p.coeffs):
        acc += c * num**k * den ** (n - k)
    return (acc > 0) - (acc < 0)


def sign_variations(seq: Sequence[IntPolynomial], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[IntPolynomial], lo, hi) -> int:
    """Distinct real roots in the half-open interval (lo, hi] of a squarefree polynomial."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(f) -> int:
    """Integer B with every complex root strictly inside |z| < B (Cauchy)."""
    f = _coerce(f)
    lead = abs(f.coeffs[-1])
    return 2 + max((abs(c) for c in f.coeffs[:-1]), default=0) // lead


def isolate_real_roots(f) -> list:
    """Disjoint half-open rational intervals (lo, hi], one per distinct real root, ascending."""
    f = _coerce(f)
    if f.is_zero():
        raise InputError("zero polynomial has no isolated roots")
    h = squarefree_part(f)
    if h.degree <= 0:
        return []
    seq = sturm_sequence(h)
    B = root_bound(h)
    out = []
    stack = [(Fraction(-B), Fraction(B), count_roots(seq, -B, B))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi, count_roots(seq, mid, hi)))
        stack.append((lo, mid, count_roots(seq, lo, mid)))
    out.sort()
    return out


@dataclass(frozen=True)
class RootCountCertificate:
    total_degree: int
    distinct_real_roots: int
    squarefree_degree: int
    is_real_rooted: bool
    isolating_intervals: tuple

    def to_dict(self) -> dict:
        return {
            "total_degree": self.total_degree,
            "distinct_real_roots": self.distinct_real_roots,
            "squarefree_degree": self.squarefree_degree,
            "is_real_rooted": self.is_real_rooted,
            "isolating_intervals": [[str(lo), str(hi)] for lo, hi in self.isolating_intervals],
        }


def real_root_certificate(f) -> RootCountCertificate:
    f = _coerce(f)
    if f.is_zero():
        raise InputError("zero polynomial")
    h = squarefree_part(f)
    intervals = isolate_real_roots(f) if f.degree > 0 else []
    n = len(intervals)
    return RootCountCertificate(
        total_degree=f.degree,
        distinct_real_roots=n,
        squarefree_degree=max(h.degree, 0),
        is_real_rooted=(n == max(h.degree, 0)),
        isolating_intervals=tuple(intervals),
    )


def is_real_rooted(f) -> bool:
    return real_root_certificate(f).is_real_rooted


def real_roots_with_multiplicity(f, intervals, f_parts=None) -> list:
    """Multiplicity of ``f`` at each root isolated by ``intervals``.

    ``intervals`` must isolate roots of a squarefree multiple of every
    root of ``f``; each interval then holds at most one root of each
    squarefree part of f.
    """
    f = _coerce(f)
    if f_parts is None:
        f_parts = squarefree_decomposition(f)
    seqs = [(i + 1, sturm_sequence(p)) for i, p in enumerate(f_parts) if p.degree > 0]
    mults = []
    for lo, hi in intervals:
        m = 0
        for mult, seq in seqs:
            m += mult * count_roots(seq, lo, hi)
        mults.append(m)
    return mults


def interlaces(f, g) -> bool:
    """Decide f <= g in the interlacing order.

    With roots sorted ascending, alpha (of f) and beta (of g), the sequence
    beta_1, alpha_1, beta_2, alpha_2, ... must be weakly increasing.  When
    deg g = deg f this is the chain a_1 >= b_1 >= a_2 >= ... on descending
    roots; when deg g = deg f + 1 the surplus root of g sits at the small end.
    """
    f, g = _coerce(f), _coerce(g)
    if f.is_zero() or g.is_zero():
        raise InputError("interlacing needs nonzero polynomials")
    if not is_real_rooted(f) or not is_real_rooted(g):
        raise InputError("interlacing needs real-rooted inputs")
    if g.degree not in (f.degree, f.degree + 1):
        raise InputError("deg g must equal deg f or deg f + 1")
    both = squarefree_part(f * g)
    intervals = isolate_real_roots(both) if both.degree > 0 else []
    mf = real_roots_with_multiplicity(f, intervals)
    mg = real_roots_with_multiplicity(g, intervals)
    # roots identified by the index of their isolating interval
    alpha = [i for i, m in enumerate(mf) for _ in range(m)]
    beta = [i for i, m in enumerate(mg) for _ in range(m)]
    merged = []
    for k in range(len(beta)):
        merged.append(beta[k])
        if k < len(alpha):
            merged.append(alpha[k])
    return all(a <= b for a, b in zip(merged, merged[1:]))
