"""Constructions of classical code families: Hamming and simplex codes,
cyclic and BCH codes, generalized Reed-Muller codes, codes from ovoids and
maximal arcs in projective space, codes built from oval polynomials over
even-characteristic fields, and the ternary Golay code.

Every constructor validates its own output: lengths and dimensions always,
minimum distance whenever the enumeration fits the caps.  Point-set builders
(ovoids, arcs) return explicit point sets so the exhaustive geometric
validators can be run separately.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .code_core import (
    Caps,
    LinearCode,
    WeightDistribution,
    dual,
    extend,
    field_for_q,
    from_generator,
    from_parity_check,
    minimum_distance,
    rref,
    weight_distribution,
)
from .errors import (
    BadParameters,
    FamilyUnavailableForParameters,
    FieldTooLarge,
    GcdNotOne,
    HypothesisViolated,
    NotADivisor,
    NotAnOvoid,
    NotMaximalArc,
    SearchTooLarge,
    WrongFieldForm,
)
from .gf import (
    FieldSpec,
    Poly,
    absolute_trace,
    cyclotomic_coset,
    minimal_polynomial,
    poly,
    poly_divmod,
    poly_eval,
    poly_mul,
    poly_x_pow_n_minus_1,
    splitting_field,
)

MAX_LENGTH = 1 << 16


def _distance_checkable(C: LinearCode, caps: Caps | None = None) -> bool:
    caps = caps if caps is not None else Caps.from_env()
    limit = min(caps.enumeration, 1 << 22)
    q = C.field.q
    return q ** C.k <= limit or q ** (C.n - C.k) <= limit


def _assert_distance(C: LinearCode, d: int, error_cls) -> None:
    """Verify the advertised minimum distance when enumeration is affordable."""
    if not _distance_checkable(C):
        return
    actual = minimum_distance(C)
    if actual != d:
        raise error_cls(
            f"{C!r} has minimum distance {actual}, expected {d}")


# ---------------------------------------------------------------------------
# Hamming and simplex codes

def projective_point_list(field: FieldSpec, m: int) -> list[tuple[int, ...]]:
    """One representative per projective point of PG(m-1, q): first nonzero
    coordinate scaled to 1, sorted by integer encoding of the tuple."""
    q = field.q
    seen = set()
    for enc in range(1, q ** m):
        digits, x = [], enc
        for _ in range(m):
            digits.append(x % q)
            x //= q
        lead = next(d for d in digits if d)
        if lead != 1:
            inv = field.inv(lead)
            digits = [field.mul(inv, d) for d in digits]
        seen.add(tuple(digits))
    return sorted(seen, key=lambda pt: sum(c * q ** i for i, c in enumerate(pt)))


def hamming(q: int, m: int) -> LinearCode:
    if m < 2:
        raise BadParameters(f"hamming needs m >= 2, got {m}")
    field = field_for_q(q)
    n = (q ** m - 1) // (q - 1)
    if n > MAX_LENGTH:
        raise FieldTooLarge(f"length {n} exceeds {MAX_LENGTH}")
    pts = projective_point_list(field, m)
    rows = [[pt[i] for pt in pts] for i in range(m)]
    C = from_parity_check(field, rows, label=f"hamming({q},{m})")
    if (C.n, C.k) != (n, n - m):
        raise AssertionError("hamming constructor produced wrong parameters")
    _assert_distance(C, 3, AssertionError)
    return C


def simplex(q: int, m: int) -> LinearCode:
    D = dual(hamming(q, m))
    D.label = f"simplex({q},{m})"
    return D


def hamming_weight_distribution_formula(q: int, m: int) -> WeightDistribution:
    """Closed-form weight distribution of the [(q^m-1)/(q-1), n-m, 3] code,
    evaluated in exact integer arithmetic."""
    n1 = (q ** (m - 1) - 1) // (q - 1)
    big = q ** (m - 1)
    n = (q ** m - 1) // (q - 1)
    qm = q ** m
    counts = []
    for k in range(n + 1):
        acc = 0
        for i in range(0, min(k, n1) + 1):
            j = k - i
            if j > big:
                continue
            acc += (math.comb(n1, i) * math.comb(big, j)
                    * ((q - 1) ** k + (-1) ** j * (q - 1) ** i * (qm - 1)))
        if acc % qm:
            raise AssertionError("closed form is not integral")
        counts.append(acc // qm)
    return WeightDistribution(tuple(counts))


# ---------------------------------------------------------------------------
# cyclic and BCH codes

def cyclic_code(q: int, n: int, g: Poly, label: str | None = None) -> LinearCode:
    field = field_for_q(q)
    if g.field != field:
        raise WrongFieldForm(f"generator polynomial lives over GF({g.field.q}), "
                             f"expected GF({q})")
    if math.gcd(n, q) != 1:
        raise GcdNotOne(f"gcd({n}, {q}) != 1")
    if g.is_zero() or g.degree >= n:
        raise NotADivisor(f"degree {g.degree} generator for length {n}")
    lead = g.coeffs[-1]
    if lead != 1:
        inv = field.inv(lead)
        g = poly(field, [field.mul(inv, c) for c in g.coeffs])
    _, rem = poly_divmod(poly_x_pow_n_minus_1(field, n), g)
    if not rem.is_zero():
        raise NotADivisor("generator polynomial does not divide x^n - 1")
    k = n - g.degree
    rows = [[0] * i + list(g.coeffs) + [0] * (k - 1 - i) for i in range(k)]
    return from_generator(field, rows, label=label, is_cyclic=True)


def bch(q: int, n: int, delta: int, h: int) -> LinearCode:
    """Cyclic code whose generator is the least common multiple of the minimal
    polynomials of beta^h, ..., beta^(h+delta-2) for a primitive n-th root of
    unity beta in the splitting field."""
    if not 2 <= delta <= n:
        raise BadParameters(f"designed distance {delta} outside [2, {n}]")
    field = field_for_q(q)
    ext, emb, beta = splitting_field(field, n)
    g = poly(field, [1])
    seen = set()
    for s in range(h, h + delta - 1):
        rep = s % n
        coset = cyclotomic_coset(rep, n, q)
        if coset in seen:
            continue
        seen.add(coset)
        g = poly_mul(g, minimal_polynomial(ext, beta, rep, n, field, emb))
    return cyclic_code(q, n, g, label=f"bch({q},{n},{delta},{h})")


def ternary_golay() -> LinearCode:
    C = bch(3, 11, 2, 1)
    if (C.n, C.k) != (11, 6):
        raise AssertionError("ternary Golay constructor produced wrong parameters")
    _assert_distance(C, 5, AssertionError)
    C.label = "ternary-golay"
    return C


# ---------------------------------------------------------------------------
# generalized Reed-Muller codes

def q_weight(j: int, q: int, m: int) -> int:
    """Digit sum of j written base q with m digits."""
    if not 0 <= j < q ** m:
        raise BadParameters(f"{j} outside [0, q^m)")
    s = 0
    while j:
        s += j % q
        j //= q
    return s


def grm_dimension(q: int, ell: int, m: int) -> int:
    def binom(a: int, b: int) -> int:
        if b < 0 or a < b:
            return 0
        return math.comb(a, b)

    return sum((-1) ** j * binom(m, j) * binom(i - j * q + m - 1, i - j * q)
               for i in range(ell + 1) for j in range(m + 1))


def grm_distance(q: int, ell: int, m: int) -> int:
    ell1, ell0 = divmod(ell, q - 1)
    return (q - ell0) * q ** (m - ell1 - 1)


def _check_grm_range(q: int, ell: int, m: int) -> None:
    if not 1 <= ell < (q - 1) * m:
        raise BadParameters(
            f"order {ell} outside [1, {(q - 1) * m}) for q={q}, m={m}")
    if ell >= q * (m - 1):
        warnings.warn(
            f"order {ell} is at or above q(m-1) = {q * (m - 1)}; the closed-form "
            f"dimension and distance are still asserted", stacklevel=3)


def grm_punctured(q: int, ell: int, m: int) -> LinearCode:
    """Cyclic code of length q^m - 1 whose generator polynomial has the root
    beta^j exactly when the base-q digit sum of j is below (q-1)m - ell."""
    _check_grm_range(q, ell, m)
    field = field_for_q(q)
    n = q ** m - 1
    if n > MAX_LENGTH:
        raise FieldTooLarge(f"length {n} exceeds {MAX_LENGTH}")
    ext, emb, beta = splitting_field(field, n)
    bound = (q - 1) * m - ell
    g = poly(field, [1])
    seen = set()
    for j in range(1, n):
        if q_weight(j, q, m) >= bound:
            continue
        coset = cyclotomic_coset(j, n, q)
        if coset in seen:
            continue
        seen.add(coset)
        g = poly_mul(g, minimal_polynomial(ext, beta, j, n, field, emb))
    C = cyclic_code(q, n, g, label=f"grm-punctured({q},{ell},{m})")
    if C.k != grm_dimension(q, ell, m):
        raise AssertionError("punctured code dimension disagrees with the "
                             "closed form")
    return C


def grm(q: int, ell: int, m: int) -> LinearCode:
    C = extend(grm_punctured(q, ell, m))
    C.label = f"grm({q},{ell},{m})"
    if C.k != grm_dimension(q, ell, m):
        raise AssertionError("dimension disagrees with the closed form")
    _assert_distance(C, grm_distance(q, ell, m), AssertionError)
    return C


# ---------------------------------------------------------------------------
# point sets in projective space

def _validate_projective(field: FieldSpec, points, width: int):
    pts = [tuple(p) for p in points]
    normalized = set()
    for pt in pts:
        if len(pt) != width:
            raise BadParameters(f"point {pt} is not {width}-dimensional")
        for x in pt:
            field.check(x)
        lead = next((x for x in pt if x), None)
        if lead is None:
            raise BadParameters("zero vector is not a projective point")
        if lead != 1:
            inv = field.inv(lead)
            pt_n = tuple(field.mul(inv, x) for x in pt)
        else:
            pt_n = pt
        if pt_n in normalized:
            raise BadParameters(f"points {pt} duplicated projectively")
        normalized.add(pt_n)
    return pts


@dataclass(frozen=True)
class PointSet3:
    """Points of PG(2, q) as 3-component column vectors, pairwise
    projectively distinct."""

    field: FieldSpec
    points: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "points",
                           tuple(_validate_projective(self.field, self.points, 3)))

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.points]


@dataclass(frozen=True)
class PointSet4:
    """Points of PG(3, q) as 4-component column vectors, pairwise
    projectively distinct."""

    field: FieldSpec
    points: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "points",
                           tuple(_validate_projective(self.field, self.points, 4)))

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.points]


# ---------------------------------------------------------------------------
# ovoids

def elliptic_quadric(q: int) -> PointSet4:
    """The point at infinity plus the affine points (x, y, x^2+xy+ay^2, 1)
    for the smallest a making x^2+x+a rootless."""
    if q <= 2:
        raise WrongFieldForm(f"ovoids need q > 2, got {q}")
    field = field_for_q(q)
    a = next((c for c in range(q)
              if all(field.add(field.add(field.mul(t, t), t), c) != 0
                     for t in range(q))), None)
    if a is None:
        raise AssertionError("no irreducible x^2+x+a (impossible)")
    pts = [(0, 0, 1, 0)]
    for x in range(q):
        x2 = field.mul(x, x)
        for y in range(q):
            z = field.add(field.add(x2, field.mul(x, y)),
                          field.mul(a, field.mul(y, y)))
            pts.append((x, y, z, 1))
    return PointSet4(field, tuple(pts))


def tits_ovoid(q: int) -> PointSet4:
    """The non-classical ovoid over GF(2^(2e+1)): affine points
    (x, y, x^sigma + xy + y^(sigma+2), 1) with sigma = 2^(e+1)."""
    m = q.bit_length() - 1
    if q != 1 << m or m < 3 or m % 2 == 0:
        raise WrongFieldForm(f"Tits ovoid needs q = 2^(2e+1) with e >= 1, got {q}")
    e = (m - 1) // 2
    sigma = 1 << (e + 1)
    field = field_for_q(q)
    pts = [(0, 0, 1, 0)]
    for x in range(q):
        xs = field.pow(x, sigma)
        for y in range(q):
            z = field.add(field.add(xs, field.mul(x, y)),
                          field.pow(y, sigma + 2))
            pts.append((x, y, z, 1))
    return PointSet4(field, tuple(pts))


def is_ovoid(ps: PointSet4, caps: Caps | None = None) -> bool:
    """Exhaustive check: q^2 + 1 points, no three on a common line."""
    caps = caps if caps is not None else Caps.from_env()
    field, pts = ps.field, ps.points
    n = len(pts)
    if n != field.q ** 2 + 1:
        return False
    if math.comb(n, 3) > caps.search:
        raise SearchTooLarge(f"triple scan over {n} points exceeds search cap")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                _, piv = rref(field, [list(pts[i]), list(pts[j]), list(pts[k])])
                if len(piv) < 3:
                    return False
    return True


def ovoid_code(ps: PointSet4) -> LinearCode:
    field = ps.field
    q = field.q
    rows = [[pt[i] for pt in ps.points] for i in range(4)]
    C = from_generator(field, rows, label=f"ovoid({q})")
    if (C.n, C.k) != (q * q + 1, 4):
        raise NotAnOvoid(f"point set gives a [{C.n}, {C.k}] code, "
                         f"expected [{q * q + 1}, 4]")
    _assert_distance(C, q * q - q, NotAnOvoid)
    return C


# ---------------------------------------------------------------------------
# maximal arcs

def denniston_arc(q: int, h: int) -> PointSet3:
    """Affine points (x, y, 1) whose value under an irreducible binary
    quadratic form lands in the additive subgroup {0, ..., h-1}."""
    m = q.bit_length() - 1
    i = h.bit_length() - 1
    if q != 1 << m or m < 3:
        raise BadParameters(f"need q = 2^m with m >= 3, got {q}")
    if h != 1 << i or not 2 <= i < m:
        raise BadParameters(f"need h = 2^i with 2 <= i < m, got {h}")
    field = field_for_q(q)
    c = next((t for t in range(q) if absolute_trace(field, t) == 1), None)
    if c is None:
        raise AssertionError("no trace-one element (impossible)")
    pts = []
    for x in range(q):
        x2 = field.mul(x, x)
        for y in range(q):
            v = field.add(field.add(x2, field.mul(x, y)),
                          field.mul(c, field.mul(y, y)))
            if v < h:  # encodings below h form the chosen additive subgroup
                pts.append((x, y, 1))
    expected = h * q + h - q
    if len(pts) != expected:
        raise AssertionError(f"arc has {len(pts)} points, expected {expected}")
    return PointSet3(field, tuple(pts))


def is_maximal_arc(ps: PointSet3, h: int) -> bool:
    """Exhaustive check: every line of PG(2, q) meets the set in 0 or h
    points."""
    field, pts = ps.field, ps.points
    for line in projective_point_list(field, 3):
        a, b, c = line
        hits = 0
        for (x, y, z) in pts:
            s = field.add(field.add(field.mul(a, x), field.mul(b, y)),
                          field.mul(c, z))
            if s == 0:
                hits += 1
        if hits not in (0, h):
            return False
    return True


def arc_code(ps: PointSet3) -> LinearCode:
    field = ps.field
    q = field.q
    n = len(ps)
    h, rem = divmod(n + q, q + 1)
    if rem != 0:
        raise NotMaximalArc(f"{n} points cannot form a maximal arc in PG(2,{q})")
    rows = [[pt[i] for pt in ps.points] for i in range(3)]
    C = from_generator(field, rows, label=f"arc({q},{h})")
    if (C.n, C.k) != (n, 3):
        raise NotMaximalArc(f"point set gives a [{C.n}, {C.k}] code, "
                            f"expected [{n}, 3]")
    _assert_distance(C, n - h, NotMaximalArc)
    return C


# ---------------------------------------------------------------------------
# oval polynomials and their codes

@dataclass(frozen=True)
class OvalPolynomial:
    field: FieldSpec
    poly: Poly
    family: str

    @property
    def q(self) -> int:
        return self.field.q


def _monomial_exponents(family: str, q: int, m: int, param: int | None):
    odd = m % 2 == 1
    if family == "translation":
        h = 1 if param is None else param
        if math.gcd(h, m) != 1:
            raise FamilyUnavailableForParameters(
                f"translation needs gcd(h, m) = 1, got h={h}, m={m}")
        return [1 << h]
    if family == "segre":
        if not odd:
            raise FamilyUnavailableForParameters("segre needs m odd")
        return [6]
    if family == "glynn1":
        if not odd:
            raise FamilyUnavailableForParameters("glynn1 needs m odd")
        return [3 * 2 ** ((m + 1) // 2) + 4]
    if family == "glynn2":
        if m % 4 != 3:
            raise FamilyUnavailableForParameters("glynn2 needs m = 3 (mod 4)")
        return [2 ** ((m + 1) // 2) + 2 ** ((m + 1) // 4)]
    if family == "glynn3":
        if m % 4 != 1:
            raise FamilyUnavailableForParameters("glynn3 needs m = 1 (mod 4)")
        return [2 ** ((m + 1) // 2) + 2 ** ((3 * m + 1) // 4)]
    if family == "cherowitzo":
        if not odd:
            raise FamilyUnavailableForParameters("cherowitzo needs m odd")
        e = (m + 1) // 2
        return [1 << e, (1 << e) + 2, 3 * (1 << e) + 4]
    if family == "payne":
        # exponents 1/6, 1/2, 5/6 as inverses modulo q-1; the same three
        # monomials whichever congruent representatives are chosen
        if not odd:
            raise FamilyUnavailableForParameters("payne needs m odd")
        inv6 = pow(6, -1, q - 1)
        return [inv6, pow(2, -1, q - 1), 5 * inv6 % (q - 1)]
    raise FamilyUnavailableForParameters(f"unknown oval family {family!r}")


OVAL_FAMILIES = ("translation", "segre", "glynn1", "glynn2", "glynn3",
                 "cherowitzo", "payne")


def oval_poly(family: str, q: int, param: int | None = None) -> OvalPolynomial:
    """A catalog oval polynomial by family name; exponents are reduced
    modulo q-1 so the polynomial has degree below q.  The result is
    validated exhaustively."""
    m = q.bit_length() - 1
    if q != 1 << m or m < 3:
        raise FamilyUnavailableForParameters(f"need q = 2^m with m >= 3, got {q}")
    field = field_for_q(q)
    coeffs = [0] * q
    for e in _monomial_exponents(family, q, m, param):
        e = e % (q - 1)
        if e == 0:
            e = q - 1
        coeffs[e] = field.add(coeffs[e], 1)
    f = OvalPolynomial(field, poly(field, coeffs), family)
    if not is_oval_polynomial(field, f.poly):
        raise AssertionError(f"catalog polynomial {family} at q={q} failed "
                             f"the exhaustive oval check")
    return f


def is_oval_polynomial(field: FieldSpec, f: Poly) -> bool:
    """Exhaustive test: f(0)=0, f(1)=1, f permutes the field, and x -> f(x)+ux
    is 2-to-1 for every u != 0."""
    if field.p != 2:
        raise WrongFieldForm("oval polynomials live over characteristic 2")
    q = field.q
    if q > 1 << 12:
        raise SearchTooLarge(f"exhaustive oval check at q={q} is out of range")
    if f.field != field:
        raise WrongFieldForm("polynomial is over the wrong field")
    values = [poly_eval(f, x) for x in range(q)]
    if values[0] != 0 or values[1] != 1:
        return False
    if len(set(values)) != q:
        return False
    for u in range(1, q):
        hit: dict[int, int] = {}
        for x in range(q):
            v = field.add(values[x], field.mul(u, x))
            hit[v] = hit.get(v, 0) + 1
        if any(c != 2 for c in hit.values()):
            return False
    return True


def _oval_columns(f: OvalPolynomial):
    field = f.field
    q = field.q
    cols = []
    for i in range(q - 1):
        a = field.gen_pow(i)
        cols.append((poly_eval(f.poly, a), a, 1))
    return cols


def _code_from_columns(field: FieldSpec, cols, label: str,
                       n: int, d: int) -> LinearCode:
    rows = [[c[i] for c in cols] for i in range(3)]
    C = from_generator(field, rows, label=label)
    if (C.n, C.k) != (n, 3):
        raise HypothesisViolated(f"{label} came out [{C.n}, {C.k}], "
                                 f"expected [{n}, 3]")
    _assert_distance(C, d, HypothesisViolated)
    return C


def _require_gf2_coeffs_odd_m(f: OvalPolynomial, what: str) -> None:
    m = f.field.m
    if m % 2 == 0:
        raise HypothesisViolated(f"{what} needs odd extension degree, got m={m}")
    if any(c not in (0, 1) for c in f.poly.coeffs):
        raise HypothesisViolated(f"{what} needs coefficients in GF(2)")


def code_bf_bar(f: OvalPolynomial) -> LinearCode:
    """The [q+3, 3, q] code whose columns are (f(a), a, 1) over the nonzero
    a plus (0,0,1), (1,0,0), (0,1,0) and (1,1,0)."""
    field = f.field
    if field.m < 3:
        raise HypothesisViolated(f"need m >= 3, got m={field.m}")
    q = field.q
    cols = [(0, 0, 1)] + _oval_columns(f) + [(1, 0, 0), (0, 1, 0), (1, 1, 0)]
    return _code_from_columns(field, cols, f"oval-code-bfbar({f.family},{q})",
                              q + 3, q)


def code_gf(f: OvalPolynomial) -> LinearCode:
    """The [q+1, 3, q-2] code whose columns are (f(a), a, 1) over the nonzero
    a plus (0,1,1) and (1,0,1)."""
    _require_gf2_coeffs_odd_m(f, "the [q+1, 3, q-2] construction")
    field = f.field
    q = field.q
    cols = _oval_columns(f) + [(0, 1, 1), (1, 0, 1)]
    return _code_from_columns(field, cols, f"oval-code-gf({f.family},{q})",
                              q + 1, q - 2)


def code_gf_bar(f: OvalPolynomial) -> LinearCode:
    """The [q+2, 3, q-1] code: the same columns with (0,0,1) prepended."""
    _require_gf2_coeffs_odd_m(f, "the [q+2, 3, q-1] construction")
    field = f.field
    q = field.q
    cols = [(0, 0, 1)] + _oval_columns(f) + [(0, 1, 1), (1, 0, 1)]
    return _code_from_columns(field, cols, f"oval-code-gfbar({f.family},{q})",
                              q + 2, q - 1)
