"""Linear codes over a FieldSpec: canonical generator matrices, duality,
derived codes, weight distributions, and low-weight codeword search.

A LinearCode stores its generator matrix in reduced row echelon form, so
set-equality of codes is entrywise equality of matrices.  Weight
distributions come from an enumeration kernel that walks all q^k message
vectors (numpy, blockwise); anything larger flows through the MacWilliams
transform of the dual side.  Low-weight words are found per exact weight by
scanning coordinate subsets and extracting the dependency space supported
exactly there, which is the workhorse behind locality computation.

Resource caps are explicit: work beyond the enumeration or search cap is an
error, never a silent truncation.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import (
    AllOneAlreadyPresent,
    BadCoordinate,
    EnumerationTooLarge,
    FieldMismatch,
    InconsistentInput,
    NonIntegerOutput,
    NotPrime,
    RaggedRows,
    SearchTooLarge,
    ZeroCode,
)
from .gf import FieldSpec, canonical_isomorphism, factorize, field_new

CAPS_ENV_VAR = "LOCALITY_LAB_CAPS"
_ENUM_BLOCK = 1 << 18  # rows per numpy block in the enumeration kernel


@dataclass(frozen=True)
class Caps:
    """Resource ceilings: enumeration counts q^k, search counts an elimination
    cost proxy C(n,w) * min(k, n-k) * w summed over the scanned weights."""

    enumeration: int = 1 << 26
    search: int = 1 << 24

    @staticmethod
    def from_env(environ=None) -> "Caps":
        env = os.environ if environ is None else environ
        raw = env.get(CAPS_ENV_VAR)
        if not raw:
            return Caps()
        values = {}
        for part in raw.split(","):
            name, _, expr = part.partition(":")
            name = name.strip()
            if name not in ("enum", "search") or not expr:
                raise InconsistentInput(f"bad {CAPS_ENV_VAR} entry: {part!r}")
            if "^" in expr:
                b, _, e = expr.partition("^")
                values[name] = int(b) ** int(e)
            else:
                values[name] = int(expr)
        return Caps(enumeration=values.get("enum", Caps.enumeration),
                    search=values.get("search", Caps.search))


def _caps(caps: Caps | None) -> Caps:
    return caps if caps is not None else Caps.from_env()


# ---------------------------------------------------------------------------
# matrices

# a full elimination pass costs about rows * cols * rank field operations;
# beyond this the table-driven numpy kernel takes over
_RREF_NUMPY_MIN = 1 << 20

_NP_TABLE_CACHE: dict[FieldSpec, tuple] = {}


def _numpy_field_tables(field: FieldSpec):
    """(mul, add, neg) lookup tables as numpy arrays, or None when the
    field is too large to tabulate.  add is None in characteristic 2,
    where vector addition is xor of the encodings."""
    if field.q > 512:
        return None
    if field not in _NP_TABLE_CACHE:
        q = field.q
        mul = np.array([[field.mul(a, b) for b in range(q)]
                        for a in range(q)], dtype=np.int32)
        add = (None if field.p == 2
               else np.array(field.add_table(), dtype=np.int32))
        neg = np.array([field.neg(x) for x in range(q)], dtype=np.int32)
        _NP_TABLE_CACHE[field] = (mul, add, neg)
    return _NP_TABLE_CACHE[field]


def _rref_numpy(field: FieldSpec, rows: list[list[int]]):
    tables = _numpy_field_tables(field)
    if tables is None:
        return None
    mul, add, neg = tables
    M = np.array(rows, dtype=np.int32)
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        pv = int(M[r, c])
        if pv != 1:
            M[r] = mul[field.inv(pv), M[r]]
        factors = neg[M[:, c]]
        factors[r] = 0
        rows_hit = np.nonzero(factors)[0]
        if rows_hit.size:
            # pivot row is zero left of c, so earlier columns are untouched
            scaled = mul[factors[rows_hit, None], M[r, c:][None, :]]
            if add is None:
                M[rows_hit, c:] ^= scaled
            else:
                M[rows_hit, c:] = add[M[rows_hit, c:], scaled]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [[int(x) for x in row] for row in M[:r]], pivots


def rref(field: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form in place semantics; returns (rows, pivot columns).
    Zero rows are dropped."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    if len(rows) * ncols * min(len(rows), ncols) >= _RREF_NUMPY_MIN:
        reduced = _rref_numpy(field, rows)
        if reduced is not None:
            return reduced
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(field: FieldSpec, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red[i][f])
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# the code object

class LinearCode:
    """A [n, k] code over a FieldSpec, held by its canonical generator matrix."""

    __slots__ = ("field", "n", "k", "gen", "pivots", "label", "is_cyclic",
                 "_dual", "_wd", "_mind")

    def __init__(self, field: FieldSpec, n: int, gen: tuple[tuple[int, ...], ...],
                 pivots: tuple[int, ...], label: str | None = None,
                 is_cyclic: bool = False):
        self.field = field
        self.n = n
        self.k = len(gen)
        self.gen = gen
        self.pivots = pivots
        self.label = label
        self.is_cyclic = is_cyclic
        self._dual: LinearCode | None = None
        self._wd = None
        self._mind: int | None = None

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and self.field == other.field
                and self.n == other.n and self.gen == other.gen)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.gen))

    def __repr__(self) -> str:
        tag = self.label or f"[{self.n},{self.k}] over GF({self.field.q})"
        return f"<LinearCode {tag}>"

    def q(self) -> int:
        return self.field.q

    def size(self) -> int:
        return self.field.q ** self.k

    def encode(self, message: list[int]) -> tuple[int, ...]:
        F = self.field
        if len(message) != self.k:
            raise RaggedRows(f"message length {len(message)} != k={self.k}")
        out = [0] * self.n
        for u, row in zip(message, self.gen):
            if u:
                out = [F.add(o, F.mul(u, g)) for o, g in zip(out, row)]
        return tuple(out)

    def contains(self, vec) -> bool:
        F = self.field
        if len(vec) != self.n:
            return False
        residue = list(vec)
        for i, pc in enumerate(self.pivots):
            c = residue[pc]
            if c:
                residue = [F.sub(x, F.mul(c, y))
                           for x, y in zip(residue, self.gen[i])]
        return all(x == 0 for x in residue)


def _build(field: FieldSpec, n: int, rows: list[list[int]],
           label: str | None, is_cyclic: bool = False) -> LinearCode:
    red, pivots = rref(field, rows)
    return LinearCode(field, n, tuple(tuple(r) for r in red), tuple(pivots),
                      label, is_cyclic)


def from_generator(field: FieldSpec, rows, label: str | None = None,
                   is_cyclic: bool = False) -> LinearCode:
    rows = [list(r) for r in rows]
    if not rows:
        raise RaggedRows("from_generator needs at least one row")
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise RaggedRows("rows of unequal length")
        for x in r:
            field.check(x)
    return _build(field, n, rows, label, is_cyclic)


def from_parity_check(field: FieldSpec, rows, label: str | None = None,
                      is_cyclic: bool = False) -> LinearCode:
    rows = [list(r) for r in rows]
    if not rows:
        raise RaggedRows("from_parity_check needs at least one row")
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise RaggedRows("rows of unequal length")
        for x in r:
            field.check(x)
    basis = nullspace(field, rows, n)
    return _build(field, n, basis, label, is_cyclic)


def zero_code(field: FieldSpec, n: int, label: str | None = None) -> LinearCode:
    return LinearCode(field, n, (), (), label)


def dual(C: LinearCode) -> LinearCode:
    if C._dual is not None:
        return C._dual
    F = C.field
    if C.k == 0:
        rows = [[1 if j == i else 0 for j in range(C.n)] for i in range(C.n)]
        D = _build(F, C.n, rows, None, C.is_cyclic)
    else:
        basis = nullspace(F, [list(r) for r in C.gen], C.n)
        if basis:
            D = _build(F, C.n, basis, None, C.is_cyclic)
        else:
            D = zero_code(F, C.n)
            D.is_cyclic = C.is_cyclic
    if C.label:
        D.label = f"dual({C.label})"
    C._dual = D
    D._dual = C
    return D


def _check_coords(C: LinearCode, T) -> list[int]:
    T = sorted(set(T))
    for t in T:
        if not isinstance(t, int) or not 0 <= t < C.n:
            raise BadCoordinate(f"coordinate {t} outside [0, {C.n})")
    return T


def puncture(C: LinearCode, T) -> LinearCode:
    T = _check_coords(C, T)
    if not T:
        return C
    keep = [j for j in range(C.n) if j not in set(T)]
    if C.k == 0:
        return zero_code(C.field, len(keep))
    rows = [[r[j] for j in keep] for r in C.gen]
    return _build(C.field, len(keep), rows, None)


def shorten(C: LinearCode, T) -> LinearCode:
    T = _check_coords(C, T)
    if not T:
        return C
    keep = [j for j in range(C.n) if j not in set(T)]
    if C.k == 0:
        return zero_code(C.field, len(keep))
    # messages whose codeword vanishes on T
    constraint_rows = [[C.gen[r][t] for r in range(C.k)] for t in T]
    U = nullspace(C.field, constraint_rows, C.k)
    if not U:
        return zero_code(C.field, len(keep))
    F = C.field
    rows = []
    for u in U:
        word = [0] * C.n
        for coeff, grow in zip(u, C.gen):
            if coeff:
                word = [F.add(w, F.mul(coeff, g)) for w, g in zip(word, grow)]
        rows.append([word[j] for j in keep])
    return _build(F, len(keep), rows, None)


def extend(C: LinearCode) -> LinearCode:
    F = C.field
    rows = []
    for r in C.gen:
        s = 0
        for x in r:
            s = F.add(s, x)
        rows.append(list(r) + [F.neg(s)])
    if not rows:
        return zero_code(F, C.n + 1)
    out = _build(F, C.n + 1, rows, None)
    if C.label:
        out.label = f"extend({C.label})"
    return out


def augment(C: LinearCode) -> LinearCode:
    ones = [1] * C.n
    if C.k and C.contains(ones):
        raise AllOneAlreadyPresent("all-one vector already in the code")
    rows = [list(r) for r in C.gen] + [ones]
    out = _build(C.field, C.n, rows, None)
    if out.k != C.k + 1:
        raise AssertionError("augment failed to grow the dimension")
    return out


# ---------------------------------------------------------------------------
# weight distributions

@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise InconsistentInput("negative weight count")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int | None:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        return None

    def to_json(self) -> list[int]:
        return list(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]


def _scaled_rows(C: LinearCode) -> list[list[list[int]]]:
    F = C.field
    return [[[F.mul(s, x) for x in row] for s in range(F.q)] for row in C.gen]


def _enumerate_counts_numpy(C: LinearCode) -> np.ndarray | None:
    F, n, k = C.field, C.n, C.k
    q = F.q
    if F.p == 2:
        add = None
    elif q <= 512:
        add = np.array(F.add_table(), dtype=np.int32)
    else:
        return None
    sc = np.array(_scaled_rows(C), dtype=np.int32)  # (k, q, n)
    counts = np.zeros(n + 1, dtype=np.int64)
    # leading digits looped in python so a block of rows stays within both the
    # row budget and a ~64MB memory budget
    block = min(_ENUM_BLOCK, max(1024, (64 << 20) // (4 * n)))
    jsplit = 0
    while q ** (k - jsplit) > block:
        jsplit += 1
    for prefix in product(range(q), repeat=jsplit):
        base = np.zeros(n, dtype=np.int32)
        for i, s in enumerate(prefix):
            if add is None:
                base ^= sc[i, s]
            else:
                base = add[base, sc[i, s]]
        W = base[None, :]
        for i in range(jsplit, k):
            if add is None:
                W = (W[:, None, :] ^ sc[i][None, :, :]).reshape(-1, n)
            else:
                W = add[W[:, None, :], sc[i][None, :, :]].reshape(-1, n)
        weights = np.count_nonzero(W, axis=1)
        counts += np.bincount(weights, minlength=n + 1)
    return counts


def _enumerate_counts_python(C: LinearCode) -> list[int]:
    F, n, k = C.field, C.n, C.k
    q = F.q
    sc = _scaled_rows(C)
    counts = [0] * (n + 1)
    add = F.add

    def rec(i: int, vec: list[int]):
        if i == k:
            counts[sum(1 for x in vec if x)] += 1
            return
        for s in range(q):
            if s == 0:
                rec(i + 1, vec)
            else:
                srow = sc[i][s]
                rec(i + 1, [add(v, x) for v, x in zip(vec, srow)])

    rec(0, [0] * n)
    return counts


def weight_distribution(C: LinearCode, caps: Caps | None = None) -> WeightDistribution:
    if C._wd is not None:
        return C._wd
    caps = _caps(caps)
    size = C.field.q ** C.k
    if size > caps.enumeration:
        raise EnumerationTooLarge(
            f"q^k = {size} exceeds enumeration cap {caps.enumeration}")
    if C.k == 0:
        wd = WeightDistribution((1,) + (0,) * C.n)
    else:
        counts = _enumerate_counts_numpy(C)
        if counts is None:
            counts = _enumerate_counts_python(C)
        counts = [int(x) for x in counts]
        if counts[0] != 1 or sum(counts) != size:
            raise AssertionError("enumeration kernel miscounted")
        wd = WeightDistribution(tuple(counts))
    C._wd = wd
    if C._mind is None:
        C._mind = wd.min_distance()
    return wd


def _krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum((-1) ** s * math.comb(i, s) * math.comb(n - i, j - s)
               * (q - 1) ** (j - s)
               for s in range(0, min(i, j) + 1))


def macwilliams(wd, n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution of the dual of a code with the given distribution."""
    counts = list(wd.counts) if isinstance(wd, WeightDistribution) else list(wd)
    if len(counts) != n + 1:
        raise InconsistentInput(f"expected {n + 1} counts, got {len(counts)}")
    if sum(counts) != q ** k:
        raise InconsistentInput(f"counts sum to {sum(counts)}, expected q^k = {q ** k}")
    qk = q ** k
    out = []
    for j in range(n + 1):
        acc = sum(counts[i] * _krawtchouk(n, q, j, i) for i in range(n + 1))
        if acc % qk != 0 or acc < 0:
            raise NonIntegerOutput(f"transform produced {acc}/{qk} at weight {j}")
        out.append(acc // qk)
    return WeightDistribution(tuple(out))


# ---------------------------------------------------------------------------
# low-weight search

@dataclass(frozen=True)
class LowWeightWord:
    support: tuple[int, ...]
    word: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class LowWeightSearch:
    words: tuple[LowWeightWord, ...]   # one representative per projective class
    counts: dict[int, int]             # exact full counts per weight

    def supports(self, w: int | None = None) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for lw in self.words:
            if w is not None and lw.weight != w:
                continue
            if lw.support not in seen:
                seen.add(lw.support)
                out.append(lw.support)
        return out


def _projective_reps(field: FieldSpec, basis: list[list[int]]):
    """One representative per projective class of the span of basis,
    normalized so the first nonzero coefficient is 1."""
    q = field.q
    nu = len(basis)
    width = len(basis[0]) if basis else 0
    for lead in range(nu):
        # coefficient vectors (0,...,0,1,c_{lead+1},...)
        for tail in product(range(q), repeat=nu - lead - 1):
            vec = list(basis[lead])
            for c, brow in zip(tail, basis[lead + 1:]):
                if c:
                    vec = [field.add(v, field.mul(c, b))
                           for v, b in zip(vec, brow)]
            yield vec
    if width == 0:
        return


def _search_cost(n: int, w: int, r: int) -> int:
    return math.comb(n, w) * max(1, r) * max(1, w)


def _route_costs(C: LinearCode, w: int) -> tuple[int, int, int]:
    """Costs of the three search strategies: support scan through the
    generator, support scan through a parity check, full enumeration."""
    n, k, q = C.n, C.k, C.field.q
    reps = (q ** k - 1) // (q - 1)
    return (_search_cost(n, w, k), _search_cost(n, w, n - k), reps * n)


def _cheapest_route_cost(C: LinearCode, w: int) -> int:
    return min(_route_costs(C, w))


def _words_by_enumeration(C: LinearCode, w: int) -> list[LowWeightWord]:
    F, n = C.field, C.n
    out = []
    for vec in _projective_reps(F, list(C.gen)):
        if sum(1 for x in vec if x) != w:
            continue
        first = next(x for x in vec if x)
        if first != 1:
            inv = F.inv(first)
            vec = [F.mul(inv, x) for x in vec]
        out.append(LowWeightWord(tuple(j for j, x in enumerate(vec) if x),
                                 tuple(vec)))
    return out


def exact_weight_words(C: LinearCode, w: int,
                       caps: Caps | None = None) -> list[LowWeightWord]:
    """All weight-w codewords of C, one representative per projective class,
    in deterministic order."""
    caps = _caps(caps)
    F, n, k = C.field, C.n, C.k
    if k == 0 or w == 0 or w > n:
        return []
    gen_cost, par_cost, enum_cost = _route_costs(C, w)
    if min(gen_cost, par_cost, enum_cost) > caps.search:
        raise SearchTooLarge(
            f"weight-{w} search cost {min(gen_cost, par_cost, enum_cost)} "
            f"exceeds cap {caps.search}")
    if enum_cost < min(gen_cost, par_cost):
        out = _words_by_enumeration(C, w)
        out.sort(key=lambda lw: (lw.support, lw.word))
        return out
    use_gen_route = gen_cost <= par_cost
    H = None if use_gen_route else dual(C).gen
    G = C.gen
    budget = caps.search
    spent = 0
    out = []
    for S in combinations(range(n), w):
        if use_gen_route:
            sbar = [j for j in range(n) if j not in set(S)]
            rows = [[G[r_][j] for r_ in range(k)] for j in sbar]
            basis_u = nullspace(F, rows, k)
            if not basis_u:
                continue
            # words u.G restricted to S
            basis = []
            for u in basis_u:
                word = [0] * w
                for coeff, grow in zip(u, G):
                    if coeff:
                        word = [F.add(x, F.mul(coeff, grow[j]))
                                for x, j in zip(word, S)]
                basis.append(word)
            basis, _ = rref(F, basis)
        else:
            rows = [[hrow[j] for j in S] for hrow in H]
            basis = nullspace(F, rows, w)
        if not basis:
            continue
        nu = len(basis)
        reps = (F.q ** nu - 1) // (F.q - 1)
        spent += reps * w
        if spent > budget:
            raise SearchTooLarge("dependency-space enumeration exceeded search cap")
        for vec in _projective_reps(F, basis):
            if any(x == 0 for x in vec):
                continue
            inv = F.inv(vec[0])
            if inv != 1:
                vec = [F.mul(inv, x) for x in vec]
            full = [0] * n
            for j, x in zip(S, vec):
                full[j] = x
            out.append(LowWeightWord(tuple(S), tuple(full)))
    out.sort(key=lambda lw: (lw.support, lw.word))
    return out


def low_weight_codewords(C: LinearCode, w_max: int,
                         caps: Caps | None = None) -> LowWeightSearch:
    caps = _caps(caps)
    if w_max > C.n:
        raise BadCoordinate(f"w_max = {w_max} exceeds length {C.n}")
    total = sum(_cheapest_route_cost(C, w) for w in range(1, w_max + 1))
    if total > caps.search:
        raise SearchTooLarge(f"search cost {total} exceeds cap {caps.search}")
    words: list[LowWeightWord] = []
    counts: dict[int, int] = {}
    for w in range(1, w_max + 1):
        found = exact_weight_words(C, w, caps)
        if found:
            words.extend(found)
            counts[w] = len(found) * (C.field.q - 1)
    return LowWeightSearch(tuple(words), counts)


def _has_words_of_weight_at_most(C: LinearCode, w: int, caps: Caps) -> bool:
    """Existence test: some w columns of a parity check are dependent."""
    F, n, k = C.field, C.n, C.k
    r = min(k, n - k)
    if _search_cost(n, w, r) > caps.search:
        raise SearchTooLarge(
            f"weight-{w} existence scan cost {_search_cost(n, w, r)} "
            f"exceeds cap {caps.search}")
    use_gen_route = k <= n - k
    H = None if use_gen_route else dual(C).gen
    G = C.gen
    for S in combinations(range(n), w):
        if use_gen_route:
            sset = set(S)
            sbar = [j for j in range(n) if j not in sset]
            rows = [[G[r_][j] for r_ in range(k)] for j in sbar]
            red, pivots = rref(F, rows)
            if len(pivots) < k:
                return True
        else:
            rows = [[hrow[j] for j in S] for hrow in H]
            red, pivots = rref(F, rows)
            if len(pivots) < w:
                return True
    return False


def _auto_enum_limit(caps: Caps) -> int:
    return min(caps.enumeration, 1 << 22)


def _macwilliams_affordable(n: int, caps: Caps) -> bool:
    # the transform costs about n^3/6 big-integer operations
    return n ** 3 <= 6 * caps.search


def minimum_distance(C: LinearCode, caps: Caps | None = None) -> int:
    if C.k == 0:
        raise ZeroCode("zero code has no minimum distance")
    if C._mind is not None:
        return C._mind
    caps = _caps(caps)
    q = C.field.q
    direct = q ** C.k
    via_dual = q ** (C.n - C.k)
    # the automatic strategy keeps enumeration snappy; the subset scan below
    # covers codes where both sides are big, within the search cap
    enum_limit = _auto_enum_limit(caps)
    d = None
    if direct <= enum_limit and direct <= via_dual:
        d = weight_distribution(C, caps).min_distance()
    elif via_dual <= enum_limit and _macwilliams_affordable(C.n, caps):
        wd_dual = weight_distribution(dual(C), caps)
        wd = macwilliams(wd_dual, C.n, C.n - C.k, q)
        C._wd = wd
        d = wd.min_distance()
    else:
        for w in range(1, C.n + 1):
            if _has_words_of_weight_at_most(C, w, caps):
                d = w
                break
    if d is None:
        raise AssertionError("nonzero code with no nonzero weight")
    C._mind = d
    return d


def distance_feasible(C: LinearCode, w_target: int | None = None,
                      caps: Caps | None = None) -> bool:
    """Cheap arithmetic test of whether minimum_distance(C) fits the caps.

    When both enumeration strategies are out of reach, the support scan
    must run up to weight w_target (use the expected distance if known;
    defaults to n)."""
    if C.k == 0:
        return True
    caps = _caps(caps)
    q = C.field.q
    limit = _auto_enum_limit(caps)
    if q ** C.k <= limit:
        return True
    if q ** (C.n - C.k) <= limit and _macwilliams_affordable(C.n, caps):
        return True
    total = 0
    for w in range(1, (w_target or C.n) + 1):
        total += _search_cost(C.n, w, min(C.k, C.n - C.k))
        if total > caps.search:
            return False
    return True


# ---------------------------------------------------------------------------
# matrix file format: "q n k" then k rows of n encodings

def field_for_q(q: int) -> FieldSpec:
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p, m = next(iter(fac.items()))
    return field_new(p, m)


def save_matrix(path, C: LinearCode) -> None:
    """Matrix files carry only q, so encodings are written in the canonical
    field_new representation; tower-built codes are translated through a
    field isomorphism (an isomorphic code with identical invariants)."""
    canon = field_for_q(C.field.q)
    if C.field == canon:
        rows = C.gen
    else:
        iso = canonical_isomorphism(C.field)
        rows = [[iso(x) for x in row] for row in C.gen]
    lines = [f"{C.field.q} {C.n} {C.k}"]
    for row in rows:
        lines.append(" ".join(str(x) for x in row))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_matrix(path) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    if len(tokens) < 3:
        raise InconsistentInput("matrix file too short")
    q, n, k = int(tokens[0]), int(tokens[1]), int(tokens[2])
    body = tokens[3:]
    if len(body) != n * k:
        raise InconsistentInput(
            f"expected {n * k} entries for a {k}x{n} matrix, got {len(body)}")
    field = field_for_q(q)
    rows = [[int(body[i * n + j]) for j in range(n)] for i in range(k)]
    C = from_generator(field, rows) if rows else zero_code(field, n)
    if C.k != k:
        raise InconsistentInput(f"rows have rank {C.k}, file claims k = {k}")
    return C
