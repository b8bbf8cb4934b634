"""Graded Milnor rings and the orbifold B-ring oracle.

Milnor rings C[x]/<dW/dx_j> are computed degree slice by degree slice:
the slice of the Jacobian ideal at weighted degree s is spanned by the
products x^b dW/dx_j with wt(x^b) = s - (1 - q_j), and the quotient
dimension is (#monomials of degree s) - rank of that span.  Everything is
exact; ranks go through fraction-free sparse elimination.

The orbifold table attaches Kaufmann/Krawitz bicharges to the G-invariant
part of each twisted sector L_g and accumulates them into a Hodge table
keyed by (Q_+, Q_-).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import exactla
from .cones import weighted_compositions
from .potentials import Potential, SymmetryGroup, _frac_mod1


class MilnorError(ValueError):
    pass


def restricted_monomials(p: Potential, vars_):
    """Rows of the exponent matrix supported entirely on vars_ (with index)."""
    vset = set(vars_)
    out = []
    for i, row in enumerate(p.exponents):
        if all(j in vset for j, a in enumerate(row) if a != 0):
            out.append((i, row))
    return out


def restricted_partials(p: Potential, vars_):
    """Log-free partial derivatives of W restricted to vars_.

    Returns {j: [(exponent_vector, coefficient), ...]} for j in vars_,
    where exponent vectors are full-length with support in vars_.
    """
    rows = restricted_monomials(p, vars_)
    partials = {}
    for j in vars_:
        terms = []
        for i, row in rows:
            if row[j] > 0:
                mono = list(row)
                mono[j] -= 1
                terms.append((tuple(mono), p.coefficients[i] * row[j]))
        partials[j] = terms
    return partials


def _degree_step(p: Potential, vars_) -> int:
    den = 1
    for j in vars_:
        den = lcm(den, p.weights[j].denominator)
    return den


def _slice_monomials(p: Potential, vars_, s: Fraction):
    """Monomials in the vars_ variables of weighted degree s (full-length)."""
    if s < 0:
        return []
    ws = [p.weights[j] for j in vars_]
    out = []
    for b in weighted_compositions(ws, s):
        full = [0] * p.d
        for j, e in zip(vars_, b):
            full[j] = e
        out.append(tuple(full))
    return out


@dataclass(frozen=True)
class MilnorProfile:
    vars: tuple
    socle: Fraction
    max_weight: Fraction
    step: int                 # degrees are multiples of 1/step
    dims: tuple               # ((degree, dim), ...) over the scanned range
    total: int                # sum of dims at degrees <= socle
    window_clear: bool        # quotient vanishes on (socle, socle + max_weight]
    expected_total: Fraction  # prod over vars of (1/q_j - 1)

    @property
    def nondegenerate(self) -> bool:
        return self.window_clear and self.total == self.expected_total

    def dim_at(self, s) -> int:
        s = Fraction(s)
        for deg, dim in self.dims:
            if deg == s:
                return dim
        return 0


def milnor_dims(p: Potential, vars_=None) -> MilnorProfile:
    if vars_ is None:
        vars_ = tuple(range(p.d))
    vars_ = tuple(sorted(vars_))
    if not vars_:
        return MilnorProfile(vars_, Fraction(0), Fraction(0), 1,
                             ((Fraction(0), 1),), 1, True, Fraction(1))
    q = [p.weights[j] for j in vars_]
    socle = sum(1 - 2 * x for x in q)
    maxq = max(q)
    step = _degree_step(p, vars_)
    partials = restricted_partials(p, vars_)
    dims = []
    total = 0
    window_clear = True
    top = socle + maxq
    num = 0
    while Fraction(num, step) <= top:
        s = Fraction(num, step)
        num += 1
        basis = _slice_monomials(p, vars_, s)
        if not basis:
            dims.append((s, 0))
            continue
        index = {b: i for i, b in enumerate(basis)}
        rows = []
        for j in vars_:
            for u in _slice_monomials(p, vars_, s - (1 - p.weights[j])):
                row = {}
                for mono, c in partials[j]:
                    t = tuple(a + b for a, b in zip(u, mono))
                    col = index.get(t)
                    if col is not None:
                        row[col] = row.get(col, 0) + c
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    rows.append(row)
        dim = len(basis) - exactla.sparse_rank(rows)
        dims.append((s, dim))
        if s <= socle:
            total += dim
        elif dim != 0:
            window_clear = False
    expected = Fraction(1)
    for x in q:
        expected *= (1 / x - 1)
    return MilnorProfile(vars_, socle, maxq, step, tuple(dims),
                         total, window_clear, expected)


def is_nondegenerate(p: Potential) -> bool:
    return milnor_dims(p).nondegenerate


def sector_shift(p: Potential, g):
    """Charge shift of the g-twisted sector: sums over moving coordinates."""
    plus = Fraction(0)
    minus = Fraction(0)
    for h, q in zip(g, p.weights):
        if h != 0:
            plus += h - q
            minus += 1 - h - q
    return plus, minus


def _character(vec, generators, fixed):
    """G-weights (mod 1) of a monomial supported on the fixed coordinates."""
    return tuple(_frac_mod1(sum(Fraction(vec[j]) * gen[j] for j in fixed))
                 for gen in generators)


def sector_invariant_dims(p: Potential, group: SymmetryGroup, g):
    """Graded dimensions of the G-invariant part of the shifted sector L_g.

    Returns (fixed, [(p_degree, dim), ...]).  Raises MilnorError when the
    restriction of the potential to the fixed locus is degenerate.
    """
    fixed = tuple(j for j, h in enumerate(g) if h == 0)
    gens = group.generators
    if not fixed:
        return fixed, [(Fraction(0), 1)]
    profile = milnor_dims(p, fixed)
    if not profile.nondegenerate:
        raise MilnorError(
            f"degenerate sector potential on fixed coordinates {fixed}")
    # invariance of (prod_{j fixed} x_j) * x^b against every generator
    shift_char = _character([1] * p.d, gens, fixed)
    target = tuple(_frac_mod1(-x) for x in shift_char)
    partials = restricted_partials(p, fixed)
    out = []
    num = 0
    while Fraction(num, profile.step) <= profile.socle:
        s = Fraction(num, profile.step)
        num += 1
        basis = _slice_monomials(p, fixed, s)
        cols = [b for b in basis if _character(b, gens, fixed) == target]
        if not cols:
            continue
        index = {b: i for i, b in enumerate(cols)}
        rows = []
        for j in fixed:
            # rows x^u dW/dx_j are character-homogeneous; keep those
            # landing in the target isotypic block
            for u in _slice_monomials(p, fixed, s - (1 - p.weights[j])):
                probe = None
                row = {}
                for mono, c in partials[j]:
                    t = tuple(a + b for a, b in zip(u, mono))
                    if probe is None:
                        probe = _character(t, gens, fixed)
                    col = index.get(t)
                    if col is not None:
                        row[col] = row.get(col, 0) + c
                if probe != target:
                    continue
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    rows.append(row)
        dim = len(cols) - exactla.sparse_rank(rows)
        if dim:
            out.append((s, dim))
    return fixed, out


def orbifold_b_table(p: Potential, group: SymmetryGroup) -> dict:
    """Bigraded dimensions of the orbifold B ring (sum over sectors)."""
    if not milnor_dims(p).nondegenerate:
        raise MilnorError("degenerate potential")
    table = {}
    for g in group.elements:
        plus, minus = sector_shift(p, g)
        _, dims = sector_invariant_dims(p, group, g)
        for s, dim in dims:
            key = (plus + s, minus + s)
            table[key] = table.get(key, 0) + dim
    return {k: v for k, v in table.items() if v}


def reflect_table(table: dict, chat: Fraction) -> dict:
    return {(qp, chat - qm): v for (qp, qm), v in table.items()}


def orbifold_a_table(p: Potential, group: SymmetryGroup) -> dict:
    chat = p.d - 2 * p.k
    return reflect_table(orbifold_b_table(p, group), chat)


def table_anomalies(table: dict, chat) -> list:
    """Table keys with nonzero dimension outside the square [0, chat]^2."""
    bad = []
    for (qp, qm), v in table.items():
        if v and not (0 <= qp <= chat and 0 <= qm <= chat):
            bad.append(((qp, qm), v))
    return sorted(bad)


# --- the Jacobian-to-logarithmic-Jacobian bridge -------------------------

def log_jacobian_cohomology(p: Potential, conf_degree: Fraction,
                            coh_range) -> dict:
    """Cohomology dimensions of the C[x,y]_0 (x) Lambda* complex.

    The differential is sum_i x_i dW/dx_i (x) contr(e_i*) +
    sum_i y_i (x) wedge(e_i).  The preserved grading is
    wt(x-part) - deg(y-part) + exterior degree; the cohomological grading
    wt(x-part) + deg(y-part) is raised by one.  Returns
    {u: dim H^u} for u in coh_range at the given preserved degree.

    The cohomology computed here must match the rank-one twist of the
    Milnor ring by the product of all variables: one class per Milnor
    basis element, sitting at u = conf_degree.
    """
    d = p.d
    all_vars = tuple(range(d))
    partials = restricted_partials(p, all_vars)
    log_parts = {}
    for j in all_vars:
        terms = []
        for mono, c in partials[j]:
            m2 = list(mono)
            m2[j] += 1
            terms.append((tuple(m2), c))
        log_parts[j] = terms
    conf = Fraction(conf_degree)

    def slice_basis(u):
        # elements (a, b, S): x-monomial a, y-monomial b (disjoint support),
        # exterior subset S as bitmask; wt(a) + |b| = u, wt(a) - |b| + |S| = conf
        out = []
        for ext in range(d + 1):
            ydeg2 = u - conf + ext
            if ydeg2.denominator != 1 or int(ydeg2) % 2 or ydeg2 < 0:
                continue
            ydeg = int(ydeg2) // 2
            xdeg = u - ydeg
            for a in _slice_monomials(p, all_vars, xdeg):
                sup = [j for j in range(d) if a[j] > 0]
                free = [j for j in range(d) if a[j] == 0]
                for b in _compositions(free, ydeg, d):
                    for mask in _masks(d, ext):
                        out.append((a, b, mask))
        return out

    def apply_d(el):
        a, b, mask = el
        out = {}
        # contraction terms
        pos = 0
        for j in range(d):
            if mask >> j & 1:
                sign = -1 if pos % 2 else 1
                for mono, c in log_parts[j]:
                    na = tuple(x + y for x, y in zip(a, mono))
                    if any(na[t] > 0 and b[t] > 0 for t in range(d)):
                        continue
                    key = (na, b, mask & ~(1 << j))
                    out[key] = out.get(key, 0) + sign * c
                pos += 1
        # wedge terms
        for j in range(d):
            if mask >> j & 1 or a[j] > 0:
                continue
            below = bin(mask & ((1 << j) - 1)).count("1")
            sign = -1 if below % 2 else 1
            nb = list(b)
            nb[j] += 1
            key = (a, tuple(nb), mask | (1 << j))
            out[key] = out.get(key, 0) + sign
        return {k: v for k, v in out.items() if v}

    bases = {}
    for u in list(coh_range):
        bases[u] = slice_basis(u)
        bases[u - 1] = bases.get(u - 1) if (u - 1) in bases else None
    ranks = {}

    def rank_from(u):
        if u in ranks:
            return ranks[u]
        src = bases.get(u)
        if src is None:
            src = slice_basis(u)
            bases[u] = src
        tgt = bases.get(u + 1)
        if tgt is None:
            tgt = slice_basis(u + 1)
            bases[u + 1] = tgt
        index = {el: i for i, el in enumerate(tgt)}
        rows = []
        for el in src:
            img = apply_d(el)
            row = {}
            for k, v in img.items():
                col = index.get(k)
                if col is None:
                    raise MilnorError("differential left the graded slice")
                row[col] = v
            if row:
                rows.append(row)
        ranks[u] = exactla.sparse_rank(rows)
        return ranks[u]

    result = {}
    for u in coh_range:
        if bases.get(u) is None:
            bases[u] = slice_basis(u)
        result[u] = len(bases[u]) - rank_from(u) - rank_from(u - 1)
    return result


def _compositions(free, total, d):
    """y-monomials of degree total supported on the free coordinates."""
    if total == 0:
        return [tuple([0] * d)]
    if not free:
        return []
    out = []
    for b in weighted_compositions([1] * len(free), total):
        full = [0] * d
        for j, e in zip(free, b):
            full[j] = e
        out.append(tuple(full))
    return out


def _masks(d, ext):
    from itertools import combinations
    out = []
    for subset in combinations(range(d), ext):
        m = 0
        for j in subset:
            m |= 1 << j
        out.append(m)
    return out
