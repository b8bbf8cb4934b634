"""Membership witnesses for the key-lemma precondition and the unified
toric-mirror condition.

Data are dual lattices M and N (coordinatized so the pairing is the dot
product and both lattices are Z^rank), finite sets Delta in M and
Delta_dual in N with deg.n = m.deg_dual = 1 and m.n >= 0, and coefficient
functions f on Delta and g on Delta_dual.

The primal condition asks, for every ray of the cone dual to
cone(Delta_dual), for an identity

    [l v] = sum_n P_n * (sum_m f(m) (m.n) [m])

in C[M], where every monomial [w] of P_n satisfies w.n >= -1 and
w.nhat >= 0 for the other nhat in Delta_dual.  The dual condition swaps
the roles of the two sides.  Witness search is a finite exact linear
solve per candidate exponent l; found witnesses are re-verified by
symbolic expansion.  A failed search is reported as FAIL-UNKNOWN, never
FAIL: the condition cannot be refuted by a bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .cones import dual_cone_rays, integer_points
from .potentials import LatticeData


class UnifiedError(ValueError):
    pass


@dataclass(frozen=True)
class ToricMirrorData:
    rank: int
    delta: tuple        # points of M (integer tuples)
    delta_dual: tuple   # points of N (integer tuples)
    deg: tuple          # element of M
    deg_dual: tuple     # element of N
    f: tuple            # coefficients on delta
    g: tuple            # coefficients on delta_dual

    def __post_init__(self):
        for n in self.delta_dual:
            if sum(a * b for a, b in zip(self.deg, n)) != 1:
                raise UnifiedError(f"deg.n != 1 for n = {n}")
        for m in self.delta:
            if sum(a * b for a, b in zip(m, self.deg_dual)) != 1:
                raise UnifiedError(f"m.deg_dual != 1 for m = {m}")
        for m in self.delta:
            for n in self.delta_dual:
                if sum(a * b for a, b in zip(m, n)) < 0:
                    raise UnifiedError(f"negative pairing for {m}, {n}")
        if exactla.rat_rank([list(m) for m in self.delta]) < self.rank:
            raise UnifiedError("cone K_M is not full-dimensional")
        if exactla.rat_rank([list(n) for n in self.delta_dual]) < self.rank:
            raise UnifiedError("cone K_N is not full-dimensional")
        if any(c == 0 for c in self.f) or any(c == 0 for c in self.g):
            raise UnifiedError("zero coefficient")

    def swapped(self) -> "ToricMirrorData":
        return ToricMirrorData(self.rank, self.delta_dual, self.delta,
                               self.deg_dual, self.deg, self.g, self.f)


def make_toric_data(rank, delta, delta_dual, deg, deg_dual,
                    f=None, g=None) -> ToricMirrorData:
    delta = tuple(tuple(int(x) for x in m) for m in delta)
    delta_dual = tuple(tuple(int(x) for x in n) for n in delta_dual)
    if f is None:
        f = tuple(Fraction(1) for _ in delta)
    if g is None:
        g = tuple(Fraction(1) for _ in delta_dual)
    return ToricMirrorData(rank, delta, delta_dual,
                           tuple(int(x) for x in deg),
                           tuple(int(x) for x in deg_dual),
                           tuple(map(Fraction, f)), tuple(map(Fraction, g)))


def bh_toric_data(data: LatticeData, g_coefficients=None) -> ToricMirrorData:
    """Recast a Calabi-Yau type datum in M/N basis coordinates."""
    d = data.d
    nb = [list(r) for r in data.n_basis]
    mb = [list(r) for r in data.m_basis]
    delta = []
    for u in data.potential.exponents:
        delta.append(tuple(int(sum(a * b for a, b in zip(u, row)))
                           for row in nb))
    delta_dual = []
    for j in range(d):
        v = [Fraction(1) if t == j else Fraction(0) for t in range(d)]
        delta_dual.append(tuple(int(sum(a * b for a, b in zip(v, row)))
                                for row in mb))
    deg = tuple(int(sum(row)) for row in nb)
    deg_dual = tuple(int(sum(q * x for q, x in zip(data.deg_dual, row)))
                     for row in mb)
    return make_toric_data(d, delta, delta_dual, deg, deg_dual,
                           data.potential.coefficients, g_coefficients)


@dataclass(frozen=True)
class MembershipWitness:
    ray: tuple
    exponent: int
    polynomials: tuple  # ((n_index, ((monomial, coefficient), ...)), ...)

    def verify(self, data: ToricMirrorData) -> bool:
        """Re-expand the identity symbolically, independent of the solver."""
        target = tuple(x * self.exponent for x in self.ray)
        acc = {}
        for n_idx, terms in self.polynomials:
            n = data.delta_dual[n_idx]
            for w, c in terms:
                # admissibility of the monomial support
                for t, nhat in enumerate(data.delta_dual):
                    pairing = sum(a * b for a, b in zip(w, nhat))
                    lower = -1 if t == n_idx else 0
                    if pairing < lower:
                        return False
                for m, fm in zip(data.delta, data.f):
                    mn = sum(a * b for a, b in zip(m, n))
                    if mn == 0:
                        continue
                    pt = tuple(a + b for a, b in zip(w, m))
                    acc[pt] = acc.get(pt, 0) + c * fm * mn
        acc = {k: v for k, v in acc.items() if v}
        return acc == {target: 1}


def kn_dual_rays(data: ToricMirrorData):
    return dual_cone_rays(data.delta_dual)


def _admissible_monomials(data: ToricMirrorData, n_idx: int, s: Fraction):
    """Lattice points w with w.deg_dual == s, w.n >= -1 on the chosen n and
    w.nhat >= 0 on the rest of Delta_dual."""
    ineqs = []
    for t, nhat in enumerate(data.delta_dual):
        ineqs.append((list(nhat), -1 if t == n_idx else 0))
    eqs = [(list(data.deg_dual), s)]
    return integer_points(ineqs, eqs, data.rank)


def key_lemma_witness(data: ToricMirrorData, ray, degree_bound):
    """Search for a membership witness on the given ray of K_N-dual.

    degree_bound caps the weighted degree l * (ray.deg_dual) of the target
    monomial.  Returns a verified MembershipWitness or None.
    """
    ray = tuple(ray)
    ray_degree = sum(a * b for a, b in zip(ray, data.deg_dual))
    if ray_degree <= 0:
        raise UnifiedError("deg_dual is not positive on the ray")
    l = 1
    while l * ray_degree <= degree_bound:
        target = tuple(x * l for x in ray)
        s = l * ray_degree - 1
        if s >= 0:
            witness = _solve_for_witness(data, ray, l, target, s)
            if witness is not None:
                if not witness.verify(data):
                    raise UnifiedError("witness failed re-verification")
                return witness
        l += 1
    return None


def _solve_for_witness(data: ToricMirrorData, ray, l, target, s):
    unknowns = []   # (n_idx, w)
    for n_idx in range(len(data.delta_dual)):
        n = data.delta_dual[n_idx]
        if all(sum(a * b for a, b in zip(m, n)) == 0 for m in data.delta):
            continue
        for w in _admissible_monomials(data, n_idx, s):
            unknowns.append((n_idx, w))
    if not unknowns:
        return None
    columns = {}
    points = {}
    for col, (n_idx, w) in enumerate(unknowns):
        n = data.delta_dual[n_idx]
        entries = columns.setdefault(col, {})
        for m, fm in zip(data.delta, data.f):
            mn = sum(a * b for a, b in zip(m, n))
            if mn == 0:
                continue
            pt = tuple(a + b for a, b in zip(w, m))
            if pt not in points:
                points[pt] = len(points)
            r = points[pt]
            entries[r] = entries.get(r, 0) + fm * mn
    if target not in points:
        return None
    nrows = len(points)
    mat = [[Fraction(0)] * len(unknowns) for _ in range(nrows)]
    for col, entries in columns.items():
        for r, v in entries.items():
            mat[r][col] = v
    rhs = [Fraction(0)] * nrows
    rhs[points[target]] = Fraction(1)
    sol = exactla.rat_solve(mat, rhs)
    if sol is None:
        return None
    polys = {}
    for (n_idx, w), c in zip(unknowns, sol):
        if c != 0:
            polys.setdefault(n_idx, []).append((w, c))
    return MembershipWitness(
        tuple(ray), l,
        tuple((n_idx, tuple(terms)) for n_idx, terms in sorted(polys.items())))


def necessary_condition(data: ToricMirrorData) -> bool:
    """Cheap facet condition that Definition-level data must satisfy."""
    for ray in kn_dual_rays(data):
        theta = [n for n in data.delta_dual
                 if sum(a * b for a, b in zip(ray, n)) == 0]
        if not theta:
            continue
        ok = False
        for m in data.delta:
            for n in theta:
                if sum(a * b for a, b in zip(m, n)) <= 1 and all(
                        sum(a * b for a, b in zip(m, nh)) == 0
                        for nh in theta if nh != n):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def unified_condition(data: ToricMirrorData, degree_bound) -> dict:
    """PASS / FAIL-UNKNOWN report for the primal and dual conditions."""
    report = {"degree_bound": degree_bound,
              "necessary_condition": "pass" if (
                  necessary_condition(data)
                  and necessary_condition(data.swapped())) else "fail",
              "sides": {}}
    for side, d in (("primal", data), ("dual", data.swapped())):
        rays = kn_dual_rays(d)
        witnesses = []
        missing = []
        for ray in rays:
            w = key_lemma_witness(d, ray, degree_bound)
            if w is None:
                missing.append(ray)
            else:
                witnesses.append(w)
        report["sides"][side] = {
            "rays": rays,
            "witnesses": witnesses,
            "missing": missing,
            "status": "PASS" if not missing else "FAIL-UNKNOWN",
        }
    report["status"] = "PASS" if all(
        s["status"] == "PASS" for s in report["sides"].values()) \
        else "FAIL-UNKNOWN"
    return report
