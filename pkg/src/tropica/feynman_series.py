"""Exact truncated series and Feynman integrals over a circle target.

The engine works with series in two groups of variables: per-vertex
variables x_j whose exponents are integers bounded in absolute value,
and per-edge variables q_k whose exponents are nonnegative with
bounded total degree.  Coefficients stay exact throughout.

An edge between vertices u and v contributes one factor: a q-degree-0
geometric part sum_{w<=d} w*(x_lower/x_higher)^{2w} whose direction
is dictated by the chosen vertex order, plus for every a >= 1 and
every divisor w of a the symmetric pair w*((x_u/x_v)^{2w} +
(x_v/x_u)^{2w}) at q^{2a}.  The refined integral of a 3-valent shape
is the x-constant part of the product of its edge factors; the
coefficient of prod q_k^{2 a_k} is the weighted number of labeled
covers with multidegree a, which is how the counts of elliptic_covers
reappear as series coefficients.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .elliptic_covers import (FeynmanGraph, enumerate_feynman_graphs,
                              simple_hurwitz_tropical)
from .errors import ArgumentError
from .graphs import automorphism_group_order


def sigma(n) -> int:
    """Sum of the divisors of n."""
    m = int(n)
    if m < 1:
        raise ArgumentError("sigma is defined for positive integers")
    return sum(d for d in range(1, m + 1) if m % d == 0)


@dataclass(frozen=True)
class DivisorSum:
    """A divisor sum bundled with its argument."""

    argument: int
    value: int

    @classmethod
    def of(cls, n) -> "DivisorSum":
        return cls(int(n), sigma(n))


class TruncatedSeries:
    """A finitely truncated series with exact coefficients.

    Terms are keyed by (x_exponents, q_exponents); x-exponents may be
    negative and are bounded by x_bound in absolute value, q-exponents
    are nonnegative with total degree at most q_bound.  Zero
    coefficients are never stored.  Arithmetic silently drops products
    outside the bounds; constructing a series from explicit terms with
    out-of-bound exponents is an error.
    """

    __slots__ = ("num_x", "num_q", "x_bound", "q_bound", "terms")

    def __init__(self, num_x, num_q, x_bound, q_bound, terms=None):
        self.num_x = int(num_x)
        self.num_q = int(num_q)
        self.x_bound = int(x_bound)
        self.q_bound = int(q_bound)
        if self.num_x < 0 or self.num_q < 0:
            raise ArgumentError("variable counts are nonnegative")
        if self.x_bound < 0 or self.q_bound < 0:
            raise ArgumentError("truncation bounds are nonnegative")
        self.terms = {}
        if terms:
            for (x_exps, q_exps), coeff in terms.items():
                key = (tuple(x_exps), tuple(q_exps))
                self._check_key(*key)
                if coeff:
                    self.terms[key] = self.terms.get(key, 0) + coeff
                    if not self.terms[key]:
                        del self.terms[key]

    def _check_key(self, x_exps, q_exps):
        if len(x_exps) != self.num_x or len(q_exps) != self.num_q:
            raise ArgumentError("exponent vector has the wrong length")
        if not self._fits(x_exps, q_exps):
            raise ArgumentError("exponents exceed the truncation bounds")

    def _fits(self, x_exps, q_exps):
        return (all(abs(e) <= self.x_bound for e in x_exps)
                and all(e >= 0 for e in q_exps)
                and sum(q_exps) <= self.q_bound)

    def shape(self):
        return (self.num_x, self.num_q, self.x_bound, self.q_bound)

    def _same_shape(self, other):
        if not isinstance(other, TruncatedSeries):
            raise ArgumentError("expected a TruncatedSeries")
        if self.shape() != other.shape():
            raise ArgumentError("series shapes differ")

    @classmethod
    def zero(cls, num_x, num_q, x_bound, q_bound) -> "TruncatedSeries":
        return cls(num_x, num_q, x_bound, q_bound)

    @classmethod
    def constant(cls, value, num_x, num_q, x_bound,
                 q_bound) -> "TruncatedSeries":
        series = cls(num_x, num_q, x_bound, q_bound)
        if value:
            series.terms[((0,) * series.num_x, (0,) * series.num_q)] = value
        return series

    def __add__(self, other) -> "TruncatedSeries":
        self._same_shape(other)
        out = TruncatedSeries(*self.shape())
        out.terms = dict(self.terms)
        for key, coeff in other.terms.items():
            total = out.terms.get(key, 0) + coeff
            if total:
                out.terms[key] = total
            else:
                out.terms.pop(key, None)
        return out

    def __sub__(self, other) -> "TruncatedSeries":
        return self + other.scale(-1)

    def __mul__(self, other) -> "TruncatedSeries":
        self._same_shape(other)
        out = TruncatedSeries(*self.shape())
        acc = out.terms
        for (ax, aq), ac in self.terms.items():
            for (bx, bq), bc in other.terms.items():
                q_exps = tuple(i + j for i, j in zip(aq, bq))
                if sum(q_exps) > self.q_bound:
                    continue
                x_exps = tuple(i + j for i, j in zip(ax, bx))
                if any(abs(e) > self.x_bound for e in x_exps):
                    continue
                key = (x_exps, q_exps)
                total = acc.get(key, 0) + ac * bc
                if total:
                    acc[key] = total
                else:
                    del acc[key]
        return out

    def scale(self, factor) -> "TruncatedSeries":
        out = TruncatedSeries(*self.shape())
        if factor:
            out.terms = {key: coeff * factor
                         for key, coeff in self.terms.items()}
        return out

    def coefficient(self, x_exps=(), q_exps=()):
        x_exps, q_exps = tuple(x_exps), tuple(q_exps)
        if len(x_exps) != self.num_x or len(q_exps) != self.num_q:
            raise ArgumentError("exponent vector has the wrong length")
        return self.terms.get((x_exps, q_exps), 0)

    def project_x_zero(self, index) -> "TruncatedSeries":
        """Keep only terms with x-exponent 0 in the given variable."""
        if not 0 <= index < self.num_x:
            raise ArgumentError("variable index out of range")
        out = TruncatedSeries(*self.shape())
        out.terms = {key: coeff for key, coeff in self.terms.items()
                     if key[0][index] == 0}
        return out

    def x_constant_part(self) -> "TruncatedSeries":
        """The all-x-degree-0 slice, as a series in the q variables."""
        out = TruncatedSeries(0, self.num_q, 0, self.q_bound)
        zero = (0,) * self.num_x
        for (x_exps, q_exps), coeff in self.terms.items():
            if x_exps == zero:
                out.terms[((), q_exps)] = coeff
        return out

    def to_single_q(self) -> "TruncatedSeries":
        """Identify all q variables, keeping total degree."""
        out = TruncatedSeries(self.num_x, 1, self.x_bound, self.q_bound)
        for (x_exps, q_exps), coeff in self.terms.items():
            key = (x_exps, (sum(q_exps),))
            total = out.terms.get(key, 0) + coeff
            if total:
                out.terms[key] = total
            else:
                out.terms.pop(key, None)
        return out

    def ordered_terms(self):
        """Terms sorted by total q-degree, then exponents."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0][1]), item[0][1],
                                        item[0][0]))

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.shape() == other.shape()
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return (f"TruncatedSeries(num_x={self.num_x}, num_q={self.num_q}, "
                f"x_bound={self.x_bound}, q_bound={self.q_bound}, "
                f"terms={len(self.terms)})")


def eisenstein_E2(q_bound) -> TruncatedSeries:
    """1 - 24 sum_{d>=1} sigma(d) q^d, truncated at the given degree."""
    bound = int(q_bound)
    if bound < 0:
        raise ArgumentError("q_bound is nonnegative")
    series = TruncatedSeries.constant(1, 0, 1, 0, bound)
    for d in range(1, bound + 1):
        series.terms[((), (d,))] = -24 * sigma(d)
    return series


def _divisors(n):
    return [w for w in range(1, n + 1) if n % w == 0]


def propagator_factor(k1, k2, lower, q_var, d, num_x, num_q,
                      x_bound=None, q_bound=None) -> TruncatedSeries:
    """The expanded factor of one edge between vertices k1 and k2.

    The q-degree-0 part is the geometric sum w*(x_lower/x_higher)^{2w}
    for w = 1..d, where lower names the endpoint that comes first in
    the vertex order.  The q^{2a} part, for a = 1..d, sums
    w*((x_k1/x_k2)^{2w} + (x_k2/x_k1)^{2w}) over divisors w of a.
    """
    if k1 == k2:
        raise ArgumentError("an edge factor needs two distinct vertices")
    if lower not in (k1, k2):
        raise ArgumentError("lower must be one of the two endpoints")
    if not (0 <= k1 < num_x and 0 <= k2 < num_x):
        raise ArgumentError("vertex variable index out of range")
    if not 0 <= q_var < num_q:
        raise ArgumentError("edge variable index out of range")
    if d < 0:
        raise ArgumentError("truncation degree is nonnegative")
    xb = 6 * d if x_bound is None else x_bound
    qb = 2 * d if q_bound is None else q_bound
    series = TruncatedSeries(num_x, num_q, xb, qb)
    higher = k2 if lower == k1 else k1

    def key(source, target, w, q_exp):
        x_exps = [0] * num_x
        x_exps[source] += 2 * w
        x_exps[target] -= 2 * w
        q_exps = [0] * num_q
        q_exps[q_var] = q_exp
        return (tuple(x_exps), tuple(q_exps))

    for w in range(1, d + 1):
        k = key(lower, higher, w, 0)
        if series._fits(*k):
            series.terms[k] = w
    for a in range(1, d + 1):
        if 2 * a > qb:
            break
        for w in _divisors(a):
            for k in (key(k1, k2, w, 2 * a), key(k2, k1, w, 2 * a)):
                if series._fits(*k):
                    series.terms[k] = w
    return series


def refined_integral(shape: FeynmanGraph, order, d) -> TruncatedSeries:
    """x-constant part of the product of all edge factors.

    Returns a series in the edge variables only, with nonnegative
    integer coefficients; the coefficient of prod q_k^{2 a_k} is the
    weighted count of labeled covers of multidegree a.  Vertices are
    eliminated one at a time: once every factor touching a vertex has
    been multiplied in, only the degree-0 slice in that variable can
    still reach the constant term.
    """
    edges = shape.graph.edges
    num_x = shape.num_vertices
    num_q = shape.num_edges
    if sorted(order) != list(range(num_x)):
        raise ArgumentError("order must list every vertex exactly once")
    if d < 0:
        raise ArgumentError("truncation degree is nonnegative")
    slot_of = [0] * num_x
    for slot, vertex in enumerate(order):
        slot_of[vertex] = slot
    acc = TruncatedSeries.constant(1, num_x, num_q, 6 * d, 2 * d)
    done = [False] * len(edges)
    for vertex in order:
        for k, (u, v) in enumerate(edges):
            if done[k] or vertex not in (u, v):
                continue
            lower = u if slot_of[u] < slot_of[v] else v
            acc = acc * propagator_factor(u, v, lower, k, d, num_x, num_q)
            done[k] = True
        acc = acc.project_x_zero(vertex)
    return acc.x_constant_part()


def coarse_integral(shape: FeynmanGraph, order, d) -> TruncatedSeries:
    """The refined integral with all edge variables identified."""
    return refined_integral(shape, order, d).to_single_q()


@dataclass(frozen=True)
class MirrorRow:
    """One degree of the cover-count versus series comparison."""

    degree: int
    q_power: int
    tropical: Fraction
    series: Fraction
    match: bool


def mirror_check(genus, d_max):
    """Compare cover counts with the aggregated series, degree by degree.

    The series side sums coarse integrals over all shapes of the genus
    and all vertex orders, each shape weighted by 1/|Aut|.  Mismatches
    are reported in the rows, not raised.
    """
    g = int(genus)
    dm = int(d_max)
    if g not in (2, 3):
        raise ArgumentError("genus must be 2 or 3")
    if not 1 <= dm <= 6:
        raise ArgumentError("d_max must be between 1 and 6")
    total = TruncatedSeries.zero(0, 1, 0, 2 * dm)
    for shape in enumerate_feynman_graphs(g):
        aut = automorphism_group_order(shape.graph)
        per_shape = TruncatedSeries.zero(0, 1, 0, 2 * dm)
        for order in itertools.permutations(range(shape.num_vertices)):
            per_shape = per_shape + coarse_integral(shape, order, dm)
        total = total + per_shape.scale(Fraction(1, aut))
    rows = []
    for d in range(1, dm + 1):
        tropical = simple_hurwitz_tropical(d, g, force=True)
        series = total.coefficient(q_exps=(2 * d,))
        rows.append(MirrorRow(degree=d, q_power=2 * d, tropical=tropical,
                              series=series, match=tropical == series))
    return rows
