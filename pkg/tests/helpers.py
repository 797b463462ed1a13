"""Deliberately naive reference implementations used as test oracles.

Everything here favors transparency over speed: brute-force dart
permutations, stub matchings, and direct permutation-tuple counts.
Keep inputs tiny.
"""

import math
from fractions import Fraction
from itertools import permutations, product

from tropica.graphs import Multigraph, canonical_key


# -- half-edge automorphisms ----------------------------------------------

def halfedge_aut_order(g: Multigraph) -> int:
    """Count automorphisms as permutations of darts (half-edges).

    A dart permutation is an automorphism when it commutes with the
    edge-gluing involution, preserves leg labels, and induces a
    well-defined genus-preserving bijection on vertices.  Exponential in
    the dart count; restricted to graphs with at most 8 darts.
    """
    att = []
    partner = []
    label = {}
    for u, v in g.edges:
        a = len(att)
        att.append(u)
        att.append(v)
        partner.extend([a + 1, a])
    for v, lab in g.legs:
        a = len(att)
        att.append(v)
        partner.append(a)
        label[a] = lab
    n_darts = len(att)
    assert n_darts <= 8, "dart brute force limited to 8 half-edges"

    count = 0
    for perm in permutations(range(n_darts)):
        if any(perm[partner[d]] != partner[perm[d]] for d in range(n_darts)):
            continue
        if any(label.get(perm[d]) != label.get(d) for d in range(n_darts)):
            continue
        vmap = {}
        ok = True
        for d in range(n_darts):
            image = att[perm[d]]
            if vmap.setdefault(att[d], image) != image:
                ok = False
                break
        if not ok:
            continue
        if len(set(vmap.values())) != len(vmap):
            continue
        if any(g.genus[w] != g.genus[v] for v, w in vmap.items()):
            continue
        count += 1
    return count


# -- stub matching enumeration --------------------------------------------

def _matchings(stubs):
    """Yield perfect matchings of the stub list as edge multisets."""
    if not stubs:
        yield []
        return
    first = stubs[0]
    for i in range(1, len(stubs)):
        rest = stubs[1:i] + stubs[i + 1:]
        pair = (first, stubs[i]) if first <= stubs[i] else (stubs[i], first)
        for tail in _matchings(rest):
            yield [pair] + tail


def stub_matching_classes(num_vertices, degrees, num_legs=0,
                          allow_loops=False, allow_parallel=True):
    """Canonical keys of connected classes found by brute stub matching."""
    degrees = sorted(degrees, reverse=True)
    keys = set()
    for assignment in product(range(num_vertices), repeat=num_legs):
        residual = list(degrees)
        legs = []
        ok = True
        for lab, v in enumerate(assignment, start=1):
            residual[v] -= 1
            legs.append((v, lab))
            if residual[v] < 0:
                ok = False
                break
        if not ok:
            continue
        stubs = []
        for v, r in enumerate(residual):
            stubs.extend([v] * r)
        for edges in _matchings(stubs):
            if not allow_loops and any(u == v for u, v in edges):
                continue
            if not allow_parallel:
                plain = [e for e in edges if e[0] != e[1]]
                if len(set(plain)) != len(plain):
                    continue
            try:
                g = Multigraph(num_vertices, edges, legs)
            except Exception:
                continue
            if g.is_connected():
                keys.add(canonical_key(g))
    return keys


# -- symmetric group brute force ------------------------------------------

def compose(p, q):
    """Permutation composition, apply q first then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_type(p):
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_transitive(perms, d):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == d


def naive_line_hurwitz(genus, mu, nu, left_to_right=False) -> Fraction:
    """Direct tuple count of monodromy representations over the line.

    Counts (sigma0, tau_1..tau_s) with sigma0 of type mu, each tau a
    transposition, the full product of type nu, acting transitively;
    divides by d!.  left_to_right flips the composition convention,
    which must not change the count.  Exponential; keep d <= 4 and s
    small.
    """
    mu = tuple(sorted(mu, reverse=True))
    nu = tuple(sorted(nu, reverse=True))
    d = sum(mu)
    assert d == sum(nu)
    s = 2 * genus - 2 + len(mu) + len(nu)
    assert s >= 0
    everyone = list(permutations(range(d)))
    with_type_mu = [p for p in everyone if cycle_type(p) == mu]
    transpositions = [p for p in everyone if cycle_type(p) == (2,) + (1,) * (d - 2)]
    count = 0
    for sigma0 in with_type_mu:
        for taus in product(transpositions, repeat=s):
            prod = sigma0
            for t in taus:
                prod = compose(prod, t) if left_to_right else compose(t, prod)
            if cycle_type(prod) != nu:
                continue
            if is_transitive((sigma0,) + taus, d):
                count += 1
    return Fraction(count, math.factorial(d))


def naive_elliptic_hurwitz(degree, genus) -> Fraction:
    """Direct tuple count of monodromy representations over a torus.

    Counts (alpha, beta, tau_1..tau_{2g-2}) whose commutator times the
    transposition product is the identity, acting transitively; divides
    by d!.  Exponential; keep degree <= 4 and genus <= 3 small.
    """
    d = degree
    s = 2 * genus - 2
    assert s >= 0
    everyone = list(permutations(range(d)))
    transpositions = [p for p in everyone if cycle_type(p) == (2,) + (1,) * (d - 2)]
    identity = tuple(range(d))
    count = 0
    for alpha in everyone:
        for beta in everyone:
            comm = compose(compose(alpha, beta),
                           compose(inverse(alpha), inverse(beta)))
            for taus in product(transpositions, repeat=s):
                prod = comm
                for t in taus:
                    prod = compose(prod, t)
                if prod != identity:
                    continue
                if is_transitive((alpha, beta) + taus, d):
                    count += 1
    return Fraction(count, math.factorial(d))


def random_relabel(g: Multigraph, rng) -> Multigraph:
    perm = list(range(g.num_vertices))
    rng.shuffle(perm)
    return g.relabeled(perm)
