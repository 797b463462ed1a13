"""Multigraphs with half-edge semantics.

A graph is stored as an ordered list of edges (unordered vertex pairs,
loops allowed), an ordered list of legs (labeled half-edges attached to
a single vertex), and a genus decoration per vertex.  Conceptually each
edge is a pair of half-edges glued together and each leg is an unglued
half-edge; loops count 2 toward valence, legs count 1.

The module provides canonical forms, automorphism counting, enumeration
of isomorphism classes with prescribed valences, edge contraction, and
the local balancing / defect checks used by the cover-counting modules.
Everything is exact integer combinatorics.
"""

from itertools import permutations, product

from .errors import ArgumentError, LoopContractionError


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        try:
            t = tuple(sorted((int(p) for p in parts), reverse=True))
        except (TypeError, ValueError) as exc:
            raise ArgumentError(f"not a partition: {parts!r}") from exc
        if not t:
            raise ArgumentError("a partition needs at least one part")
        if t[-1] < 1:
            raise ArgumentError(f"partition parts must be positive: {parts!r}")
        self.parts = t

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)!r})"


class Multigraph:
    """Immutable multigraph with ordered edges, legs, and vertex genus.

    edges: sequence of (u, v) vertex pairs, stored with u <= v, order kept.
    legs:  sequence of (vertex, label); label 0 means unlabeled, positive
           labels must be pairwise distinct.  Mixing labeled and unlabeled
           legs is rejected.
    genus: one nonnegative integer per vertex (default all zero).
    """

    __slots__ = ("num_vertices", "edges", "legs", "genus")

    def __init__(self, num_vertices, edges=(), legs=(), genus=None):
        n = int(num_vertices)
        if n < 1:
            raise ArgumentError("a graph needs at least one vertex")
        norm_edges = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge endpoint out of range: {e!r}")
            norm_edges.append((u, v) if u <= v else (v, u))
        norm_legs = []
        for item in legs:
            v, label = int(item[0]), int(item[1])
            if not 0 <= v < n:
                raise ArgumentError(f"leg vertex out of range: {item!r}")
            if label < 0:
                raise ArgumentError("leg labels must be nonnegative")
            norm_legs.append((v, label))
        labels = [label for _, label in norm_legs if label > 0]
        if labels and len(labels) != len(norm_legs):
            raise ArgumentError("legs must be all labeled or all unlabeled")
        if len(set(labels)) != len(labels):
            raise ArgumentError("leg labels must be distinct")
        if genus is None:
            norm_genus = (0,) * n
        else:
            norm_genus = tuple(int(x) for x in genus)
            if len(norm_genus) != n:
                raise ArgumentError("genus list length must match vertex count")
            if any(x < 0 for x in norm_genus):
                raise ArgumentError("vertex genus must be nonnegative")
        self.num_vertices = n
        self.edges = tuple(norm_edges)
        self.legs = tuple(norm_legs)
        self.genus = norm_genus
        # every vertex carries a half-edge, except a lone decorated vertex
        if n > 1 or self.edges or self.legs:
            deg = [0] * n
            for u, v in self.edges:
                deg[u] += 1
                deg[v] += 1
            for v, _ in self.legs:
                deg[v] += 1
            if n > 1 and min(deg) == 0:
                raise ArgumentError("isolated vertex in a multi-vertex graph")

    # -- basic counts ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_legs(self) -> int:
        return len(self.legs)

    def valence(self, v: int) -> int:
        """Half-edges at v: loops count twice, legs once."""
        total = 0
        for a, b in self.edges:
            total += (a == v) + (b == v)
        total += sum(1 for w, _ in self.legs if w == v)
        return total

    def valences(self):
        return tuple(self.valence(v) for v in range(self.num_vertices))

    def multiplicities(self):
        """Dict (u, v) with u <= v -> number of parallel edges (or loops)."""
        m = {}
        for e in self.edges:
            m[e] = m.get(e, 0) + 1
        return m

    def leg_labels_at(self, v: int):
        return tuple(sorted(label for w, label in self.legs if w == v))

    def is_connected(self) -> bool:
        n = self.num_vertices
        if n == 1:
            return True
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def first_betti(self) -> int:
        """Cycle rank; the graph must be connected."""
        if not self.is_connected():
            raise ArgumentError("first Betti number needs a connected graph")
        return self.num_edges - self.num_vertices + 1

    def total_genus(self) -> int:
        return self.first_betti() + sum(self.genus)

    def relabeled(self, perm):
        """Apply a vertex permutation (perm[old] = new), keeping edge order."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.num_vertices)):
            raise ArgumentError("not a vertex permutation")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        legs = [(perm[v], label) for v, label in self.legs]
        genus = [0] * self.num_vertices
        for v, gv in enumerate(self.genus):
            genus[perm[v]] = gv
        return Multigraph(self.num_vertices, edges, legs, genus)

    # -- equality on the nose (not up to isomorphism) --------------------

    def _key(self):
        return (self.num_vertices, self.edges, self.legs, self.genus)

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Multigraph({self.num_vertices}, edges={list(self.edges)!r}, "
                f"legs={list(self.legs)!r}, genus={list(self.genus)!r})")


# -- serialization -------------------------------------------------------

def serialize(g: Multigraph) -> str:
    """Plain text encoding; round-trips bit-exactly through parse_graph.

    Header 'V <n> E <m> L <k>', then one 'e <u> <v>' line per edge in
    order, one 'l <v> <label>' line per leg in order, and one
    'g <v> <genus>' line per positive-genus vertex in vertex order.
    Vertex indices are 0-based.
    """
    lines = [f"V {g.num_vertices} E {g.num_edges} L {g.num_legs}"]
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    for v, label in g.legs:
        lines.append(f"l {v} {label}")
    for v, gv in enumerate(g.genus):
        if gv > 0:
            lines.append(f"g {v} {gv}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Multigraph:
    """Inverse of serialize; raises ArgumentError on malformed input."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ArgumentError("empty graph text")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "V" or head[2] != "E" or head[4] != "L":
        raise ArgumentError(f"bad header line: {lines[0]!r}")
    try:
        n, m, k = int(head[1]), int(head[3]), int(head[5])
    except ValueError as exc:
        raise ArgumentError(f"bad header counts: {lines[0]!r}") from exc
    edges, legs, genus = [], [], [0] * max(n, 1)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ArgumentError(f"bad graph line: {ln!r}")
        tag = parts[0]
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ArgumentError(f"bad graph line: {ln!r}") from exc
        if tag == "e":
            edges.append((a, b))
        elif tag == "l":
            legs.append((a, b))
        elif tag == "g":
            if not 0 <= a < n:
                raise ArgumentError(f"genus line vertex out of range: {ln!r}")
            if genus[a] != 0:
                raise ArgumentError(f"duplicate genus line for vertex {a}")
            genus[a] = b
        else:
            raise ArgumentError(f"unknown line tag: {ln!r}")
    if len(edges) != m or len(legs) != k:
        raise ArgumentError("edge or leg count does not match header")
    return Multigraph(n, edges, legs, genus)


# -- canonical form and automorphisms ------------------------------------

def _refined_colors(g: Multigraph):
    """Stable vertex coloring refined by neighbor colors.

    Returns a list of integer colors; the integers order color classes
    canonically (they are ranks of sorted invariant keys).
    """
    n = g.num_vertices
    mult = g.multiplicities()
    keys = [
        (g.genus[v], g.valence(v), mult.get((v, v), 0), g.leg_labels_at(v))
        for v in range(n)
    ]
    order = sorted(set(keys))
    colors = [order.index(k) for k in keys]
    while True:
        new_keys = []
        for v in range(n):
            nbrs = []
            for (a, b), m in mult.items():
                if a == b:
                    continue
                if a == v:
                    nbrs.append((colors[b], m))
                elif b == v:
                    nbrs.append((colors[a], m))
            new_keys.append((colors[v], tuple(sorted(nbrs))))
        order = sorted(set(new_keys))
        new_colors = [order.index(k) for k in new_keys]
        if new_colors == colors:
            return colors
        colors = new_colors


def _signature(g: Multigraph, perm):
    genus = [0] * g.num_vertices
    for v, gv in enumerate(g.genus):
        genus[perm[v]] = gv
    edges = sorted(
        (perm[u], perm[v]) if perm[u] <= perm[v] else (perm[v], perm[u])
        for u, v in g.edges
    )
    legs = sorted((perm[v], label) for v, label in g.legs)
    return (g.num_vertices, tuple(genus), tuple(edges), tuple(legs))


def _class_permutations(colors):
    """Yield vertex permutations (old -> new) refining the color order."""
    n = len(colors)
    groups = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    ordered_groups = [groups[c] for c in sorted(groups)]
    starts = []
    pos = 0
    for grp in ordered_groups:
        starts.append(pos)
        pos += len(grp)
    for arrangement in product(*(permutations(grp) for grp in ordered_groups)):
        perm = [0] * n
        for grp_order, start in zip(arrangement, starts):
            for offset, v in enumerate(grp_order):
                perm[v] = start + offset
        yield tuple(perm)


def canonical_form(g: Multigraph):
    """Canonical representative and a relabeling that reaches it.

    Returns (canonical_graph, perm) with perm[old] = new such that
    g.relabeled(perm) equals canonical_graph up to edge and leg order;
    the canonical graph stores edges and legs sorted.  Two graphs are
    isomorphic exactly when their canonical graphs are equal.
    """
    colors = _refined_colors(g)
    best_sig = None
    best_perm = None
    for perm in _class_permutations(colors):
        sig = _signature(g, perm)
        if best_sig is None or sig < best_sig:
            best_sig = sig
            best_perm = perm
    n, genus, edges, legs = best_sig
    return Multigraph(n, edges, legs, genus), best_perm


def canonical_key(g: Multigraph) -> str:
    """Serialized canonical form; equal strings mean isomorphic graphs."""
    return serialize(canonical_form(g)[0])


def automorphisms(g: Multigraph):
    """All vertex permutations preserving edges, legs, and genus.

    Half-edge symmetries (loop flips, parallel edge swaps, unlabeled leg
    swaps) are not enumerated here; automorphism_group_order accounts
    for them by a product of local factors.
    """
    colors = _refined_colors(g)
    mult = g.multiplicities()
    n = g.num_vertices
    groups = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)

    found = []
    for arrangement in product(
        *(permutations(grp) for grp in (groups[c] for c in sorted(groups)))
    ):
        perm = [0] * n
        ok = True
        for grp, images in zip((groups[c] for c in sorted(groups)), arrangement):
            for v, w in zip(grp, images):
                perm[v] = w
        for v in range(n):
            if g.genus[perm[v]] != g.genus[v]:
                ok = False
                break
            if g.leg_labels_at(perm[v]) != g.leg_labels_at(v):
                ok = False
                break
        if ok:
            for (u, v), m in mult.items():
                a, b = perm[u], perm[v]
                if a > b:
                    a, b = b, a
                if mult.get((a, b), 0) != m:
                    ok = False
                    break
        if ok:
            found.append(tuple(perm))
    return found


def automorphism_group_order(g: Multigraph) -> int:
    """Order of the half-edge automorphism group.

    Valid vertex permutations times, independently per fiber: parallel
    edge swaps m!, loop swaps and flips l! * 2^l, unlabeled leg swaps u!.
    """
    import math

    total = len(automorphisms(g))
    for (u, v), m in g.multiplicities().items():
        if u == v:
            total *= math.factorial(m) * 2 ** m
        else:
            total *= math.factorial(m)
    if g.legs and g.legs[0][1] == 0:
        per_vertex = {}
        for v, _ in g.legs:
            per_vertex[v] = per_vertex.get(v, 0) + 1
        for count in per_vertex.values():
            total *= math.factorial(count)
    return total


# -- enumeration ----------------------------------------------------------

def _symmetric_matrices(residual, allow_loops, allow_parallel):
    """Yield upper triangular multiplicity rows realizing the residual
    degrees; loops sit on the diagonal and count 2 toward their vertex."""
    n = len(residual)
    cells = [(u, v) for u in range(n) for v in range(u, n)]

    def cap(u, v, rem):
        if u == v:
            if not allow_loops:
                return 0
            return rem[u] // 2
        c = min(rem[u], rem[v])
        if not allow_parallel:
            c = min(c, 1)
        return c

    def remaining_capacity(idx, rem):
        # upper bound on what later cells can still absorb per vertex
        bound = [0] * n
        for u, v in cells[idx:]:
            c = cap(u, v, rem)
            if u == v:
                bound[u] += 2 * c
            else:
                bound[u] += c
                bound[v] += c
        return all(bound[v] >= rem[v] for v in range(n))

    rem = list(residual)
    choice = []

    def rec(idx):
        if idx == len(cells):
            if all(r == 0 for r in rem):
                yield dict(zip(cells, choice))
            return
        u, v = cells[idx]
        # once all cells touching u are behind us, rem[u] must be settled
        if not remaining_capacity(idx, rem):
            return
        top = cap(u, v, rem)
        for m in range(top + 1):
            take = 2 * m if u == v else m
            if u == v:
                rem[u] -= take
            else:
                rem[u] -= m
                rem[v] -= m
            choice.append(m)
            yield from rec(idx + 1)
            choice.pop()
            if u == v:
                rem[u] += take
            else:
                rem[u] += m
                rem[v] += m

    yield from rec(0)


def enumerate_graphs(num_vertices, degree_sequence, num_legs=0,
                     allow_loops=False, allow_parallel=True):
    """Connected multigraphs up to isomorphism with given valences.

    degree_sequence lists one valence per vertex (order irrelevant).
    When num_legs > 0 the legs get the distinct labels 1..num_legs.
    Returns canonical representatives sorted by canonical key.
    """
    n = int(num_vertices)
    k = int(num_legs)
    if n < 0 or k < 0:
        raise ArgumentError("vertex and leg counts must be nonnegative")
    if n == 0:
        return []
    degrees = sorted((int(d) for d in degree_sequence), reverse=True)
    if len(degrees) != n:
        raise ArgumentError("degree sequence length must match vertex count")
    if degrees and degrees[-1] < 0:
        raise ArgumentError("valences must be nonnegative")
    total = sum(degrees)
    if (total - k) % 2 != 0 or total < k:
        return []

    reps = {}
    for assignment in product(range(n), repeat=k):
        residual = list(degrees)
        legs = []
        ok = True
        for label, v in enumerate(assignment, start=1):
            residual[v] -= 1
            legs.append((v, label))
            if residual[v] < 0:
                ok = False
                break
        if not ok:
            continue
        for matrix in _symmetric_matrices(residual, allow_loops, allow_parallel):
            edges = []
            for (u, v), m in sorted(matrix.items()):
                edges.extend([(u, v)] * m)
            try:
                g = Multigraph(n, edges, legs)
            except ArgumentError:
                continue
            if not g.is_connected():
                continue
            key = canonical_key(g)
            if key not in reps:
                reps[key] = canonical_form(g)[0]
    return [reps[key] for key in sorted(reps)]


# -- contraction ----------------------------------------------------------

def contract_edge(g: Multigraph, edge_index: int) -> Multigraph:
    """Contract a non-loop edge, merging its endpoints.

    The merged vertex keeps the smaller index and the two genera add.
    Edge order is preserved (with the contracted edge removed), so the
    first Betti number is unchanged.  Loops are rejected; see
    contract_loop for the genus-raising convention.
    """
    if not 0 <= edge_index < g.num_edges:
        raise ArgumentError(f"no edge with index {edge_index}")
    u, v = g.edges[edge_index]
    if u == v:
        raise LoopContractionError("cannot contract a loop edge this way")

    def remap(x):
        if x == v:
            return u
        return x - 1 if x > v else x

    edges = [
        (remap(a), remap(b))
        for i, (a, b) in enumerate(g.edges)
        if i != edge_index
    ]
    legs = [(remap(w), label) for w, label in g.legs]
    genus = list(g.genus)
    genus[u] += genus[v]
    del genus[v]
    return Multigraph(g.num_vertices - 1, edges, legs, genus)


def contract_loop(g: Multigraph, edge_index: int) -> Multigraph:
    """Remove a loop edge and raise its vertex genus by 1.

    This is the contraction convention for cycles collapsing to a point:
    the total genus (first Betti number plus vertex genera) is preserved.
    """
    if not 0 <= edge_index < g.num_edges:
        raise ArgumentError(f"no edge with index {edge_index}")
    u, v = g.edges[edge_index]
    if u != v:
        raise ArgumentError("contract_loop needs a loop edge")
    edges = [e for i, e in enumerate(g.edges) if i != edge_index]
    genus = list(g.genus)
    genus[u] += 1
    return Multigraph(g.num_vertices, edges, g.legs, genus)


# -- local conditions ------------------------------------------------------

def check_balancing(flags):
    """Check that all direction groups of flags carry equal total weight.

    flags is an iterable of (direction_tag, weight) pairs with positive
    integer weights.  Returns the common group sum (the local degree) or
    None if the groups disagree.
    """
    sums = {}
    for tag, weight in flags:
        w = int(weight)
        if w < 1:
            raise ArgumentError("flag weights must be positive integers")
        sums[tag] = sums.get(tag, 0) + w
    if not sums:
        raise ArgumentError("no flags to balance")
    values = set(sums.values())
    if len(values) > 1:
        return None
    return values.pop()


def local_rh_defect(local_degree, image_genus, vertex_genus, flag_weights):
    """Local Riemann-Hurwitz defect at a vertex.

    d * (2 - 2 * image_genus) - sum(w - 1) - (2 - 2 * vertex_genus);
    nonnegative defects are the locally realizable ones.
    """
    d = int(local_degree)
    if d < 1:
        raise ArgumentError("local degree must be positive")
    weights = [int(w) for w in flag_weights]
    if any(w < 1 for w in weights):
        raise ArgumentError("flag weights must be positive integers")
    return (d * (2 - 2 * int(image_genus))
            - sum(w - 1 for w in weights)
            - (2 - 2 * int(vertex_genus)))
