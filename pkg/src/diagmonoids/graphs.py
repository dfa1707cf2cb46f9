"""Projection graphs, Graham-Houghton graphs, generation criteria, and
exact matching/permanent counting.

The projection graph of a top singular J-class has the class's projections
as vertices and an edge p -> q whenever pq keeps the class's rank.  Adding
red edges for a chosen idempotent set F turns generation of the singular
ideal by F into a reachability question (RBR-alternating circuits).
"""

import json
from dataclasses import dataclass, field

from .diagram import PartitionDiagram, Transformation, compose, generator, star
from .families import Family, MonoidFamily
from .semigroup import iter_elements_guarded, l_class_key, r_class_key


@dataclass(frozen=True)
class TwoColouredDigraph:
    """Directed graph with blue and red edges over labelled vertices.

    `elements` optionally carries the projection diagram behind each vertex.
    """

    vertices: tuple
    blue: frozenset
    red: frozenset = frozenset()
    elements: tuple = None

    def __post_init__(self):
        nv = len(self.vertices)
        for (u, v) in list(self.blue) + list(self.red):
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"edge ({u}, {v}) out of range")

    def with_red(self, red_edges):
        return TwoColouredDigraph(self.vertices, self.blue,
                                  frozenset(red_edges), self.elements)

    def vertex_index(self, label):
        return self.vertices.index(label)

    def blue_adjacency(self):
        """0/1 adjacency matrix of the blue edges (list of row lists)."""
        nv = len(self.vertices)
        mat = [[0] * nv for _ in range(nv)]
        for (u, v) in self.blue:
            mat[u][v] = 1
        return mat

    def to_json(self) -> str:
        payload = {
            "vertices": [_label_str(v) for v in self.vertices],
            "blue": sorted(map(list, self.blue)),
            "red": sorted(map(list, self.red)),
        }
        return json.dumps(payload, separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{_label_str(v)}"];')
        for colour, edges in (("blue", self.blue), ("red", self.red)):
            for (u, v) in sorted(edges):
                lines.append(f"  v{u} -> v{v} [color={colour}];")
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with labelled sides; edges are (left, right) index pairs."""

    left: tuple
    right: tuple
    edges: frozenset

    def neighbour_masks(self):
        masks = [0] * len(self.left)
        for (i, lam) in self.edges:
            masks[i] |= 1 << lam
        return masks

    def to_json(self) -> str:
        payload = {
            "left": [_label_str(v) for v in self.left],
            "right": [_label_str(v) for v in self.right],
            "edges": sorted(map(list, self.edges)),
        }
        return json.dumps(payload, separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["graph {"]
        for i, v in enumerate(self.left):
            lines.append(f'  l{i} [label="{_label_str(v)}"];')
        for j, v in enumerate(self.right):
            lines.append(f'  r{j} [label="{_label_str(v)}"];')
        for (i, j) in sorted(self.edges):
            lines.append(f"  l{i} -- r{j};")
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph; edges are frozensets of vertex indices."""

    vertices: tuple
    edges: frozenset


def _label_str(label):
    if isinstance(label, tuple):
        return "".join(map(str, label)) if all(
            isinstance(x, int) and x < 10 for x in label
        ) else "_".join(map(str, label))
    return str(label)


# -- projection graph -----------------------------------------------------------

def top_projections(family: MonoidFamily):
    """(labels, diagrams) for the projections of the top singular J-class."""
    n = family.n
    if family.tag == Family.PARTITION:
        labels = [(i,) for i in range(1, n + 1)]
        labels += [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        diagrams = [generator("pi_i", lab, n) if len(lab) == 1
                    else generator("pi_ij", lab, n) for lab in labels]
    elif family.tag == Family.BRAUER:
        labels = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        diagrams = [generator("tau_ij", lab, n) for lab in labels]
    elif family.tag == Family.JONES:
        labels = [(i,) for i in range(1, n)]
        diagrams = [generator("tau_i", lab, n) for lab in labels]
    else:
        raise ValueError(f"no projection graph for family {family.tag}")
    return tuple(labels), tuple(diagrams)


def projection_graph(family: MonoidFamily, r: int = None) -> TwoColouredDigraph:
    """Blue digraph on the projections of the top singular J-class, with an
    edge p -> q iff pq stays in the class."""
    top = family.top_singular_rank
    if r is None:
        r = top
    if r != top:
        raise ValueError(
            f"projection graph is defined for the top singular rank {top}, got {r}")
    labels, diagrams = top_projections(family)
    blue = set()
    for i, p in enumerate(diagrams):
        for j, q in enumerate(diagrams):
            if (p * q).rank == r:
                blue.add((i, j))
    return TwoColouredDigraph(tuple(labels), frozenset(blue),
                              elements=tuple(diagrams))


# -- Graham-Houghton graph --------------------------------------------------------

def graham_houghton(family: MonoidFamily, r: int = None) -> BipartiteGraph:
    """Bipartite graph on the R- and L-classes of the top singular J-class,
    with an edge where the H-class contains an idempotent."""
    top = family.top_singular_rank
    if r is None:
        r = top
    if r != top:
        raise ValueError(
            f"Graham-Houghton graph is built for the top singular rank {top}, got {r}")
    idem_pairs = set()
    rkeys, lkeys = set(), set()
    for x in iter_elements_guarded(family):
        if x.rank != r:
            continue
        rk, lk = r_class_key(family, x), l_class_key(family, x)
        rkeys.add(rk)
        lkeys.add(lk)
        if _is_idem(x):
            idem_pairs.add((rk, lk))
    left = tuple(sorted(rkeys))
    right = tuple(sorted(lkeys))
    lidx = {k: i for i, k in enumerate(left)}
    ridx = {k: i for i, k in enumerate(right)}
    edges = frozenset((lidx[a], ridx[b]) for (a, b) in idem_pairs)
    return BipartiteGraph(left, right, edges)


def _is_idem(x):
    if isinstance(x, PartitionDiagram):
        return compose(x, x)[0] == x
    return x.compose(x) == x


# -- red edges from idempotent sets -----------------------------------------------

def add_red(graph: TwoColouredDigraph, idempotents) -> TwoColouredDigraph:
    """Add the red edges p -> q for each idempotent f = pq in the set.

    Decodes f via its projections: p = f f*, q = f* f; rejects anything that
    is not an idempotent of the graph's J-class.
    """
    if graph.elements is None:
        raise ValueError("graph carries no projection payload")
    index = {d: i for i, d in enumerate(graph.elements)}
    red = set()
    for f in idempotents:
        p = compose(f, star(f))[0]
        q = compose(star(f), f)[0]
        if p not in index or q not in index or compose(p, q)[0] != f:
            raise ValueError(f"{f} is not an idempotent of this J-class")
        red.add((index[p], index[q]))
    return graph.with_red(red)


# -- RBR-alternating circuits ------------------------------------------------------

@dataclass
class RBRResult:
    ok: bool
    witnesses: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def rbr_generates(graph: TwoColouredDigraph) -> RBRResult:
    """Is every vertex the base point of a circuit whose arcs alternate
    red, blue, red, ..., red?

    Searches the doubled state space (vertex, colour of the arc just taken)
    separately from each base point; a witness circuit is recorded per vertex.
    """
    nv = len(graph.vertices)
    red_out = [[] for _ in range(nv)]
    blue_out = [[] for _ in range(nv)]
    for (u, v) in sorted(graph.red):
        red_out[u].append(v)
    for (u, v) in sorted(graph.blue):
        blue_out[u].append(v)

    witnesses, failures = {}, []
    for base in range(nv):
        circuit = _rbr_circuit_from(base, red_out, blue_out)
        if circuit is None:
            failures.append(base)
        else:
            witnesses[base] = circuit
    return RBRResult(ok=not failures, witnesses=witnesses, failures=failures)


def _rbr_circuit_from(base, red_out, blue_out):
    # states: (vertex, last_colour); last colour red = 0, blue = 1
    parent = {}
    frontier = []
    for v in red_out[base]:
        state = (v, 0)
        if state not in parent:
            parent[state] = None
            frontier.append(state)
    goal = (base, 0)
    if goal in parent:
        return _rebuild(parent, goal, base)
    while frontier:
        nxt = []
        for (u, c) in frontier:
            out = blue_out[u] if c == 0 else red_out[u]
            colour = 1 - c
            for v in out:
                state = (v, colour)
                if state not in parent:
                    parent[state] = (u, c)
                    if state == goal:
                        return _rebuild(parent, goal, base)
                    nxt.append(state)
        frontier = nxt
    return None


def _rebuild(parent, state, base):
    arcs = []
    while state is not None:
        v, c = state
        prev = parent[state]
        u = base if prev is None else prev[0]
        arcs.append(("red" if c == 0 else "blue", u, v))
        state = prev
    arcs.reverse()
    return arcs


def red_circuit_cover(graph: TwoColouredDigraph):
    """(ok, failures): is every vertex on a directed cycle of red edges?

    A vertex lies on a red cycle iff it has a red loop or its strongly
    connected component in the red subgraph contains another vertex.
    """
    nv = len(graph.vertices)
    out = [[] for _ in range(nv)]
    loops = set()
    for (u, v) in graph.red:
        if u == v:
            loops.add(u)
        else:
            out[u].append(v)
    comp = _tarjan_scc(nv, out)
    size = {}
    for c in comp:
        size[c] = size.get(c, 0) + 1
    failures = [v for v in range(nv)
                if v not in loops and size[comp[v]] < 2]
    return (not failures, failures)


def _tarjan_scc(nv, out):
    index = [None] * nv
    low = [0] * nv
    on_stack = [False] * nv
    comp = [None] * nv
    stack, counter, ncomp = [], 0, 0
    for root in range(nv):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(out[v])):
                w = out[v][i]
                if index[w] is None:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def red_degrees_positive(graph: TwoColouredDigraph) -> bool:
    """Necessary condition: every vertex has red in- and out-degree >= 1."""
    nv = len(graph.vertices)
    din, dout = [0] * nv, [0] * nv
    for (u, v) in graph.red:
        dout[u] += 1
        din[v] += 1
    return all(din[v] and dout[v] for v in range(nv))


# -- balanced subgraphs and permanents ----------------------------------------------

def balanced_subgraphs(graph: TwoColouredDigraph, mode: str = "count"):
    """Spanning subgraphs with in- and out-degree exactly 1 at every vertex.

    mode="count" returns their number (the permanent of the blue adjacency
    matrix); mode="enumerate" returns the list of edge sets.
    """
    mat = graph.blue_adjacency()
    if mode == "count":
        return permanent(mat)
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    n = len(mat)
    masks = [sum(1 << j for j, v in enumerate(row) if v) for row in mat]
    out = []
    pick = [0] * n

    def rec(i, free):
        if i == n:
            out.append(tuple((v, pick[v]) for v in range(n)))
            return
        avail = masks[i] & free
        while avail:
            b = avail & -avail
            avail ^= b
            pick[i] = b.bit_length() - 1
            rec(i + 1, free ^ b)

    rec(0, (1 << n) - 1)
    return out


def permanent(matrix) -> int:
    """Exact permanent of a 0/1 matrix (arbitrary-precision integer).

    Dense matrices up to 24x24 go through Ryser's inclusion-exclusion with
    Gray-code updates; sparse ones through row expansion memoized on the
    free-column mask.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
        if any(v not in (0, 1) for v in row):
            raise ValueError("entries must be 0 or 1")
    if n == 0:
        return 1
    ones = sum(map(sum, rows))
    if n <= 24 and ones * 2 >= n * n:
        return _permanent_ryser(rows)
    masks = [sum(1 << j for j, v in enumerate(row) if v) for row in rows]
    masks.sort(key=lambda m: m.bit_count())
    return _permanent_expand(masks, n)


def _permanent_ryser(rows):
    # perm(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij,
    # with the column subsets S visited in Gray-code order.
    n = len(rows)
    rowsums = [0] * n
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        new_gray = k ^ (k >> 1)
        bit = gray ^ new_gray
        j = bit.bit_length() - 1
        delta = 1 if new_gray & bit else -1
        for i in range(n):
            rowsums[i] += delta * rows[i][j]
        gray = new_gray
        prod = 1
        for s in rowsums:
            if not s:
                prod = 0
                break
            prod *= s
        total += prod if new_gray.bit_count() % 2 == 0 else -prod
    return total if n % 2 == 0 else -total


def _permanent_expand(masks, n, _memo=None):
    memo = {} if _memo is None else _memo

    def rec(d, free):
        if d == n:
            return 1
        cached = memo.get(free)
        if cached is not None:
            return cached
        total = 0
        avail = masks[d] & free
        while avail:
            b = avail & -avail
            avail ^= b
            total += rec(d + 1, free ^ b)
        memo[free] = total
        return total

    return rec(0, (1 << n) - 1)


# -- strong Hall condition ------------------------------------------------------------

EXHAUSTIVE_HALL_LIMIT = 20


def strong_hall(graph: BipartiteGraph) -> bool:
    """|N(A)| > |A| for every nonempty proper subset A of the left side.

    Checked exhaustively up to 20 left vertices; beyond that via the
    matching characterization: the condition holds iff deleting any one
    left and any one right vertex leaves a perfectly matchable graph.
    """
    nl, nr = len(graph.left), len(graph.right)
    if nl != nr:
        raise ValueError(f"sides must balance, got {nl} vs {nr}")
    masks = graph.neighbour_masks()
    if nl <= EXHAUSTIVE_HALL_LIMIT:
        for subset in range(1, (1 << nl) - 1):
            nb = 0
            s = subset
            while s:
                b = s & -s
                s ^= b
                nb |= masks[b.bit_length() - 1]
            if nb.bit_count() <= subset.bit_count():
                return False
        return True
    for x in range(nl):
        for y in range(nr):
            if not _has_perfect_matching(
                    [masks[i] & ~(1 << y) for i in range(nl) if i != x], nr):
                return False
    return True


def _has_perfect_matching(left_masks, nr) -> bool:
    match_r = [-1] * nr

    def augment(i, visited):
        avail = left_masks[i] & ~visited[0]
        while avail:
            b = avail & -avail
            avail ^= b
            j = b.bit_length() - 1
            visited[0] |= b
            if match_r[j] < 0 or augment(match_r[j], visited):
                match_r[j] = i
                return True
        return False

    for i in range(len(left_masks)):
        if not augment(i, [0]):
            return False
    return True


# -- tournaments for the transformation monoid -----------------------------------------

def tournament_generates(idempotents, n: int) -> bool:
    """Do the rank-(n-1) idempotents generate the singular transformation
    semigroup?  True iff the digraph with an arc j -> i per idempotent
    sending i to j is a strongly connected tournament."""
    if n < 3:
        raise ValueError("need degree >= 3")
    arcs = set()
    for f in idempotents:
        if not isinstance(f, Transformation) or f.n != n:
            raise ValueError(f"expected degree-{n} transformations")
        if f.rank != n - 1 or not f.is_idempotent():
            raise ValueError(f"{f} is not a rank-{n - 1} idempotent")
        moved = [i for i in range(1, n + 1) if f(i) != i]
        (i,) = moved
        arcs.add((f(i), i))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if ((a, b) in arcs) == ((b, a) in arcs):
                return False  # not a tournament
    out = [[] for _ in range(n)]
    for (u, v) in arcs:
        out[u - 1].append(v - 1)
    comp = _tarjan_scc(n, out)
    return len(set(comp)) == 1


# -- Johnson graphs ----------------------------------------------------------------------

def johnson_graph(n: int) -> SimpleGraph:
    """J(n, 2): vertices the 2-subsets of [n], edges where subsets share a point."""
    if n < 2:
        raise ValueError("need n >= 2")
    vertices = tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))
    edges = set()
    for a, A in enumerate(vertices):
        for b in range(a + 1, len(vertices)):
            if set(A) & set(vertices[b]):
                edges.add(frozenset((a, b)))
    return SimpleGraph(vertices, frozenset(edges))


def iso_check(j_graph: SimpleGraph, gamma: TwoColouredDigraph) -> bool:
    """Does mapping the 2-subset {i,j} to the graph vertex (i,j) carry J(n,2)
    onto the loop-free undirected blue graph?"""
    try:
        mapping = [gamma.vertex_index(v) for v in j_graph.vertices]
    except ValueError:
        return False
    undirected = {frozenset((u, v)) for (u, v) in gamma.blue if u != v}
    for (u, v) in gamma.blue:
        if u != v and (v, u) not in gamma.blue:
            return False
    image = {frozenset((mapping[a], mapping[b]))
             for e in j_graph.edges for a, b in [tuple(sorted(e))]}
    return image == undirected
