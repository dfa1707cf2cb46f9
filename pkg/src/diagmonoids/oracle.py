"""Brute-force verifiers that back every derived value at desk scale.

These deliberately avoid the graph-theoretic criteria: generation questions
are settled by direct closure over a tabulated ideal, tournament counts by
testing every orientation.  Guards abort with the estimated cost instead of
running open-endedly.
"""

import random
from functools import lru_cache
from itertools import combinations

from . import counting, graphs
from .diagram import compose, star
from .families import Family, MonoidFamily
from .semigroup import (MultiplicationTable, closure_size_from_columns,
                        family_product, ideal_elements, iter_elements_guarded,
                        r_class_key)

IDEMPOTENT_GUARD_MIN = 30     # for size-rho subset scans; degree-4 Brauer needs 30
IDEMPOTENT_GUARD_ALL = 22     # for all-subsets scans
TABLE_GUARD = 2000            # ideal size above which no table is built
TOURNAMENT_GUARD = 6


class GuardExceeded(ValueError):
    pass


def top_class_idempotents(family: MonoidFamily) -> list:
    """Idempotents of the top singular J-class, by direct scan."""
    r = family.top_singular_rank
    product = family_product(family)
    return [x for x in iter_elements_guarded(family)
            if x.rank == r and product(x, x) == x]


class SingularIdealOracle:
    """Tabulated product structure of the ideal below the units.

    Everything generation-related is answered by breadth-first closure over
    the multiplication table; no projection-graph reasoning is involved.
    """

    def __init__(self, family: MonoidFamily):
        self.family = family
        self.r_top = family.top_singular_rank
        elements = sorted(ideal_elements(family, self.r_top), key=str)
        if len(elements) > TABLE_GUARD:
            raise GuardExceeded(
                f"ideal has {len(elements)} elements; the product table would "
                f"hold {len(elements)**2} entries (guard {TABLE_GUARD})")
        self.table = MultiplicationTable(elements, family_product(family))
        self.size = len(elements)
        self.idempotent_indices = tuple(
            i for i, x in enumerate(elements)
            if x.rank == self.r_top and self.table.table[i][i] == i)
        self.columns = {e: self._column(e) for e in self.idempotent_indices}
        self.rank = len({r_class_key(family, elements[i])
                         for i, x in enumerate(elements)
                         if x.rank == self.r_top})

    def _column(self, g):
        n = self.size
        col = [self.table.table[s][g] for s in range(n)]
        return bytes(col) if n <= 255 else col

    def idempotents(self):
        return [self.table.elements[i] for i in self.idempotent_indices]

    def generates(self, idem_subset_indices) -> bool:
        cols = [self.columns[e] for e in idem_subset_indices]
        return closure_size_from_columns(
            cols, idem_subset_indices, self.size) == self.size

    def generates_elements(self, idempotents) -> bool:
        return self.generates(tuple(self.table.index[e] for e in idempotents))


@lru_cache(maxsize=None)
def singular_ideal_oracle(family: MonoidFamily) -> SingularIdealOracle:
    return SingularIdealOracle(family)


def brute_min_idgen_count(family: MonoidFamily, n: int = None) -> int:
    """Count the minimum-size idempotent generating sets of the singular
    ideal by closing every candidate subset, no graph theory."""
    family = _with_degree(family, n)
    oracle = singular_ideal_oracle(family)
    ne = len(oracle.idempotent_indices)
    if ne > IDEMPOTENT_GUARD_MIN:
        raise GuardExceeded(
            f"{ne} idempotents gives C({ne},{oracle.rank}) subsets; guard is "
            f"{IDEMPOTENT_GUARD_MIN} idempotents")
    count = 0
    size = oracle.size
    cols_of = oracle.columns
    for subset in combinations(oracle.idempotent_indices, oracle.rank):
        cols = [cols_of[e] for e in subset]
        if closure_size_from_columns(cols, subset, size) == size:
            count += 1
    return count


def brute_idgen_subset_count(family: MonoidFamily, n: int = None) -> int:
    """Count ALL subsets of the top-class idempotents that generate the
    singular ideal."""
    family = _with_degree(family, n)
    oracle = singular_ideal_oracle(family)
    ne = len(oracle.idempotent_indices)
    if ne > IDEMPOTENT_GUARD_ALL:
        raise GuardExceeded(f"2^{ne} subsets; guard is 2^{IDEMPOTENT_GUARD_ALL}")
    count = 0
    idems = oracle.idempotent_indices
    for mask in range(1 << ne):
        subset = tuple(idems[i] for i in range(ne) if (mask >> i) & 1)
        if oracle.generates(subset):
            count += 1
    return count


def _with_degree(family, n):
    if isinstance(family, MonoidFamily):
        if n is not None and n != family.n:
            raise ValueError("degree given twice")
        return family
    return MonoidFamily(family, n)


def brute_strong_tournaments(n: int) -> int:
    """Count strongly connected orientations of the complete graph on [n]."""
    if n > TOURNAMENT_GUARD:
        raise GuardExceeded(
            f"2^{n * (n - 1) // 2} orientations; guard is n <= {TOURNAMENT_GUARD}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    count = 0
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        out = [0] * n
        inn = [0] * n
        for b, (i, j) in enumerate(pairs):
            if (mask >> b) & 1:
                out[i] |= 1 << j
                inn[j] |= 1 << i
            else:
                out[j] |= 1 << i
                inn[i] |= 1 << j
        if _reach(out, n) == full and _reach(inn, n) == full:
            count += 1
    return count


def _reach(nbr, n):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = frontier
        while v:
            b = v & -v
            v ^= b
            nxt |= nbr[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


# -- theorem verification -------------------------------------------------------

def verify_theorem(theorem_id: str, ns) -> list[dict]:
    """Run the named check for each n; returns one report row per instance."""
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; "
                       f"known: {sorted(THEOREMS)}")
    fn = THEOREMS[theorem_id]
    rows = []
    for n in ns:
        status, witness = fn(n)
        row = {"theorem": theorem_id, "instance": f"n={n}",
               "status": "pass" if status else "fail"}
        if witness is not None:
            row["witness"] = witness
        rows.append(row)
    return rows


def _family_tag_top(tag):
    def get(n):
        return MonoidFamily(tag, n)
    return get


def _rank_formula(tag):
    def check(n):
        from .semigroup import green_classes
        fam = MonoidFamily(tag, n)
        bad = []
        for d in green_classes(fam):
            if d.r >= n or (tag == Family.FULL_TRANSFORMATION and d.r < 1):
                continue
            formula = counting.rank_ideal(tag, n, d.r)
            enumerated = (max(d.r_class_count, d.l_class_count)
                          if tag == Family.FULL_TRANSFORMATION
                          else d.r_class_count)
            if formula != enumerated:
                bad.append({"r": d.r, "formula": formula, "classes": enumerated})
        return (not bad, bad or None)
    return check


def _idem_edges(family: MonoidFamily):
    """All idempotents of the top singular J-class, via the oracle table."""
    return singular_ideal_oracle(family).idempotents()


def _generation_checks(family: MonoidFamily, subset):
    gamma = graphs.projection_graph(family)
    coloured = graphs.add_red(gamma, subset)
    rbr = graphs.rbr_generates(coloured).ok
    red = graphs.red_circuit_cover(coloured)[0]
    gen = singular_ideal_oracle(family).generates_elements(subset)
    return rbr, red, gen


def _rbr_iff_generates(tag, exhaustive_upto, samples=4096):
    def check(n):
        fam = MonoidFamily(tag, n)
        idems = _idem_edges(fam)
        ne = len(idems)
        if n <= exhaustive_upto:
            masks = range(1 << ne)
        else:
            rng = random.Random(20_000 + 31 * n)
            masks = (rng.getrandbits(ne) for _ in range(samples))
        bad = None
        generating = 0
        for mask in masks:
            subset = [idems[i] for i in range(ne) if (mask >> i) & 1]
            rbr, red, gen = _generation_checks(fam, subset)
            if rbr != gen or (tag == Family.JONES and red != rbr):
                bad = {"mask": mask, "rbr": rbr, "red_circuit": red,
                       "closure": gen}
                break
            generating += gen
        witness = bad if bad else {"generating_subsets": generating}
        return (bad is None, witness)
    return check


def _dropdown(tag):
    def check(n):
        fam = MonoidFamily(tag, n)
        step = 1 if tag == Family.PARTITION else 2
        product = family_product(fam)
        ranks = [r for r in fam.ranks() if r + step < n]
        from .semigroup import closure
        bad = []
        for r in ranks:
            upper_projs = [x for x in iter_elements_guarded(fam)
                           if x.rank == r + step and star(x) == x
                           and compose(x, x)[0] == x]
            generated = set(closure(upper_projs, product))
            expected = set(ideal_elements(fam, r + step))
            lower_projs = [x for x in expected
                           if x.rank == r and star(x) == x
                           and compose(x, x)[0] == x]
            if generated != expected or any(p not in generated
                                            for p in lower_projs):
                bad.append({"r": r})
        return (not bad, bad or None)
    return check


def _idempotent_count_top_partition(n):
    fam = MonoidFamily(Family.PARTITION, n)
    got = len(_idem_edges(fam))
    want = (5 * n * n - 3 * n) // 2
    return (got == want, {"count": got, "formula": want})


def _product_table(tag):
    def check(n):
        from .diagram import generator
        fam = MonoidFamily(tag, n)
        labels, projs = graphs.top_projections(fam)
        r = fam.top_singular_rank
        bad = []
        for la, p in zip(labels, projs):
            for lb, q in zip(labels, projs):
                got = compose(p, q)[0]
                want = _expected_projection_product(tag, la, lb, n)
                if want is None:
                    if got.rank >= r:
                        bad.append({"p": la, "q": lb, "unexpected": str(got)})
                elif got != want:
                    bad.append({"p": la, "q": lb})
        return (not bad, bad or None)
    return check


def _expected_projection_product(tag, la, lb, n):
    """The nonzero products of projection pairs in the top singular class,
    or None when the product must drop rank."""
    from .diagram import generator
    if la == lb:
        if tag == Family.PARTITION:
            return generator("pi_i" if len(la) == 1 else "pi_ij", la, n)
        if tag == Family.BRAUER:
            return generator("tau_ij", la, n)
        return generator("tau_i", la, n)
    if tag == Family.PARTITION:
        if len(la) == 2 and len(lb) == 1 and lb[0] in la:
            i, j = la
            return generator("lambda_ij", (i, j) if lb[0] == j else (j, i), n)
        if len(la) == 1 and len(lb) == 2 and la[0] in lb:
            i, j = lb
            return generator("rho_ij", (i, j) if la[0] == i else (j, i), n)
        return None
    if tag == Family.BRAUER:
        common = set(la) & set(lb)
        if len(common) == 1:
            (c,) = common
            (a,) = set(la) - common
            (b,) = set(lb) - common
            return generator("sigma_ijk", (a, c, b), n)
        return None
    # Jones
    i, j = la[0], lb[0]
    if j == i + 1:
        return generator("lambda_i", (i,), n)
    if j == i - 1:
        return generator("rho_i", (j,), n)
    return None


def _tournament_criterion(n):
    from .diagram import Transformation
    from .semigroup import enumerate_elements
    from .families import singular_transformation
    sing = enumerate_elements(singular_transformation(n))
    table = MultiplicationTable(sing, lambda a, b: a.compose(b))
    size = len(sing)
    idem = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                idem[(i, j)] = table.index[Transformation.point_idempotent(i, j, n)]
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    bad = None
    strong_count = 0
    for mask in range(1 << len(pairs)):
        arcs = []
        for b, (a, c) in enumerate(pairs):
            arcs.append((a, c) if (mask >> b) & 1 else (c, a))
        # arc j -> i corresponds to the idempotent sending i to j
        X = [Transformation.point_idempotent(i, j, n) for (j, i) in arcs]
        graph_says = graphs.tournament_generates(X, n)
        gens = tuple(idem[(i, j)] for (j, i) in arcs)
        cols = [bytes(table.table[s][g] for s in range(size)) for g in gens]
        closure_says = closure_size_from_columns(cols, gens, size) == size
        if graph_says != closure_says:
            bad = {"arcs": arcs, "graph": graph_says, "closure": closure_says}
            break
        strong_count += graph_says
    witness = bad if bad else {"strong_tournaments": strong_count}
    return (bad is None, witness)


def _w_formula(n):
    brute = brute_strong_tournaments(n)
    formula = counting.strong_tournament_count(n)
    return (brute == formula, {"brute": brute, "formula": formula})


def _min_idgen_triangle(tag, formula_fn):
    def check(n):
        fam = MonoidFamily(tag, n)
        by_closure = brute_min_idgen_count(fam)
        by_graph = graphs.balanced_subgraphs(graphs.projection_graph(fam))
        by_formula = formula_fn(n)
        ok = by_closure == by_graph == by_formula
        return (ok, {"closure": by_closure, "balanced": by_graph,
                     "formula": by_formula})
    return check


THEOREMS = {
    "rank_formula_partition": _rank_formula(Family.PARTITION),
    "rank_formula_brauer": _rank_formula(Family.BRAUER),
    "rank_formula_jones": _rank_formula(Family.JONES),
    "rank_formula_transformation": _rank_formula(Family.FULL_TRANSFORMATION),
    "rbr_iff_generates_jones": _rbr_iff_generates(Family.JONES, exhaustive_upto=5),
    "rbr_iff_generates_partition": _rbr_iff_generates(Family.PARTITION,
                                                      exhaustive_upto=2),
    "rbr_iff_generates_brauer": _rbr_iff_generates(Family.BRAUER,
                                                   exhaustive_upto=3),
    "dropdown_partition": _dropdown(Family.PARTITION),
    "dropdown_brauer": _dropdown(Family.BRAUER),
    "dropdown_jones": _dropdown(Family.JONES),
    "idempotent_count_jnm1": _idempotent_count_top_partition,
    "product_table_partition": _product_table(Family.PARTITION),
    "product_table_brauer": _product_table(Family.BRAUER),
    "product_table_jones": _product_table(Family.JONES),
    "tournament_criterion": _tournament_criterion,
    "w_formula": _w_formula,
    "min_idgen_partition": _min_idgen_triangle(
        Family.PARTITION, counting.min_idgen_sets_partition),
    "min_idgen_jones": _min_idgen_triangle(
        Family.JONES, counting.min_idgen_sets_jones),
    "min_idgen_brauer": _min_idgen_triangle(
        Family.BRAUER, lambda n: graphs.permanent(
            graphs.projection_graph(MonoidFamily(Family.BRAUER, n))
            .blue_adjacency())),
}
