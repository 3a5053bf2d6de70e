"""Isomorphism-free generation of small graphs and extremal verification.

Canonical form is the lexicographically minimal upper-triangle bit string
over all vertex permutations (same bit order as graph6), found by a
pruned search over vertex placements.  Generation augments the order
n-1 class list with one new vertex per possible neighborhood and
deduplicates by canonical key; this covers every class of any hereditary
filter.  On top of that sit the exhaustive bound checks: the size-capped
count bound with its exact equality characterization, the max-degree-2
slack factors, and empirical tightness tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from . import bounds
from .graphio import parse_graph6, to_graph6
from .graphs import (
    Graph,
    GuardError,
    components,
    is_clique,
    is_k4_free,
    max_degree,
)
from .mibs import enumerate_mibs
from .misenum import enumerate_mis

GENERATION_CAP = 8

FILTERS = {
    "none": lambda g: True,
    "k4free": is_k4_free,
    "maxdeg3": lambda g: max_degree(g) <= 3,
    "both": lambda g: max_degree(g) <= 3 and is_k4_free(g),
}


def canonical_key(g: Graph) -> tuple[int, ...]:
    """Permutation-minimal per-position adjacency segments.

    Position j's segment holds the adjacency bits between the vertex
    placed at j and the vertices placed at 0..j-1 (bit for position 0 is
    the most significant), so the tuple concatenates to the graph6 bit
    order of the relabeled graph.  Two graphs of equal order are
    isomorphic iff their keys are equal.

    The search only ever descends along placements that realize the best
    known prefix exactly; a placement whose segment beats the best prefix
    rewrites it and invalidates the deeper levels.
    """
    n = g.n
    adj = g.adj
    best: list[int | None] = [None] * n
    chosen: list[int] = []

    def place(level: int, used: int) -> None:
        if level == n:
            return
        cands = []
        for v in range(n):
            if used >> v & 1:
                continue
            seg = 0
            row = adj[v]
            for u in chosen:
                seg = (seg << 1) | (row >> u & 1)
            cands.append((seg, v))
        cands.sort()
        for seg, v in cands:
            b = best[level]
            if b is not None and seg > b:
                break
            if b is None or seg < b:
                best[level] = seg
                for i in range(level + 1, n):
                    best[i] = None
            chosen.append(v)
            place(level + 1, used | (1 << v))
            chosen.pop()

    place(0, 0)
    return tuple(0 if b is None else b for b in best)


def graph_from_key(n: int, key: tuple[int, ...]) -> Graph:
    adj = [0] * n
    for j in range(1, n):
        seg = key[j]
        for i in range(j):
            if seg >> (j - 1 - i) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> Graph:
    return graph_from_key(g.n, canonical_key(g))


def _augment_chunk(args: tuple[list[tuple[int, ...]], int, str]) -> dict[tuple[int, ...], None]:
    parent_adjs, n, filter_name = args
    predicate = FILTERS[filter_name]
    seen: dict[tuple[int, ...], None] = {}
    new_bit = 1 << (n - 1)
    for padj in parent_adjs:
        for mask in range(1 << (n - 1)):
            rows = [row | new_bit if mask >> v & 1 else row for v, row in enumerate(padj)]
            rows.append(mask)
            g = Graph(n, tuple(rows))
            if predicate(g):
                seen.setdefault(canonical_key(g))
    return seen


_class_cache: dict[tuple[int, str], list[Graph]] = {}


def generate_all(n: int, filter_name: str = "none", workers: int = 1) -> list[Graph]:
    """One canonical representative per isomorphism class of order n.

    ``filter_name`` must be a hereditary filter from FILTERS ("none",
    "k4free", "maxdeg3", "both").  Results are memoized per process;
    ``workers`` > 1 splits the augmentation of the parent list across a
    process pool (deterministic output either way).
    """
    if n > GENERATION_CAP:
        raise GuardError(f"exhaustive generation capped at {GENERATION_CAP} vertices")
    if filter_name not in FILTERS:
        raise ValueError(f"unknown filter {filter_name!r}; options: {sorted(FILTERS)}")
    cached = _class_cache.get((n, filter_name))
    if cached is not None:
        return cached
    if n == 0:
        reps = [Graph(0, ())]
    elif n == 1:
        reps = [Graph(1, (0,))]
    else:
        parents = [g.adj for g in generate_all(n - 1, filter_name, workers)]
        if workers > 1 and len(parents) > 1:
            chunk = max(1, len(parents) // (workers * 4))
            jobs = [
                (parents[i : i + chunk], n, filter_name)
                for i in range(0, len(parents), chunk)
            ]
            keys: dict[tuple[int, ...], None] = {}
            with Pool(workers) as pool:
                for part in pool.map(_augment_chunk, jobs):
                    keys.update(part)
        else:
            keys = _augment_chunk((parents, n, filter_name))
        reps = [graph_from_key(n, key) for key in sorted(keys)]
    reps = [g for g in reps if FILTERS[filter_name](g)]
    _class_cache[(n, filter_name)] = reps
    return reps


def is_clique_union(g: Graph, sizes: tuple[int, ...] = (3, 4)) -> tuple[bool, int]:
    """Whether every component is a clique with size in ``sizes``; returns count."""
    comps = components(g)
    for comp in comps:
        if comp.bit_count() not in sizes or not is_clique(g, comp):
            return False, len(comps)
    return True, len(comps)


@dataclass(frozen=True)
class EqualityRow:
    """Exhaustive check of the size-capped bound at one (n, k)."""

    n: int
    k: int
    bound: Fraction
    attainers: tuple[str, ...]
    violations: tuple[str, ...]
    max_count: int


def verify_equality_scan(n: int, workers: int = 1) -> list[EqualityRow]:
    """Check mis_{<=k} <= 3^{4k-n} 4^{n-3k} over every class, every k.

    Exact rationals throughout.  A class violates when it exceeds the
    bound, attains equality without being a disjoint union of exactly k
    cliques of size 3 or 4, or has that structure without equality.
    """
    rows = []
    reps = generate_all(n, "none", workers)
    profiles = [(g, enumerate_mis(g).profile) for g in reps]
    for k in range(n + 1):
        bound = bounds.eppstein(n, k).exact
        attainers = []
        violations = []
        max_count = 0
        for g, profile in profiles:
            count = profile.at_most(k)
            max_count = max(max_count, count)
            structural, ncomp = is_clique_union(g)
            is_extremal = structural and ncomp == k
            if count > bound:
                violations.append(to_graph6(g))
            elif (count == bound) != is_extremal:
                violations.append(to_graph6(g))
            if count == bound:
                attainers.append(to_graph6(g))
        rows.append(EqualityRow(n, k, bound, tuple(attainers), tuple(violations), max_count))
    return rows


def nielsen_violations(n: int, workers: int = 1) -> list[tuple[str, int, int]]:
    """Classes with mis_k above 4^{5k-n} 5^{n-4k}; reported, expected empty."""
    out = []
    for g in generate_all(n, "none", workers):
        profile = enumerate_mis(g).profile
        for k in range(n + 1):
            if profile[k] > 0 and profile[k] > bounds.nielsen(n, k).exact:
                out.append((to_graph6(g), k, profile[k]))
    return out


@dataclass(frozen=True)
class SlackRow:
    graph6: str
    k: int
    count: int
    allowance: Fraction
    factor_name: str
    tight: bool


def verify_degree2_constants(n: int, workers: int = 1) -> tuple[list[SlackRow], list[SlackRow]]:
    """Slack factors for max-degree <= 2 classes, all k, exact arithmetic.

    A degree-1 vertex caps mis_{<=k} at 8/9 of the bound, an isolated
    vertex at 16/27, and a cycle component of length >= 4 at 11/12.
    Returns (checked rows, violations); the rows include tight cases.
    """
    factors = (
        ("degree1", Fraction(8, 9), lambda g: any(g.degree(v) == 1 for v in range(g.n))),
        ("isolated", Fraction(16, 27), lambda g: any(g.degree(v) == 0 for v in range(g.n))),
        (
            "long_cycle",
            Fraction(11, 12),
            lambda g: any(
                c.bit_count() >= 4 and all(g.degree(v) == 2 for v in _bits_of(c))
                for c in components(g)
            ),
        ),
    )
    rows: list[SlackRow] = []
    bad: list[SlackRow] = []
    for g in generate_all(n, "none", workers):
        if max_degree(g) > 2:
            continue
        profile = enumerate_mis(g).profile
        applicable = [(name, f) for name, f, pred in factors if pred(g)]
        if not applicable:
            continue
        g6 = to_graph6(g)
        for k in range(n + 1):
            count = profile.at_most(k)
            for name, factor in applicable:
                allowance = factor * bounds.eppstein(n, k).exact
                row = SlackRow(g6, k, count, allowance, name, count == allowance)
                rows.append(row)
                if count > allowance:
                    bad.append(row)
    return rows, bad


def _bits_of(mask: int):
    from .graphs import iter_bits

    return iter_bits(mask)


def tightness_scan(
    n: int,
    filter_name: str,
    selector: str,
    eta: float = 0.4,
    workers: int = 1,
    reps: list[Graph] | None = None,
) -> list[dict]:
    """Empirical per-k maxima of mis_k against a chosen bound family."""
    evaluators = {
        "eppstein": lambda k: bounds.eppstein(n, k).ln_value,
        "nielsen": lambda k: bounds.nielsen(n, k).ln_value,
        "corollary1": lambda k: bounds.interpolated(n, k, eta).ln_value,
    }
    if selector not in evaluators:
        raise ValueError(f"unknown bound selector {selector!r}; options: {sorted(evaluators)}")
    if reps is None:
        reps = generate_all(n, filter_name, workers)
    profiles = [(g, enumerate_mis(g).profile) for g in reps]
    rows = []
    for k in range(n + 1):
        best_count = 0
        argmax = None
        for g, profile in profiles:
            if profile[k] > best_count:
                best_count = profile[k]
                argmax = g
        ln_bound = evaluators[selector](k)
        rows.append(
            {
                "k": k,
                "max_mis_k": best_count,
                "ln_bound": ln_bound,
                "ratio": best_count / math.exp(ln_bound) if best_count else 0.0,
                "argmax": to_graph6(argmax) if argmax is not None else None,
            }
        )
    return rows


def mibs_extremes(n: int, filter_name: str, workers: int = 1) -> dict:
    """Largest distinct MIBS count over the filtered classes of order n."""
    best = -1
    argmax = None
    for g in generate_all(n, filter_name, workers):
        census = enumerate_mibs(g)
        if census.distinct_count > best:
            best = census.distinct_count
            argmax = g
    return {
        "n": n,
        "filter": filter_name,
        "max_mibs": best,
        "argmax": to_graph6(argmax) if argmax is not None else None,
        "ln_twelve_target": n * math.log(12) / 4.0,
        "ln_six_target": n * math.log(6) / 4.0,
    }


def write_class_list(path: str, reps: list[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in reps:
            fh.write(to_graph6(g) + "\n")


def load_class_list(path: str) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]
