"""Structural decomposition and transversal analysis on concrete instances.

Given a K4-free graph of maximum degree at most 3 and a maximal
independent set I0, this module builds the layered decomposition around
I0, labels the degree-3 cells, and verifies the counting argument's
claims on the instance: the integer inequalities between the layer
sizes, the cell-partition transversal census with its exact bad-event
probabilities, the product bound certified by structural disjointness,
and the capture of every maximal independent set by a good transversal
plus a subset of the leftover vertices.

All probability arithmetic is exact (fractions.Fraction).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Graph,
    GuardError,
    is_k4_free,
    is_maximal_independent,
    iter_bits,
    k4_witness,
    lowest_bit,
    mask_of,
    max_degree,
)
from .misenum import enumerate_mis

CENSUS_CELL_CAP = 11  # 4^11 = 2^22 product states


class DecompositionError(ValueError):
    """A precondition of the decomposition failed; message names a witness."""


class CellConflictError(ValueError):
    """A cell neighbor has more than one root-set neighbor.

    The construction needs every neighbor of a cell center u to see u as
    its unique neighbor inside the root set.  That holds automatically
    when no center has a neighbor adjacent to the low-degree layer I1
    (in particular always on cubic instances, where I1 is empty), but
    fails on some irregular instances; this error reports the witness
    instead of silently mislabeling.
    """


@dataclass(frozen=True)
class Decomposition:
    n: int
    k: int
    I0: int
    J0: int
    I1: int
    J1: int
    J2: int
    I2: int
    I3: int
    ell: int
    edge_count_I0_J0: int

    def layer_sizes(self) -> dict[str, int]:
        return {
            "n": self.n,
            "k": self.k,
            "I1": self.I1.bit_count(),
            "J1": self.J1.bit_count(),
            "J2": self.J2.bit_count(),
            "I2": self.I2.bit_count(),
            "ell": self.ell,
            "edges_I0_J0": self.edge_count_I0_J0,
        }


@dataclass(frozen=True)
class Cell:
    """Closed neighborhood {u, x, y, z} of a degree-3 center u.

    x and y are the lexicographically first non-adjacent pair among the
    three neighbors (one exists: otherwise the cell would be a 4-clique);
    z is the remaining neighbor.
    """

    u: int
    x: int
    y: int
    z: int
    mask: int


def decompose(g: Graph, i0: int) -> Decomposition:
    """Layer the graph around a maximal independent set I0.

    I1 holds the I0-vertices with at most 2 neighbors; J1 their outside
    neighbors; J2 the remaining outside vertices with at least 2
    I0-neighbors; I2 the I0-vertices touching J2; I3 the rest of I0 (the
    cell centers).  Raises DecompositionError when the graph has a vertex
    of degree above 3, contains a 4-clique, or I0 is not a maximal
    independent set; the message names the witness.
    """
    for v in range(g.n):
        if g.degree(v) > 3:
            raise DecompositionError(f"vertex {v} has degree {g.degree(v)} > 3")
    clique = k4_witness(g)
    if clique is not None:
        raise DecompositionError(f"4-clique on vertices {sorted(iter_bits(clique))}")
    if not is_maximal_independent(g, i0):
        raise DecompositionError(f"root set {sorted(iter_bits(i0))} is not a maximal independent set")
    j0 = g.full_mask & ~i0
    i1 = 0
    for v in iter_bits(i0):
        if (g.adj[v] & j0).bit_count() <= 2:
            i1 |= 1 << v
    j1 = 0
    for v in iter_bits(j0):
        if g.adj[v] & i1:
            j1 |= 1 << v
    j2 = 0
    for v in iter_bits(j0 & ~j1):
        if (g.adj[v] & i0).bit_count() >= 2:
            j2 |= 1 << v
    i2 = 0
    for v in iter_bits(i0):
        if g.adj[v] & j2:
            i2 |= 1 << v
    i3 = i0 & ~(i1 | i2)
    edges = sum((g.adj[v] & j0).bit_count() for v in iter_bits(i0))
    dec = Decomposition(
        n=g.n,
        k=i0.bit_count(),
        I0=i0,
        J0=j0,
        I1=i1,
        J1=j1,
        J2=j2,
        I2=i2,
        I3=i3,
        ell=i3.bit_count(),
        edge_count_I0_J0=edges,
    )
    bad = [rec for rec in decomposition_inequalities(dec) if not rec["holds"]]
    if bad:
        raise RuntimeError(f"layer inequalities failed: {bad}")
    return dec


def decomposition_inequalities(dec: Decomposition) -> list[dict]:
    """The integer forms of the layer-size inequalities, with slack."""
    k, n = dec.k, dec.n
    s = dec.layer_sizes()
    i1, j1, j2, i2, e = s["I1"], s["J1"], s["J2"], s["I2"], s["edges_I0_J0"]
    recs = [
        ("j1_le_2i1", j1, 2 * i1),
        ("i2_le_3j2", i2, 3 * j2),
        ("i1_i2_disjoint", (dec.I1 & dec.I2).bit_count(), 0),
        ("edges_lower", n - k + j2, e),
        ("edges_upper", e, 3 * k - i1),
        ("size_budget", i1 + j2, 4 * k - n),
        ("ell_lower", k - i1 - 3 * j2, dec.ell),
    ]
    return [
        {"name": name, "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs}
        for name, lhs, rhs in recs
    ]


def label_cells(g: Graph, dec: Decomposition) -> list[Cell]:
    """Build the cell for every center in I3, validating the structure.

    Every center must have exactly three neighbors, each of which sees
    the center as its only I0-neighbor (CellConflictError otherwise, with
    the witness); the resulting cells are pairwise disjoint.
    """
    cells = []
    for u in iter_bits(dec.I3):
        nbrs = sorted(iter_bits(g.adj[u]))
        if len(nbrs) != 3:
            raise DecompositionError(f"center {u} has {len(nbrs)} neighbors, expected 3")
        for w in nbrs:
            others = g.adj[w] & dec.I0 & ~(1 << u)
            if others:
                raise CellConflictError(
                    f"cell neighbor {w} of center {u} also touches root vertex {lowest_bit(others)}"
                )
        a, b, c = nbrs
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            if not g.has_edge(x, y):
                cells.append(Cell(u, x, y, z, mask_of((u, x, y, z))))
                break
        else:
            raise AssertionError(f"neighbors of {u} are pairwise adjacent in a K4-free graph")
    taken = 0
    for cell in cells:
        if taken & cell.mask:
            raise CellConflictError(f"cell of center {cell.u} overlaps an earlier cell")
        taken |= cell.mask
    return cells


@dataclass(frozen=True)
class SelectionState:
    """Cell bookkeeping for one choice of the doubled-cell index set S.

    I4 holds the remaining cell indices and U their vertex union.  I5
    keeps the I4-cells whose x and y have all neighbors inside U; only
    those support the bad-event analysis, and the goodness condition is
    evaluated over them.  cell_adj is the adjacency over all I4 cells
    (an edge when any graph edge joins the two cells; degree at most 6);
    H is its restriction to I5.  I6 is a greedy independent set in the
    distance-2 sense over the full I4 cell graph, so distinct I6 cells
    have disjoint dependency neighborhoods.
    """

    S: tuple[int, ...]
    I4: tuple[int, ...]
    I5: tuple[int, ...]
    I6: tuple[int, ...]
    U: int
    cell_adj: dict[int, tuple[int, ...]]
    H: Graph
    h_index: tuple[int, ...]


def select(g: Graph, dec: Decomposition, cells: list[Cell], s_indices) -> SelectionState:
    s_set = frozenset(s_indices)
    if not s_set <= set(range(dec.ell)):
        raise ValueError(f"selection {sorted(s_set)} outside 0..{dec.ell - 1}")
    i4 = tuple(i for i in range(dec.ell) if i not in s_set)
    u_mask = 0
    for i in i4:
        u_mask |= cells[i].mask
    i5 = tuple(
        i
        for i in i4
        if not ((g.adj[cells[i].x] | g.adj[cells[i].y]) & ~u_mask)
    )
    reach = {}
    for i in i4:
        r = 0
        for v in iter_bits(cells[i].mask):
            r |= g.adj[v]
        reach[i] = r
    cell_adj = {
        i: tuple(j for j in i4 if j != i and reach[i] & cells[j].mask) for i in i4
    }
    for i in i4:
        if len(cell_adj[i]) > 6:
            raise AssertionError(f"cell {i} has {len(cell_adj[i])} neighbor cells, expected <= 6")
    i5_set = set(i5)
    h_rows = []
    for i in i5:
        row = 0
        for j in cell_adj[i]:
            if j in i5_set:
                row |= 1 << i5.index(j)
        h_rows.append(row)
    h = Graph(len(i5), tuple(h_rows))
    alive = set(i5)
    i6 = []
    for i in i5:
        if i not in alive:
            continue
        i6.append(i)
        ball = {i, *cell_adj[i]}
        for j in cell_adj[i]:
            ball.update(cell_adj[j])
        alive -= ball
    state = SelectionState(
        S=tuple(sorted(s_set)),
        I4=i4,
        I5=i5,
        I6=tuple(i6),
        U=u_mask,
        cell_adj=cell_adj,
        H=h,
        h_index=i5,
    )
    need = -(-len(i5) // 37)
    if len(i6) < need:
        raise AssertionError(f"greedy picked {len(i6)} cells, needs >= {need}")
    return state


def bad_event_probability(
    g: Graph, cells: list[Cell], state: SelectionState, cell_index: int, side: str
) -> tuple[Fraction, dict]:
    """Exact probability that a uniform transversal picks ``side`` of a cell
    while missing every neighbor of the opposite special vertex.

    Only defined for I5 cells: there the opposite vertex's neighbors all
    lie inside U, and the probability factors over the at most two other
    cells containing them.  The factored pattern is returned alongside so
    reports show which of the four cases (no outside neighbor; one; two
    in a single cell; two in distinct cells) applied.
    """
    if cell_index not in state.I5:
        raise ValueError(f"cell {cell_index} not in I5")
    cell = cells[cell_index]
    if side == "x":
        opposite = cell.y
    elif side == "y":
        opposite = cell.x
    else:
        raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    outside = g.adj[opposite] & ~cell.mask
    q = Fraction(1, 4)
    pattern = ["1/4"]
    for j in state.I4:
        if j == cell_index:
            continue
        hits = (outside & cells[j].mask).bit_count()
        if hits:
            q *= Fraction(4 - hits, 4)
            pattern.append(f"{4 - hits}/4")
    return q, {
        "cell": cell_index,
        "side": side,
        "outside_degree": outside.bit_count(),
        "pattern": "*".join(pattern),
    }


@dataclass(frozen=True)
class TransversalStats:
    total: int
    good_count: int
    p_good: Fraction
    per_cell: tuple[dict, ...]
    bad_probability: dict[int, Fraction]
    product_bound: Fraction
    exhaustive: bool


def _is_good(g: Graph, cells: list[Cell], i5: tuple[int, ...], t_mask: int) -> bool:
    for i in i5:
        cell = cells[i]
        if t_mask >> cell.x & 1 and not t_mask & g.adj[cell.y]:
            return False
        if t_mask >> cell.y & 1 and not t_mask & g.adj[cell.x]:
            return False
    return True


def _cell_stats(
    g: Graph, cells: list[Cell], state: SelectionState, total: int, good: int, exhaustive: bool
) -> TransversalStats:
    per_cell = []
    bad_prob: dict[int, Fraction] = {}
    for i in state.I5:
        qx, info_x = bad_event_probability(g, cells, state, i, "x")
        qy, info_y = bad_event_probability(g, cells, state, i, "y")
        bad_prob[i] = qx + qy
        per_cell.append({**info_x, "q": qx})
        per_cell.append({**info_y, "q": qy})
    product = Fraction(1)
    for i in state.I6:
        product *= 1 - bad_prob[i]
    return TransversalStats(
        total=total,
        good_count=good,
        p_good=Fraction(good, total) if total else Fraction(1),
        per_cell=tuple(per_cell),
        bad_probability=bad_prob,
        product_bound=product,
        exhaustive=exhaustive,
    )


def transversal_census(g: Graph, cells: list[Cell], state: SelectionState) -> TransversalStats:
    """Exhaustive census of the 4^{|I4|} transversals of the cell partition.

    A transversal picks one vertex per I4-cell; it is good when, at every
    I5-cell where it picks x (resp. y), it also contains a neighbor of y
    (resp. x).  Guarded to at most 4^11 states; beyond that use the
    labeled Monte-Carlo estimator.
    """
    if len(state.I4) > CENSUS_CELL_CAP:
        raise GuardError(
            f"census over {len(state.I4)} cells exceeds the 4^{CENSUS_CELL_CAP} cap; "
            "use transversal_census_mc"
        )
    slots = [tuple(iter_bits(cells[i].mask)) for i in state.I4]
    total = 0
    good = 0
    for choice in itertools.product(*slots):
        total += 1
        if _is_good(g, cells, state.I5, mask_of(choice)):
            good += 1
    return _cell_stats(g, cells, state, total, good, True)


def transversal_census_mc(
    g: Graph, cells: list[Cell], state: SelectionState, samples: int, seed: int
) -> dict:
    """Monte-Carlo estimate of the good-transversal fraction.

    Clearly approximate: returned as a plain report and never used inside
    exact assertions.
    """
    rng = random.Random(seed)
    slots = [tuple(iter_bits(cells[i].mask)) for i in state.I4]
    good = 0
    for _ in range(samples):
        t_mask = mask_of(rng.choice(slot) for slot in slots)
        if _is_good(g, cells, state.I5, t_mask):
            good += 1
    p_hat = good / samples
    half_width = 1.96 * (p_hat * (1 - p_hat) / samples) ** 0.5
    return {
        "approximate": True,
        "samples": samples,
        "seed": seed,
        "p_good_estimate": p_hat,
        "confidence_95": (max(0.0, p_hat - half_width), min(1.0, p_hat + half_width)),
    }


def verify_product_bound(
    g: Graph, cells: list[Cell], state: SelectionState, stats: TransversalStats
) -> dict:
    """Exact-rational product bound plus its structural independence certificate.

    Checks p_good <= prod_{i in I6} (1 - P(B_i)) <= (3/4)^{|I6|}, that
    every bad-event probability is at least 1/4, and that the events are
    genuinely independent: distinct I6 cells have disjoint dependency
    cell sets, equivalently disjoint closed neighborhoods of their x/y
    vertices.
    """
    violations = []
    for i, p_bad in stats.bad_probability.items():
        if not Fraction(1, 4) <= p_bad:
            violations.append(f"P(B_{i}) = {p_bad} < 1/4")
    ceiling = Fraction(3, 4) ** len(state.I6)
    if not stats.p_good <= stats.product_bound:
        violations.append(f"p_good {stats.p_good} > product {stats.product_bound}")
    if not stats.product_bound <= ceiling:
        violations.append(f"product {stats.product_bound} > (3/4)^{len(state.I6)}")
    for a_pos, i in enumerate(state.I6):
        for j in state.I6[a_pos + 1 :]:
            shared_cells = ({i, *state.cell_adj[i]}) & ({j, *state.cell_adj[j]})
            if shared_cells:
                violations.append(f"I6 cells {i}, {j} share dependency cells {sorted(shared_cells)}")
            for v in (cells[i].x, cells[i].y):
                for w in (cells[j].x, cells[j].y):
                    if g.closed_adj(v) & g.closed_adj(w):
                        violations.append(
                            f"closed neighborhoods of {v} (cell {i}) and {w} (cell {j}) intersect"
                        )
    return {
        "p_good": stats.p_good,
        "product_bound": stats.product_bound,
        "ceiling": ceiling,
        "holds": not violations,
        "violations": violations,
    }


def verify_is_capture(g: Graph, dec: Decomposition, cells: list[Cell], k: int) -> dict:
    """Partition the size-k maximal independent sets by doubled cells and
    check each family against its good-transversal envelope.

    Family S collects the sets meeting cell i in >= 2 vertices exactly
    for i in S.  Checks per nonempty family: (a) every set meets every
    cell, (b) k >= ell + |S|, (c) each set's trace on U is a good
    transversal of the S-reduced partition, (d) the family size is at
    most good_count * 2^{n - |U|}.
    """
    families: dict[tuple[int, ...], list[int]] = {}
    for mask in enumerate_mis(g).sets:
        if mask.bit_count() != k:
            continue
        s_key = tuple(
            i for i in range(dec.ell) if (mask & cells[i].mask).bit_count() >= 2
        )
        families.setdefault(s_key, []).append(mask)
    rows = []
    all_ok = True
    for s_key in sorted(families):
        members = families[s_key]
        state = select(g, dec, cells, s_key)
        stats = transversal_census(g, cells, state)
        checks = {
            "meets_every_cell": all(
                mask & cells[i].mask for mask in members for i in range(dec.ell)
            ),
            "k_ge_ell_plus_s": k >= dec.ell + len(s_key),
            "traces_are_good_transversals": all(
                _is_transversal(cells, state, mask & state.U)
                and _is_good(g, cells, state.I5, mask & state.U)
                for mask in members
            ),
            "family_within_envelope": len(members)
            <= stats.good_count * (1 << (g.n - state.U.bit_count())),
        }
        ok = all(checks.values())
        all_ok = all_ok and ok
        rows.append(
            {
                "S": list(s_key),
                "family_size": len(members),
                "good_count": stats.good_count,
                "leftover_vertices": g.n - state.U.bit_count(),
                "checks": checks,
                "holds": ok,
            }
        )
    return {"k": k, "families": rows, "holds": all_ok}


def _is_transversal(cells: list[Cell], state: SelectionState, t_mask: int) -> bool:
    return all((t_mask & cells[i].mask).bit_count() == 1 for i in state.I4)


def analyze_instance(g: Graph, i0: int | None = None, s_indices=()) -> dict:
    """Full instance report: decomposition, cells, census, capture.

    When i0 is omitted the minimum-size maximal independent set is used
    (smallest sorted vertex tuple among minimum sizes), matching the
    regime the counting argument targets.
    """
    from .corpus import min_mis

    if i0 is None:
        i0 = min_mis(g)
    dec = decompose(g, i0)
    cells = label_cells(g, dec)
    state = select(g, dec, cells, s_indices)
    stats = transversal_census(g, cells, state)
    product = verify_product_bound(g, cells, state, stats)
    capture = verify_is_capture(g, dec, cells, dec.k)
    inequalities = decomposition_inequalities(dec)
    violations = [rec["name"] for rec in inequalities if not rec["holds"]]
    violations += product["violations"]
    if not capture["holds"]:
        violations.append("is_capture")
    return {
        "n": g.n,
        "root_set": sorted(iter_bits(i0)),
        "layers": dec.layer_sizes(),
        "inequalities": inequalities,
        "cells": [
            {"u": c.u, "x": c.x, "y": c.y, "z": c.z} for c in cells
        ],
        "selection": {
            "S": list(state.S),
            "I4": list(state.I4),
            "I5": list(state.I5),
            "I6": list(state.I6),
            "U_size": state.U.bit_count(),
        },
        "census": {
            "total": stats.total,
            "good": stats.good_count,
            "p_good": str(stats.p_good),
            "per_cell": [
                {**row, "q": str(row["q"])} for row in stats.per_cell
            ],
            "product_bound": str(stats.product_bound),
            "ceiling": str(product["ceiling"]),
        },
        "capture": capture,
        "violations": violations,
    }
