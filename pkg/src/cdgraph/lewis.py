"""Lewis diameter-3 partition and the odd-degree theorems.

For a connected diameter-3 graph and a base vertex r of eccentricity 3,
the vertex set splits by distance from r into:

  rho4: vertices at distance 3,
  rho3: vertices at distance 2,
  rho2: neighbors of r adjacent to some rho3 vertex,
  rho1: r plus its neighbors with no rho3 neighbor.

On a genuine solvable-group degree graph, rho1+rho2 and rho3+rho4
induce complete subgraphs, rho1 has no edge into rho3+rho4, rho4 none
into rho1+rho2, and rho2/rho3 are mutually linked. ``validate_partition``
re-checks all five properties with witnesses, since arbitrary inputs
need not satisfy them.

Theorem checks on graphs that pass the necessary-condition battery but
are not genuine degree graphs may legitimately fail; such outcomes are
verdicts ("discrepancy"), never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import graph as gr
from .constructions import complete_graph
from .graph import Graph, _bits

EULERIAN_STANDARD = "standard"
EULERIAN_EVEN_ONLY = "even-only"
# Literal reading of "contains a cycle containing all vertices".
EULERIAN_HAMILTONIAN = "hamiltonian"

EULERIAN_MODES = (EULERIAN_STANDARD, EULERIAN_EVEN_ONLY, EULERIAN_HAMILTONIAN)

PASS = "pass"
VACUOUS_PASS = "vacuous-pass"
DISCREPANCY = "discrepancy"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class LewisPartition:
    r: int
    s: int
    rho1: frozenset[int]
    rho2: frozenset[int]
    rho3: frozenset[int]
    rho4: frozenset[int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "s": self.s,
            "rho1": sorted(self.rho1),
            "rho2": sorted(self.rho2),
            "rho3": sorted(self.rho3),
            "rho4": sorted(self.rho4),
        }


@dataclass(frozen=True)
class PartitionValidity:
    rho12_complete: bool
    rho34_complete: bool
    no_rho1_to_rho34_edges: bool
    no_rho4_to_rho12_edges: bool
    rho2_rho3_mutual_adjacency: bool
    witnesses: tuple[tuple[str, Any], ...]

    @property
    def valid(self) -> bool:
        return (
            self.rho12_complete
            and self.rho34_complete
            and self.no_rho1_to_rho34_edges
            and self.no_rho4_to_rho12_edges
            and self.rho2_rho3_mutual_adjacency
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "rho12_complete": self.rho12_complete,
            "rho34_complete": self.rho34_complete,
            "no_rho1_to_rho34_edges": self.no_rho1_to_rho34_edges,
            "no_rho4_to_rho12_edges": self.no_rho4_to_rho12_edges,
            "rho2_rho3_mutual_adjacency": self.rho2_rho3_mutual_adjacency,
            "valid": self.valid,
            "witnesses": {flag: witness for flag, witness in self.witnesses},
        }


@dataclass(frozen=True)
class OddDegreeVerdict:
    is_all_odd: bool
    is_block: bool
    rho12_even: bool
    rho34_even: bool
    rho23_eulerian: bool
    eulerian_mode: str
    characterization_holds: bool

    @property
    def conditions_hold(self) -> bool:
        return self.is_block and self.rho12_even and self.rho34_even and self.rho23_eulerian

    def to_dict(self) -> dict[str, Any]:
        return {
            "is_all_odd": self.is_all_odd,
            "is_block": self.is_block,
            "rho12_size_even": self.rho12_even,
            "rho34_size_even": self.rho34_even,
            "rho23_eulerian": self.rho23_eulerian,
            "eulerian_mode": self.eulerian_mode,
            "characterization_holds": self.characterization_holds,
        }


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    verdict: str
    details: tuple[tuple[str, Any], ...] = ()

    @property
    def holds(self) -> bool:
        return self.verdict in (PASS, VACUOUS_PASS)

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "details": {key: value for key, value in self.details},
        }


def lewis_partition(g: Graph, r: int) -> LewisPartition | None:
    """Distance partition from base vertex r, or None when inapplicable
    (graph disconnected or eccentricity of r differs from 3)."""
    if not 0 <= r < g.n:
        raise ValueError(f"vertex {r} out of range 0..{g.n - 1}")
    dist = gr.bfs_distances(g, r)
    if any(d == gr.INFINITY for d in dist) or max(dist) != 3:
        return None
    rho3 = frozenset(v for v, d in enumerate(dist) if d == 2)
    rho4 = frozenset(v for v, d in enumerate(dist) if d == 3)
    rho3_mask = 0
    for v in rho3:
        rho3_mask |= 1 << v
    neighbors = frozenset(_bits(g.adjacency_masks[r]))
    rho2 = frozenset(v for v in neighbors if g.adjacency_masks[v] & rho3_mask)
    rho1 = frozenset({r}) | (neighbors - rho2)
    return LewisPartition(r, min(rho4), rho1, rho2, rho3, rho4)


def validate_partition(g: Graph, p: LewisPartition) -> PartitionValidity:
    """Evaluate the five structural properties, each with a witness on failure."""
    adj = g.adjacency_masks
    witnesses: list[tuple[str, Any]] = []

    def complete_within(vertices: frozenset[int], flag: str) -> bool:
        members = sorted(vertices)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not adj[u] >> v & 1:
                    witnesses.append((flag, [u, v]))
                    return False
        return True

    def no_edges_between(a: frozenset[int], b: frozenset[int], flag: str) -> bool:
        for u in sorted(a):
            for v in sorted(b):
                if adj[u] >> v & 1:
                    witnesses.append((flag, [u, v]))
                    return False
        return True

    def mutually_linked() -> bool:
        rho3_mask = sum(1 << v for v in p.rho3)
        rho2_mask = sum(1 << v for v in p.rho2)
        for u in sorted(p.rho2):
            if not adj[u] & rho3_mask:
                witnesses.append(("rho2_rho3_mutual_adjacency", u))
                return False
        for v in sorted(p.rho3):
            if not adj[v] & rho2_mask:
                witnesses.append(("rho2_rho3_mutual_adjacency", v))
                return False
        return True

    return PartitionValidity(
        rho12_complete=complete_within(p.rho1 | p.rho2, "rho12_complete"),
        rho34_complete=complete_within(p.rho3 | p.rho4, "rho34_complete"),
        no_rho1_to_rho34_edges=no_edges_between(p.rho1, p.rho3 | p.rho4, "no_rho1_to_rho34_edges"),
        no_rho4_to_rho12_edges=no_edges_between(p.rho4, p.rho1 | p.rho2, "no_rho4_to_rho12_edges"),
        rho2_rho3_mutual_adjacency=mutually_linked(),
        witnesses=tuple(witnesses),
    )


def enumerate_lewis_partitions(g: Graph) -> list[tuple[int, LewisPartition, PartitionValidity]]:
    """One validated partition per eccentricity-3 base vertex.

    Empty when the graph is disconnected or its diameter is not 3.
    """
    if g.n == 0 or not gr.is_connected(g) or gr.diameter(g) != 3:
        return []
    out = []
    for r in range(g.n):
        p = lewis_partition(g, r)
        if p is not None:
            out.append((r, p, validate_partition(g, p)))
    return out


def first_valid_partition(g: Graph) -> tuple[LewisPartition, PartitionValidity] | None:
    """Partition for the smallest base vertex whose partition validates."""
    for _, p, validity in enumerate_lewis_partitions(g):
        if validity.valid:
            return p, validity
    return None


def _has_hamiltonian_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    adj = g.adjacency_masks
    full = (1 << n) - 1
    target = adj[0]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(target >> v & 1)
        for w in _bits(adj[v] & ~visited):
            if extend(w, visited | 1 << w):
                return True
        return False

    return extend(0, 1)


def rho23_subgraph(g: Graph, p: LewisPartition) -> Graph:
    sub, _ = gr.induced_subgraph(g, p.rho2 | p.rho3)
    return sub


def rho23_predicate(g: Graph, p: LewisPartition, mode: str) -> bool:
    sub = rho23_subgraph(g, p)
    if mode == EULERIAN_STANDARD:
        return gr.is_eulerian(sub)
    if mode == EULERIAN_EVEN_ONLY:
        return gr.all_degrees_even(sub)
    if mode == EULERIAN_HAMILTONIAN:
        return _has_hamiltonian_cycle(sub)
    raise ValueError(f"unknown Eulerian mode {mode!r}")


def even_cross_degrees(g: Graph, p: LewisPartition) -> bool:
    """Every rho2 vertex has an even number of rho3 neighbors and vice
    versa (the linking-parity condition; see the enumeration survey)."""
    adj = g.adjacency_masks
    rho2_mask = sum(1 << v for v in p.rho2)
    rho3_mask = sum(1 << v for v in p.rho3)
    return all((adj[u] & rho3_mask).bit_count() % 2 == 0 for u in p.rho2) and all(
        (adj[v] & rho2_mask).bit_count() % 2 == 0 for v in p.rho3
    )


def check_theorem_3_2(g: Graph, p: LewisPartition, eulerian_mode: str = EULERIAN_STANDARD) -> OddDegreeVerdict:
    """Evaluate the odd-degree characterization on a valid partition.

    all-odd  <=>  block, |rho1+rho2| even, |rho3+rho4| even, and the
    rho2+rho3 subgraph Eulerian under the chosen predicate. Raises when
    the partition fails validation (the theorem's hypotheses are unmet).
    """
    validity = validate_partition(g, p)
    if not validity.valid:
        raise ValueError(f"partition is not valid: {dict(validity.witnesses)}")
    is_all_odd = gr.all_degrees_odd(g)
    is_block = gr.is_block(g)
    rho12_even = len(p.rho1 | p.rho2) % 2 == 0
    rho34_even = len(p.rho3 | p.rho4) % 2 == 0
    eulerian = rho23_predicate(g, p, eulerian_mode)
    conditions = is_block and rho12_even and rho34_even and eulerian
    return OddDegreeVerdict(
        is_all_odd=is_all_odd,
        is_block=is_block,
        rho12_even=rho12_even,
        rho34_even=rho34_even,
        rho23_eulerian=eulerian,
        eulerian_mode=eulerian_mode,
        characterization_holds=is_all_odd == conditions,
    )


def check_theorem_3_3(g: Graph) -> TheoremVerdict:
    """All-odd implies block, for connected graphs.

    The theorem's case analysis runs over the diameter (at most 2, or
    exactly 3), so it presumes a connected graph; disconnected all-odd
    inputs fall outside its hypotheses and yield "not-applicable".
    """
    if not gr.all_degrees_odd(g):
        return TheoremVerdict("3.3", VACUOUS_PASS)
    if not gr.is_connected(g):
        return TheoremVerdict(
            "3.3",
            NOT_APPLICABLE,
            (("reason", "disconnected graph: the diameter case analysis presumes connectivity"),),
        )
    if gr.is_block(g):
        return TheoremVerdict("3.3", PASS)
    return TheoremVerdict(
        "3.3",
        DISCREPANCY,
        (("cut_vertices", sorted(gr.cut_vertices(g))),),
    )


def check_theorem_2_5(g: Graph, p: LewisPartition) -> TheoremVerdict:
    """Exactly one cut vertex <=> |rho2| = 1, and then the cut vertex is
    the rho2 member. Not applicable off the diameter-3 valid-partition
    hypotheses."""
    if not gr.is_connected(g) or gr.diameter(g) != 3 or not validate_partition(g, p).valid:
        return TheoremVerdict("2.5", NOT_APPLICABLE)
    cuts = sorted(gr.cut_vertices(g))
    rho2 = sorted(p.rho2)
    details = (("cut_vertices", cuts), ("rho2", rho2))
    if (len(cuts) == 1) != (len(rho2) == 1):
        return TheoremVerdict("2.5", DISCREPANCY, details)
    if len(rho2) == 1 and cuts != rho2:
        return TheoremVerdict("2.5", DISCREPANCY, details)
    return TheoremVerdict("2.5", PASS, details)


def check_theorem_2_7(g: Graph, p: LewisPartition) -> TheoremVerdict:
    """Block <=> both |rho2| >= 2 and |rho3| >= 2."""
    if not gr.is_connected(g) or gr.diameter(g) != 3 or not validate_partition(g, p).valid:
        return TheoremVerdict("2.7", NOT_APPLICABLE)
    block = gr.is_block(g)
    sizes_ok = len(p.rho2) >= 2 and len(p.rho3) >= 2
    details = (("is_block", block), ("rho2_size", len(p.rho2)), ("rho3_size", len(p.rho3)))
    return TheoremVerdict("2.7", PASS if block == sizes_ok else DISCREPANCY, details)


def check_theorem_3_1(n: int) -> bool:
    """Whether the complete graph on n vertices is all-odd (n >= 2)."""
    if n < 2:
        raise ValueError("complete-graph parity statement needs n >= 2")
    return gr.all_degrees_odd(complete_graph(n))


def check_regular_odd(g: Graph) -> TheoremVerdict:
    """A non-complete regular admissible graph is never all-odd."""
    regular, _ = gr.is_regular(g)
    if not regular or gr.is_complete(g):
        return TheoremVerdict("3.2-regular", NOT_APPLICABLE)
    if not gr.all_degrees_odd(g):
        return TheoremVerdict("3.2-regular", PASS)
    return TheoremVerdict(
        "3.2-regular",
        DISCREPANCY,
        (("degree_multiset", list(gr.degree_multiset(g))),),
    )


def partition_report(g: Graph, eulerian_mode: str = EULERIAN_STANDARD) -> dict[str, Any]:
    """JSON-ready report for the canonical (smallest eccentricity-3 r)
    partition, plus validity of every base-vertex choice."""
    entries = enumerate_lewis_partitions(g)
    if not entries:
        return {
            "applicable": False,
            "reason": "graph is disconnected or its diameter is not 3",
        }
    _, p, validity = entries[0]
    report: dict[str, Any] = {
        "applicable": True,
        "partition": p.to_dict(),
        "validity": validity.to_dict(),
        "base_vertices": [{"r": r, "valid": val.valid} for r, _, val in entries],
    }
    theorems: dict[str, Any] = {
        "2.5": check_theorem_2_5(g, p).to_dict(),
        "2.7": check_theorem_2_7(g, p).to_dict(),
    }
    if validity.valid:
        theorems["3.2"] = check_theorem_3_2(g, p, eulerian_mode).to_dict()
    report["theorems"] = theorems
    report["theorem_3_3"] = check_theorem_3_3(g).to_dict()
    return report


def render_partition_text(report: dict[str, Any]) -> str:
    if not report.get("applicable", False):
        return f"lewis partition: not applicable ({report.get('reason', '')})"
    lines = []
    p = report["partition"]
    lines.append(f"lewis partition (r={p['r']}, s={p['s']}):")
    for key in ("rho1", "rho2", "rho3", "rho4"):
        lines.append(f"  {key}: {p[key]}")
    validity = report["validity"]
    lines.append(f"  valid: {validity['valid']}")
    for flag, witness in validity["witnesses"].items():
        lines.append(f"    violated {flag}: witness {witness}")
    for name, verdict in report["theorems"].items():
        if name == "3.2":
            lines.append(
                f"  theorem 3.2 ({verdict['eulerian_mode']}): "
                f"characterization_holds={verdict['characterization_holds']}"
            )
        else:
            lines.append(f"  theorem {name}: {verdict['verdict']}")
    lines.append(f"  theorem 3.3: {report['theorem_3_3']['verdict']}")
    return "\n".join(lines)
