"""The core construction: adjacency matrix -> pure braid word w_A -> link
L_A whose linking matrix equals the matrix, with certificate translation
between independent sets and trivial sublinks.

Every unordered strand pair {i,j} crosses exactly twice, inside block
w_min(i,j): first with sign +1, then with sign epsilon(i,j).  The signed
pair sum is therefore 1 + epsilon(i,j), i.e. 2*adj[i][j], and halving gives
the linking identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, CONVENTION, concat_all, parse_braid
from .diagrams import LinkDiagram, linking_matrix, to_wire as diagram_to_wire, trace_closure
from .graphs import Graph, GraphError, IndexOutOfRange, VertexSubset, is_independent_set
from .moves import Verdict, is_trivial_layered


class DiagonalQuery(GraphError):
    pass


class CertificateInvalid(GraphError):
    def __init__(self, message: str, oracle_disagreement: bool = False):
        super().__init__(message)
        self.oracle_disagreement = oracle_disagreement


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    k: int
    word: BraidWord
    link: LinkDiagram

    def to_wire(self) -> dict:
        return {
            "graph": self.graph.to_wire(),
            "k": self.k,
            "word": self.word.to_wire(),
            "link": diagram_to_wire(self.link),
            "convention": CONVENTION,
        }


@dataclass(frozen=True)
class ReductionCertificate:
    """A subset read simultaneously as vertices and as link components."""

    subset: VertexSubset

    def to_wire(self) -> dict:
        return {"subset": list(self.subset.members)}


def epsilon(g: Graph, i: int, j: int) -> int:
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise IndexOutOfRange(f"vertex pair ({i},{j}) not within 1..{g.n}")
    if i == j:
        raise DiagonalQuery(f"epsilon is undefined on the diagonal ({i},{i})")
    return 1 if g.adj[i - 1][j - 1] == 1 else -1


def build_block(g: Graph, i: int) -> BraidWord:
    """Block w_i: ascending positive run, then the sign-twisted descent."""
    n = g.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"block index {i} not in 1..{n - 1}")
    ascent = list(range(i, n))
    descent = [gen * epsilon(g, i, gen + 1) for gen in range(n - 1, i - 1, -1)]
    return parse_braid(n, ascent + descent)


def build_braid_word(g: Graph) -> BraidWord:
    if g.n == 1:
        return parse_braid(1, [])
    return concat_all(build_block(g, i) for i in range(1, g.n))


def build_link(g: Graph) -> LinkDiagram:
    return trace_closure(build_braid_word(g))


def verify_linking_identity(g: Graph, link: LinkDiagram | None = None) -> bool:
    """lk(L_A) = A, entrywise.  False only ever signals a build bug."""
    if link is None:
        link = build_link(g)
    return linking_matrix(link) == g.adj


def build_instance(g: Graph, k: int) -> ReductionInstance:
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} not in 1..{g.n}")
    return ReductionInstance(graph=g, k=k, word=build_braid_word(g), link=build_link(g))


def translate_certificate(
    inst: ReductionInstance,
    cert: ReductionCertificate,
    direction: str,
) -> ReductionCertificate:
    """Identity map on subsets with mandatory cross-oracle verification.

    direction "graph-to-link": require independence, then assert triviality.
    direction "link-to-graph": require triviality, then assert independence.
    A failed requirement is a caller error; a failed assertion means the two
    oracles disagree, which is an implementation bug and flagged as such.
    """
    subset = cert.subset
    if subset.k == 0:
        raise CertificateInvalid("certificate subset is empty")
    for v in subset.members:
        if not 1 <= v <= inst.graph.n:
            raise CertificateInvalid(f"certificate member {v} not in 1..{inst.graph.n}")
    independent = is_independent_set(inst.graph, subset)
    trivial = is_trivial_layered(inst.link, subset.members)
    if direction == "graph-to-link":
        if not independent:
            raise CertificateInvalid(f"{subset.members} is not an independent set")
        if trivial is not Verdict.TRUE:
            raise CertificateInvalid(
                f"independent set {subset.members} maps to a non-trivial sublink"
                f" (verdict {trivial.value})",
                oracle_disagreement=True,
            )
    elif direction == "link-to-graph":
        if trivial is not Verdict.TRUE:
            raise CertificateInvalid(
                f"sublink {subset.members} is not certified trivial (verdict {trivial.value})"
            )
        if not independent:
            raise CertificateInvalid(
                f"trivial sublink {subset.members} maps to a dependent vertex set",
                oracle_disagreement=True,
            )
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return ReductionCertificate(subset=subset)
