"""m-PDR verdicts and the regularity criterion for A = R(G).

The authoritative automorphism run for a verdict is color-blind: using the
part coloring to compute Aut of a digraph whose whole point is that Aut
fixes the parts would assume the conclusion.  The part-respecting run is
available as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgroup import automorphism_search
from .cayley import ConnectionSpec, MCayleyDigraph, build_m_cayley
from .errors import PreconditionError
from .groups import FiniteGroup
from .perms import PermGroup, Permutation


@dataclass
class VerificationReport:
    group_order: int
    aut_order: int
    is_pdr: bool
    valency: int | None          # None when the digraph is not regular
    is_partite: bool
    parts_fixed_setwise: list[bool]
    extra_automorphism_witness: Permutation | None
    vertex_count: int
    search_nodes: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "aut_order": str(self.aut_order),
            "is_pdr": self.is_pdr,
            "valency": self.valency,
            "is_partite": self.is_partite,
            "parts_fixed_setwise": self.parts_fixed_setwise,
            "extra_automorphism_witness":
                None if self.extra_automorphism_witness is None
                else self.extra_automorphism_witness.cycle_string(),
            "vertex_count": self.vertex_count,
            "search_nodes": self.search_nodes,
            "elapsed_seconds": round(self.elapsed, 6),
        }


def is_pdr(group: FiniteGroup, spec: ConnectionSpec, *,
           color_blind: bool = True) -> VerificationReport:
    """Decide whether the built digraph represents the group exactly.

    The verdict is positive when the digraph is regular and its full
    automorphism group has order exactly |G| (the right translations
    always embed, so equality of orders means equality of groups).  When
    the verdict is negative and the digraph is regular, the report carries
    a witness generator lying outside the translation group.
    """
    if not spec.is_partite():
        raise PreconditionError("connection spec has a nonempty diagonal entry")
    x = build_m_cayley(group, spec)
    result = automorphism_search(x.digraph, ignore_colors=color_blind)
    aut = result.group
    valency = x.digraph.regular_valency()
    witness = None
    if aut.order != group.order:
        translations = x.right_regular_group()
        for gen in aut.generators:
            if not translations.contains(gen):
                witness = gen
                break
    report = VerificationReport(
        group_order=group.order,
        aut_order=aut.order,
        is_pdr=(valency is not None and aut.order == group.order),
        valency=valency,
        is_partite=True,
        parts_fixed_setwise=[aut.fixes_setwise(part) for part in x.parts()],
        extra_automorphism_witness=witness,
        vertex_count=x.digraph.n,
        search_nodes=result.nodes_explored,
        elapsed=result.elapsed,
    )
    return report


@dataclass
class StabilizerCriterionReport:
    """Instance evaluation of the criterion: if the digraph is connected,
    Aut fixes every part setwise, and the stabilizer of one chosen vertex
    per part fixes that vertex's out-neighborhood pointwise, then Aut is
    exactly the right translation group."""

    connected: bool
    parts_fixed_setwise: list[bool]
    stabilizer_fixes_out_neighborhood: list[bool]
    hypotheses_hold: bool
    conclusion_holds: bool
    aut_order: int
    group_order: int

    @property
    def consistent(self) -> bool:
        """False would mean hypotheses true but conclusion false: the
        criterion itself violated on an instance.  Must never happen."""
        return not self.hypotheses_hold or self.conclusion_holds


def stabilizer_criterion_check(x: MCayleyDigraph,
                               chosen: list[int] | None = None,
                               aut: PermGroup | None = None) -> StabilizerCriterionReport:
    """Evaluate the three hypotheses and the conclusion by explicit
    computation on Aut.  ``chosen`` is one vertex per part (default: the
    identity vertex of each part).  Disconnected input is reported as a
    failed hypothesis, not an error."""
    if chosen is None:
        chosen = [x.vertex(0, i) for i in range(x.m)]
    if len(chosen) != x.m:
        raise ValueError(f"need one chosen vertex per part, got {len(chosen)}")
    for i, u in enumerate(chosen):
        if x.vertex_part(u) != i:
            raise ValueError(f"chosen vertex {u} is not in part {i}")
    if aut is None:
        aut = automorphism_search(x.digraph, ignore_colors=True).group

    connected = x.digraph.is_connected("weak")
    parts_fixed = [aut.fixes_setwise(part) for part in x.parts()]
    stab_fixes = []
    for u in chosen:
        stab = aut.point_stabilizer(u)
        out_nbrs = x.digraph.out_adj[u]
        stab_fixes.append(stab.fixes_pointwise(out_nbrs))
    hypotheses = connected and all(parts_fixed) and all(stab_fixes)
    conclusion = aut.order == x.group.order
    return StabilizerCriterionReport(
        connected=connected,
        parts_fixed_setwise=parts_fixed,
        stabilizer_fixes_out_neighborhood=stab_fixes,
        hypotheses_hold=hypotheses,
        conclusion_holds=conclusion,
        aut_order=aut.order,
        group_order=x.group.order,
    )
