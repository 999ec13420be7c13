"""Konig-Egervary recognition with certificates, and mechanical verifiers
for the structural facts this package is organized around.

A graph is Konig-Egervary (KE) when alpha + mu = n. Recognition runs the
polynomial route: alpha_c <= alpha <= n - mu holds always, so the verdict is
simply [alpha_c = n - mu], decided by matchings alone -- no exact solver.
A KE verdict ships a maximum independent set S together with a matching of
V - S into S saturating V - S; a NotKE verdict ships the arithmetic record
(alpha_c, mu, n), optionally strengthened by a maximum independent set that
fails criticality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .critical import critical_difference, max_critical_independent_set
from .errors import ContractViolationError, NotKEError
from .graph import (
    Graph,
    delete_closed_neighborhood,
    induced_subgraph,
    neighborhood,
)
from .independence import (
    DEFAULT_EXACT_LIMIT,
    DEFAULT_OMEGA_CAP,
    alpha,
    collect_omega,
    core,
)
from .matching import Matching, maximum_matching

__all__ = [
    "KECertificate",
    "KEWitness",
    "NonKEWitness",
    "EqualityChainReport",
    "CharacterizationRecord",
    "StructureChecks",
    "recognize_ke",
    "ke_decomposition",
    "equality_chain_report",
    "characterization_check",
    "structure_checks_ke",
]


@dataclass(frozen=True)
class KEWitness:
    """S in Omega(G) plus a matching of V - S into S saturating V - S."""

    independent_set: int
    matching: Matching


@dataclass(frozen=True)
class NonKEWitness:
    """The arithmetic gap alpha_c < n - mu, optionally with a maximum
    independent set that is not critical."""

    alpha_c: int
    mu: int
    n: int
    non_critical_mis: int | None = None


@dataclass(frozen=True)
class KECertificate:
    is_ke: bool
    ke_witness: KEWitness | None = None
    non_ke_witness: NonKEWitness | None = None


def recognize_ke(
    g: Graph,
    *,
    with_mis_witness: bool = False,
    limit: int | None = DEFAULT_EXACT_LIMIT,
) -> KECertificate:
    """Decide KE-ness with a machine-checkable certificate.

    With ``with_mis_witness=True`` a NotKE certificate additionally carries a
    maximum independent set (necessarily non-critical); that path needs the
    exact solver and respects its size gate.
    """
    return certificate_from_parts(
        g,
        max_critical_independent_set(g),
        maximum_matching(g).size,
        with_mis_witness=with_mis_witness,
        limit=limit,
    )


def certificate_from_parts(
    g: Graph,
    witness,
    mu: int,
    *,
    with_mis_witness: bool = False,
    limit: int | None = DEFAULT_EXACT_LIMIT,
) -> KECertificate:
    """Build the certificate from an already-computed critical witness and mu."""
    alpha_c = witness.set.bit_count()
    if alpha_c == g.n - mu:
        s = witness.set
        rest = g.full_mask & ~s
        matching = witness.hall_matching
        if matching.saturated & rest != rest or matching.size != mu:
            raise ContractViolationError(
                "KE certificate matching fails to saturate V - S"
            )
        return KECertificate(is_ke=True, ke_witness=KEWitness(s, matching))
    mis = alpha(g, limit).witness if with_mis_witness else None
    return KECertificate(
        is_ke=False,
        non_ke_witness=NonKEWitness(alpha_c, mu, g.n, non_critical_mis=mis),
    )


def ke_decomposition(g: Graph) -> tuple[int, Graph]:
    """Split a KE graph into (S, H): S a maximum independent set, H = G - S,
    with every vertex of H matched into S by the certificate matching."""
    cert = recognize_ke(g)
    if not cert.is_ke:
        w = cert.non_ke_witness
        raise NotKEError(f"alpha_c={w.alpha_c} < n - mu = {w.n - w.mu}; not KE")
    s = cert.ke_witness.independent_set
    h, _ = induced_subgraph(g, g.full_mask & ~s)
    return s, h


@dataclass(frozen=True)
class EqualityChainReport:
    """The four quantities d, |core| - |N(core)|, alpha - mu, and n - 2*mu.

    They coincide on every KE graph; on other graphs the report is
    informational (each pattern of agreement does occur).
    """

    d: int
    core_surplus: int
    alpha_minus_mu: int
    deficiency: int
    is_ke: bool

    @property
    def chain_holds(self) -> bool:
        return self.d == self.core_surplus == self.alpha_minus_mu == self.deficiency

    def values(self) -> tuple[int, int, int, int]:
        return (self.d, self.core_surplus, self.alpha_minus_mu, self.deficiency)


def equality_chain_report(
    g: Graph, limit: int | None = DEFAULT_EXACT_LIMIT
) -> EqualityChainReport:
    """Evaluate the equality chain; a KE graph failing it is an internal defect."""
    d = critical_difference(g)
    c = core(g, limit)
    nc = neighborhood(g, c)
    a = alpha(g, limit).value
    mu = maximum_matching(g).size
    report = EqualityChainReport(
        d=d,
        core_surplus=c.bit_count() - nc.bit_count(),
        alpha_minus_mu=a - mu,
        deficiency=g.n - 2 * mu,
        is_ke=recognize_ke(g).is_ke,
    )
    if report.is_ke and not report.chain_holds:
        raise ContractViolationError(
            f"equality chain broken on a KE graph: {report.values()}"
        )
    return report


@dataclass(frozen=True)
class CharacterizationRecord:
    """Three predicates that are equivalent for every graph: KE-ness, some
    maximum independent set critical, every maximum independent set critical."""

    is_ke: bool
    exists_critical_mis: bool
    all_mis_critical: bool
    witness: int | None  # first non-critical maximum independent set, if any

    @property
    def consistent(self) -> bool:
        return self.is_ke == self.exists_critical_mis == self.all_mis_critical


def characterization_check(
    g: Graph,
    cap: int = DEFAULT_OMEGA_CAP,
    limit: int | None = DEFAULT_EXACT_LIMIT,
) -> CharacterizationRecord:
    """Quantify criticality over the full set of maximum independent sets.

    Requires untruncated enumeration (raises TruncatedOmegaError otherwise).
    """
    omega = collect_omega(g, cap, limit)
    d = critical_difference(g)
    exists = False
    witness = None
    all_critical = True
    for s in omega:
        surplus = s.bit_count() - neighborhood(g, s).bit_count()
        if surplus == d:
            exists = True
        else:
            all_critical = False
            if witness is None:
                witness = s
    return CharacterizationRecord(
        is_ke=recognize_ke(g).is_ke,
        exists_critical_mis=exists,
        all_mis_critical=all_critical,
        witness=witness,
    )


@dataclass(frozen=True)
class StructureChecks:
    """Structural facts that hold for every KE graph."""

    ncore_equals_complement_intersection: bool
    counting_identity_holds: bool
    residual_perfectly_matched: bool
    residual_is_ke: bool
    core: int
    ncore: int
    complement_intersection: int

    @property
    def all_hold(self) -> bool:
        return (
            self.ncore_equals_complement_intersection
            and self.counting_identity_holds
            and self.residual_perfectly_matched
            and self.residual_is_ke
        )


def structure_checks_ke(
    g: Graph,
    cap: int = DEFAULT_OMEGA_CAP,
    limit: int | None = DEFAULT_EXACT_LIMIT,
) -> StructureChecks:
    """Verify, on a KE graph: (i) N(core) is the intersection of the
    complements of all maximum independent sets, (ii) alpha + |that set| =
    mu + |core|, (iii) G - N[core] has a perfect matching and is itself KE."""
    cert = recognize_ke(g)
    if not cert.is_ke:
        w = cert.non_ke_witness
        raise NotKEError(f"alpha_c={w.alpha_c} < n - mu = {w.n - w.mu}; not KE")
    omega = collect_omega(g, cap, limit)
    union = 0
    for s in omega:
        union |= s
    complement_intersection = g.full_mask & ~union
    c = core(g, limit)
    nc = neighborhood(g, c)
    a = alpha(g, limit).value
    mu = maximum_matching(g).size
    residual = delete_closed_neighborhood(g, c)
    residual_cert = recognize_ke(residual)
    return StructureChecks(
        ncore_equals_complement_intersection=(nc == complement_intersection),
        counting_identity_holds=(
            a + complement_intersection.bit_count() == mu + c.bit_count()
        ),
        residual_perfectly_matched=(
            residual.n == 2 * maximum_matching(residual).size
        ),
        residual_is_ke=residual_cert.is_ke,
        core=c,
        ncore=nc,
        complement_intersection=complement_intersection,
    )
