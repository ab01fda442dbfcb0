"""Trisection parameters, the Chu-Tillmann bound and equality certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .abelian import RankReport, RankStatus, rank_report
from .builder import Link, SpatialGraph, TunnelSystem, build_gamma0, extract_link, slide_circle
from .errors import InvariantViolation
from .kirby import KirbyDiagram, build_N, double, euler_characteristic, stabilize
from .presentation import Presentation

Status = RankStatus

# genus added by one connected summand; the k_i are unchanged
S2XS2_GENUS = 2
CP2_GENUS = 1


@dataclass(frozen=True)
class TrisectionParams:
    g: int
    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        if not self.g >= max(self.k1, self.k2, self.k3) or min(self.k1, self.k2, self.k3) < 0:
            raise ValueError(f"invalid trisection parameters {self}")

    @property
    def k(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)

    def __str__(self):
        return f"({self.g};{self.k1},{self.k2},{self.k3})"


def trisection_from_link(n: int, num_components: int, tunnel_bound: int) -> TrisectionParams:
    """Parameters ``(t+1; n, t+1-|L|, n)`` of the trisection built from a
    link over ``n`` 1-handles with a tunnel system of size ``t``."""
    if num_components < 1 or tunnel_bound < num_components - 1:
        raise ValueError(f"need tunnel_bound >= num_components - 1 >= 0, got {tunnel_bound}, {num_components}")
    k2 = tunnel_bound + 1 - num_components
    if k2 < 0:
        raise ValueError("negative middle handlebody genus")
    return TrisectionParams(tunnel_bound + 1, n, k2, n)


def chu_tillmann_bound(chi: int, rank: int) -> int:
    """Lower bound ``chi - 2 + 3 rank`` on the genus of any trisection."""
    return chi - 2 + 3 * rank


@dataclass(frozen=True)
class ChainFragment:
    n: int
    t_L: int
    num_L: int
    t_Lhat: int
    num_Lhat: int
    chain: tuple[int, int, int, int]


def verify_chain(n: int, t_L: int, num_L: int) -> ChainFragment:
    """Evaluate ``n <= t(L^)+1-|L^| <= t(L)+1-|L| <= n`` for the double.

    ``L^`` is ``L`` plus one meridian per component, and adding the meridians
    costs at most one tunnel each.  With ``t(L) = n + |L| - 1`` every term
    equals ``n``, which pins ``t(L^) = n + |L^| - 1``.
    """
    if t_L != n + num_L - 1:
        raise ValueError(f"t(L) = {t_L} is not the construction bound {n + num_L - 1}")
    num_Lhat = 2 * num_L
    t_Lhat = t_L + num_L
    chain = (n, t_Lhat + 1 - num_Lhat, t_L + 1 - num_L, n)
    if not chain[0] <= chain[1] <= chain[2] <= chain[3]:
        raise InvariantViolation(f"inequality chain violated: {chain}")
    if t_Lhat != n + num_Lhat - 1:
        raise InvariantViolation(f"t(L^) = {t_Lhat} is not n + |L^| - 1")
    return ChainFragment(n, t_L, num_L, t_Lhat, num_Lhat, chain)


@dataclass(frozen=True)
class Certificate:
    """Numeric record that the constructed M meets the Chu-Tillmann bound.

    Equality at the presentation rank ``n`` is always checked.  ``status`` is
    PROVEN only when the abelianization also shows the group rank equals
    ``n``.  ``t_L`` and ``t_Lhat`` are None for an empty link.
    ``intermediate`` is the trisection obtained from ``L`` alone.
    """

    params: TrisectionParams
    chi: int
    n: int
    rank_report: RankReport
    t_L: Optional[int]
    t_Lhat: Optional[int]
    num_L: int
    num_Lhat: int
    chain: tuple[int, int, int, int]
    intermediate: TrisectionParams
    bound: int
    stabilization: tuple[int, int, int]
    status: Status
    notes: tuple[str, ...] = ()

    def problems(self) -> list[str]:
        """Names of the invariants this certificate violates."""
        out = []
        if len(set(self.chain)) != 1 or self.chain[0] != self.n:
            out.append("chain")
        if self.params.k != (self.n,) * 3:
            out.append("k")
        if self.bound != chu_tillmann_bound(self.chi, self.n):
            out.append("bound")
        if self.params.g != self.bound:
            out.append("g")
        if self.chi != 2 + self.params.g - sum(self.params.k):
            out.append("chi")
        expected = Status.PROVEN if self.rank_report.status is Status.PROVEN and not out else Status.CONDITIONAL
        if self.status is not expected:
            out.append("status")
        return out


@dataclass(frozen=True)
class Construction:
    presentation: Presentation
    gamma0: SpatialGraph
    graph: SpatialGraph
    link: Link
    tunnels: TunnelSystem
    N: KirbyDiagram
    M: KirbyDiagram
    certificate: Certificate


def construct(p: Presentation, framings: Sequence[int] = (),
              stabilization: tuple[int, int, int] = (0, 0, 0)) -> Construction:
    """Run every stage from the presentation to the certified double."""
    a, b, c = stabilization
    n, r = p.n, len(p.relators)
    gamma0 = build_gamma0(n, r)
    graph = gamma0
    for i, rel in enumerate(p.relators):
        graph = slide_circle(graph, i, rel)
    link, tunnels = extract_link(graph)
    N = build_N(n, link, framings)
    M0 = double(N)
    M = stabilize(M0, a, b, c)

    notes = []
    if r:
        frag = verify_chain(n, tunnels.count, len(link))
        if frag.num_Lhat != len(M0.two_handles):
            raise InvariantViolation("doubled diagram does not have 2|L| two-handles")
        t_L, t_Lhat, num_Lhat, chain = frag.t_L, frag.t_Lhat, frag.num_Lhat, frag.chain
        params = trisection_from_link(n, num_Lhat, t_Lhat)
        intermediate = trisection_from_link(n, len(link), t_L)
    else:
        # M is #_n S^1 x S^3 with its genus-n trisection
        t_L = t_Lhat = None
        num_Lhat = 0
        chain = (n, n, n, n)
        params = intermediate = TrisectionParams(n, n, n, n)
        notes.append("empty link: free-group path")
    if n == 0:
        notes.append("trivial group: the equivalence with the link condition assumes G != 1")

    params = TrisectionParams(params.g + S2XS2_GENUS * a + CP2_GENUS * (b + c), *params.k)
    chi = euler_characteristic(M)
    if params.k != (n, n, n):
        raise InvariantViolation(f"unbalanced final trisection {params}")
    if params.g != n + 2 * r + 2 * a + b + c:
        raise InvariantViolation(f"genus {params.g} disagrees with n + 2|R| + 2a + b + c")
    if chi != 2 + params.g - sum(params.k):
        raise InvariantViolation(f"chi = {chi} but 2 + g - (k1+k2+k3) = {2 + params.g - sum(params.k)}")
    bound = chu_tillmann_bound(chi, n)
    if params.g != bound:
        raise InvariantViolation(f"genus {params.g} misses the bound {bound}")

    rank = rank_report(p)
    cert = Certificate(params, chi, n, rank, t_L, t_Lhat, len(link), num_Lhat, chain,
                       intermediate, bound, (a, b, c), rank.status, tuple(notes))
    if cert.problems():
        raise InvariantViolation(f"certificate fails checks: {cert.problems()}")
    return Construction(p, gamma0, graph, link, tunnels, N, M, cert)


def certify(p: Presentation, framings: Sequence[int] = (),
            stabilization: tuple[int, int, int] = (0, 0, 0)) -> Certificate:
    return construct(p, framings, stabilization).certificate
