"""The bracket conditions H1 and H2 and the resulting rigidity verdicts.

Everything is read off root arithmetic: for roots ``mu != -nu`` the bracket
``[g_mu, g_nu]`` is nonzero exactly when ``mu + nu`` is a root.  A class is
Schur rigid iff neither condition fails; the point class and the fundamental
class are rigid by convention.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .cominuscule import CominusculeSpace, HassePoset, SchubertClass, enumerate_classes
from .errors import ConsistencyError, InvalidInput
from .invariants import HIGHEST, LOWEST, AJInvariant, compute_aJ, extremal_weights, slice_roots
from .rootsys import add, grade, sub
from .weyl import inversion_set, reflection_word, word_from_inversions

H1 = "H1"
H2 = "H2"


@dataclass(frozen=True)
class ObstructionReport:
    aj: Optional[AJInvariant]
    h1: tuple  # (beta, gamma) pairs
    h2: tuple  # (epsilon, gamma) pairs

    @property
    def rigid(self) -> bool:
        return not self.h1 and not self.h2

    @property
    def extremal(self) -> bool:
        return self.aj is None


@dataclass(frozen=True)
class FlexCertificate:
    kind: str
    divisor: SchubertClass
    gamma: tuple
    partner: tuple
    checks: tuple  # (name, bool) pairs

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)


def _aj(space, cls, aj):
    return compute_aJ(space, cls) if aj is None else aj


def h1_witnesses(space: CominusculeSpace, cls: SchubertClass, aj: AJInvariant = None) -> list:
    """Pairs ``(beta, gamma)`` at which H1 fails, sorted by ``(gamma, beta)``.

    ``beta`` runs over the lowest weights of ``g_{0,1}`` and ``gamma`` over
    ``Pi(g_{1,a})``.  The pair counts when ``gamma - beta`` is not a root and
    ``gamma`` is the only root ``delta`` of ``g_{1,a}`` with ``delta + beta`` a root.
    """
    aj = _aj(space, cls, aj)
    is_root = space.sys.is_root
    top = slice_roots(space, aj.J, 1, aj.a)
    out = []
    for gamma in extremal_weights(space, aj.J, 1, aj.a, HIGHEST):
        for beta in extremal_weights(space, aj.J, 0, 1, LOWEST):
            if is_root(sub(gamma, beta)):
                continue
            hit = [d for d in top if is_root(add(d, beta))]
            if hit == [gamma]:
                out.append((beta, gamma))
    return sorted(out, key=lambda p: (p[1], p[0]))


def h2_witnesses(space: CominusculeSpace, cls: SchubertClass, aj: AJInvariant = None) -> list:
    """Pairs ``(epsilon, gamma)`` at which H2 fails, sorted by ``(gamma, epsilon)``.

    ``epsilon`` runs over ``Pi(g_{1,a-1})`` and ``gamma`` over ``Pi(g_{1,a})``;
    the pair counts when ``gamma`` is the only root ``delta`` of ``g_{1,a}``
    with ``epsilon - delta`` a root.  Nothing to check when ``a = 0``.
    """
    aj = _aj(space, cls, aj)
    if aj.a == 0:
        return []
    is_root = space.sys.is_root
    top = slice_roots(space, aj.J, 1, aj.a)
    out = []
    for gamma in extremal_weights(space, aj.J, 1, aj.a, HIGHEST):
        for eps in extremal_weights(space, aj.J, 1, aj.a - 1, HIGHEST):
            hit = [d for d in top if is_root(sub(eps, d))]
            if hit == [gamma]:
                out.append((eps, gamma))
    return sorted(out, key=lambda p: (p[1], p[0]))


def obstruction_report(space: CominusculeSpace, cls: SchubertClass) -> ObstructionReport:
    if space.is_extremal(cls):
        return ObstructionReport(None, (), ())
    aj = compute_aJ(space, cls)
    return ObstructionReport(aj, tuple(h1_witnesses(space, cls, aj)), tuple(h2_witnesses(space, cls, aj)))


def is_rigid(space: CominusculeSpace, cls: SchubertClass) -> bool:
    return obstruction_report(space, cls).rigid


def classify(target) -> HassePoset:
    """Annotate every class of a space (or of an already enumerated poset)."""
    poset = enumerate_classes(target) if isinstance(target, CominusculeSpace) else target
    reports = tuple(obstruction_report(poset.space, c) for c in poset.classes)
    return replace(poset, reports=reports)


def _divisor_checks(space, cls, gamma, aj):
    rest = [r for r in cls.roots if r != gamma]
    divisor = SchubertClass.of(rest)
    w = word_from_inversions(space.sys, cls.roots)
    via_weyl = inversion_set(space.sys, reflection_word(space.sys, gamma) + w)
    checks = [
        ("gamma_in_top_slice", gamma in cls.set and grade(gamma, aj.J) == aj.a),
        ("gamma_highest", gamma in extremal_weights(space, aj.J, 1, aj.a, HIGHEST)),
        ("divisor_is_ideal", space.is_ideal(rest)),
        ("divisor_complement_closed", space.complement_closed(rest)),
        ("divisor_is_r_gamma_w", via_weyl == divisor.set),
    ]
    return divisor, checks


def flex_certificate(space: CominusculeSpace, cls: SchubertClass) -> FlexCertificate:
    """Certificate for the first witness (H1 before H2) of a flexible class.

    H1: ``n' = <B + C> + n_{w'}`` is a subalgebra, i.e. ``beta + mu`` lies in
    ``Delta(w')`` whenever it is a root, for ``mu`` in ``Delta(w')``.
    H2: ``[n_{w'}, E]`` lands in ``h_eps + g_0^+``, i.e. ``eps - mu`` is a
    positive root of ``g_0`` or zero; plus the root part of
    ``[n_{w'}, g_0^+] in n_{w'}``.  The Cartan summand ``h_eps`` preserves
    every root space, so it is not tested separately.
    """
    report = obstruction_report(space, cls)
    if report.rigid:
        raise InvalidInput(f"{cls} is rigid in {space.name}; no certificate exists")
    aj = report.aj
    sys = space.sys
    g0_pos = [r for r in sys.positive_roots if r[space.node - 1] == 0]
    g0_pos_set = set(g0_pos)
    if report.h1:
        beta, gamma = report.h1[0]
        divisor, checks = _divisor_checks(space, cls, gamma, aj)
        closed = all(
            add(beta, mu) in divisor.set
            for mu in divisor.roots
            if sys.is_root(add(beta, mu))
        )
        checks.append(("subalgebra_a_plus_n_wprime", closed))
        cert = FlexCertificate(H1, divisor, gamma, beta, tuple(checks))
    else:
        eps, gamma = report.h2[0]
        divisor, checks = _divisor_checks(space, cls, gamma, aj)
        lands = all(
            sub(eps, mu) in g0_pos_set or eps == mu
            for mu in divisor.roots
            if sys.is_root(sub(eps, mu)) or eps == mu
        )
        checks.append(("bracket_n_wprime_E_in_h_eps_plus_g0_plus", lands))
        stable = all(
            sub(mu, nu) in divisor.set
            for mu in divisor.roots
            for nu in g0_pos
            if sys.is_root(sub(mu, nu))
        )
        checks.append(("g0_plus_preserves_n_wprime", stable))
        cert = FlexCertificate(H2, divisor, gamma, eps, tuple(checks))
    failed = [name for name, v in cert.checks if not v]
    if failed:
        raise ConsistencyError(f"certificate checks failed for {cls} in {space.name}: {failed}")
    return cert
