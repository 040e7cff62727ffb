"""Check driver: runs every verification applicable to a parsed document.

Checks always run and report in the fixed order below, so structured
reports are stable and diffable.  Checks that depend on the Kahler layer
being valid (product, radical, center, exactness) are skipped when any of
the three Kahler validity checks fail.
"""

from __future__ import annotations

from .crkahler import (
    center_U, check_cr, check_kahler, check_left_symmetric, build_extension,
    ideal_complement_complex, left_symmetric_product, omega_radical,
    semisimple_exactness,
)
from .inputdoc import Payloads
from .poisson import check_j_invariance, check_pseudo_poisson, coboundary_pi
from .report import Report, witness

CHECK_ORDER = (
    "cr.condition2",
    "cr.condition3",
    "kahler.omega_antisymmetric",
    "kahler.omega_closed",
    "kahler.omega_h_nondegenerate",
    "leftsym.identity1",
    "leftsym.jacobi_induced",
    "leftsym.identity2",
    "radical.subalgebra",
    "radical.orthogonal_h",
    "center_u.commutative",
    "center_u.stabilizes_h",
    "exactness.alpha_exact",
    "exactness.killing_dual",
    "exactness.radical_match",
    "poisson.schouten_membership",
    "poisson.j_invariance",
    "poisson.coboundary_invariance",
    "ideal.valid_input",
    "ideal.jacobi",
    "ideal.complex_structure",
    "extension.valid_input",
    "extension.jacobi",
    "extension.alpha_j_invariant",
    "extension.cyclic",
    "extension.omega_closed",
)


def run_checks(p: Payloads) -> Report:
    rep = Report()

    if p.cr is not None:
        rep.extend(check_cr(p.cr))

    if p.kahler is not None:
        kahler_rep = check_kahler(p.kahler)
        rep.extend(kahler_rep)
        if kahler_rep.passed:
            product = left_symmetric_product(p.kahler)
            rep.extend(check_left_symmetric(p.kahler, product))
            _, radical_rep = omega_radical(p.kahler)
            rep.extend(radical_rep)
            _, center_rep = center_U(p.kahler)
            rep.extend(center_rep)
            if p.algebra.is_semisimple():
                _, _, _, exact_rep = semisimple_exactness(p.kahler)
                rep.extend(exact_rep)

    if p.poisson is not None:
        rep.extend(check_pseudo_poisson(p.poisson))
        rep.extend(check_j_invariance(p.poisson))
        if p.poisson_r is not None:
            _, cob_rep = coboundary_pi(p.algebra, p.poisson_r, p.poisson.U)
            rep.extend(cob_rep)

    if p.ideal is not None and p.cr is not None:
        try:
            _, _, ideal_rep = ideal_complement_complex(p.cr, p.ideal)
        except ValueError as e:
            rep.add("ideal.valid_input", False, [witness(reason=str(e))])
        else:
            rep.add("ideal.valid_input", True)
            rep.extend(ideal_rep)

    if p.extension is not None and p.kahler is not None:
        try:
            _, ext_rep = build_extension(p.kahler, p.extension["v_dim"],
                                         p.extension["alpha"])
        except ValueError as e:
            rep.add("extension.valid_input", False, [witness(reason=str(e))])
        else:
            rep.extend(ext_rep)

    order = {cid: k for k, cid in enumerate(CHECK_ORDER)}
    rep.results.sort(key=lambda r: order.get(r.check_id, len(order)))
    return rep
