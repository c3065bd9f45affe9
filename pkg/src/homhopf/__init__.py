"""Exact structure-constant checker for group-cograded monoidal Hom-Hopf algebras,
Hom-Hopf T-coalgebras and their Yetter-Drinfeld braided T-categories over F_p."""

from .group import FiniteGroup, builtin_group, cyclic_group, symmetric_group_3, trivial_group, validate_group
from .hopf import (
    antipode_solve,
    check_admissible_action,
    check_graded_coalgebra,
    check_graded_hopf,
    check_hom_comodule,
    check_hom_module,
    hom_coherence_maps,
    twist_by_automorphism,
    twist_by_crossing,
)
from .instance import Instance, parse_instance, perturb, serialize
from .linalg import FieldSpec
from .report import CheckReport, CheckResult, Witness
from .structures import AdmissibleAction, GradedHomCoalgebra, GradedHomHopf, TCoalgebra
from .suite import emit_report, run_suite
from .yd import (
    YDModule,
    YDMorphism,
    braiding_inverse,
    braiding_map,
    check_braiding_axioms,
    check_yd_module,
    compat_alt_check,
    yd_conjugate,
    yd_on_H,
    yd_tensor,
    yd_unit_k,
)

__version__ = "0.1.0"
