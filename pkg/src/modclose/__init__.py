"""Finitely presented modules over Z and Z/n, the regular closure operators
induced by subcategories of injective modules, and the torsion theories those
operators generate.

Everything is exact: arbitrary-precision integer arithmetic through Smith
and Hermite normal forms, with brute-force enumeration oracles alongside the
structural algorithms.
"""

from .closure import (
    AxiomReport,
    ClosednessScan,
    ClosureResult,
    ClosureWitness,
    DivisibleModule,
    ScanEntry,
    Subcategory,
    axiom_suite,
    closedness_witness_scan,
    divisible_closure,
    is_closed,
    is_dense,
    is_hom_vanishing,
    regular_closure,
)
from .errors import OracleInfeasibleError
from .homs import (
    HomGroup,
    Homomorphism,
    enumerate_homs,
    hom_group,
    is_injective_by_structure,
    is_injective_module,
    kernel_of_hom,
)
from .matrices import IntMatrix, SNFResult, kernel_basis, smith_normal_form, solve_linear
from .modules import (
    FPModule,
    ModuleElement,
    Submodule,
    all_submodules,
    direct_sum,
    present_module,
    quotient,
    quotient_module,
    sub_as_module,
    sub_contains,
    sub_equal,
    sub_image,
    sub_join,
    sub_meet,
    sub_preimage,
    submodules_between,
)
from .rings import Ring, ZZ, Zmod
from .torsion import (
    Classification,
    CheckResult,
    ModuleUniverse,
    TorsionTheoryReport,
    classify,
    enumerate_universe,
    free_summand_rank,
    is_bounded,
    torsion_radical,
    verify_torsion_theory,
)

__all__ = [
    "AxiomReport",
    "Classification",
    "CheckResult",
    "ClosednessScan",
    "ClosureResult",
    "ClosureWitness",
    "DivisibleModule",
    "FPModule",
    "HomGroup",
    "Homomorphism",
    "IntMatrix",
    "ModuleElement",
    "ModuleUniverse",
    "OracleInfeasibleError",
    "Ring",
    "SNFResult",
    "ScanEntry",
    "Subcategory",
    "Submodule",
    "TorsionTheoryReport",
    "ZZ",
    "Zmod",
    "all_submodules",
    "axiom_suite",
    "classify",
    "closedness_witness_scan",
    "direct_sum",
    "divisible_closure",
    "enumerate_homs",
    "enumerate_universe",
    "free_summand_rank",
    "hom_group",
    "is_bounded",
    "is_closed",
    "is_dense",
    "is_hom_vanishing",
    "is_injective_by_structure",
    "is_injective_module",
    "kernel_basis",
    "kernel_of_hom",
    "present_module",
    "quotient",
    "quotient_module",
    "regular_closure",
    "smith_normal_form",
    "solve_linear",
    "sub_as_module",
    "sub_contains",
    "sub_equal",
    "sub_image",
    "sub_join",
    "sub_meet",
    "sub_preimage",
    "submodules_between",
    "torsion_radical",
    "verify_torsion_theory",
]
