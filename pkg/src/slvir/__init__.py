"""Exact models of sl2(C)- and Virasoro-algebra modules with depth-bounded
verification of their structural identifications."""

from .errors import (
    BadPolynomial,
    DepthExceeded,
    InvalidParameter,
    NotASubalgebra,
    NotInSubalgebra,
    NotRepresentable,
    NotWeightModule,
    SlvirError,
    WrongAlgebra,
)
from .scalar import Scalar, sqrt_exact
from .laurent import LaurentPoly, divmod_window, reduce_power, sl2_window
from .lie import (
    E,
    F,
    H,
    Automorphism,
    SL2Elt,
    VirElt,
    bracket_sl2,
    bracket_vir,
    classify_subalgebra_1d,
    classify_subalgebra_2d,
    embed_sl2,
    intersect_virf_sl2,
    sl2_from_vir,
)
from .pbw import UEnvElt, aut_extend, casimir_elt, nf_multiply
from .modules import (
    DenseModule,
    LowVermaModule,
    ModVec,
    Module,
    TensorModule,
    TwistModule,
    VermaModule,
    WModule,
    XModule,
    XbarModule,
    act_uenv,
    act_word,
    casimir_action,
    make_module,
    weight_decompose,
)
from .induced import InducedModule, MuData, VirPolyModule, mu_eval
from .verify import (
    check_module_map,
    generator_test,
    simplicity_test,
    suite_dense,
    suite_restriction,
    suite_tensor_vermas,
    suite_twist_induction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
