"""Exact Suslin matrices, the Clifford algebra of a hyperbolic space and its spin groups."""

from .ring import (
    ZZ,
    IntegerRing,
    ModularRing,
    NotAUnit,
    ParseError,
    PolyRing,
    Ring,
    RingElem,
    RingMismatch,
)
from .matrix import Mat, NotInvertible, charpoly, det, inverse
from .suslin import SuslinMatrix, SuslinPair, bar, extract, gen_E, gen_F, is_suslin, length, sus, xyx
from .forms import basic_automorphism, form_J, lambda_mat, star, star_blockwise
from .clifford import (
    CliffordElem,
    GeneratorWord,
    eval_word,
    gen_e,
    gen_f,
    generators,
    grade_split,
    phi,
    span_check,
)
from .spingroup import (
    SpinPair,
    chi_inverse,
    in_G,
    in_SG,
    in_spin,
    in_U0,
    kernel_element,
    norm_d,
    spin4_check,
    spin6_from_sl4,
    spin_action,
)
from .epin import (
    OrthoMat,
    commutator,
    eg_gen,
    elementary,
    epin6_equals_e4_check,
    epin_gen,
    epin_gen_primed,
    oe,
    pi,
    table1_check,
)
from .report import CheckReport
from .checks import run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
