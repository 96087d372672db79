"""Linear complementary pairs of subspace codes over finite fields."""

from ._kernels import warm_up as warm_up_kernels
from .channel import (
    ChannelInstance,
    DecodeResult,
    Detection,
    SimulationReport,
    correct,
    detect,
    insert_error,
    simulate,
)
from .code import (
    LinearCode,
    SubspaceCode,
    constacyclic_from_genpoly,
    dual_subspace_code,
    linear_code_from_generator,
    min_subspace_distance,
)
from .codefile import CodeFile, emit_code_text, parse_code_file, parse_code_text
from .construct import (
    Spread,
    lift_family,
    lift_matrix_code,
    plotkin,
    plotkin_lcp_pair,
    plotkin_tilde,
    plotkin_tilde_pair,
    s_lambda,
    s_lambda_dual_pair,
    s_lambda_lcd_pair,
    s_lambda_pair,
    spread_field,
    spread_matrix,
    spread_partition,
    verify_spread,
)
from .errors import SubLcpError
from .field import GF, Field, FieldElement
from .lcp import (
    ComplementFunction,
    LcpReport,
    check_lcd,
    check_lcp,
    check_lcp_all,
    complement_from_lcp,
    dual_equivalence_check,
    verify_complement_function,
)
from .matrix import Matrix
from .poly import Polynomial
from .subspace import Subspace, enumerate_vectors, intersect, span, subspace_distance, subspace_sum

__version__ = "0.1.0"

__all__ = [
    "ChannelInstance",
    "check_lcd",
    "check_lcp",
    "check_lcp_all",
    "CodeFile",
    "complement_from_lcp",
    "ComplementFunction",
    "constacyclic_from_genpoly",
    "correct",
    "DecodeResult",
    "detect",
    "Detection",
    "dual_equivalence_check",
    "dual_subspace_code",
    "emit_code_text",
    "enumerate_vectors",
    "Field",
    "FieldElement",
    "GF",
    "insert_error",
    "intersect",
    "LcpReport",
    "lift_family",
    "lift_matrix_code",
    "linear_code_from_generator",
    "LinearCode",
    "Matrix",
    "min_subspace_distance",
    "parse_code_file",
    "parse_code_text",
    "plotkin",
    "plotkin_lcp_pair",
    "plotkin_tilde",
    "plotkin_tilde_pair",
    "Polynomial",
    "s_lambda",
    "s_lambda_dual_pair",
    "s_lambda_lcd_pair",
    "s_lambda_pair",
    "simulate",
    "SimulationReport",
    "span",
    "Spread",
    "spread_field",
    "spread_matrix",
    "spread_partition",
    "SubLcpError",
    "Subspace",
    "subspace_distance",
    "subspace_sum",
    "SubspaceCode",
    "verify_complement_function",
    "verify_spread",
    "warm_up_kernels",
]
