"""Function classes: completely monotonic, Bernstein, CrF, complete Bernstein."""

from .cbf import cbf_power, cbf_product
from .classify import (
    DEFAULT_CLASS_TOL,
    Verdict,
    check_bf_differences,
    check_cm_differences,
    classify_crf,
    nevanlinna_check,
)
from .reprs import (
    ZERO_KERNEL,
    BernsteinRepr,
    CMRepr,
    CrfRepr,
    ExpSumKernel,
    Kernel,
    PowerKernel,
    SlopeDiagnostics,
    StieltjesRepr,
    SumKernel,
    TableKernel,
    TailKernel,
    eval_bf,
    eval_cbf,
    eval_cm,
    eval_crf,
    limit_slope,
    stretched_exp_creep,
)

__all__ = [
    "DEFAULT_CLASS_TOL",
    "ZERO_KERNEL",
    "BernsteinRepr",
    "CMRepr",
    "CrfRepr",
    "ExpSumKernel",
    "Kernel",
    "PowerKernel",
    "SlopeDiagnostics",
    "StieltjesRepr",
    "SumKernel",
    "TableKernel",
    "TailKernel",
    "Verdict",
    "cbf_power",
    "cbf_product",
    "check_bf_differences",
    "check_cm_differences",
    "classify_crf",
    "eval_bf",
    "eval_cbf",
    "eval_cm",
    "eval_crf",
    "limit_slope",
    "nevanlinna_check",
    "stretched_exp_creep",
]
