from homrep.connmat.exact import PsdVerdict, exact_rank, psd_check, quadratic_form, verify_witness
from homrep.connmat.slices import (
    ConnectionSlice,
    MultiplicativityReport,
    RankBound,
    build_slice,
    multiplicativity_check,
    rank_profile,
    separated_tensor_check,
    slice_from_rows,
)

__all__ = [
    "ConnectionSlice", "MultiplicativityReport", "PsdVerdict", "RankBound", "build_slice", "exact_rank",
    "multiplicativity_check", "psd_check", "quadratic_form", "rank_profile", "separated_tensor_check",
    "slice_from_rows", "verify_witness",
]
