"""Metric dimension of total graphs of finite commutative antinegative semirings."""

from .errors import (
    CapExceededError,
    HypothesisError,
    InadmissibleError,
    SemidimError,
    SemiringFormatError,
    UnknownVertexError,
    UnsupportedCaseError,
)
from .graph import (
    UNREACHABLE,
    TotalGraph,
    TwinPartition,
    build_total_graph,
    diameter,
    distances,
    export_dot,
    twin_partition,
)
from .metric import (
    Method,
    ResolvingSetResult,
    check_twin_lower_bound,
    is_resolving,
    metric_dimension_exact,
    metric_dimension_oracle,
    representation,
)
from .product import ProductSemiring, direct_product, product_zero_divisors
from .semiring import (
    AxiomReport,
    FactorKind,
    Kind,
    SemiringTable,
    catalog,
    classify_factor,
    enumerate_semirings,
    is_antinegative,
    is_zclosed,
    verify_axioms,
    zero_divisors,
)
from .theory import (
    Case,
    CasePrediction,
    WitnessConstruction,
    classify_product,
    construct_witness,
    lower_bound,
    predict_dimension,
    support,
)
from .campaign import CampaignReport, default_campaign, verify_campaign

__all__ = [
    "AxiomReport",
    "build_total_graph",
    "CampaignReport",
    "CapExceededError",
    "Case",
    "CasePrediction",
    "catalog",
    "check_twin_lower_bound",
    "classify_factor",
    "classify_product",
    "construct_witness",
    "default_campaign",
    "diameter",
    "direct_product",
    "distances",
    "enumerate_semirings",
    "export_dot",
    "FactorKind",
    "HypothesisError",
    "InadmissibleError",
    "is_antinegative",
    "is_resolving",
    "is_zclosed",
    "Kind",
    "lower_bound",
    "Method",
    "metric_dimension_exact",
    "metric_dimension_oracle",
    "predict_dimension",
    "product_zero_divisors",
    "ProductSemiring",
    "representation",
    "ResolvingSetResult",
    "SemidimError",
    "SemiringFormatError",
    "SemiringTable",
    "support",
    "TotalGraph",
    "twin_partition",
    "TwinPartition",
    "UnknownVertexError",
    "UNREACHABLE",
    "UnsupportedCaseError",
    "verify_axioms",
    "verify_campaign",
    "WitnessConstruction",
    "zero_divisors",
]

__version__ = "0.1.0"
