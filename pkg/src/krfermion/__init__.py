"""Exact Kirillov-Reshetikhin branching tables, the fermionic multiplicity
formula, and an independent classical representation-theory oracle."""

from .fermionic import (
    Decomposition,
    FactorList,
    KRFactor,
    config_weight_term,
    fermionic_decomposition,
    fermionic_multiplicity,
    vacancy,
)
from .kr_tables import (
    WeightSet,
    exceptional_table,
    kr_dimension,
    pim_closed_form,
    pim_recursive,
)
from .lie import (
    InputError,
    LieType,
    RootSystem,
    RootVector,
    UnsupportedError,
    Weight,
    build_root_system,
    dominant_weights_below,
    inner_product,
    root_to_weight,
    weight_minus_in_roots,
)
from .partitions import NuConfig, PartitionMult, enumerate_configs, enumerate_partitions
from .rep_oracle import (
    WeightMultiplicityMap,
    decomposition_tensor,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)
from .verify import (
    VerificationReport,
    run_suite,
    verify_dimension_conservation,
    verify_exceptional,
    verify_kr_branching,
    verify_type_a_tensor,
)

__version__ = "0.1.0"
