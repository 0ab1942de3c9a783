"""Crystal combinatorics for affine type A: aperiodic multisegments, FLOTW
multipartitions, the Kashiwara involution, the generalized Mullineux map and
the crystal commutor."""

from .core import (
    ClassicalWeight,
    CrystalContext,
    Multicharge,
    Multisegment,
    ParseError,
    Segment,
    canonical_multicharge,
    format_multisegment,
    is_aperiodic,
    parse_multicharge,
    parse_multisegment,
    rank,
    rho,
)
from .infinity import (
    CrystalError,
    epsilon,
    epsilon_hat,
    epsilon_star_vector,
    epsilon_vector,
    generate,
    hat_e,
    hat_f,
    head_word,
    raising_path,
    sharp,
    star,
    stats,
    tail_word,
    tau,
    tilde_e,
    tilde_f,
    vertices,
    weight,
)
from .fock import (
    MultiPartition,
    f_v,
    flotw_by_closure,
    fock_e,
    fock_eps,
    fock_f,
    format_multipartition,
    is_flotw,
    node_word,
    parse_multipartition,
)
from .correspondence import (
    InadmissibleCharge,
    ReconstructionError,
    enumerate_admissible,
    is_admissible,
    minimal_multicharge,
    reconstruct,
)
from .involutions import (
    HighestWeightVertex,
    charge_sharp,
    commutor,
    hw_vertices,
    mullineux,
    sharp_pipeline,
    star_via_pipeline,
)

__version__ = "0.1.0"
