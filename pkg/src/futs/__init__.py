"""State-to-function transition systems over semirings: bisimulation by
lifting and partition refinement, quotients, and encodings of LTS, CTMC,
DTMC, IMC, PA and MA."""

from importlib import resources

from .bisim import (
    bisimilar,
    brute_force_coarsest,
    coarsest_bisimulation,
    find_violation,
    is_bisimulation,
)
from .continuation import (
    Continuation,
    ContinuationRegistry,
    block_sum,
    evaluate,
    make_continuation,
    nested_pushforward,
    pushforward,
)
from .core import Component, Futs, FutsType, build_futs, continuation_universe
from .encodings import (
    CtmcModel,
    ImcModel,
    LtsModel,
    MaModel,
    PaModel,
    decode,
    encode,
    encode_ctmc,
    encode_imc,
    encode_lts,
    encode_ma,
    encode_pa,
)
from .lifting import Partition, lift_chain, lift_once
from .model_io import (
    ModelDocument,
    load_model,
    parse_model,
    parse_relation,
    serialize_model,
    serialize_partition,
    to_futs,
)
from .quotient import check_homomorphism, quotient_futs
from .semiring import BOOL, RAT, Semiring

__version__ = "0.1.0"


def fixture_path(name):
    """Path of a bundled model file, e.g. ``fixture_path("c1.ctmc")``."""
    return resources.files(__name__).joinpath("data", "fixtures", name)
