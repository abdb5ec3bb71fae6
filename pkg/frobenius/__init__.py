# frobmaps Frobenius — K_e, L_e and the finite-generation ladder
from frobenius.compositions import Composition, compositions
from frobenius.ladder import (
    ColonChain,
    FrobeniusConfig,
    FrobeniusEngine,
    FrobeniusLadder,
    LevelRecord,
    LevelTimings,
    colon_chain,
    run_ladder,
)

__all__ = [
    "ColonChain",
    "Composition",
    "FrobeniusConfig",
    "FrobeniusEngine",
    "FrobeniusLadder",
    "LevelRecord",
    "LevelTimings",
    "colon_chain",
    "compositions",
    "run_ladder",
]
