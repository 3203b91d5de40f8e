from .fa_config import FACONF
from .fa_code import (
    FACode, ExitCode, ErrorCodeMap, FixAuthError, DomainError, RangeError, InvalidKnowledgeError,
    InconsistentCandidatesError, InfeasiblePointError, DivergenceError, DegenerateRecursionError,
    NoFeasibleRoundError, UnboundedRoundsError, UsageError,
)
