#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.


class FACode(object):
    NORMAL = 0
    DOMAIN_ERROR = 1  # message/tag/otp or model parameter outside its space
    RANGE_ERROR = 2  # prime search input or key index out of range
    INVALID_KNOWLEDGE = 10  # knowledge leaves no possible OTP value
    INCONSISTENT_CANDIDATES = 11  # elimination emptied the candidate set
    INFEASIBLE_POINT = 12  # family bitmap over the memory ceiling
    DIVERGENCE = 20  # h/H >= 1 in the continuous model
    DEGENERATE_RECURSION = 21  # p_kk numerically 1
    NO_FEASIBLE_ROUND = 30  # budget <= eps2
    UNBOUNDED_ROUNDS = 31  # eps1 = eps2 = 0
    USAGE_ERROR = 40


class ExitCode(object):
    NORMAL = 0
    USAGE_ERROR = 1
    RUNTIME_ERROR = 2


ErrorCodeMap = {
    FACode.DOMAIN_ERROR: {
        'title': 'Domain Error',
        'desc': 'An argument lies outside the space it indexes. Check the message, tag and OTP ranges against the family parameters.',
    },
    FACode.RANGE_ERROR: {
        'title': 'Range Error',
        'desc': 'An index or size is outside the supported range.',
    },
    FACode.INVALID_KNOWLEDGE: {
        'title': 'Invalid Knowledge',
        'desc': 'The knowledge model excludes every OTP value. At least one value must stay possible.',
    },
    FACode.INCONSISTENT_CANDIDATES: {
        'title': 'Inconsistent Candidate Set',
        'desc': 'Elimination left no candidate. This cannot happen on an honest transcript; the transcript is corrupted or the engine is wrong.',
    },
    FACode.INFEASIBLE_POINT: {
        'title': 'Infeasible Point',
        'desc': 'The candidate bitmap of this family exceeds the configured memory ceiling.',
    },
    FACode.DIVERGENCE: {
        'title': 'Divergent Model',
        'desc': 'The surviving ratio h/H must be below 1, otherwise the lifetime is infinite.',
    },
    FACode.DEGENERATE_RECURSION: {
        'title': 'Degenerate Recursion',
        'desc': 'The self-transition probability p_kk is numerically 1, the recursion cannot be solved at this k.',
    },
    FACode.NO_FEASIBLE_ROUND: {
        'title': 'No Feasible Round',
        'desc': 'The security budget does not cover even the first round (budget <= eps2).',
    },
    FACode.UNBOUNDED_ROUNDS: {
        'title': 'Unbounded Rounds',
        'desc': 'With eps1 = eps2 = 0 every round fits the budget; there is no largest round.',
    },
    FACode.USAGE_ERROR: {
        'title': 'Usage Error',
        'desc': 'The command line could not be parsed.',
    },
}


class FixAuthError(Exception):
    code = FACode.NORMAL

    def __init__(self, msg=None):
        self.title = ErrorCodeMap.get(self.code, {}).get('title', 'Error')
        super(FixAuthError, self).__init__(msg if msg is not None else self.title)

    def __str__(self):
        return '[{}] {}'.format(self.title, self.args[0] if self.args else '')


class DomainError(FixAuthError, ValueError):
    code = FACode.DOMAIN_ERROR


class RangeError(FixAuthError, ValueError):
    code = FACode.RANGE_ERROR


class InvalidKnowledgeError(FixAuthError, ValueError):
    code = FACode.INVALID_KNOWLEDGE


class InconsistentCandidatesError(FixAuthError, RuntimeError):
    code = FACode.INCONSISTENT_CANDIDATES


class InfeasiblePointError(FixAuthError, MemoryError):
    code = FACode.INFEASIBLE_POINT


class DivergenceError(FixAuthError, ValueError):
    code = FACode.DIVERGENCE


class DegenerateRecursionError(FixAuthError, ArithmeticError):
    code = FACode.DEGENERATE_RECURSION

    def __init__(self, k, msg=None):
        self.k = k
        super(DegenerateRecursionError, self).__init__(
            msg if msg is not None else 'p_kk is numerically 1 at k={}'.format(k))


class NoFeasibleRoundError(FixAuthError, ValueError):
    code = FACode.NO_FEASIBLE_ROUND


class UnboundedRoundsError(FixAuthError, ValueError):
    code = FACode.UNBOUNDED_ROUNDS


class UsageError(FixAuthError):
    code = FACode.USAGE_ERROR
