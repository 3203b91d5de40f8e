#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

from ..core.config.fa_config import FACONF
from ..sim import adversary, analytic, composability, harness
from ..sim.decorator import api_log
from ..sim.hash_family import HashFamilyParams
from ..sim.knowledge import KnowledgeModel


class LifetimeAPI(object):
    def __init__(self, tag_bits=FACONF.Family.DEFAULT_TAG_BITS, msg_bits=FACONF.Family.DEFAULT_MSG_BITS[0], **kwargs):
        """
        The API wrapper of the fixed-key authentication toolkit
        Note: one instance fixes one hash family (message and tag space), the analytic
            and composability interfaces do not depend on it

        :param tag_bits: log2 of the tag space size, default is 7
        :param msg_bits: log2 of the message space size, default is 9
        :param kwargs: keyword parameters, generally do not need to set
            knowledge: fraction of OTP values Eve knows to be impossible each round, default is 0.1
            ratio: surviving ratio h/H per round, overrides knowledge when given
            workers: worker processes for sweeps, default is the FIXAUTH_WORKERS env or the cpu count
        """
        self._params = HashFamilyParams.from_bits(msg_bits, tag_bits)
        self._tag_bits = tag_bits
        self._msg_bits = msg_bits
        ratio = kwargs.get('ratio', None)
        if ratio is not None:
            self._knowledge = KnowledgeModel.from_ratio(ratio, self._params.tag_space_size)
        else:
            self._knowledge = KnowledgeModel.fixed_fraction(
                kwargs.get('knowledge', FACONF.Knowledge.DEFAULT_FRACTION), self._params.tag_space_size)
        self._workers = kwargs.get('workers', None)

    @property
    def params(self):
        """
        Hash family parameters (|M|, |T|, p) of this instance
        """
        return self._params

    @property
    def knowledge(self):
        """
        Knowledge model of Eve used by simulate
        """
        return self._knowledge

    @api_log
    def simulate(self, stop=FACONF.Stop.FORGE, seed=0, budget=FACONF.Attack.DEFAULT_BUDGET, **kwargs):
        """
        Run one covert attack against a random key of the family

        :param stop: 'identify' (one candidate left) or 'forge' (forgery and OTP recovery possible)
        :param seed: seed of the attack, identical seeds give identical transcripts
        :param budget: maximum number of rounds
        :param kwargs:
            target_message: Eve's message m_E, default is drawn once per attack
            forge_only: stop as soon as the forged tag is known, without the OTP, default is False
            true_key_index: force the secret key, default is drawn from the seed
            observer: callable(round, candidates, true_key_index) after each elimination
        :return: AttackTranscript
        """
        config = adversary.AttackConfig(self._params, self._knowledge, stop, budget, seed,
                                        target_message=kwargs.get('target_message', None),
                                        forge_only=kwargs.get('forge_only', False),
                                        true_key_index=kwargs.get('true_key_index', None))
        return adversary.run_attack(config, observer=kwargs.get('observer', None))

    @api_log
    def guess(self, trials=1, seed=0, budget=FACONF.Guess.DEFAULT_BUDGET):
        """
        Guessing baseline: rounds until a uniform guess of the encrypted tag succeeds

        :param trials: number of independent guessing adversaries
        :return: GuessingResult
        """
        return adversary.run_guessing_attack(
            adversary.GuessingConfig(self._params.tag_space_size, seed, budget, trials))

    def analytic(self, k_max, ratio=None, H=FACONF.Analytic.DEFAULT_H, h=None, s_factor=None):
        """
        Lifetime table for k = 0..k_max

        :param ratio: surviving ratio h/H, used when h is not given
        :param H: number of false matches
        :param h: surviving false matches per round
        :param s_factor: split point factor of the cheb_s column, default (1 + h/H) / 2
        :return: LifetimeTable
        """
        if h is None:
            h = analytic.ModelParams.from_ratio(H, ratio if ratio is not None else self._knowledge.ratio).h
        return analytic.lifetime_table(k_max, h, H, s_factor=s_factor)

    def independent_model(self, H, h, k0, trials, seed=0):
        """
        Monte Carlo of the independent hypergeometric model started at k0 false matches

        :return: SimulationSummary
        """
        return analytic.independent_model_simulate(H, h, k0, trials, seed)

    def compose(self, rounds, eps1, eps2):
        """
        Security-loss ledger of rounds 1..rounds

        :return: RoundLedger
        """
        return composability.RoundLedger.build(rounds, composability.EpsilonParams(eps1, eps2))

    def refresh_plan(self, eps1, eps2, budget):
        """
        Key-refresh interval keeping the authentication loss within budget, and the
        fixed-key cost per round for this family

        :return: RefreshPlan
        """
        return composability.refresh_plan(composability.EpsilonParams(eps1, eps2), budget, self._params.key_bits)

    @api_log
    def sweep(self, config=None, **kwargs):
        """
        Parameter sweep over message sizes

        :param config: SweepConfig, default is built from kwargs and this instance's tag size
        :return: SweepResult
        """
        if config is None:
            kwargs.setdefault('tag_bits', self._tag_bits)
            config = harness.SweepConfig(**kwargs)
        return harness.sweep(config, workers=self._workers)
