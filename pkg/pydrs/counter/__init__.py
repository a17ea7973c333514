"""
Clause matching F-score between a system form and a gold form, under the best injective variable mapping.
"""
import logging

from pydrs.counter.config import EXHAUSTIVE, HILL_CLIMB, MatchConfig
from pydrs.counter.problem import MatchProblem, matched_clauses, prepare, strip_redundant_refs
from pydrs.counter.result import MatchResult, compute_f, micro_average
from pydrs.counter.search import check_exhaustive_bound, exhaustive, hill_climb

logger = logging.getLogger(__name__)

__all__ = [
	'EXHAUSTIVE', 'HILL_CLIMB', 'MatchConfig', 'MatchProblem', 'MatchResult', 'compute_f', 'match_score',
	'match_prepared', 'matched_clauses', 'micro_average', 'prepare', 'strip_redundant_refs',
]


def match_prepared(system, gold, config):
	"""
	Match two forms that were already prepared (redundant REF clauses stripped when required).

	:rtype: pydrs.counter.result.MatchResult
	"""
	problem = MatchProblem(system, gold)
	if config.is_exhaustive:
		check_exhaustive_bound(problem, config.exhaustive_bound)
	mapping, matched = hill_climb(problem, config)
	if config.is_exhaustive:
		mapping, matched = exhaustive(problem, config, lower=(mapping, matched))
	return MatchResult(problem.names(mapping), matched, problem.produced, problem.gold_total)


def match_score(system, gold, config=None):
	"""
	Score a system form against a gold form.

	:param system: System clausal form.
	:param gold: Gold clausal form.
	:param config: Match configuration, defaults to :meth:`MatchConfig.from_settings`.
	:return: Match result with the best mapping found.
	:rtype: pydrs.counter.result.MatchResult
	:raise: pydrs.core.exceptions.SearchSpaceTooLarge
	"""
	if config is None:
		config = MatchConfig.from_settings()
	return match_prepared(prepare(system, config.include_ref), prepare(gold, config.include_ref), config)
