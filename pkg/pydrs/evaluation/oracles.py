"""
Oracle analyses: the system form gets the word senses, synsets or role names of the gold form and is scored again.
Clauses already matched under the overall mapping keep their gold partner, so an oracle never lowers a score.
"""
import logging
from collections import OrderedDict

from pydrs.core import models
from pydrs.counter import MatchConfig, MatchProblem, MatchResult, match_prepared, matched_clauses, micro_average

logger = logging.getLogger(__name__)

SENSES = 'senses'
SYNSETS = 'synsets'
ROLES = 'roles'

MODES = (SENSES, SYNSETS, ROLES)


def _targets(mode):
	return models.ROLE if mode == ROLES else models.CONCEPT


def _accepts(mode, system_clause, gold_clause):
	if gold_clause.kind != _targets(mode):
		return False
	if mode == SENSES:
		return (system_clause.operator.name, system_clause.operator.pos) == \
			(gold_clause.operator.name, gold_clause.operator.pos)
	return True


def _substitute(mode, system_clause, gold_clause):
	if mode == SENSES:
		operator = system_clause.operator._replace(sense=gold_clause.operator.sense)
	else:
		operator = gold_clause.operator
	return system_clause.with_operator(operator)


def _aligned(system_clause, gold_clause, mapping):
	"""
	Whether the variables and constants of both clauses line up under the mapping. The sense string of a concept is not
	compared.
	"""
	skip = 1 if system_clause.kind == models.CONCEPT else 0
	system_terms = (system_clause.box,) + system_clause.args[skip:]
	gold_terms = (gold_clause.box,) + gold_clause.args[skip:]
	for system_term, gold_term in zip(system_terms, gold_terms):
		if system_term.is_variable != gold_term.is_variable:
			return False
		if system_term.is_variable and mapping.get(system_term.value) != gold_term.value:
			return False
		if not system_term.is_variable and system_term.value != gold_term.value:
			return False
	return True


def oracle_transform(system, gold, mode, mapping=None):
	"""
	Replace senses, synsets or role names of the system form by those of the gold form.

	Gold clauses are used at most once and paired greedily in clause order. With a ``mapping`` the system clauses
	that are matched under it are left alone (their gold partners are consumed first) and a gold clause that lines up
	with the system clause under the mapping is preferred.

	:param system: System form.
	:param gold: Gold form.
	:param mode: ``SENSES``, ``SYNSETS`` or ``ROLES``.
	:param mapping: Optional dictionary from system to gold variable name.
	:rtype: pydrs.core.models.ClausalForm
	"""
	if mode not in MODES:
		raise ValueError('unknown oracle mode {!r}'.format(mode))

	target = _targets(mode)
	consumed = set()
	frozen = set()
	if mapping is not None:
		for si, gi in matched_clauses(system, gold, mapping):
			frozen.add(si)
			consumed.add(gi)

	gold_lemmas = set(clause.operator.name for clause in gold.clauses if clause.kind == models.CONCEPT)
	clauses = list()
	for si, clause in enumerate(system.clauses):
		if si in frozen or clause.kind != target:
			clauses.append(clause)
			continue
		if mode == SENSES and clause.operator.name not in gold_lemmas:
			clauses.append(clause)
			continue

		available = [
			gi for gi, gold_clause in enumerate(gold.clauses)
			if gi not in consumed and _accepts(mode, clause, gold_clause)
		]
		if mapping is not None:
			preferred = [gi for gi in available if _aligned(clause, gold.clauses[gi], mapping)]
			available = preferred + [gi for gi in available if gi not in preferred]
		if not available:
			clauses.append(clause)
			continue

		consumed.add(available[0])
		clauses.append(_substitute(mode, clause, gold.clauses[available[0]]))

	return system.with_clauses(clauses)


def oracle_score(system, gold, result, mode, config):
	"""
	Score the oracle transformed system form. The mapping of ``result`` stays available, so the score is never
	below the original one.

	:rtype: pydrs.counter.result.MatchResult
	"""
	transformed = oracle_transform(system, gold, mode, result.mapping)
	rescored = match_prepared(transformed, gold, config)
	problem = MatchProblem(transformed, gold)
	kept = problem.evaluate(problem.indices(result.mapping))
	if kept > rescored.matched:
		return MatchResult(result.mapping, kept, rescored.produced, rescored.gold)
	return rescored


def oracle_scores(score, modes=MODES, config=None):
	"""
	Micro averaged oracle scores of a scored corpus. Replaced (ill-formed) documents keep their score.

	:type score: pydrs.evaluation.corpus.CorpusScore
	:return: Ordered dictionary from mode to match result.
	"""
	config = config or score.config or MatchConfig.from_settings()
	scores = OrderedDict()
	for mode in modes:
		results = list()
		for doc in score.per_doc:
			if doc.replaced:
				results.append(doc.result)
			else:
				results.append(oracle_score(doc.system, doc.gold, doc.result, mode, config))
		scores[mode] = micro_average(results)
		logger.debug('Oracle {}: F1 {:.4f}'.format(mode, scores[mode].f1))
	return scores
