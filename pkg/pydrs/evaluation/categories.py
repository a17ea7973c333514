"""
Fine-grained scores per clause category, computed under the mapping of the overall match.
"""
from collections import OrderedDict

from pydrs.core import models
from pydrs.counter import MatchResult, matched_clauses, micro_average

OPERATORS = 'operators'
ROLES = 'roles'
SYNSETS = 'synsets'

POS_CATEGORIES = OrderedDict([
	('n', 'nouns'),
	('v', 'verbs'),
	('a', 'adjectives'),
	('r', 'adverbs'),
])

CATEGORIES = (OPERATORS, ROLES, SYNSETS) + tuple(POS_CATEGORIES.values())


def clause_categories(clause):
	"""
	Categories a clause counts in: exactly one of operators, roles and synsets, plus the part of speech category
	for concepts.

	:rtype: tuple
	"""
	if clause.kind == models.CONCEPT:
		by_pos = POS_CATEGORIES.get(clause.operator.pos)
		return (SYNSETS, by_pos) if by_pos else (SYNSETS,)
	if clause.kind == models.ROLE:
		return ROLES,
	return OPERATORS,


def fine_grained(system, gold, result):
	"""
	Restrict the counts of a match to every clause category. A matched pair counts in the category of its system
	clause.

	:param system: The system form as it was matched.
	:param gold: The gold form as it was matched.
	:param result: Match result of the pair.
	:return: Ordered dictionary from category to match result.
	"""
	matched = dict.fromkeys(CATEGORIES, 0)
	produced = dict.fromkeys(CATEGORIES, 0)
	gold_counts = dict.fromkeys(CATEGORIES, 0)

	for clause in system.clauses:
		for category in clause_categories(clause):
			produced[category] += 1
	for clause in gold.clauses:
		for category in clause_categories(clause):
			gold_counts[category] += 1
	for si, _ in matched_clauses(system, gold, result.mapping):
		for category in clause_categories(system.clauses[si]):
			matched[category] += 1

	return OrderedDict(
		(category, MatchResult(None, matched[category], produced[category], gold_counts[category]))
		for category in CATEGORIES
	)


def fine_grained_corpus(score):
	"""
	Micro averaged fine-grained scores over a scored corpus.

	:type score: pydrs.evaluation.corpus.CorpusScore
	:return: Ordered dictionary from category to match result.
	"""
	per_doc = [fine_grained(doc.system, doc.gold, doc.result) for doc in score.per_doc]
	return OrderedDict(
		(category, micro_average(categories[category] for categories in per_doc)) for category in CATEGORIES
	)
