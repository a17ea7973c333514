from pydrs.core.parser import parse_clause
from pydrs.counter import EXHAUSTIVE, MatchConfig, MatchResult, prepare
from pydrs.evaluation import fine_grained, fine_grained_corpus, score_corpus
from pydrs.evaluation.categories import CATEGORIES, POS_CATEGORIES, clause_categories
from tests import read_form

MAPPING = {'b3': 'b0', 'b2': 'b1', 'b1': 'b2', 'x2': 's1', 'x3': 't1'}


def test_clause_categories():
	assert clause_categories(parse_clause('b1 NOT b2')) == ('operators',)
	assert clause_categories(parse_clause('b1 EQU t1 "now"')) == ('operators',)
	assert clause_categories(parse_clause('b1 Agent e1 x1')) == ('roles',)
	assert clause_categories(parse_clause('b1 new "a.01" s1')) == ('synsets', 'adjectives')
	assert clause_categories(parse_clause('b1 time "n.08" t1')) == ('synsets', 'nouns')


def test_everything():
	system = prepare(read_form('everything_system.clf'))
	gold = prepare(read_form('everything_gold.clf'))
	categories = fine_grained(system, gold, MatchResult(MAPPING, 3, 7, 7))
	assert list(categories) == list(CATEGORIES)
	assert categories['operators'].counts == (1, 2, 2)
	assert categories['roles'].counts == (1, 2, 2)
	assert categories['synsets'].counts == (1, 3, 3)
	assert categories['adjectives'].counts == (1, 1, 1)
	assert categories['nouns'].counts == (0, 2, 2)
	assert categories['verbs'].counts == (0, 0, 0)
	assert categories['verbs'].f1 == 0.0


def test_categories_partition_the_clauses():
	score = score_corpus(
		[read_form('everything_system.clf'), read_form('universal.clf')], [read_form('everything_gold.clf'), read_form('universal.clf')],
		MatchConfig(search=EXHAUSTIVE),
	)
	categories = fine_grained_corpus(score)
	exclusive = [categories[name] for name in ('operators', 'roles', 'synsets')]
	assert tuple(map(sum, zip(*(result.counts for result in exclusive)))) == score.micro.counts

	by_pos = [categories[name] for name in POS_CATEGORIES.values()]
	assert tuple(map(sum, zip(*(result.counts for result in by_pos)))) == categories['synsets'].counts
	assert categories['roles'].counts == (1 + 6, 2 + 6, 2 + 6)
	assert categories['adjectives'].counts == (1, 1, 1)
