from pydrs.core import models
from pydrs.core.parser import parse_clause
from pydrs.counter import MatchProblem, matched_clauses, prepare, strip_redundant_refs
from tests import read_form


def test_strip_redundant_refs():
	form = read_form('everything_system.clf')
	stripped = strip_redundant_refs(form)
	assert len(form.clauses) == 10
	assert len(stripped.clauses) == 7
	refs = [clause for clause in stripped.clauses if clause.kind == models.REF]
	assert [str(clause.args[0]) for clause in refs] == ['x0']

	# Only a concept in the same box makes a REF redundant.
	headerless = read_form('headerless.clf')
	assert len(strip_redundant_refs(headerless).clauses) == len(headerless.clauses) - 5


def test_prepare():
	form = read_form('everything_gold.clf')
	assert prepare(form, include_ref=True) is form
	assert len(prepare(form).clauses) == 7


def test_candidates():
	system = models.ClausalForm(clauses=[parse_clause('b1 dog "n.01" x1'), parse_clause('b1 Agent x1 x2')])
	gold = models.ClausalForm(clauses=[parse_clause('b5 dog "n.01" y1'), parse_clause('b5 cat "n.01" y2')])
	problem = MatchProblem(system, gold)
	assert problem.system_variables == ['b1', 'x1', 'x2']
	assert problem.gold_variables == ['b5', 'y1', 'y2']
	assert problem.candidates == [[0], [1], []]
	assert problem.evaluate([0, 1, None]) == 1
	assert problem.evaluate([0, 2, None]) == 0
	assert problem.names([0, 1, None]) == {'b1': 'b5', 'x1': 'y1'}
	assert problem.indices({'b1': 'b5', 'x1': 'y1'}) == [0, 1, None]


def test_gold_multiset():
	system = models.ClausalForm(clauses=[parse_clause('b1 Theme x1 x2'), parse_clause('b1 Theme x1 x2')])
	gold = models.ClausalForm(clauses=[parse_clause('b1 Theme x1 x2')])
	problem = MatchProblem(system, gold)
	assert problem.evaluate([0, 1, 2]) == 1


def test_matched_clauses():
	system = prepare(read_form('everything_system.clf'))
	gold = prepare(read_form('everything_gold.clf'))
	pairs = matched_clauses(system, gold, {'b3': 'b0', 'b2': 'b1', 'b1': 'b2', 'x2': 's1', 'x3': 't1'})
	assert [(system.clauses[si].operator.name, gold.clauses[gi].operator.name) for si, gi in pairs] == [
		('IMP', 'IMP'), ('new', 'new'), ('Time', 'Time'),
	]


def test_strip_is_idempotent():
	for name in ('negation.clf', 'segmented.clf', 'universal.clf', 'headerless.clf', 'everything_gold.clf'):
		form = read_form(name)
		stripped = strip_redundant_refs(form)
		assert strip_redundant_refs(stripped) == stripped
		assert [c for c in stripped.clauses if c.kind != models.REF] == \
			[c for c in form.clauses if c.kind != models.REF]
