import unittest

from pydrs.core import models
from pydrs.core.parser import parse_clause
from pydrs.referee import validate, validate_corpus
from pydrs.referee.messages import Violation
from pydrs.referee.registry import RuleRegistry
from tests import read_form, without_clause

FIXTURES = ('negation.clf', 'segmented.clf', 'universal.clf', 'headerless.clf', 'everything_system.clf', 'everything_gold.clf')


class TestValidator(unittest.TestCase):

	def test_fixtures_are_valid(self):
		for name in FIXTURES:
			report = validate(read_form(name))
			assert report.valid, '{}: {}'.format(name, [str(v) for v in report.violations])
			assert report
			assert report.structure is not None

	def test_unbound_referent(self):
		report = validate(without_clause(read_form('negation.clf'), 'b3 REF x2'))
		assert not report.valid
		assert report.rules() == ['UnboundReferent']
		assert report.violations[0].obj == 'x2'
		assert report.violations[0].hint
		assert report.structure is None

	def test_dangling_relation(self):
		report = validate(without_clause(read_form('segmented.clf'), 'b6 DRS b4'))
		assert 'DanglingDiscourseRelation' in report.rules()

	def test_cycle(self):
		form = models.ClausalForm(clauses=[
			parse_clause('b1 NOT b2'), parse_clause('b2 NOT b1'), parse_clause('b1 REF x1'),
		])
		assert validate(form).rules() == ['CyclicSubordination']

	def test_type_conflict(self):
		form = models.ClausalForm(clauses=[parse_clause('b1 NOT b2'), parse_clause('b2 REF b1')])
		report = validate(form)
		assert report.rules() == ['TypeConflict']
		assert report.violations[0].obj == 'b1'

	def test_duplicate_referent(self):
		form = read_form('headerless.clf')
		form = form.with_clauses(form.clauses + (parse_clause('b1 REF x1'),))
		report = validate(form)
		assert report.rules() == ['DuplicateReferent']
		assert report.violations[0].obj == 'b1'

	def test_clause_shape(self):
		form = models.ClausalForm(clauses=[parse_clause('b1 REF "x1"'), parse_clause('b1 NOT "b2"')])
		report = validate(form)
		assert report.rules()[:2] == ['ClauseShape', 'ClauseShape']
		assert [v.obj for v in report.violations[:2]] == [0, 1]

	def test_empty(self):
		report = validate(models.ClausalForm())
		assert report.rules() == ['EmptyDocument']

	def test_rule_selection(self):
		form = without_clause(read_form('negation.clf'), 'b3 REF x2')
		assert validate(form, rules=['typing', 'structure']).valid
		assert not validate(form, rules=['binding']).valid

	def test_corpus(self):
		reports = validate_corpus([read_form('negation.clf'), without_clause(read_form('negation.clf'), 'b3 REF x2')])
		assert [report.valid for report in reports] == [True, False]
		assert reports[0].doc_id == '99/2308'


def test_violation():
	violation = Violation('UnboundReferent', 'referent x2 is not introduced', obj='x2', hint='Add it.')
	assert str(violation) == 'x2: (UnboundReferent) referent x2 is not introduced\n\tHINT: Add it.'
	assert violation == Violation('UnboundReferent', 'referent x2 is not introduced', obj='x2', hint='Add it.')
	assert violation.as_dict()['rule'] == 'UnboundReferent'
	assert len({violation, Violation('UnboundReferent', 'referent x2 is not introduced', 'x2', 'Add it.')}) == 1


def test_registry():
	registry = RuleRegistry()

	@registry.register(name='always')
	def always(context):
		return [Violation('Always', 'fails', obj=context)]

	def never(context):
		return []
	registry.register(never)

	assert [rule.rule_name for rule in registry.get_rules()] == ['always', 'never']
	assert registry.run_rules('ctx') == [Violation('Always', 'fails', obj='ctx')]
	assert registry.run_rules('ctx', names=['never']) == []
