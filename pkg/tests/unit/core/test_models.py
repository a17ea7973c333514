import pickle

from pydrs.core import models
from pydrs.core.exceptions import MalformedClause


def test_terms():
	variable = models.Variable('x1')
	constant = models.Constant('x1')

	assert variable.is_variable and not variable.is_constant
	assert constant.is_constant
	assert variable != constant
	assert str(variable) == 'x1'
	assert str(constant) == '"x1"'


def test_invalid_variable():
	for name in ('', 'x 1', 'x"'):
		try:
			models.Variable(name)
		except MalformedClause:
			pass
		else:
			assert False, 'variable {!r} accepted'.format(name)


def test_operators():
	concept = models.Concept('male', 'n', '02')
	assert concept.arity == 2
	assert concept.synset == 'male.n.02'
	assert concept.sense_string == 'n.02'
	assert str(concept) == 'male.n.02'

	assert models.FixedOperator(models.REF).arity == 1
	assert models.FixedOperator(models.IMP).arity == 2
	assert models.Role('Agent').synset is None
	assert str(models.DiscourseRelation('CONTINUATION')) == 'CONTINUATION'


def test_concept_clause():
	clause = models.Clause.concept(models.Variable('b1'), 'male', 'n', '02', models.Variable('x1'))
	assert clause.args == (models.Constant('n.02'), models.Variable('x1'))
	assert clause.referent == models.Variable('x1')
	assert clause.variables == (models.Variable('b1'), models.Variable('x1'))

	changed = clause.with_operator(models.Concept('person', 'n', '01'))
	assert changed.args[0] == models.Constant('n.01')
	assert changed.operator.name == 'person'


def test_clause_key_ignores_alignment():
	box, referent = models.Variable('b1'), models.Variable('x1')
	aligned = models.Clause(box, models.FixedOperator(models.REF), [referent], [models.Alignment('He', 0, 2)])
	plain = models.Clause(box, models.FixedOperator(models.REF), [referent])

	assert aligned != plain
	assert aligned.key == plain.key
	assert aligned.without_alignment() == plain
	assert plain.referent == referent


def test_clausal_form():
	b1, b2, x1 = models.Variable('b1'), models.Variable('b2'), models.Variable('x1')
	form = models.ClausalForm('7', 'He left.', [
		models.Clause(b1, models.FixedOperator(models.REF), [x1]),
		models.Clause(b2, models.FixedOperator(models.NOT), [b1]),
	])
	assert form.variables == ('b1', 'x1', 'b2')
	assert form.with_doc_id('8').doc_id == '8'
	assert form.with_clauses(form.clauses[:1]).raw_text == 'He left.'
	assert form._replace(doc_id='9').clauses == form.clauses
	assert pickle.loads(pickle.dumps(form)) == form
