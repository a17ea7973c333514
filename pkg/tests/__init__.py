import os

TEST_DIR = os.path.abspath(os.path.dirname(os.path.realpath(__file__)))
TEST_FILES_DIR = os.path.join(TEST_DIR, '_files')


def fixture_path(name):
	return os.path.join(TEST_FILES_DIR, name)


def read_fixture(name, **kwargs):
	from pydrs.core.parser import read_corpus
	with open(fixture_path(name), encoding='utf-8') as handle:
		return read_corpus(handle, **kwargs)


def read_form(name):
	return read_fixture(name)[0]


def without_clause(form, line):
	"""
	Copy of the form without the clause that serializes to ``line``.
	"""
	from pydrs.core.parser import serialize_clause
	return form.with_clauses(clause for clause in form.clauses if serialize_clause(clause, False) != line)


LEMMAS = ('dog', 'cat', 'run', 'new')
ROLES = ('Agent', 'Theme', 'Time')


def random_form(rng, max_boxes=3, max_referents=5, min_clauses=4, max_clauses=10):
	"""
	Random clausal form for property tests. Box labels only appear in box positions and referents only in referent
	positions, so the typing never conflicts.
	"""
	from pydrs.core import models

	boxes = [models.Variable('b{}'.format(i)) for i in range(int(rng.integers(1, max_boxes + 1)))]
	referents = [models.Variable('x{}'.format(i)) for i in range(int(rng.integers(1, max_referents + 1)))]

	def pick(items):
		return items[int(rng.integers(len(items)))]

	clauses = list()
	for _ in range(int(rng.integers(min_clauses, max_clauses + 1))):
		box = pick(boxes)
		choice = int(rng.integers(5))
		if choice == 0:
			clauses.append(models.Clause(box, models.FixedOperator(models.REF), [pick(referents)]))
		elif choice == 1:
			clauses.append(models.Clause.concept(box, pick(LEMMAS), 'n', '01', pick(referents)))
		elif choice == 2:
			clauses.append(models.Clause(box, models.Role(pick(ROLES)), [pick(referents), pick(referents)]))
		elif choice == 3 and len(boxes) > 1:
			clauses.append(models.Clause(box, models.FixedOperator(models.NOT), [pick(boxes)]))
		else:
			clauses.append(models.Clause(box, models.Comparison('EQU'), [pick(referents), models.Constant('now')]))
	return models.ClausalForm(None, '', clauses)
