from pydrs.core.exceptions import CyclicSubordination
from pydrs.utils import toposort


def test_toposort():
	dep_tree = {
		'b0': [],
		'b1': ['b0', 'b3', 'b2'],
		'b2': ['b0'],
		'b3': ['b2']
	}
	order = toposort.toposort(dep_tree)
	assert order == ['b0', 'b2', 'b3', 'b1']

	dep_tree = {
		'b0': [],
		'b1': ['b0', 'b3', 'b2'],
		'b2': ['b0'],
		'b3': ['b2', 'b1']
	}
	cyclical = False
	try:
		toposort.toposort(dep_tree)
	except CyclicSubordination as e:
		if 'graph is cyclical through' in str(e):
			cyclical = True

	assert cyclical is True


def test_toposort_self_loop():
	try:
		toposort.toposort({'b1': ['b1']})
	except CyclicSubordination as e:
		assert e.obj == 'b1'
	else:
		assert False, 'self loop not detected'
