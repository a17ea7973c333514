from pydrs.core.exceptions import CyclicSubordination


def toposort(graph):
	"""
	Perform a topological sort on a graph
	This returns an ordering of the nodes in the graph that places all
	dependencies before the nodes that require them.

	:param graph: an adjacency dict {node1: [dep1, dep2], node2: [dep1, dep3]}
	:return: A list of ordered nodes
	:rtype: list
	:raise: pydrs.core.exceptions.CyclicSubordination when the graph contains a loop.
	"""
	result = []
	used = set()
	visiting = list()

	def use(v):
		if v in used:
			return
		if v in visiting:
			loop = visiting[visiting.index(v):] + [v]
			raise CyclicSubordination('graph is cyclical through {}'.format(' -> '.join(loop)), obj=v)

		visiting.append(v)
		for parent in graph.get(v, []):
			use(parent)
		visiting.pop()

		used.add(v)
		result.append(v)

	for v in graph:
		use(v)

	return result
