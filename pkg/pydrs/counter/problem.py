"""
Clause matching under a variable mapping.

Both forms are compiled into clause patterns: the operator plus, per position, either a constant or the index of a
variable. A system clause matches a gold clause when the operators are equal and the image of its pattern under the
mapping equals the gold pattern. Gold clauses are a multiset, so ``n`` identical system images match at most as many
identical gold clauses.
"""
from collections import Counter, OrderedDict

from pydrs.core import models
from pydrs.referee.variables import collect_types


def strip_redundant_refs(form):
	"""
	Remove every ``b REF x`` clause for which a concept clause with the same box ``b`` and referent ``x`` exists.

	:param form: Clausal form.
	:rtype: pydrs.core.models.ClausalForm
	"""
	described = set(
		(clause.box, clause.args[-1]) for clause in form.clauses if clause.kind == models.CONCEPT
	)
	return form.with_clauses(
		clause for clause in form.clauses
		if not (clause.kind == models.REF and (clause.box, clause.args[0]) in described)
	)


def prepare(form, include_ref=False):
	"""
	The form as it takes part in matching.
	"""
	return form if include_ref else strip_redundant_refs(form)


def _compile(clause, index):
	return clause.operator, tuple(
		('v', index[term.value]) if term.is_variable else ('c', term.value) for term in (clause.box,) + clause.args
	)


def _signature(pattern):
	"""
	Operator and constant positions, the part of a pattern that does not depend on the mapping.
	"""
	operator, positions = pattern
	return operator, tuple(value if kind == 'c' else None for kind, value in positions)


class MatchProblem:
	"""
	Compiled matching instance of one system form against one gold form.

	:ivar system_variables: System variable names in first occurrence order.
	:ivar gold_variables: Gold variable names in first occurrence order.
	:ivar candidates: Per system variable, the gold variable indices it can usefully map to, in gold order.
	:ivar clauses_of: Per system variable, the indices of the system clauses it occurs in.
	"""

	def __init__(self, system, gold):
		self.system = system
		self.gold = gold

		self.system_variables = list(system.variables)
		self.gold_variables = list(gold.variables)
		system_index = {name: i for i, name in enumerate(self.system_variables)}
		gold_index = {name: i for i, name in enumerate(self.gold_variables)}

		system_typing = collect_types(system)[0]
		gold_typing = collect_types(gold)[0]
		self.system_kinds = [system_typing.get(name) for name in self.system_variables]
		self.gold_kinds = [gold_typing.get(name) for name in self.gold_variables]

		self.system_patterns = [_compile(clause, system_index) for clause in system.clauses]
		self.gold_patterns = [_compile(clause, gold_index) for clause in gold.clauses]
		self.gold_counts = Counter(self.gold_patterns)

		self.clauses_of = [list() for _ in self.system_variables]
		for ci, (_, positions) in enumerate(self.system_patterns):
			for kind, value in positions:
				if kind == 'v' and ci not in self.clauses_of[value]:
					self.clauses_of[value].append(ci)

		self.candidates = self._compute_candidates()

	def _compute_candidates(self):
		by_signature = OrderedDict()
		for pattern in self.gold_patterns:
			by_signature.setdefault(_signature(pattern), list()).append(pattern)

		candidates = [set() for _ in self.system_variables]
		for pattern in self.system_patterns:
			for gold_pattern in by_signature.get(_signature(pattern), list()):
				for (kind, value), (_, gold_value) in zip(pattern[1], gold_pattern[1]):
					if kind == 'v' and self.system_kinds[value] == self.gold_kinds[gold_value]:
						candidates[value].add(gold_value)
		return [sorted(pool) for pool in candidates]

	@property
	def produced(self):
		return len(self.system_patterns)

	@property
	def gold_total(self):
		return len(self.gold_patterns)

	def image(self, ci, mapping, changes=None):
		"""
		Image of system clause ``ci`` under the mapping (a list of gold indices or ``None``), ``None`` when one of its
		variables is unmapped.
		"""
		operator, positions = self.system_patterns[ci]
		result = list()
		for kind, value in positions:
			if kind == 'v':
				value = changes[value] if changes and value in changes else mapping[value]
				if value is None:
					return None
			result.append((kind, value))
		return operator, tuple(result)

	def count(self, counts):
		"""
		Matched clauses for a counter of system images.
		"""
		return sum(min(number, self.gold_counts[key]) for key, number in counts.items() if key in self.gold_counts)

	def evaluate(self, mapping):
		"""
		Number of matched clauses under a full mapping.
		"""
		return self.count(Counter(
			key for key in (self.image(ci, mapping) for ci in range(self.produced)) if key is not None
		))

	def kind_sizes(self):
		"""
		Per variable kind the number of system and gold variables.

		:rtype: dict
		"""
		sizes = dict()
		for kind in self.system_kinds:
			sizes.setdefault(kind, [0, 0])[0] += 1
		for kind in self.gold_kinds:
			sizes.setdefault(kind, [0, 0])[1] += 1
		return sizes

	def names(self, mapping):
		"""
		Translate an index mapping into a dictionary of variable names, unmapped variables left out.
		"""
		return {
			self.system_variables[i]: self.gold_variables[g] for i, g in enumerate(mapping) if g is not None
		}

	def indices(self, names):
		"""
		Translate a dictionary of variable names into an index mapping.
		"""
		gold_index = {name: i for i, name in enumerate(self.gold_variables)}
		return [
			gold_index.get(names.get(name)) if name in names else None for name in self.system_variables
		]


def matched_clauses(system, gold, mapping):
	"""
	The clause pairs realised by a mapping. System clauses claim the first unclaimed gold clause with an identical
	image, in clause order.

	:param system: Prepared system form.
	:param gold: Prepared gold form.
	:param mapping: Dictionary from system to gold variable name.
	:return: List of ``(system index, gold index)`` pairs.
	"""
	problem = MatchProblem(system, gold)
	index_mapping = problem.indices(mapping)

	unclaimed = dict()
	for gi, pattern in enumerate(problem.gold_patterns):
		unclaimed.setdefault(pattern, list()).append(gi)

	pairs = list()
	for si in range(problem.produced):
		key = problem.image(si, index_mapping)
		if key is not None and unclaimed.get(key):
			pairs.append((si, unclaimed[key].pop(0)))
	return pairs
