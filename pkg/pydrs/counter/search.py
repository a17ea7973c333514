"""
Search for the variable mapping with the most matched clauses.

Hill-climbing restarts from a smart or a random initial mapping and repeatedly applies the best move (remap one
variable to a free candidate, unmap it, or swap the images of two variables) until no move gains. The exhaustive
search is a branch-and-bound over the candidate images of every variable and returns a true optimum.
"""
import logging
from collections import Counter, defaultdict

import numpy as np

from pydrs.core import models
from pydrs.core.exceptions import SearchSpaceTooLarge

logger = logging.getLogger(__name__)

SMART_INIT_KINDS = (models.CONCEPT, models.ROLE, models.COMPARISON)


class MatchState:
	"""
	A mapping with the bookkeeping to compute move gains incrementally.
	"""

	def __init__(self, problem, mapping):
		self.problem = problem
		self.mapping = list(mapping)
		self.used = set(image for image in self.mapping if image is not None)
		self.keys = [problem.image(ci, self.mapping) for ci in range(problem.produced)]
		self.counts = Counter(key for key in self.keys if key is not None)
		self.matched = problem.count(self.counts)

	def _diff(self, changes):
		affected = set()
		for variable in changes:
			affected.update(self.problem.clauses_of[variable])
		diff = Counter()
		new_keys = dict()
		for ci in affected:
			old, new = self.keys[ci], self.problem.image(ci, self.mapping, changes)
			new_keys[ci] = new
			if old == new:
				continue
			if old is not None:
				diff[old] -= 1
			if new is not None:
				diff[new] += 1
		return diff, new_keys

	def gain(self, changes):
		"""
		Change of the matched count when the variables in ``changes`` get their new images.

		:param changes: Dictionary from system variable index to new gold index (or ``None``).
		"""
		diff, _ = self._diff(changes)
		gain = 0
		for key, delta in diff.items():
			limit = self.problem.gold_counts.get(key, 0)
			if delta and limit:
				current = self.counts[key]
				gain += min(current + delta, limit) - min(current, limit)
		return gain

	def apply(self, changes):
		gain = self.gain(changes)
		_, new_keys = self._diff(changes)
		for variable in changes:
			if self.mapping[variable] is not None:
				self.used.discard(self.mapping[variable])
		for variable, image in changes.items():
			self.mapping[variable] = image
			if image is not None:
				self.used.add(image)
		for ci, key in new_keys.items():
			old = self.keys[ci]
			if old is not None:
				self.counts[old] -= 1
				if not self.counts[old]:
					del self.counts[old]
			if key is not None:
				self.counts[key] += 1
			self.keys[ci] = key
		self.matched += gain
		return gain


def random_init_mapping(problem, rng, mapping=None):
	"""
	Complete a (partial) mapping with uniformly drawn free candidates, in variable order.
	"""
	mapping = list(mapping) if mapping is not None else [None] * len(problem.system_variables)
	used = set(image for image in mapping if image is not None)
	for variable, candidates in enumerate(problem.candidates):
		if mapping[variable] is not None:
			continue
		free = [candidate for candidate in candidates if candidate not in used]
		if free:
			choice = free[int(rng.integers(len(free)))]
			mapping[variable] = choice
			used.add(choice)
	return mapping


def _same_name(system_clause, gold_clause):
	return (
		system_clause.kind == gold_clause.kind and system_clause.kind in SMART_INIT_KINDS and
		system_clause.operator.name == gold_clause.operator.name
	)


def smart_init_mapping(problem, rng):
	"""
	Pair the variables of system clauses with the variables of the first consistent gold clause with the same
	concept lemma or role or comparison name. Variables left over get random free candidates.
	"""
	mapping = [None] * len(problem.system_variables)
	used = dict()
	for si, system_clause in enumerate(problem.system.clauses):
		if system_clause.kind not in SMART_INIT_KINDS:
			continue
		for gi, gold_clause in enumerate(problem.gold.clauses):
			if not _same_name(system_clause, gold_clause):
				continue
			pairs = [
				(value, gold_value)
				for (kind, value), (gold_kind, gold_value) in zip(problem.system_patterns[si][1], problem.gold_patterns[gi][1])
				if kind == 'v' and gold_kind == 'v'
			]
			tentative = _tentative_pairs(problem, mapping, used, pairs)
			if tentative is not None:
				for variable, image in tentative.items():
					mapping[variable] = image
					used[image] = variable
				break
	return random_init_mapping(problem, rng, mapping)


def _tentative_pairs(problem, mapping, used, pairs):
	"""
	The assignments one clause adds to the mapping, or ``None`` when they break the one-to-one mapping. Pairs are
	checked against the mapping and against each other.
	"""
	tentative, taken = dict(), dict()
	for variable, image in pairs:
		if problem.system_kinds[variable] != problem.gold_kinds[image]:
			return None
		if mapping[variable] is not None:
			if mapping[variable] != image:
				return None
			continue
		if used.get(image, variable) != variable:
			return None
		if tentative.get(variable, image) != image or taken.get(image, variable) != variable:
			return None
		tentative[variable] = image
		taken[image] = variable
	return tentative


def get_best_move(state):
	"""
	The first move with the largest strictly positive gain, or ``(0, None)``.
	"""
	problem = state.problem
	largest_gain, best = 0, None

	for variable, candidates in enumerate(problem.candidates):
		current = state.mapping[variable]
		for candidate in candidates:
			if candidate in state.used:
				continue
			gain = state.gain({variable: candidate})
			if gain > largest_gain:
				largest_gain, best = gain, {variable: candidate}
		if current is not None:
			gain = state.gain({variable: None})
			if gain > largest_gain:
				largest_gain, best = gain, {variable: None}

	count = len(problem.system_variables)
	for first in range(count):
		for second in range(first + 1, count):
			image_first, image_second = state.mapping[first], state.mapping[second]
			if image_first == image_second:
				continue
			if image_second not in problem.candidates[first] and image_first not in problem.candidates[second]:
				continue
			if problem.system_kinds[first] != problem.system_kinds[second]:
				continue
			changes = {first: image_second, second: image_first}
			gain = state.gain(changes)
			if gain > largest_gain:
				largest_gain, best = gain, changes

	return largest_gain, best


def hill_climb(problem, config):
	"""
	Hill-climbing search with restarts.

	:return: Tuple of the best index mapping and its matched count.
	"""
	best_mapping, best_matched = [None] * len(problem.system_variables), -1
	for restart in range(config.restarts):
		rng = np.random.default_rng([config.seed, restart])
		if restart == 0 and config.smart_init:
			mapping = smart_init_mapping(problem, rng)
		else:
			mapping = random_init_mapping(problem, rng)

		state = MatchState(problem, mapping)
		start = state.matched
		while True:
			gain, changes = get_best_move(state)
			if gain <= 0:
				break
			state.apply(changes)

		logger.debug('Restart {}: {} -> {} matched clauses'.format(restart, start, state.matched))
		if state.matched > best_matched:
			best_mapping, best_matched = list(state.mapping), state.matched
		if best_matched == min(problem.produced, problem.gold_total):
			break

	return best_mapping, max(best_matched, 0)


def check_exhaustive_bound(problem, bound):
	"""
	:raise: pydrs.core.exceptions.SearchSpaceTooLarge when a variable kind has more than ``bound`` variables on both
	        sides.
	"""
	for kind, (system_size, gold_size) in problem.kind_sizes().items():
		if min(system_size, gold_size) > bound:
			raise SearchSpaceTooLarge(
				'exhaustive search over {} {} variables exceeds the bound of {}'.format(
					min(system_size, gold_size), kind, bound
				)
			)


def exhaustive(problem, config, lower=None):
	"""
	Branch-and-bound over all kind preserving injective mappings. Leaving a variable unmapped dominates mapping it to
	a gold variable outside its candidates, so only candidates and ``None`` are tried.

	:param lower: Optional ``(mapping, matched)`` known to be reachable, used to prune from the start.
	:return: Tuple of the optimal index mapping and its matched count.
	"""
	check_exhaustive_bound(problem, config.exhaustive_bound)

	count = len(problem.system_variables)
	completes_at = defaultdict(list)
	for ci, (_, positions) in enumerate(problem.system_patterns):
		last = max(value for kind, value in positions if kind == 'v')
		completes_at[last].append(ci)

	mapping = [None] * count
	used = set()
	counts = Counter()
	best = dict(mapping=list(lower[0]) if lower else list(mapping), matched=lower[1] if lower else -1)

	def visit(variable, matched, remaining):
		if matched + min(remaining, problem.gold_total - matched) <= best['matched']:
			return
		if variable == count:
			best['mapping'], best['matched'] = list(mapping), matched
			return

		for image in problem.candidates[variable] + [None]:
			if image is not None and image in used:
				continue
			mapping[variable] = image
			if image is not None:
				used.add(image)

			gain = 0
			added = list()
			for ci in completes_at[variable]:
				key = problem.image(ci, mapping)
				if key is None:
					continue
				if counts[key] < problem.gold_counts.get(key, 0):
					gain += 1
				counts[key] += 1
				added.append(key)

			visit(variable + 1, matched + gain, remaining - len(completes_at[variable]))

			for key in added:
				counts[key] -= 1
			if image is not None:
				used.discard(image)
			mapping[variable] = None

	visit(0, 0, problem.produced)
	return best['mapping'], max(best['matched'], 0)
