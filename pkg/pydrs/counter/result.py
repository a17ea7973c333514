from collections import namedtuple


def compute_f(matched, produced, gold):
	"""
	Precision, recall and F1 from clause counts. Every ratio is 0 when its denominator is 0.

	:rtype: tuple
	"""
	precision = matched / produced if produced else 0.0
	recall = matched / gold if gold else 0.0
	f_score = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
	return precision, recall, f_score


class MatchResult(namedtuple('MatchResult', ['mapping', 'matched', 'produced', 'gold'])):
	"""
	Outcome of matching a system form against a gold form.

	:ivar mapping: Dictionary from system variable name to gold variable name. Unmapped variables are absent.
	:ivar matched: Number of matched clauses.
	:ivar produced: Number of system clauses.
	:ivar gold: Number of gold clauses.
	"""
	__slots__ = ()

	def __new__(cls, mapping=None, matched=0, produced=0, gold=0):
		return super().__new__(cls, dict(mapping or dict()), matched, produced, gold)

	@property
	def precision(self):
		return compute_f(self.matched, self.produced, self.gold)[0]

	@property
	def recall(self):
		return compute_f(self.matched, self.produced, self.gold)[1]

	@property
	def f1(self):
		return compute_f(self.matched, self.produced, self.gold)[2]

	@property
	def counts(self):
		return self.matched, self.produced, self.gold

	def __add__(self, other):
		if not isinstance(other, MatchResult):
			return NotImplemented
		return MatchResult(None, self.matched + other.matched, self.produced + other.produced, self.gold + other.gold)

	def as_dict(self):
		return dict(
			matched=self.matched, produced=self.produced, gold=self.gold,
			precision=self.precision, recall=self.recall, f1=self.f1,
		)


def micro_average(results):
	"""
	Sum the clause counts of the results. The mapping of the total is empty.

	:param results: Iterable of match results.
	:rtype: pydrs.counter.result.MatchResult
	"""
	total = MatchResult()
	for result in results:
		total = total + result
	return total
