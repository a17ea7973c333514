import unittest

import numpy as np

from pydrs.counter import MatchResult, micro_average
from pydrs.evaluation import length_breakdown
from pydrs.evaluation.length import COLUMNS, length_buckets


class TestLengthBreakdown(unittest.TestCase):

	def test_single_length(self):
		results = [MatchResult(None, 3, 7, 7), MatchResult(None, 5, 5, 6)]
		table = length_breakdown(results, [4, 4], min_docs=1)
		assert list(table.columns) == COLUMNS
		assert len(table) == 1
		assert table.loc[0, 'f1'] == micro_average(results).f1

	def test_decreasing(self):
		results = [MatchResult(None, 4, 4, 4)] * 3 + [MatchResult(None, 0, 4, 4)] * 3
		table = length_breakdown(results, [3, 3, 3, 20, 20, 20], min_docs=2)
		assert list(table['f1']) == [1.0, 0.0]
		assert list(table['min_tokens']) == [3, 20]

	def test_recombines(self):
		rng = np.random.default_rng(8)
		results = list()
		for _ in range(40):
			gold = int(rng.integers(1, 20))
			produced = int(rng.integers(0, 20))
			results.append(MatchResult(None, int(rng.integers(0, min(gold, produced) + 1)), produced, gold))
		table = length_breakdown(results, [int(n) for n in rng.integers(1, 30, size=40)], min_docs=5)
		assert table['documents'].sum() == 40
		assert (table['matched'].sum(), table['produced'].sum(), table['gold'].sum()) == micro_average(results).counts
		assert (table['documents'] >= 5).all()

	def test_mismatch(self):
		with self.assertRaises(ValueError):
			length_breakdown([MatchResult()], [1, 2])


def test_buckets():
	assert length_buckets([1, 1, 2, 3, 3, 3, 9], 2) == [[0, 1], [2, 3, 4, 5, 6]]
	assert length_buckets([5, 5], 5) == [[0, 1]]
	assert length_buckets([], 5) == []
