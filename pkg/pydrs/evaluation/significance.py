"""
Paired approximate randomization test on micro F1.
"""
import logging
from collections import namedtuple

import numpy as np

from pydrs.conf import settings
from pydrs.core.exceptions import LengthMismatch, SignificanceError

logger = logging.getLogger(__name__)


class SignificanceResult(namedtuple('SignificanceResult', ['observed_delta', 'p_value', 'rounds', 'alpha'])):
	__slots__ = ()

	@property
	def significant(self):
		return self.p_value < self.alpha

	def as_dict(self):
		return dict(
			observed_delta=self.observed_delta, p_value=self.p_value, rounds=self.rounds, alpha=self.alpha,
			significant=self.significant,
		)


def _triples(scores):
	"""
	Per document ``(matched, produced, gold)`` rows from a corpus score or a list of triples.
	"""
	if hasattr(scores, 'per_doc'):
		scores = [doc.result.counts for doc in scores.per_doc]
	return np.asarray([tuple(triple) for triple in scores], dtype=float).reshape(-1, 3)


def micro_f(totals):
	"""
	Micro F1 of summed ``(matched, produced, gold)`` totals, along the last axis.
	"""
	matched, produced, gold = totals[..., 0], totals[..., 1], totals[..., 2]
	with np.errstate(divide='ignore', invalid='ignore'):
		precision = np.where(produced > 0, matched / produced, 0.0)
		recall = np.where(gold > 0, matched / gold, 0.0)
		f_score = np.where(precision + recall > 0, 2 * precision * recall / (precision + recall), 0.0)
	return f_score


def approx_randomization(system_a, system_b, rounds=None, alpha=None, seed=None):
	"""
	Test whether the micro F1 difference between two systems is significant. In every round each document's counts
	are swapped between the systems with probability one half.

	:param system_a: Corpus score or list of ``(matched, produced, gold)`` triples of system A.
	:param system_b: The same for system B, aligned by document.
	:param rounds: Number of rounds, defaults to ``SIGNIFICANCE_ROUNDS``.
	:param alpha: Significance level, defaults to ``SIGNIFICANCE_ALPHA``.
	:param seed: Seed of the swap stream.
	:rtype: pydrs.evaluation.significance.SignificanceResult
	:raise: pydrs.core.exceptions.LengthMismatch
	:raise: pydrs.core.exceptions.SignificanceError
	"""
	rounds = settings.SIGNIFICANCE_ROUNDS if rounds is None else rounds
	alpha = settings.SIGNIFICANCE_ALPHA if alpha is None else alpha
	seed = settings.MATCH_SEED if seed is None else seed
	if rounds < 1:
		raise SignificanceError('the number of rounds must be at least 1, got {}'.format(rounds))
	if seed < 0:
		raise SignificanceError('the seed must not be negative, got {}'.format(seed))

	a, b = _triples(system_a), _triples(system_b)
	if len(a) != len(b):
		raise LengthMismatch('system A has {} documents, system B has {}'.format(len(a), len(b)))

	observed = float(micro_f(a.sum(axis=0)) - micro_f(b.sum(axis=0)))

	rng = np.random.default_rng(seed)
	swaps = (rng.random((rounds, len(a))) < 0.5).astype(float)
	difference = b - a
	totals_a = a.sum(axis=0) + swaps @ difference
	totals_b = b.sum(axis=0) - swaps @ difference
	deltas = micro_f(totals_a) - micro_f(totals_b)

	extreme = int(np.count_nonzero(np.abs(deltas) >= abs(observed) - 1e-12))
	p_value = (extreme + 1) / (rounds + 1)
	logger.debug('Approximate randomization: delta {:.4f}, {} of {} rounds as extreme'.format(observed, extreme, rounds))
	return SignificanceResult(observed, p_value, rounds, alpha)
