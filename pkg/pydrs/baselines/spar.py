"""
The default DRS baseline: predict the same training DRS for every input. The DRS chosen is the medoid of the
training set, the one with the highest mean F1 against the other training DRSs.
"""
import logging

import numpy as np

from pydrs.conf import settings
from pydrs.core.exceptions import EmptyTraining
from pydrs.counter import MatchConfig, match_score

logger = logging.getLogger(__name__)


def spar_select(training, config=None, sample=None, seed=None):
	"""
	Select the medoid of the training set under the clause matching F1.

	:param training: List of training forms.
	:param config: Match configuration.
	:param sample: Estimate the mean against a random sample of this many training forms, defaults to the
	               ``SPAR_SAMPLE`` setting. A sample at least as large as the training set uses all of it.
	:param seed: Seed of the sample, defaults to ``MATCH_SEED``.
	:return: The selected training form (ties go to the lowest index).
	:rtype: pydrs.core.models.ClausalForm
	:raise: pydrs.core.exceptions.EmptyTraining
	:raise: ValueError when the sample is smaller than 2.
	"""
	training = list(training)
	if not training:
		raise EmptyTraining('the training corpus is empty')
	config = config or MatchConfig.from_settings()
	sample = settings.SPAR_SAMPLE if sample is None else sample
	seed = settings.MATCH_SEED if seed is None else seed
	if sample is not None and sample < 2:
		raise ValueError('the reference sample needs at least 2 forms, got {}'.format(sample))

	count = len(training)
	if sample is None or sample >= count:
		references = np.arange(count)
	else:
		references = np.sort(np.random.default_rng(seed).choice(count, size=sample, replace=False))

	cache = dict()

	def pair_f1(i, j):
		key = (min(i, j), max(i, j))
		if key not in cache:
			cache[key] = match_score(training[key[0]], training[key[1]], config).f1
		return cache[key]

	means = np.zeros(count)
	for i in range(count):
		others = [j for j in references if j != i]
		if others:
			means[i] = np.mean([pair_f1(i, j) for j in others])

	best = int(np.argmax(means))
	logger.info('Selected training document {} with mean F1 {:.4f}'.format(training[best].doc_id, means[best]))
	return training[best]


def spar_predict(count, default):
	"""
	Predict ``count`` copies of the default form with sequential document ids.

	:rtype: list
	"""
	if count < 0:
		raise ValueError('count must not be negative, got {}'.format(count))
	return [default.with_doc_id(str(index)) for index in range(count)]
