"""
Comparisons between several systems: pairwise agreement, the ensemble oracle and per document rankings.
"""
import logging

import numpy as np
import pandas as pd

from pydrs.core.exceptions import LengthMismatch
from pydrs.counter import MatchConfig, micro_average
from pydrs.evaluation.corpus import score_corpus

logger = logging.getLogger(__name__)


def _names(count, names=None):
	if names is None:
		return ['system{}'.format(i + 1) for i in range(count)]
	if len(names) != count:
		raise ValueError('{} names given for {} systems'.format(len(names), count))
	return list(names)


def _check_lengths(corpora):
	lengths = set(len(corpus) for corpus in corpora)
	if len(lengths) > 1:
		raise LengthMismatch('corpora differ in length: {}'.format(', '.join(str(len(c)) for c in corpora)))


def pairwise_matrix(outputs, config=None, names=None, **kwargs):
	"""
	Micro F1 of every output scored against every other output. Ill-formed documents are only replaced on the system
	side and the search is seeded per direction, so both directions are scored and their counts are pooled. The
	matrix is symmetric and does not depend on the order of the outputs. The diagonal is empty.

	:param outputs: List of corpora.
	:param config: Match configuration.
	:param names: Optional system names, used as index and columns.
	:rtype: pandas.DataFrame
	:raise: pydrs.core.exceptions.LengthMismatch
	"""
	_check_lengths(outputs)
	config = config or MatchConfig.from_settings()
	names = _names(len(outputs), names)

	matrix = np.full((len(outputs), len(outputs)), np.nan)
	for i in range(len(outputs)):
		for j in range(i + 1, len(outputs)):
			forward = score_corpus(outputs[i], outputs[j], config, **kwargs).micro
			backward = score_corpus(outputs[j], outputs[i], config, **kwargs).micro
			matrix[i, j] = matrix[j, i] = micro_average([forward, backward]).f1
	return pd.DataFrame(matrix, index=names, columns=names)


def per_document_f1(scores, names=None):
	"""
	Table of document F1 values, one row per document and one column per system.

	:param scores: List of corpus scores against the same gold corpus.
	:rtype: pandas.DataFrame
	"""
	_check_lengths([score.per_doc for score in scores])
	names = _names(len(scores), names)
	doc_ids = [doc.doc_id for doc in scores[0].per_doc] if scores else list()
	return pd.DataFrame(
		{name: [doc.result.f1 for doc in score.per_doc] for name, score in zip(names, scores)},
		index=doc_ids, columns=names,
	)


def _select_micro_optimal(matched, produced, gold_total, selection):
	"""
	Improve a per document selection of systems until its micro F1 is maximal. Micro F1 is a ratio of sums, so
	every round fixes the current ratio and picks per document the system with the largest ``matched - ratio *
	produced``; the ratio rises until no document changes.

	:param matched: Array of matched counts, one row per document and one column per system.
	:param produced: Array of produced counts, same shape.
	:param gold_total: Summed gold count (the same for every selection).
	:param selection: Initial system index per document.
	:return: System index per document.
	"""
	rows = np.arange(len(selection))
	while True:
		denominator = produced[rows, selection].sum() + gold_total
		if not denominator:
			return selection
		ratio = matched[rows, selection].sum() / denominator
		gains = matched - ratio * produced
		current = gains[rows, selection]
		best = gains.argmax(axis=1)
		improved = gains[rows, best] > current + 1e-12
		if not improved.any():
			return selection
		selection = np.where(improved, best, selection)


def ensemble_oracle(outputs, gold, config=None, scores=None, **kwargs):
	"""
	Keep, per document, the output of one system and micro average the kept results. The selection starts from the
	output with the highest document F1 (lowest system index on ties) and is refined while the micro F1 of the
	whole selection improves, so the ensemble never scores below one of its systems.

	:param outputs: List of system corpora.
	:param gold: Gold corpus.
	:param config: Match configuration.
	:param scores: Already computed corpus scores of the outputs, to avoid scoring again.
	:return: Micro averaged match result.
	:rtype: pydrs.counter.result.MatchResult
	"""
	if scores is None:
		_check_lengths(list(outputs) + [gold])
		config = config or MatchConfig.from_settings()
		scores = [score_corpus(output, gold, config, **kwargs) for output in outputs]
	if not scores or not scores[0].per_doc:
		return micro_average([])
	_check_lengths([score.per_doc for score in scores])

	documents = list(zip(*(score.per_doc for score in scores)))
	counts = np.array([[doc.result.counts for doc in row] for row in documents], dtype=float)
	f_scores = np.array([[doc.result.f1 for doc in row] for row in documents])

	selection = _select_micro_optimal(
		counts[..., 0], counts[..., 1], counts[:, 0, 2].sum(), f_scores.argmax(axis=1)
	)
	logger.debug('Ensemble keeps {} documents of the first system'.format(int((selection == 0).sum())))
	return micro_average(row[index].result for row, index in zip(documents, selection))


def winner_counts(scores, names=None):
	"""
	Per system the number of documents where it has the highest F1 (ties allowed) and where it is the only one with
	the highest F1.

	:rtype: pandas.DataFrame
	"""
	table = per_document_f1(scores, names)
	best = table.max(axis=1)
	highest = table.eq(best, axis=0)
	strict = highest[highest.sum(axis=1) == 1]
	return pd.DataFrame({'highest': highest.sum(axis=0), 'winner': strict.sum(axis=0)}, index=table.columns)


def hardest_documents(scores, gold, top=10, names=None):
	"""
	Documents ordered by their mean F1 over all systems, lowest first.

	:param scores: List of corpus scores.
	:param gold: Gold corpus, for the raw texts.
	:param top: Number of documents to return.
	:rtype: pandas.DataFrame
	"""
	table = per_document_f1(scores, names)
	frame = pd.DataFrame({
		'doc_id': table.index,
		'mean_f1': table.mean(axis=1).values,
		'raw_text': [form.raw_text for form in gold],
	})
	return frame.sort_values('mean_f1', kind='mergesort').head(top).reset_index(drop=True)
