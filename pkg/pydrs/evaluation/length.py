"""
Scores per sentence length.
"""
import pandas as pd

from pydrs.conf import settings
from pydrs.counter import micro_average

COLUMNS = ['min_tokens', 'max_tokens', 'documents', 'matched', 'produced', 'gold', 'f1']


def length_buckets(token_counts, min_docs):
	"""
	Group document indices by token count, ascending. Consecutive lengths are merged until a bucket holds at least
	``min_docs`` documents; a short last bucket joins the one before it.

	:return: List of lists of document indices.
	"""
	by_length = dict()
	for index, count in enumerate(token_counts):
		by_length.setdefault(count, list()).append(index)

	buckets, current = list(), list()
	for length in sorted(by_length):
		current.extend(by_length[length])
		if len(current) >= min_docs:
			buckets.append(current)
			current = list()
	if current:
		if buckets:
			buckets[-1].extend(current)
		else:
			buckets.append(current)
	return buckets


def length_breakdown(results, token_counts, min_docs=None):
	"""
	Micro scores per sentence length bucket.

	:param results: Per document match results (or a corpus score).
	:param token_counts: Token count per document.
	:param min_docs: Smallest bucket size, defaults to ``LENGTH_BUCKET_MIN_DOCS``.
	:rtype: pandas.DataFrame
	"""
	if hasattr(results, 'per_doc'):
		results = results.results
	results, token_counts = list(results), list(token_counts)
	if len(results) != len(token_counts):
		raise ValueError('{} results for {} token counts'.format(len(results), len(token_counts)))
	min_docs = settings.LENGTH_BUCKET_MIN_DOCS if min_docs is None else min_docs

	rows = list()
	for bucket in length_buckets(token_counts, max(min_docs, 1)):
		total = micro_average(results[index] for index in bucket)
		lengths = [token_counts[index] for index in bucket]
		rows.append([min(lengths), max(lengths), len(bucket), total.matched, total.produced, total.gold, total.f1])
	return pd.DataFrame(rows, columns=COLUMNS)
