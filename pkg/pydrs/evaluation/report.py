"""
Text and JSON reports. Text reports are tab separated tables rendered from the Jinja2 templates of this package.
"""
import json

import numpy as np
from jinja2 import Environment, PackageLoader

from pydrs.core.text import count_tokens
from pydrs.evaluation.categories import fine_grained_corpus
from pydrs.evaluation.corpus import ill_formed_only, score_corpus
from pydrs.evaluation.length import length_breakdown
from pydrs.evaluation.oracles import oracle_scores


def percentage(value):
	return '{:.1f}'.format(value * 100)


class _EnvironmentManager:
	def __init__(self):
		self._environment = None

	@property
	def environment(self):
		if not self._environment:
			self._environment = Environment(
				loader=PackageLoader('pydrs.evaluation', 'templates'),
				trim_blocks=True,
				lstrip_blocks=True,
				keep_trailing_newline=True,
			)
			self._environment.filters['pct'] = percentage
		return self._environment

EnvironmentManager = _EnvironmentManager()


def render(template, **data):
	"""
	Render one of the report templates.

	:param template: Template file name, for example ``score.txt``.
	:rtype: str
	"""
	return EnvironmentManager.environment.get_template(template).render(**data)


def _json_default(value):
	if isinstance(value, np.generic):
		return value.item()
	raise TypeError('{!r} is not JSON serializable'.format(value))


def to_json(report):
	return json.dumps(report, indent=2, default=_json_default)


def analysis_report(score, system, gold, config=None, split_punctuation=False, min_docs=None, synset_map=None):
	"""
	Collect the full analysis of a scored corpus: headline scores, counts, fine-grained categories, oracles, the
	score when validation is ignored and the sentence length breakdown.

	:param score: Corpus score of ``system`` against ``gold`` (with the replacement rule).
	:param system: System corpus.
	:param gold: Gold corpus.
	:param synset_map: Synset map the corpus score was computed with.
	:rtype: dict
	"""
	config = config or score.config
	ignoring = score_corpus(system, gold, config, synset_map=synset_map, referee=False) if score.ill_formed_count else score
	lengths = length_breakdown(
		score, [count_tokens(form.raw_text, split_punctuation) for form in gold], min_docs=min_docs
	)
	return dict(
		documents=len(score),
		micro=score.micro.as_dict(),
		perfect=score.perfect_count,
		ill_formed=score.ill_formed_count,
		ill_formed_only=ill_formed_only(score).as_dict(),
		ignoring_validation=ignoring.micro.as_dict(),
		categories={name: result.as_dict() for name, result in fine_grained_corpus(score).items()},
		oracles={mode: result.as_dict() for mode, result in oracle_scores(score, config=config).items()},
		lengths=lengths.to_dict(orient='records'),
	)
