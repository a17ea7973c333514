"""
Corpus level scoring. System documents that do not validate are replaced by a single clause that matches nothing
before they are scored.
"""
import logging
import multiprocessing
from collections import namedtuple

from pydrs.conf import settings
from pydrs.core import models
from pydrs.core.exceptions import LengthMismatch, UnpairedDocument
from pydrs.core.synsets import normalize_senses
from pydrs.counter import MatchConfig, match_prepared, micro_average, prepare
from pydrs.referee import validate

logger = logging.getLogger(__name__)


class DocumentScore(namedtuple('DocumentScore', ['doc_id', 'result', 'valid', 'replaced', 'system', 'gold'])):
	"""
	Score of one document.

	:ivar doc_id: Document id (of the gold document).
	:ivar result: Match result.
	:ivar valid: Whether the system form passed validation.
	:ivar replaced: Whether the system form was replaced by the non-matching clause.
	:ivar system: The system form as it was matched (replaced, normalized and stripped).
	:ivar gold: The gold form as it was matched.
	"""
	__slots__ = ()


class CorpusScore:
	"""
	Scores of a whole corpus.

	:ivar per_doc: List of :class:`DocumentScore` in document order.
	"""

	def __init__(self, per_doc, config=None):
		self.per_doc = list(per_doc)
		self.config = config

	def __len__(self):
		return len(self.per_doc)

	def __iter__(self):
		return iter(self.per_doc)

	@property
	def results(self):
		return [doc.result for doc in self.per_doc]

	@property
	def micro(self):
		return micro_average(self.results)

	@property
	def perfect_count(self):
		return sum(1 for doc in self.per_doc if doc.result.f1 == 1.0)

	@property
	def ill_formed_count(self):
		return sum(1 for doc in self.per_doc if not doc.valid)

	def as_dict(self):
		return dict(
			micro=self.micro.as_dict(),
			perfect=self.perfect_count,
			ill_formed=self.ill_formed_count,
			documents=[dict(doc_id=doc.doc_id, valid=doc.valid, **doc.result.as_dict()) for doc in self.per_doc],
		)


def _has_positional_ids(forms):
	return all(form.doc_id in (None, str(index)) for index, form in enumerate(forms))


def pair_documents(system, gold):
	"""
	Pair system and gold documents. Documents are paired by position when the ids coincide or one side carries
	positional ids only, by id when both sides carry the same set of ids.

	:return: List of ``(system form, gold form)`` tuples in gold order.
	:raise: pydrs.core.exceptions.LengthMismatch
	:raise: pydrs.core.exceptions.UnpairedDocument
	"""
	system, gold = list(system), list(gold)
	if len(system) != len(gold):
		raise LengthMismatch('system has {} documents, gold has {}'.format(len(system), len(gold)))

	system_ids = [form.doc_id for form in system]
	gold_ids = [form.doc_id for form in gold]
	if system_ids == gold_ids or _has_positional_ids(system) or _has_positional_ids(gold):
		return list(zip(system, gold))

	by_id = {form.doc_id: form for form in system}
	if len(by_id) != len(system) or set(by_id) != set(gold_ids):
		missing = sorted(set(gold_ids) ^ set(by_id))
		raise UnpairedDocument('documents without counterpart: {}'.format(', '.join(str(m) for m in missing)))
	logger.warning('Documents are paired by id, the system corpus is in a different order than the gold corpus')
	return [(by_id[form.doc_id], form) for form in gold]


def _fresh_name(prefix, taken):
	name, number = prefix, 0
	while name in taken:
		number += 1
		name = '{}{}'.format(prefix, number)
	return name


def replacement_form(form, gold, lemma=None):
	"""
	The single clause form that replaces an ill-formed system form. Its variables are fresh with respect to both
	forms and its lemma is reserved, so it matches nothing.

	:rtype: pydrs.core.models.ClausalForm
	"""
	lemma = lemma or settings.ILL_FORMED_LEMMA
	taken = set(form.variables) | set(gold.variables)
	box = models.Variable(_fresh_name('b', taken))
	referent = models.Variable(_fresh_name('x', taken))
	return form.with_clauses([models.Clause.concept(box, lemma, 'n', '99', referent)])


def score_document(system, gold, config, referee=True, lemma=None):
	"""
	Score one paired document, applying the replacement rule when ``referee`` is set.

	:rtype: pydrs.evaluation.corpus.DocumentScore
	"""
	valid = validate(system).valid
	replaced = referee and not valid
	if replaced:
		logger.warning('System document {} is ill-formed and replaced'.format(gold.doc_id))
		system = replacement_form(system, gold, lemma)

	system, gold = prepare(system, config.include_ref), prepare(gold, config.include_ref)
	return DocumentScore(gold.doc_id, match_prepared(system, gold, config), valid, replaced, system, gold)


def _score_task(arguments):
	return score_document(*arguments)


def score_corpus(system, gold, config=None, synset_map=None, referee=True, workers=None):
	"""
	Score a system corpus against a gold corpus.

	:param system: List of system forms.
	:param gold: List of gold forms.
	:param config: Match configuration, defaults to the settings.
	:param synset_map: Optional synset map, applied to both sides.
	:param referee: Replace ill-formed system forms. Without it they are scored as they are.
	:param workers: Number of processes, defaults to the ``WORKERS`` setting.
	:rtype: pydrs.evaluation.corpus.CorpusScore
	:raise: pydrs.core.exceptions.CorpusError
	"""
	config = config or MatchConfig.from_settings()
	workers = workers or settings.WORKERS
	pairs = pair_documents(system, gold)
	if synset_map:
		pairs = [(normalize_senses(s, synset_map), normalize_senses(g, synset_map)) for s, g in pairs]

	tasks = [(s, g, config, referee, settings.ILL_FORMED_LEMMA) for s, g in pairs]
	if workers > 1 and len(tasks) > 1:
		with multiprocessing.Pool(workers) as pool:
			per_doc = pool.map(_score_task, tasks)
	else:
		per_doc = [_score_task(task) for task in tasks]

	score = CorpusScore(per_doc, config)
	logger.info('Scored {} documents, micro F1 {:.4f}'.format(len(score), score.micro.f1))
	return score


def ill_formed_only(score):
	"""
	Micro average over the documents whose system form is ill-formed.

	:rtype: pydrs.counter.result.MatchResult
	"""
	return micro_average(doc.result for doc in score.per_doc if not doc.valid)
