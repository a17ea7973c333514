import logging

from pydrs.core.management.base import CorpusCommand
from pydrs.evaluation import score_corpus
from pydrs.evaluation.report import render, to_json

logger = logging.getLogger(__name__)


class Command(CorpusCommand):
	help = 'Score a system corpus against a gold corpus: micro precision, recall and F-score plus per document scores.'

	def add_arguments(self, parser):
		parser.add_argument('system', help='System corpus file.')
		parser.add_argument('gold', help='Gold corpus file.')
		parser.add_argument('--ids', help='File with the gold document ids, one per line.')
		parser.add_argument('--synset-map', dest='synset_map', help='TAB separated synset map.')
		parser.add_argument(
			'--no-referee', action='store_false', dest='referee',
			help='Score ill-formed system documents as they are instead of replacing them.',
		)
		parser.add_argument('--workers', type=int, help='Number of scoring processes (default WORKERS).')
		parser.add_argument('--json', action='store_true', help='Output the scores as JSON.')
		self.add_match_arguments(parser)

	def handle(self, *args, **options):
		config = self.get_match_config(options)
		system = self.load_corpus(options['system'])
		gold = self.load_corpus(options['gold'], options.get('ids'))

		score = score_corpus(
			system, gold, config,
			synset_map=self.load_synset_map(options.get('synset_map')),
			referee=options.get('referee', True),
			workers=options.get('workers'),
		)
		logger.info('Scored {} documents, F-score {:.4f}'.format(len(score), score.micro.f1))

		if options.get('json'):
			return to_json(score.as_dict())
		return render('score.txt', **score.as_dict()).rstrip('\n')
