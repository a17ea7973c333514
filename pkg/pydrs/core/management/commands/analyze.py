from pydrs.core.management.base import CorpusCommand
from pydrs.evaluation import score_corpus
from pydrs.evaluation.report import analysis_report, render, to_json


class Command(CorpusCommand):
	help = (
		'Detailed analysis of a system corpus: fine-grained categories, oracles, perfect and ill-formed counts '
		'and scores per sentence length.'
	)

	def add_arguments(self, parser):
		parser.add_argument('system', help='System corpus file.')
		parser.add_argument('gold', help='Gold corpus file.')
		parser.add_argument('--ids', help='File with the gold document ids, one per line.')
		parser.add_argument('--synset-map', dest='synset_map', help='TAB separated synset map.')
		parser.add_argument(
			'--split-punctuation', action='store_true', dest='split_punctuation',
			help='Count leading and trailing punctuation as separate tokens.',
		)
		parser.add_argument(
			'--min-docs', type=int, dest='min_docs', help='Smallest length bucket (default LENGTH_BUCKET_MIN_DOCS).'
		)
		parser.add_argument('--workers', type=int, help='Number of scoring processes (default WORKERS).')
		parser.add_argument('--json', action='store_true', help='Output the report as JSON.')
		self.add_match_arguments(parser)

	def handle(self, *args, **options):
		config = self.get_match_config(options)
		system = self.load_corpus(options['system'])
		gold = self.load_corpus(options['gold'], options.get('ids'))
		synset_map = self.load_synset_map(options.get('synset_map'))

		score = score_corpus(system, gold, config, synset_map=synset_map, workers=options.get('workers'))
		report = analysis_report(
			score, system, gold, config,
			split_punctuation=options.get('split_punctuation', False),
			min_docs=options.get('min_docs'),
			synset_map=synset_map,
		)

		if options.get('json'):
			return to_json(report)
		return render('analysis.txt', **report).rstrip('\n')
