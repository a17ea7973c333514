import json

from pydrs.core.management.base import CorpusCommand, UsageError
from pydrs.evaluation import approx_randomization, score_corpus


class Command(CorpusCommand):
	help = 'Approximate randomization test on the micro F-score difference of two systems.'

	def add_arguments(self, parser):
		parser.add_argument('system_a', help='Corpus file of system A.')
		parser.add_argument('system_b', help='Corpus file of system B.')
		parser.add_argument('gold', help='Gold corpus file.')
		parser.add_argument('--ids', help='File with the gold document ids, one per line.')
		parser.add_argument('--synset-map', dest='synset_map', help='TAB separated synset map.')
		parser.add_argument('--R', '--rounds', type=int, dest='rounds', help='Rounds (default SIGNIFICANCE_ROUNDS).')
		parser.add_argument('--alpha', type=float, help='Significance level (default SIGNIFICANCE_ALPHA).')
		parser.add_argument('--workers', type=int, help='Number of scoring processes (default WORKERS).')
		parser.add_argument('--json', action='store_true', help='Output the result as JSON.')
		self.add_match_arguments(parser)

	def handle(self, *args, **options):
		if options.get('rounds') is not None and options['rounds'] < 1:
			raise UsageError('--R must be at least 1, got {}'.format(options['rounds']))
		if options.get('alpha') is not None and not 0 < options['alpha'] < 1:
			raise UsageError('--alpha must be between 0 and 1, got {}'.format(options['alpha']))
		config = self.get_match_config(options)
		gold = self.load_corpus(options['gold'], options.get('ids'))
		synset_map = self.load_synset_map(options.get('synset_map'))

		scores = [
			score_corpus(self.load_corpus(options[name]), gold, config, synset_map=synset_map, workers=options.get('workers'))
			for name in ('system_a', 'system_b')
		]
		result = approx_randomization(
			scores[0], scores[1], rounds=options.get('rounds'), alpha=options.get('alpha'), seed=config.seed,
		)

		if options.get('json'):
			return json.dumps(dict(
				f1_a=scores[0].micro.f1, f1_b=scores[1].micro.f1, **result.as_dict()
			), indent=2)

		verdict = 'significant' if result.significant else 'not significant'
		return '\n'.join([
			'F-score A\t{:.1f}'.format(scores[0].micro.f1 * 100),
			'F-score B\t{:.1f}'.format(scores[1].micro.f1 * 100),
			'Difference\t{:.1f}'.format(result.observed_delta * 100),
			'p-value\t{:.4f}'.format(result.p_value),
			'Verdict\t{} at alpha {}'.format(verdict, result.alpha),
		])
