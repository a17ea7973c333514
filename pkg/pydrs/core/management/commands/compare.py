import pandas as pd

from pydrs.core.management.base import CorpusCommand, UsageError
from pydrs.evaluation import ensemble_oracle, hardest_documents, pairwise_matrix, score_corpus, winner_counts
from pydrs.evaluation.report import percentage, to_json


class Command(CorpusCommand):
	help = (
		'Compare several systems on the same gold corpus: pairwise F-scores, the ensemble oracle, winner counts and '
		'the hardest documents.'
	)

	def add_arguments(self, parser):
		parser.add_argument('gold', help='Gold corpus file.')
		parser.add_argument('systems', nargs='+', help='System corpus files.')
		parser.add_argument('--names', nargs='+', help='Names of the systems, in order.')
		parser.add_argument('--ids', help='File with the gold document ids, one per line.')
		parser.add_argument('--synset-map', dest='synset_map', help='TAB separated synset map.')
		parser.add_argument('--top', type=int, default=10, help='Number of hardest documents to list.')
		parser.add_argument('--workers', type=int, help='Number of scoring processes (default WORKERS).')
		parser.add_argument('--json', action='store_true', help='Output the comparison as JSON.')
		self.add_match_arguments(parser)

	def handle(self, *args, **options):
		config = self.get_match_config(options)
		paths = options['systems']
		names = options.get('names')
		if names and len(names) != len(paths):
			raise UsageError('{} names given for {} systems'.format(len(names), len(paths)))

		gold = self.load_corpus(options['gold'], options.get('ids'))
		outputs = [self.load_corpus(path) for path in paths]
		kwargs = dict(synset_map=self.load_synset_map(options.get('synset_map')), workers=options.get('workers'))

		scores = [score_corpus(output, gold, config, **kwargs) for output in outputs]
		matrix = pairwise_matrix(outputs, config, names=names, **kwargs)
		if names is None:
			names = list(matrix.columns)
		ensemble = ensemble_oracle(outputs, gold, config, scores=scores)
		winners = winner_counts(scores, names)
		hardest = hardest_documents(scores, gold, top=options['top'], names=names)

		if options.get('json'):
			return to_json(dict(
				systems={name: score.micro.as_dict() for name, score in zip(names, scores)},
				pairwise={
					name: {other: None if pd.isna(value) else float(value) for other, value in row.items()}
					for name, row in matrix.iterrows()
				},
				ensemble=ensemble.as_dict(),
				winners=winners.to_dict(orient='index'),
				hardest=hardest.to_dict(orient='records'),
			))

		lines = ['System\tF-score']
		lines.extend('{}\t{}'.format(name, percentage(score.micro.f1)) for name, score in zip(names, scores))
		lines.extend(['', self.style.HEADING('Pairwise F-scores'), matrix.to_string(float_format=percentage, na_rep='-')])
		lines.extend(['', 'Ensemble oracle\t{}'.format(percentage(ensemble.f1))])
		lines.extend(['', self.style.HEADING('Documents with the highest F-score'), winners.to_string()])
		lines.extend([
			'', self.style.HEADING('Hardest documents'),
			hardest.to_string(index=False, formatters={'mean_f1': percentage}),
		])
		return '\n'.join(lines)
