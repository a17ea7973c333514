import io
import json
import os

from pydrs import __version__
from pydrs.core.management import call_command
from pydrs.core.parser import read_corpus
from tests import fixture_path, read_fixture, read_form, without_clause
from tests.integration import CommandTestCase


class TestScoring(CommandTestCase):

	def test_score(self):
		status, out, _ = self.run_command(
			'score', fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'), '--exhaustive'
		)
		assert status == 0
		assert 'F-score\t42.9' in out.splitlines()
		assert 'Matched\t3' in out.splitlines()

	def test_score_json(self):
		status, out, _ = self.run_command(
			'score', fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'), '--json', '--restarts', 3,
		)
		assert status == 0
		data = json.loads(out)
		assert data['micro']['matched'] == 3
		assert data['documents'][0]['doc_id'] == '00/2302'

	def test_score_ids(self):
		status, out, _ = self.run_command(
			'score', fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'),
			'--ids', fixture_path('everything_ids.txt'), '--include-ref',
		)
		assert status == 0
		assert 'Produced\t10' in out.splitlines()

	def test_score_replaces_ill_formed(self):
		system = self.write_fixture('system.clf', [without_clause(read_form('negation.clf'), 'b3 REF x2')])
		status, out, _ = self.run_command('score', system, fixture_path('negation.clf'))
		assert status == 0
		assert 'Ill-formed\t1' in out.splitlines()

		status, out, _ = self.run_command('score', system, fixture_path('negation.clf'), '--no-referee')
		assert 'F-score\t100.0' in out.splitlines()

	def test_analyze(self):
		status, out, _ = self.run_command(
			'analyze', fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'), '--exhaustive',
			'--min-docs', 1,
		)
		assert status == 0
		assert 'F-score ignoring validation\t42.9' in out
		assert 'synsets\t57.1' in out

	def test_significance(self):
		status, out, _ = self.run_command(
			'significance', fixture_path('everything_system.clf'), fixture_path('everything_system.clf'),
			fixture_path('everything_gold.clf'), '--R', 100,
		)
		assert status == 0
		lines = out.splitlines()
		assert 'p-value\t1.0000' in lines
		assert 'Verdict\tnot significant at alpha 0.05' in lines

	def test_significance_usage_errors(self):
		corpora = (
			fixture_path('everything_system.clf'), fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'),
		)
		for options in (('--R', 0), ('--seed', -1), ('--alpha', 1.5)):
			status, _, err = self.run_command('significance', *(corpora + options))
			assert status == 2, options
			assert 'UsageError' in err

	def test_compare(self):
		status, out, _ = self.run_command(
			'compare', fixture_path('everything_gold.clf'), fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'),
			'--names', 'parser', 'copy', '--exhaustive', '--json',
		)
		assert status == 0
		data = json.loads(out)
		assert data['systems']['copy']['f1'] == 1.0
		assert data['pairwise']['parser']['parser'] is None
		assert data['ensemble']['f1'] == 1.0
		assert data['winners']['copy']['winner'] == 1

	def test_compare_names(self):
		status, _, err = self.run_command(
			'compare', fixture_path('everything_gold.clf'), fixture_path('everything_system.clf'), '--names', 'a', 'b',
		)
		assert status == 2
		assert 'UsageError' in err


class TestCorpusCommands(CommandTestCase):

	def test_validate(self):
		status, out, err = self.run_command('validate', fixture_path('negation.clf'))
		assert status == 0
		assert out.strip() == ''
		assert '1 of 1 documents are well-formed' in err

	def test_validate_ill_formed(self):
		path = self.write_fixture('broken.clf', [
			read_form('universal.clf'), without_clause(read_form('negation.clf'), 'b3 REF x2'),
		])
		status, out, err = self.run_command('validate', path)
		assert status == 1
		assert out.splitlines() == ['DOC1\tUnboundReferent\treferent x2 is not introduced by a REF clause']
		assert '1 of 2 documents are well-formed' in err

		status, out, _ = self.run_command('validate', path, '--json', '-v', 0)
		assert status == 1
		assert json.loads(out)['invalid'] == 1

	def test_render(self):
		status, out, _ = self.run_command('render', fixture_path('negation.clf'), '--ascii')
		assert status == 0
		assert out.startswith('%%% id: 99/2308\n+- b2 ')
		assert 'NOT' in out

	def test_render_ill_formed(self):
		path = self.write_fixture('broken.clf', [
			without_clause(read_form('segmented.clf'), 'b6 DRS b4'), read_form('headerless.clf'),
		])
		status, out, err = self.run_command('render', path)
		assert status == 1
		assert 'DOC0\tDanglingDiscourseRelation' in err
		assert out.startswith('%%% id: 0\n')

	def test_spar(self):
		output = os.path.join(self.directory, 'spar.clf')
		status, _, _ = self.run_command(
			'spar', '--train', fixture_path('train.clf'), '--n', 2, '--restarts', 3, '--output', output
		)
		assert status == 0
		with open(output, encoding='utf-8') as handle:
			predictions = read_corpus(handle)
		assert [form.doc_id for form in predictions] == ['0', '1']
		assert all(form.clauses == read_form('negation.clf').clauses for form in predictions)

	def test_simspar(self):
		status, out, _ = self.run_command(
			'simspar', '--train', fixture_path('train.clf'), '--embeddings', fixture_path('embeddings.txt'),
			'--input', fixture_path('sentences.txt'),
		)
		assert status == 0
		training = read_fixture('train.clf')
		predictions = read_corpus(io.StringIO(out))
		assert [form.clauses for form in predictions] == [training[i].clauses for i in (1, 0, 2)]


class TestCommandLine(CommandTestCase):

	def test_help(self):
		status, out, _ = self.run_command('help')
		assert status == 0
		for name in ('analyze', 'compare', 'render', 'score', 'significance', 'simspar', 'spar', 'validate'):
			assert '    {}'.format(name) in out.splitlines()

		status, out, _ = self.run_command('help', '--commands')
		assert out.split() == sorted(out.split())

	def test_version(self):
		status, out, _ = self.run_command('version')
		assert status == 0
		assert out.strip() == __version__

	def test_unknown_command(self):
		status, _, err = self.run_command('parse', fixture_path('negation.clf'))
		assert status == 2
		assert 'Unknown command: parse' in err

	def test_usage_errors(self):
		status, _, _ = self.run_command('score', fixture_path('negation.clf'), fixture_path('negation.clf'), '--bogus')
		assert status == 2
		status, _, err = self.run_command('score', fixture_path('negation.clf'), fixture_path('negation.clf'), '--restarts', 0)
		assert status == 2
		status, _, _ = self.run_command('spar', '--train', fixture_path('train.clf'), '--n', -1)
		assert status == 2
		status, _, _ = self.run_command('spar', '--train', fixture_path('train.clf'), '--n', 1, '--sample', 1)
		assert status == 2

	def test_missing_file(self):
		status, _, err = self.run_command('validate', os.path.join(self.directory, 'missing.clf'))
		assert status == 1
		assert 'CommandError' in err

	def test_malformed_corpus(self):
		path = os.path.join(self.directory, 'malformed.clf')
		with open(path, 'w', encoding='utf-8') as handle:
			handle.write('b1 REF x1\nb1 REF\n')
		status, _, err = self.run_command('validate', path)
		assert status == 1
		assert 'line 2' in err

	def test_call_command(self):
		stdout = io.StringIO()
		output = call_command(
			'score', fixture_path('everything_system.clf'), fixture_path('everything_gold.clf'), exhaustive=True, stdout=stdout,
		)
		assert 'F-score\t42.9' in output.splitlines()
		assert stdout.getvalue() == output + '\n'
