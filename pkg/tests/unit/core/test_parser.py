import io
import unittest

from pydrs.core import models
from pydrs.core.exceptions import EmptyDocument, LengthMismatch, MalformedClause, UnknownArity, UnknownOperator
from pydrs.core.parser import classify_operator, parse_clause, parse_document, read_corpus, read_id_list, \
	serialize_clause, serialize_document, split_comment, write_corpus
from tests import fixture_path, read_fixture, read_form

COMPARISONS = ['EQU', 'NEQ', 'APX', 'LES', 'LEQ', 'TPR', 'TAB']


class TestClauses(unittest.TestCase):

	def test_role_with_constant(self):
		clause = parse_clause('b1 Name x1 "tom"')
		assert clause.box == models.Variable('b1')
		assert clause.operator == models.Role('Name')
		assert clause.args == (models.Variable('x1'), models.Constant('tom'))
		assert clause.alignment is None

	def test_ref(self):
		clause = parse_clause('b2 REF t1')
		assert clause.operator == models.FixedOperator(models.REF)
		assert clause.args == (models.Variable('t1'),)

	def test_alignment(self):
		clause = parse_clause('b3 PartOf x2 x3 % all [7...10]')
		assert clause.alignment == (models.Alignment('all', 7, 10),)

		clause = parse_clause('b1 REF x1 % He [0...2] his [11...14]')
		assert clause.alignment == (models.Alignment('He', 0, 2), models.Alignment('his', 11, 14))

	def test_free_comment(self):
		assert parse_clause('b3 REF x3 %').alignment is None
		assert parse_clause('b3 REF x3 % just a note').alignment is None

	def test_percent_inside_constant(self):
		body, comment = split_comment('b1 Name x1 "50%" % note')
		assert body.strip() == 'b1 Name x1 "50%"'
		assert parse_clause('b1 Name x1 "50%" % note').args[1] == models.Constant('50%')

	def test_multi_word_constant(self):
		clause = parse_clause('b1 Name x1 "nick~leeson"')
		assert clause.args[1].value == 'nick~leeson'

	def test_classify(self):
		assert classify_operator('TPR', 2, ['t1', '"now"'], COMPARISONS) == models.Comparison('TPR')
		assert classify_operator('CONTINUATION', 2, ['b1', 'b4'], COMPARISONS) == \
			models.DiscourseRelation('CONTINUATION')
		assert classify_operator('male', 2, ['"n.02"', 'x1'], COMPARISONS) == models.Concept('male', 'n', '02')
		assert classify_operator('Agent', 2, ['e1', 'x1'], COMPARISONS) == models.Role('Agent')
		assert classify_operator('IMP', 2, ['b3', 'b5'], COMPARISONS) == models.FixedOperator(models.IMP)

	def test_classify_errors(self):
		with self.assertRaises(UnknownOperator):
			classify_operator('lowercase', 2, ['x1', 'x2'], COMPARISONS)
		with self.assertRaises(UnknownArity):
			classify_operator('REF', 2, ['x1', 'x2'], COMPARISONS)
		with self.assertRaises(UnknownArity):
			classify_operator('male', 1, ['x1'], COMPARISONS)
		with self.assertRaises(UnknownOperator):
			classify_operator('X', 1, ['x1'], COMPARISONS)

	def test_malformed(self):
		for line in ('b1 REF', 'b1 Name x1 x2 x3', '"b1" REF x1', 'b1 "REF" x1', 'b1 male n.02 x1', 'b1 Name x1 "tom'):
			with self.assertRaises(MalformedClause):
				parse_clause(line)

	def test_serialize(self):
		for line in ('b1 male "n.02" x1', 'b2 TPR t1 "now"', 'b6 CONTINUATION b1 b4', 'b3 REF x2 % all [7...10]'):
			assert serialize_clause(parse_clause(line)) == line
		assert serialize_clause(parse_clause('b3 REF x2 % all [7...10]'), with_alignment=False) == 'b3 REF x2'


class TestDocuments(unittest.TestCase):

	def test_headerless(self):
		form = read_form('headerless.clf')
		assert len(form.clauses) == 17
		assert form.raw_text == 'Nick Leeson was arrested for collapse of Barings Bank PLC.'
		assert form.doc_id == '0'

	def test_negation(self):
		form = read_form('negation.clf')
		assert len(form.clauses) == 14
		assert form.doc_id == '99/2308'
		assert form.clauses[4].operator == models.Comparison('EQU')

	def test_parse_document(self):
		with open(fixture_path('headerless.clf')) as handle:
			form = parse_document(handle.read(), doc_id='57/0762')
		assert form.doc_id == '57/0762'
		assert len(form.clauses) == 17

		form = parse_document('b1 REF x1\nb1 male "n.02" x1\n')
		assert form.raw_text == ''
		assert len(form.clauses) == 2

	def test_empty_document(self):
		with self.assertRaises(EmptyDocument):
			parse_document('Only some raw text.\n')

	def test_error_position(self):
		stream = io.StringIO('Some text.\n\nb1 REF x1\nb1 REF\n')
		try:
			read_corpus(stream, comparison_operators=COMPARISONS)
		except MalformedClause as e:
			assert e.line == 4
			assert e.document == 0
			assert str(e).startswith('document 0: line 4:')
		else:
			assert False, 'malformed clause accepted'

	def test_concatenated(self):
		with open(fixture_path('headerless.clf')) as handle:
			text = handle.read()
		forms = read_corpus(io.StringIO(text + '\n' + text))
		assert len(forms) == 2
		assert [len(form.clauses) for form in forms] == [17, 17]
		assert [form.doc_id for form in forms] == ['0', '1']

	def test_clause_blocks_only(self):
		forms = read_corpus(io.StringIO('b1 REF x1\nb1 male "n.02" x1\n\nb1 REF x1\n\n\nb2 REF x2\n'))
		assert [len(form.clauses) for form in forms] == [2, 1, 1]
		assert all(form.raw_text == '' for form in forms)

	def test_ids(self):
		forms = read_fixture('everything_gold.clf', ids=['a'])
		assert forms[0].doc_id == 'a'
		with self.assertRaises(LengthMismatch):
			read_fixture('everything_gold.clf', ids=['a', 'b'])
		with open(fixture_path('everything_ids.txt')) as handle:
			assert read_id_list(handle) == ['00/2302']

	def test_write_read(self):
		forms = read_fixture('universal.clf') + [read_form('headerless.clf').with_doc_id('1')]
		buffer = io.StringIO()
		write_corpus(forms, buffer)
		assert read_corpus(io.StringIO(buffer.getvalue())) == forms

		text = buffer.getvalue()
		assert text.startswith('%%% id: 01/2312\nHe put all his money in the box.\n\nb1 REF x1 % He [0...2] his [11...14]\n')
		assert '%%% id: 1' not in text

	def test_serialize_document(self):
		form = read_form('everything_gold.clf')
		text = serialize_document(form, with_id=False)
		assert text.splitlines()[:3] == ['Everything is new.', '', 'b0 IMP b1 b2']
		assert text.endswith('b0 EQU t1 "now"\n')

	def test_raw_text_like_a_clause(self):
		clauses = [parse_clause('b1 REF x1'), parse_clause('b1 male "n.02" x1')]
		form = models.ClausalForm('0', 'Tom Jackson is dead.', clauses)
		assert parse_document(serialize_document(form)) == form
		assert parse_document(serialize_document(form, with_id=False), doc_id='0') == form

		forms = [
			form,
			models.ClausalForm('1', 'Mary Smith sang loudly.', clauses),
			models.ClausalForm('2', '', clauses),
		]
		buffer = io.StringIO()
		write_corpus(forms, buffer)
		assert read_corpus(io.StringIO(buffer.getvalue())) == forms
