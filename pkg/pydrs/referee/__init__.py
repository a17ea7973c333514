from pydrs.referee.messages import Violation
from pydrs.referee.structure import BoxStructure, build_box_structure
from pydrs.referee.validator import ValidationReport, validate, validate_corpus
from pydrs.referee.variables import BOX_LABEL, REFERENT, VariableTyping, infer_variable_types

__all__ = [
	'Violation', 'BoxStructure', 'build_box_structure', 'ValidationReport', 'validate', 'validate_corpus',
	'BOX_LABEL', 'REFERENT', 'VariableTyping', 'infer_variable_types',
]
