class Violation:
	"""
	One well-formedness violation.

	:ivar rule: Rule id, for example ``UnboundReferent``.
	:ivar msg: Human readable message.
	:ivar obj: Offending clause index, variable or box label.
	:ivar hint: Optional hint on how to fix it.
	"""

	def __init__(self, rule, msg, obj=None, hint=None):
		self.rule = rule
		self.msg = msg
		self.obj = obj
		self.hint = hint

	@classmethod
	def from_exception(cls, exception, hint=None):
		return cls(exception.__class__.__name__, str(exception), getattr(exception, 'obj', None), hint)

	def __eq__(self, other):
		return (
			isinstance(other, self.__class__) and
			all(getattr(self, attr) == getattr(other, attr) for attr in ['rule', 'msg', 'obj', 'hint'])
		)

	def __hash__(self):
		return hash((self.rule, self.msg, self.obj, self.hint))

	def __str__(self):
		obj = '?' if self.obj is None else str(self.obj)
		hint = '\n\tHINT: %s' % self.hint if self.hint else ''
		return '%s: (%s) %s%s' % (obj, self.rule, self.msg, hint)

	def __repr__(self):
		return '<%s: rule=%r, msg=%r, obj=%r, hint=%r>' % \
			   (self.__class__.__name__, self.rule, self.msg, self.obj, self.hint)

	def as_dict(self):
		return dict(rule=self.rule, message=self.msg, object=self.obj, hint=self.hint)
