class RuleRegistry:
	"""
	Ordered registry of validation rules. A rule is a callable taking the validation context and returning a list of
	violations. Rules run in registration order and may leave results on the context for later rules.
	"""

	def __init__(self):
		self.registered_rules = list()

	def register(self, rule=None, **kwargs):
		def inner(rule):
			rule.rule_name = kwargs.get('name', rule.__name__)
			if rule not in self.registered_rules:
				self.registered_rules.append(rule)
			return rule

		if callable(rule):
			return inner(rule)
		return inner

	def run_rules(self, context, names=None):
		violations = list()

		for rule in self.get_rules(names):
			new_violations = rule(context)
			try:
				iter(new_violations)
			except TypeError:
				raise Exception(
					'The rule {} did not return a list. All rules registered with the rule registry must return a list.'.format(rule)
				)
			violations.extend(new_violations)

		return violations

	def get_rules(self, names=None):
		if names is None:
			return list(self.registered_rules)
		return [rule for rule in self.registered_rules if rule.rule_name in names]


registry = RuleRegistry()
register = registry.register
run_rules = registry.run_rules
