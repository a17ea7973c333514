from collections import namedtuple

from pydrs.conf import settings

HILL_CLIMB = 'hill-climb'
EXHAUSTIVE = 'exhaustive'


class MatchConfig(namedtuple('MatchConfig', [
	'restarts', 'seed', 'search', 'include_ref', 'smart_init', 'exhaustive_bound'
])):
	"""
	Parameters of the variable mapping search.

	:ivar restarts: Number of hill-climbing restarts (at least 1).
	:ivar seed: Seed of the restart generators (not negative).
	:ivar search: ``HILL_CLIMB`` or ``EXHAUSTIVE``.
	:ivar include_ref: Keep the redundant REF clauses.
	:ivar smart_init: Seed the first restart from clauses with identical lemma or role name.
	:ivar exhaustive_bound: Largest number of variables per kind (on the smaller side) for exhaustive search.
	"""
	__slots__ = ()

	def __new__(cls, restarts=10, seed=0, search=HILL_CLIMB, include_ref=False, smart_init=True, exhaustive_bound=10):
		if restarts < 1:
			raise ValueError('restarts must be at least 1, got {}'.format(restarts))
		if seed < 0:
			raise ValueError('seed must not be negative, got {}'.format(seed))
		if search not in (HILL_CLIMB, EXHAUSTIVE):
			raise ValueError('unknown search {!r}'.format(search))
		return super().__new__(cls, restarts, seed, search, include_ref, smart_init, exhaustive_bound)

	@classmethod
	def from_settings(cls, **overrides):
		"""
		Create a config from the ``MATCH_*`` settings, overridden by the given keyword arguments.
		"""
		values = dict(
			restarts=settings.MATCH_RESTARTS,
			seed=settings.MATCH_SEED,
			include_ref=settings.MATCH_INCLUDE_REF,
			smart_init=settings.MATCH_SMART_INIT,
			exhaustive_bound=settings.EXHAUSTIVE_BOUND,
		)
		values.update({key: value for key, value in overrides.items() if value is not None})
		return cls(**values)

	@property
	def is_exhaustive(self):
		return self.search == EXHAUSTIVE
