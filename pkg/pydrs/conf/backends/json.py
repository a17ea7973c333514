import json

from pydrs.conf.backends.file import FileConfigBackend
from pydrs.core.exceptions import ImproperlyConfigured


class JsonConfigBackend(FileConfigBackend):
	name = 'json'
	file_name = 'base.json'

	def load(self):
		# Prepare + load directory.
		super().load()

		try:
			with open(self.path, 'r') as file_handle:
				parsed_settings = json.load(file_handle)
		except json.JSONDecodeError as e:
			raise ImproperlyConfigured(
				'Your settings file contains invalid JSON syntax! File {}, Error {}'.format(self.file_name, str(e))
			)

		self.store(parsed_settings)
