import yaml

from pydrs.conf.backends.file import FileConfigBackend
from pydrs.core.exceptions import ImproperlyConfigured


class YamlConfigBackend(FileConfigBackend):
	name = 'yaml'
	file_name = 'base.yaml'

	def load(self):
		# Prepare + load directory.
		super().load()

		try:
			with open(self.path, 'r') as file_handle:
				parsed_settings = yaml.safe_load(file_handle) or dict()
		except yaml.YAMLError as e:
			raise ImproperlyConfigured(
				'Your settings file contains invalid YAML syntax! Please fix and retry!, {}'.format(str(e))
			)

		self.store(parsed_settings)
