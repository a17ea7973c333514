import string


def count_tokens(text, split_punctuation=False):
	"""
	Number of whitespace separated tokens in ``text``. With ``split_punctuation`` leading and trailing punctuation
	characters of every token count as tokens of their own.

	:param text: Raw text.
	:param split_punctuation: Count punctuation as separate tokens.
	:rtype: int
	"""
	count = 0
	for token in text.split():
		if not split_punctuation:
			count += 1
			continue
		core = token.strip(string.punctuation)
		count += len(token) - len(core) + (1 if core else 0)
	return count


def sentence_tokens(text):
	"""
	Lowercased whitespace tokens with leading and trailing ASCII punctuation removed. Tokens consisting of
	punctuation only are dropped.
	"""
	tokens = list()
	for token in text.lower().split():
		token = token.strip(string.punctuation)
		if token:
			tokens.append(token)
	return tokens
