""" Toolkit Error Definition """


class ToolkitError(Exception):
    """Base class of every error raised by the toolkit."""
