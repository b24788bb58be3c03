import logging

from .cayleylab import *

logging.getLogger(__name__).addHandler(logging.NullHandler())
