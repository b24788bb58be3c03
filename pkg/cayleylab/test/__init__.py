from .test_perm import *
from .test_permgroup import *
from .test_tgraph import *
from .test_autosearch import *
from .test_cayley import *
from .test_theory import *
from .test_settings import *
from .test_cli import *
