#!/usr/bin/env python

import os
import sys
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import logging

from cayleylab import Settings, cycle_set, check_ncycle_structure, full_report
from cayleylab.cli import report_json

logging.basicConfig(level=logging.INFO)

# modified bubble-sort graphs: T(S) is the n-cycle
settings = Settings.load()
settings.configure(parallel=True)
for n in range(4, settings.maxAutN + 1):
    S = cycle_set(n)
    structure = check_ncycle_structure(S, settings)
    print('n = %d: |Aut| = %d, |G_e| = %d = %d * %d, equations hold: %s' %
          (n, structure.autOrder, structure.geOrder, structure.leOrder, 2 * n, structure.holds))
    print(report_json(full_report(S, settings)))
