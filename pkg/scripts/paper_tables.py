#!/usr/bin/env python3
"""Print the three blocks-(3,4,5) skeleton Betti tables (k = 1, 2, 3) in the
row-per-diagonal layout, including the note on the verified k=1 diagonal-2
row. Thin wrapper over `fatforest paper-examples`."""

import sys

from fatforest.cli import main

sys.exit(main(["paper-examples"] + sys.argv[1:]))
