"""Entry point for ``python -m bookmaker``."""

import sys

from .cli import main

sys.exit(main())
