"""Main CLI entry point for locascope."""

import sys

from locascope import main

if __name__ == "__main__":
    sys.exit(main())
