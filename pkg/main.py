"""
Time-dependent Aharonov-Bohm laboratory - Main Entry Point
path: main.py
"""

import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
