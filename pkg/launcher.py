"""
Launcher script for permutolattice
This script uses absolute imports and can be used as PyInstaller entry point
"""

import sys
import os

if getattr(sys, 'frozen', False):
    # Running as compiled executable
    application_path = sys._MEIPASS
else:
    # Running as script from a checkout
    application_path = os.path.dirname(os.path.abspath(__file__))
    if application_path not in sys.path:
        sys.path.insert(0, application_path)

# Explicitly import third-party modules so PyInstaller bundles them automatically
import networkx
import pyparsing

from permutolattice.main import main

if __name__ == "__main__":
    main()
