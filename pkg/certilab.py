#!/usr/bin/env python3
"""
certilab - certified shortcut laboratory.
This module serves as the entry point for the certilab package.
"""

from certilab import main

if __name__ == "__main__":
    main()
