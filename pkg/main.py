#!/usr/bin/env python3

"""
continuant-lab
Main entry point for the application
"""

import sys
import os

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from src.cli.main import cli


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
