#!/usr/bin/env python3
"""
Exact Tensor: computable indexings and exact Clifford+T simulation
Main entry point for the command line tools
"""

import os
import sys

# Add the current directory to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from exact_tensor.cli import main


if __name__ == "__main__":
    sys.exit(main())
