#!/usr/bin/env python3
"""
cocoa-kit CLI
Run with ``python -m src``
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.commands import cocoa_kit

if __name__ == '__main__':
    cocoa_kit()
