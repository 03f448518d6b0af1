"""
Main entry point for running catalantri as a module.
Allows: python -m catalantri [command]
"""

from catalantri.cli import main

if __name__ == "__main__":
    main()
