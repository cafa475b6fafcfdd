"""
Entry point for running yamacone as a module: python -m yamacone
"""

from yamacone.cli.commands import entrypoint

if __name__ == "__main__":
    entrypoint()
