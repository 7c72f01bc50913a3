"""Rewrite the shipped qrels and golden index files after a fixture source changes."""

import sys

from concept_ir.fixtures import regenerate

if __name__ == "__main__":
    regenerate(sys.argv[1:] or None)
