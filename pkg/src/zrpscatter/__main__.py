"""Entry point for ``python -m zrpscatter``."""

from .cli import main

main()
