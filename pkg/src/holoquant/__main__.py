"""Entry point for `python -m holoquant`."""

from .cli import main

raise SystemExit(main())
