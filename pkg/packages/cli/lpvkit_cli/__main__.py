"""Entry point for python -m lpvkit_cli."""

import sys

from lpvkit_cli.cli.entry import main


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
