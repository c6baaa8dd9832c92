# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""CLI entrypoint."""

import sys

from dotenv import load_dotenv


load_dotenv()

from cli import main


if __name__ == "__main__":
    sys.exit(main())
