# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Command registry for the higgs-betti CLI."""

from cohomology.types import CommandName
from commands.betti import cmd_betti
from commands.dims import cmd_dims
from commands.stabilize import cmd_stabilize
from commands.strata import cmd_strata


command_handlers = {
    CommandName.betti: cmd_betti,
    CommandName.strata: cmd_strata,
    CommandName.stabilize: cmd_stabilize,
    CommandName.dims: cmd_dims,
}
