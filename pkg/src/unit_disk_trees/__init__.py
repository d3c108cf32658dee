# __init__.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Unit disk representations of caterpillars and lobsters"""

__version__ = "0.1.0"

from unit_disk_trees.exceptions import (
    ContractViolationError,
    EnumerationBoundsError,
    GadgetParameterError,
    GraphParseError,
    LayoutError,
)

__all__ = [
    "ContractViolationError",
    "EnumerationBoundsError",
    "GadgetParameterError",
    "GraphParseError",
    "LayoutError",
]
