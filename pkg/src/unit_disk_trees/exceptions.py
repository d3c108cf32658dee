# exceptions.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause


class GraphParseError(Exception):
    """
    Raised when an edge-list document cannot be turned into a simple graph.

    Attributes:
        line_number (int | None): 1-based line of the offending input, if known.
    """

    def __init__(self, msg: str, line_number: int | None = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            msg = f"line {line_number}: {msg}"
        super().__init__(msg)


class ContractViolationError(Exception):
    """
    Raised when an operation is called outside of its precondition, e.g.
    asking for a UDR construction of a caterpillar that has none.
    """

    pass


class LayoutError(Exception):
    """
    Raised when a layout is incomplete for the graph it is paired with,
    or a layout document is malformed.
    """

    pass


class EnumerationBoundsError(Exception):
    """
    Raised when an exhaustive search would leave its allowed grid region.
    We never silently truncate a search.
    """

    pass


class GadgetParameterError(Exception):
    """
    Raised for gadget parameters outside of their valid range.
    """

    pass
