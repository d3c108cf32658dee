# __main__.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from unit_disk_trees.cli import app

app(prog_name="udtrees")
