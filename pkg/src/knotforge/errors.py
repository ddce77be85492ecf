# *******************************************************************************
# Copyright (c) 2025 Contributors to the Eclipse Foundation
#
# See the NOTICE file(s) distributed with this work for additional
# information regarding copyright ownership.
#
# This program and the accompanying materials are made available under the
# terms of the Apache License Version 2.0 which is available at
# https://www.apache.org/licenses/LICENSE-2.0
#
# SPDX-License-Identifier: Apache-2.0
# *******************************************************************************

from pathlib import Path


class KnotforgeError(Exception):
    """Base class for every error raised by knotforge.

    `file` and `line` point at the offending input, when there is one.
    """

    def __init__(
        self, msg: str, file: Path | None = None, line: int | None = None
    ) -> None:
        super().__init__(msg)
        self.file = file
        self.line = line


class InputError(KnotforgeError):
    """Bad user input; the CLI exits with code 2."""


class MalformedSyntax(InputError):
    pass


class BadIncidence(InputError):
    pass


class DisconnectedUnderCycle(InputError):
    """The diagram has more than one component (a link, not a knot)."""


class SignMismatch(InputError):
    pass


class UnknownKnotName(InputError):
    pass


class TableFormatError(InputError):
    pass


class HeegaardFormatError(InputError):
    pass


class InputFileNotFound(InputError):
    pass


class NoRelators(KnotforgeError, ValueError):
    pass


class IndexOutOfRange(KnotforgeError, ValueError):
    pass


class InvalidChainComplex(KnotforgeError, ValueError):
    pass


class InvalidDiagram(KnotforgeError, ValueError):
    pass


class InvalidHeegaardDiagram(KnotforgeError, ValueError):
    pass
