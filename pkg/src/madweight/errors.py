"""Exception types shared across the package."""


class MadweightError(Exception):
    """Base class for all package errors."""


# --- graph construction / parsing ---

class MalformedLine(MadweightError):
    def __init__(self, lineno, line, why):
        super().__init__(f"line {lineno}: {why}: {line!r}")
        self.lineno = lineno
        self.line = line


class Loop(MadweightError):
    def __init__(self, lineno, line):
        super().__init__(f"line {lineno}: loop edge: {line!r}")
        self.lineno = lineno
        self.line = line


class DuplicateEdge(MadweightError):
    def __init__(self, lineno, line):
        super().__init__(f"line {lineno}: duplicate edge: {line!r}")
        self.lineno = lineno
        self.line = line


class UnknownEdgeId(MadweightError):
    pass


class EmptyGraph(MadweightError):
    pass


# --- weightings ---

class BadWeight(MadweightError):
    pass


class PartialAtVertex(MadweightError):
    pass


class NotAnEdge(MadweightError):
    pass


class Incomplete(MadweightError):
    pass


# --- configuration machinery ---

class MappingFailed(MadweightError):
    """A structural configuration failed to map to a reducible one (a bug)."""


class ExtensionImpossible(MadweightError):
    """No extension exists over the mutable set (expected only for the
    deliberately non-reducible example gadgets)."""


class InternalInconsistency(MadweightError):
    """A catalogued configuration failed to extend, contradicting its
    reducibility guarantee.  Always indicates a bug."""


class NoConfigurationFound(MadweightError):
    pass


# --- generators / oracle ---

class InvalidParams(MadweightError):
    pass


class NotCubic(MadweightError):
    pass


class BudgetExceeded(MadweightError):
    pass
