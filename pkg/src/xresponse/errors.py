"""Exception types raised across the package."""


class XResponseError(Exception):
    """Base class for all errors raised by xresponse."""


# ingest
class ParseError(XResponseError):
    pass


class UnparseableHeader(ParseError):
    pass


class NonMonotonicTimestamps(ParseError):
    pass


class EmptyFile(ParseError):
    pass


class NoTrades(XResponseError):
    pass


# signs
class NoQuotes(XResponseError):
    pass


# response
class NoValidSamples(XResponseError):
    pass


# aggregate
class MissingPairSeries(XResponseError):
    def __init__(self, pairs):
        self.pairs = sorted(pairs)
        shown = ", ".join(f"({i},{j})" for i, j in self.pairs[:10])
        more = "" if len(self.pairs) <= 10 else f" and {len(self.pairs) - 10} more"
        super().__init__(f"missing pair series: {shown}{more}")


class MissingSeries(XResponseError):
    pass


class EmptySector(XResponseError):
    pass


class DegenerateMax(XResponseError):
    pass


class DegenerateVariance(XResponseError):
    pass


# fit
class TooFewPoints(XResponseError):
    pass


class NonConvergence(UserWarning):
    """Emitted (as a warning) when the optimizer hits its iteration cap."""


# synth
class InvalidConfig(XResponseError):
    pass
