class ColexError(ValueError):
    pass


class ColexParseError(ColexError):
    """Raised when a colex file cannot be parsed. The message names the
    offending line or field."""
    pass


class ColexValidationError(ColexError):
    def __init__(self, report, message=None):
        """
        Args:
            report: the `ValidationReport` whose violations caused the error.
        """
        self.report = report
        if message is None:
            violations = ', '.join('%s (%s)' % (axiom, witness) for axiom, witness in report.violations[:5])
            if len(report.violations) > 5:
                violations += ', ... %d more' % (len(report.violations) - 5)
            message = 'colex failed validation: %s' % violations
        super(ColexValidationError, self).__init__(message)


class EnumerationCapError(RuntimeError):
    pass


class DistanceRefutedError(RuntimeError):
    def __init__(self, kind, first, second, weight):
        """
        Two distinct error patterns of weight at most t with the same syndrome
        whose sum is not a stabilizer, i.e. a logical of weight < 2t + 1.
        """
        self.kind = kind
        self.first = first
        self.second = second
        self.weight = weight
        super(DistanceRefutedError, self).__init__(
            '%s errors %s and %s share a syndrome but differ by a logical of weight %d'
            % (kind, sorted(first), sorted(second), weight))


class SearchFailureError(LookupError):
    pass
