r""" Exceptions raised by suzuki_mst3 and the exit statuses the CLI maps them to """

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INTEGRITY = 4
EXIT_GUARD = 5
EXIT_CHECK_FAILED = 6


class Mst3Error(Exception):
    r""" Base class of every error raised on purpose by this package """
    exit_status = EXIT_USAGE


class UsageError(Mst3Error, ValueError):
    r""" Operands from different fields or groups, bad arguments """
    exit_status = EXIT_USAGE


class DomainError(Mst3Error, ValueError):
    r""" A value outside the domain of an operation (index range, zero inverse, ...) """
    exit_status = EXIT_USAGE


class ConfigurationError(Mst3Error, ValueError):
    r""" Invalid scheme parameters or signature types """
    exit_status = EXIT_USAGE


class IntegrityError(Mst3Error):
    r""" Wrong key, corrupted signature or tampered ciphertext """
    exit_status = EXIT_INTEGRITY


class ParseError(Mst3Error, ValueError):
    r""" Malformed key, ciphertext or message file """
    exit_status = EXIT_PARSE

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class GuardRefusal(Mst3Error):
    r""" An attack was asked to enumerate more than the desk-scale guard allows """
    exit_status = EXIT_GUARD
