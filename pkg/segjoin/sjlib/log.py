# Logging setup for the segjoin commands.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import os
import logging

from pygelf import GelfUdpHandler

from segjoin.sjlib.core import ConfigError


__all__ = ['configure_logging', 'parse_graylog']


GRAYLOG_PORT = 12201
FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def version():
    with open(os.path.join(os.path.dirname(__file__), '../VERSION')) as src:
        return src.read().strip()


def parse_graylog(text):
    '''Parses HOST[:PORT] into (host, port).'''
    host, _, port = text.partition(':')
    if not host:
        raise ConfigError('Graylog host missing in %r' % text)
    if not port:
        return host, GRAYLOG_PORT
    try:
        return host, int(port)
    except ValueError:
        raise ConfigError('Invalid graylog port in %r' % text) from None


def configure_logging(level = 'WARNING', graylog = None):
    '''Sends segjoin log records to stderr, and also to a Graylog server over
    GELF when graylog is given as HOST[:PORT].'''
    logger = logging.getLogger('segjoin')
    if isinstance(level, str):
        level = level.upper()
    try:
        logger.setLevel(level)
    except ValueError:
        raise ConfigError('Unknown log level %r' % level) from None

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    stderr = logging.StreamHandler()
    stderr.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(stderr)

    if graylog:
        host, port = parse_graylog(graylog)
        logger.addHandler(GelfUdpHandler(
            host = host, port = port, include_extra_fields = True,
            _application = 'segjoin', _segjoin_version = version()))
    return logger
