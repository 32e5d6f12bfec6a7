# Processing join profile files

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

# A profile is a Python source file in segjoin/conf named NAME.conf.  It is
# executed into a dictionary of upper case settings, on top of the defaults
# below; command line options are then applied on top of the profile.

import os
import re
import glob

from segjoin.sjlib.core import ConfigError


__all__ = ['DEFAULTS', 'list_profiles', 'find_profile_file', 'load_profile']


DEFAULT_PROFILE = 'DEFAULT'

DEFAULTS = dict(
    TAU = 2,
    SELECTOR = 'multimatch',
    VERIFIER = 'extension-share',
    THREADS = 1,
    GEN_SEED = 0,
    GEN_COUNT = 1000,
    GEN_LEN_MIN = 8,
    GEN_LEN_MAX = 40,
    GEN_ALPHABET = 26,
    GRAYLOG = None,
    LOG_LEVEL = 'WARNING')


def conf_directory():
    return os.path.realpath(os.path.join(os.path.dirname(__file__), '../conf'))


def find_profile_file(profile, full_path = False):
    '''Returns path to the profile.  If full_path is set the profile is
    already a path and is returned unchanged.'''
    if full_path:
        return profile
    else:
        return os.path.join(conf_directory(), '%s.conf' % profile)


def list_profiles():
    '''Returns list of shipped profile names.'''
    return sorted(
        re.sub(r'.*/([^/]*)\.conf$', r'\1', conf)
        for conf in glob.glob(os.path.join(conf_directory(), '*.conf')))


def load_profile(profile = DEFAULT_PROFILE, full_path = False, **overrides):
    '''Returns the settings of the given profile.  Any override which is not
    None replaces the profile value.'''
    result = dict(DEFAULTS)
    config_file = find_profile_file(profile, full_path)
    context = dict(here = os.path.dirname(config_file), os = os)
    try:
        with open(config_file, 'rb') as src:
            source = src.read()
    except OSError as error:
        raise ConfigError(
            'Unable to read profile %s: %s' % (config_file, error)) from error
    try:
        exec(compile(source, config_file, 'exec'), context, result)
    except Exception as error:
        raise ConfigError(
            'Error in profile %s: %s' % (config_file, error)) from error
    result.update(
        (key, value) for key, value in overrides.items() if value is not None)
    return result
