"""
Size caps and run options, loaded from 'cayleylab.cfg'.

The file shipped next to this module holds the defaults; '~/.config/cayleylab/cayleylab.cfg' replaces it
when present. The environment variable CAYLEYLAB_MAX_N then overrides the construction cap, and the
command line overrides anything through configure().
"""

import logging
import os

import config

logger = logging.getLogger(__name__)

ENV_MAX_N = 'CAYLEYLAB_MAX_N'


class Settings:
    """Caps are configuration, not constants; every one can be changed per run."""

    maxN = 8                 #: largest n for which Cay(S_n,S) is constructed
    maxAutN = 6              #: largest n for whole-graph automorphism runs
    maxTgraphVertices = 12   #: largest T(S) handed to the automorphism search
    maxSearchVertices = 1000  #: largest graph handed to the automorphism search
    maxRegularN = 8          #: largest n for the right regular representation
    enumerationCap = 10000   #: largest group whose elements are enumerated
    parallel = False         #: run the per-pair checks on a thread pool
    workers = 4              #: thread pool size for parallel runs

    _integerKeys = ('maxN', 'maxAutN', 'maxTgraphVertices', 'maxSearchVertices', 'maxRegularN',
                    'enumerationCap', 'workers')
    _flagKeys = ('parallel',)

    def __init__(self, **overrides):
        self.configure(**overrides)

    @classmethod
    def load(cls, environ=None, userConfigDir=None):
        """Settings from the user's or the shipped config file, then the environment."""
        settings = cls()
        if userConfigDir is None:
            userConfigDir = os.path.join(os.path.expanduser('~'), '.config', 'cayleylab')
        userCfg = os.path.join(userConfigDir, 'cayleylab.cfg')
        if os.path.exists(userCfg):
            cfgFileName = userCfg
        else:
            cfgFileName = default_config_path()
        settings.loadConfigFile(cfgFileName)

        environ = os.environ if environ is None else environ
        if environ.get(ENV_MAX_N):
            settings.configure(maxN=environ[ENV_MAX_N])
        return settings

    def loadConfigFile(self, fileName):
        logger.debug('loading settings from %s', fileName)
        try:
            cfg = config.Config(fileName)
        except Exception as e:  # OSError, or any parser error of the config module
            raise SettingsError('cannot read config file "%s": %s' % (fileName, e))
        values = {}
        for key in self._integerKeys + self._flagKeys:
            try:
                values[key] = cfg[key]
            except (KeyError, config.ConfigError):
                continue
        self.configure(**values)

    def configure(self, **values):
        """Set and validate attributes; unknown keys are errors."""
        for key, value in values.items():
            if value is None:
                continue
            if key in self._integerKeys:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    raise SettingsError('%s must be an integer, got %r' % (key, value))
                if value < (1 if key in ('enumerationCap', 'workers', 'maxSearchVertices') else 2):
                    raise SettingsError('%s = %d is too small' % (key, value))
            elif key in self._flagKeys:
                if isinstance(value, str):
                    value = value.lower() in ('1', 'true', 'yes', 'on')
                value = bool(value)
            else:
                raise SettingsError('unknown setting "%s"' % key)
            object.__setattr__(self, key, value)
        return self

    def asDict(self):
        return {key: getattr(self, key) for key in self._integerKeys + self._flagKeys}

    def __repr__(self):
        return 'Settings(%s)' % ', '.join('%s=%r' % kv for kv in sorted(self.asDict().items()))


def default_config_path():
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), 'cayleylab.cfg')


class SettingsError(ValueError):
    """Raised for invalid configuration values."""
    def __init__(self, *args, **kwargs):
        ValueError.__init__(self, *args, **kwargs)
