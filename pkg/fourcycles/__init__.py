import os
import types
import logging
import importlib
from .version import MAJOR_VER, MINOR_VER, MICRO_VER

def get_version():
    return '{}.{}.{}'.format(MAJOR_VER, MINOR_VER, MICRO_VER)


class ConfigurationError(Exception):
    pass


class ConfigurationValue(object):
    """
    type to wrap default value when it's code and needs to be interpreted later
    code is passed to eval() in the context of the whole settings module
    (so for instance, values declared before in the settings module, or the
    environment through "os", can be used in the code passed to eval)
    """
    def __init__(self,code):
        self.code = code


class ConfigurationDefault(object):
    def __init__(self,default,desc):
        self.default = default
        self.desc = desc


def check_config(config_mod):
    for attr in dir(config_mod):
        if isinstance(getattr(config_mod,attr),ConfigurationError):
            raise ConfigurationError("%s: %s" % (attr,str(getattr(config_mod,attr))))


class ConfigWrapper(types.ModuleType):

    def __init__(self,conf):
        super(ConfigWrapper,self).__init__(conf.__name__)
        self.conf = conf

    def __getattr__(self,name):
        try:
            val = getattr(self.conf,name)
        except AttributeError:
            raise AttributeError("No setting named '{}' was found, check configuration module.".format(name))
        if isinstance(val,ConfigurationDefault):
            if isinstance(val.default,ConfigurationValue):
                try:
                    return eval(val.default.code,self.conf.__dict__)
                except Exception as e:
                    raise ConfigurationError("%s: can't evaluate '%s' (%s)" % (name,val.default.code,e))
            return val.default
        return val

    def __repr__(self):
        return "<%s over %s>" % (self.__class__.__name__,self.conf.__name__)


def config_for_app(config_mod=None, check=True):
    """
    Install the settings module "config_mod" (a module or a dotted name) as
    fourcycles.config. Defaults to $FOURCYCLE_SETTINGS, then to the packaged
    fourcycles.settings.default.
    """
    if config_mod is None:
        config_mod = os.environ.get("FOURCYCLE_SETTINGS","fourcycles.settings.default")
    if not isinstance(config_mod,types.ModuleType):
        config_mod = importlib.import_module(config_mod)
    if check == True:
        check_config(config_mod)
    globals()["config"] = ConfigWrapper(config_mod)
    level = getattr(config_mod,"LOG_LEVEL",None)
    if level:
        logging.getLogger(__name__).setLevel(level)
    return config


def get_threads():
    """Worker count from config.THREADS, 0 meaning one per cpu"""
    threads = config.THREADS
    if threads < 0:
        raise ConfigurationError("THREADS: must be >= 0, got %s" % threads)
    return threads or os.cpu_count() or 1


config = None
config_for_app()
