'''Settings modules for fourcycles. "default" is loaded at import time,
see fourcycles.config_for_app() to install another one.'''
