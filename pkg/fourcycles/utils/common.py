"""
This module contains util functions shared by the fourcycles modules.
In general, do not include utils depending on any third-party modules.
"""
import io
import os
import time
from itertools import islice
from contextlib import contextmanager


def timesofar(t0, t1=None):
    '''return the string(eg.'3m3.42s') for the passed real time so far
       from given t0 (return from t0=time.time()).'''
    t1 = t1 or time.time()
    t = t1 - t0
    h = int(t / 3600)
    m = int((t % 3600) / 60)
    s = round((t % 3600) % 60, 2)
    t_str = ''
    if h != 0:
        t_str += '%sh' % h
    if m != 0:
        t_str += '%sm' % m
    t_str += '%ss' % s
    return t_str


def iter_n(iterable, n):
    '''Iterate an iterator by chunks (of n)'''
    it = iter(iterable)
    while True:
        chunk = tuple(islice(it, n))
        if not chunk:
            return
        yield chunk


def anyfile(infile, mode='r'):
    '''
    return a file handler with the support for gzip/xz compressed files,
    picked from the file extension.
    '''
    filetype = os.path.splitext(infile)[1].lower()
    if filetype == '.gz':
        import gzip
        return io.TextIOWrapper(gzip.GzipFile(infile, mode.replace('t', '')))
    elif filetype == '.xz':
        import lzma
        return io.TextIOWrapper(lzma.LZMAFile(infile, mode.replace('t', '')))
    return open(infile, mode)


def is_filehandle(fh):
    '''return True/False if fh is a file-like object'''
    return hasattr(fh, 'read') and hasattr(fh, 'close')


@contextmanager
def open_anyfile(infile, mode='r'):
    '''a context manager can be used in "with" stmt.
       accepts a filehandle or anything accepted by anyfile function.

        with open_anyfile('systems.txt.gz') as in_f:
            do_something()
    '''
    if is_filehandle(infile):
        yield infile
        return
    in_f = anyfile(infile, mode=mode)
    try:
        yield in_f
    finally:
        in_f.close()
