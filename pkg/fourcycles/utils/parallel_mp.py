from multiprocessing import Pool
from traceback import format_exc

from fourcycles.utils.common import iter_n


# simple aggregation functions
def agg_by_sum(prev, curr):
    return prev + curr

def agg_by_append(prev, curr):
    if isinstance(curr, list):
        return prev + curr
    return prev + [curr]

# avoid the global variable and the callback function this way
class ParallelResult(object):
    def __init__(self, agg_function, agg_function_init):
        self.res = agg_function_init
        self.agg_function = agg_function

    def aggregate(self, curr):
        self.res = self.agg_function(self.res, curr)

# Handles errors in async apply
class ErrorHandler(object):
    def __init__(self, chunk_num, errors):
        self.chunk_num = chunk_num
        self.errors = errors

    def handle(self, exception):
        self.errors.append((self.chunk_num, exception, format_exc()))


class ParallelError(Exception):
    pass


def run_parallel_on_iterable(fun, iterable, agg_function=agg_by_append, agg_function_init=None,
                             chunk_size=1, num_workers=None, ignore_None=True):
    ''' Run fun on every item of iterable using a multiprocessing.Pool.

        Items are chunked (into chunks of size "chunk_size"), each chunk is sent
        to a worker which runs fun(item) on each item and aggregates the results
        with agg_function. Chunk results are aggregated again in the parent
        process as they arrive, so agg_function must not depend on order: callers
        wanting a deterministic result sort it afterwards.

        :param fun:
                Picklable function taking one item.
        :param agg_function:
                Takes (prev, curr) and returns the aggregation of both.
        :param agg_function_init:
                Initialization value for the aggregated result (defaults to []).
        :param num_workers:
                Number of processes, defaults to fourcycles.get_threads().
                With 1 worker, everything runs in the current process.
        :param ignore_None:
                If set, falsy values are not aggregated (0, [], None, etc).

        Any exception raised in a worker is re-raised as ParallelError once all
        chunks are done.
    '''
    if agg_function_init is None:
        agg_function_init = []
    if num_workers is None:
        from fourcycles import get_threads
        num_workers = get_threads()

    ret = ParallelResult(agg_function, agg_function_init)
    if num_workers <= 1:
        for chunk in iter_n(iterable, chunk_size):
            ret.aggregate(_run_one_chunk(chunk, fun, agg_function, _fresh(agg_function_init), ignore_None))
        return ret.res

    errors = []
    with Pool(processes=num_workers) as p:
        for (chunk_num, chunk) in enumerate(iter_n(iterable, chunk_size)):
            p.apply_async(_run_one_chunk,
                    args=(chunk, fun, agg_function, _fresh(agg_function_init), ignore_None),
                    callback=ret.aggregate,
                    error_callback=ErrorHandler(chunk_num, errors).handle)
        # close pool and wait for completion of all workers
        p.close()
        p.join()
    if errors:
        chunk_num, exc, _ = errors[0]
        raise ParallelError("chunk #%d failed (%d failure(s)): %s" % (chunk_num, len(errors), exc)) from exc
    return ret.res


def _fresh(init):
    # mutable initial values must not be shared between chunks
    if isinstance(init, (list, dict, set)):
        return type(init)(init)
    return init


def _run_one_chunk(chunk, fun, agg_function, agg_function_init, ignore_None):
    ret = ParallelResult(agg_function, agg_function_init)
    for item in chunk:
        r = fun(item)
        if r or not ignore_None:
            ret.aggregate(r)
    return ret.res
