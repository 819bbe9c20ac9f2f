"""Exact tensor rank / matrix multiplication toolkit.

Thin wrapper over the compiled module: the C++ side speaks the same JSON
as the file formats and the CLI, so everything here just converts between
JSON strings and dicts.
"""

import json

from . import _tensorforge as _core

TfParseError = _core.TfParseError
TfStructuralError = _core.TfStructuralError
TfDomainError = _core.TfDomainError


def _j(obj):
    """Accept either a dict or a JSON string."""
    return obj if isinstance(obj, str) else json.dumps(obj)


def matmul_tensor(n, transposed_third=False):
    return json.loads(_core.matmul_tensor(n, transposed_third))


def unit_tensor(r):
    return json.loads(_core.unit_tensor(r))


def multilinear_rank(tensor):
    return _core.multilinear_rank(_j(tensor))


def kronecker(t1, t2):
    return json.loads(_core.kronecker(_j(t1), _j(t2)))


def symmetrize(tensor):
    return json.loads(_core.symmetrize(_j(tensor)))


def expand_decomposition(decomp):
    return json.loads(_core.expand_decomposition(_j(decomp)))


def verify_decomposition(tensor, decomp):
    return _core.verify_decomposition(_j(tensor), _j(decomp))


def omega_bound(n, r, kind="rank"):
    return _core.omega_bound(n, r, kind)


def chilo_check(n):
    return _core.chilo_check(n)


def classify_222(tensor):
    return json.loads(_core.classify_222(_j(tensor)))


def hyperdeterminant(tensor):
    return _core.hyperdeterminant(_j(tensor))


def verify_degeneration(witness, target):
    return _core.verify_degeneration(_j(witness), _j(target))


def degeneration_to_rank(witness, target):
    return json.loads(_core.degeneration_to_rank(_j(witness), _j(target)))


def classify_castling(dims):
    return json.loads(_core.classify_castling(list(dims)))


def hilbert_function(poly):
    return _core.hilbert_function(_j(poly))


def waring_rank_monomial(alpha):
    return _core.waring_rank_monomial(list(alpha))


def waring_rank_binary(poly):
    return _core.waring_rank_binary(_j(poly))


def is_concise(tensor):
    return _core.is_concise(_j(tensor))


def find_tight(tensor):
    return _core.find_tight(_j(tensor))


def verify_tight(tensor, labels):
    return _core.verify_tight(_j(tensor), [list(l) for l in labels])


def fekete_bound(samples):
    return _core.fekete_bound([(int(k), int(r)) for k, r in samples])


def benchmark_slope(alg, sizes, transposed_third=False):
    return _core.benchmark_slope(_j(alg), list(sizes), transposed_third)
