"""Exact classification of F-zips over finite fields.

Thin convenience layer over the compiled module: structured inputs and
outputs cross the boundary as JSON.
"""

import json as _json

try:
    from pyfzip._fzip import (  # type: ignore[attr-defined]
        classify_json,
        coset_reps,
        oracle_json,
        random_json,
        standard_json,
        strata_json,
        type_reps,
        validate_json,
        weyl_length,
    )
except ImportError:  # running from a build tree: locate the extension dir
    import importlib.util as _ilu
    import os as _os
    import sys as _sys

    _ext_dir = _os.environ.get("PYFZIP_EXT_DIR")
    if not _ext_dir:
        raise
    _candidates = [
        _os.path.join(_ext_dir, name)
        for name in _os.listdir(_ext_dir)
        if name.startswith("_fzip") and (name.endswith(".so") or name.endswith(".pyd"))
    ]
    if not _candidates:
        raise
    _spec = _ilu.spec_from_file_location("pyfzip._fzip", _candidates[0])
    _mod = _ilu.module_from_spec(_spec)
    _spec.loader.exec_module(_mod)
    _sys.modules["pyfzip._fzip"] = _mod
    classify_json = _mod.classify_json
    coset_reps = _mod.coset_reps
    oracle_json = _mod.oracle_json
    random_json = _mod.random_json
    standard_json = _mod.standard_json
    strata_json = _mod.strata_json
    type_reps = _mod.type_reps
    validate_json = _mod.validate_json
    weyl_length = _mod.weyl_length

__all__ = [
    "classify",
    "coset_reps",
    "oracle",
    "random_fzip",
    "standard_fzip",
    "strata",
    "type_reps",
    "validate",
    "weyl_length",
]


def standard_fzip(type_function, u, p=2):
    """Standard F-zip as a dict, for ``type_function = {i: multiplicity}``."""
    return _json.loads(standard_json({int(k): int(v) for k, v in type_function.items()}, list(u), p))


def classify(zip_dict, trace=False):
    """Classification data (u, length, codim, ordinariness) of an F-zip dict."""
    return _json.loads(classify_json(_json.dumps(zip_dict), trace))


def validate(zip_dict):
    return _json.loads(validate_json(_json.dumps(zip_dict)))


def random_fzip(type_function, p=2, k=1, seed=1):
    return _json.loads(random_json({int(i): int(v) for i, v in type_function.items()}, p, k, seed))


def oracle(type_function, p=2, k=1, max_size=20000):
    return _json.loads(oracle_json({int(i): int(v) for i, v in type_function.items()}, p, k, max_size))


def strata(family):
    """Ekedahl-Oort partition of ``[(label, zip_dict), ...]``."""
    payload = [{"label": label, "zip": z} for label, z in family]
    return _json.loads(strata_json(_json.dumps(payload)))
