"""Reading and writing singularity description files.

Schema::

    {"primes": [{"id": 1, "poly": "x"}, {"id": 2, "poly": "y^2 + x^3"}],
     "factors": [1, 1, 2]}

``primes`` lists the ideal classes (ids 1..t); ``factors`` gives f_1..f_n as
class ids.  ``poly`` is optional but must be given for all primes or none.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import CanmmaError, InvalidFactorData
from .model import FactorData
from .poly import parse_poly


def factor_data_from_dict(data: dict) -> FactorData:
    if not isinstance(data, dict):
        raise InvalidFactorData("top level must be a JSON object")
    try:
        primes = data["primes"]
        factors = data["factors"]
    except KeyError as exc:
        raise InvalidFactorData(f"missing key {exc.args[0]!r}") from None
    if not isinstance(primes, list) or not isinstance(factors, list):
        raise InvalidFactorData("'primes' and 'factors' must be arrays")
    ids = []
    for k, p in enumerate(primes):
        if not isinstance(p, dict) or not isinstance(p.get("id"), int):
            raise InvalidFactorData(f"primes[{k}]: needs an integer 'id'")
        ids.append(p["id"])
    t = len(primes)
    if sorted(ids) != list(range(1, t + 1)):
        raise InvalidFactorData(f"prime ids must be exactly 1..{t}, got {ids}")
    for k, c in enumerate(factors):
        if not isinstance(c, int) or not 1 <= c <= t:
            raise InvalidFactorData(f"factors[{k}]: {c!r} is not a prime id")
    by_id = {p["id"]: p for p in primes}
    have = [by_id[c].get("poly") is not None for c in range(1, t + 1)]
    reps = None
    if any(have):
        if not all(have):
            raise InvalidFactorData("'poly' must be given for every prime or for none")
        reps = []
        for c in range(1, t + 1):
            try:
                reps.append(parse_poly(by_id[c]["poly"], 2))
            except CanmmaError as exc:
                raise InvalidFactorData(f"prime {c}: {exc}") from None
    return FactorData.from_classes(factors, reps, t=t)


def factor_data_to_dict(fd: FactorData) -> dict:
    primes = []
    for c in range(1, fd.t + 1):
        entry = {"id": c}
        if fd.has_reps:
            entry["poly"] = str(fd.reps[c - 1])
        primes.append(entry)
    return {"primes": primes, "factors": list(fd.class_of)}


def load_singularity(path: Union[str, Path]) -> FactorData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidFactorData(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidFactorData(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return factor_data_from_dict(data)
    except InvalidFactorData as exc:
        raise InvalidFactorData(f"{path}: {exc}") from None
