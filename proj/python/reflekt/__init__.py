"""K-reflections of finite posets, finite spaces and a fixed catalog of
infinite examples. Posets and spaces go in and come out as plain dicts in the
same JSON shape the command line uses."""

import json

from . import _reflekt
from ._reflekt import ReflektError

BUILTINS = ("nat", "nat-top", "nat-ab", "q", "johnstone", "johnstone-top", "cofinite", "cofinite-top")


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def normalize_poset(poset, closed=False):
    return json.loads(_reflekt.normalize_poset(_dump(poset), closed))


def topology(poset, which="scott"):
    """Scott, Alexandroff or upper topology of a finite poset."""
    return json.loads(_reflekt.topology(_dump(poset), which))


def ideals(poset):
    """Id P ordered by inclusion."""
    return json.loads(_reflekt.ideals(_dump(poset)))


def check(x, prop="sober"):
    """`x` is a builtin tag, a space dict, or a poset dict (read with its
    Scott topology)."""
    if isinstance(x, str) and x in BUILTINS:
        return json.loads(_reflekt.check_builtin(x, prop))
    return json.loads(_reflekt.check_finite(_dump(x), prop))


def reflect(x, kind="sob", bound=6):
    if isinstance(x, str) and x in BUILTINS:
        return json.loads(_reflekt.reflect_builtin(x, kind, bound))
    return json.loads(_reflekt.reflect_finite(_dump(x), kind))


def sobrify(x):
    return reflect(x, "sob")


def complete(x, kind="d", variant="ks"):
    ds = variant == "ds"
    if isinstance(x, str) and x in BUILTINS:
        return json.loads(_reflekt.complete_builtin(x, kind, ds))
    return json.loads(_reflekt.complete_finite(_dump(x), kind, ds))


def wf_witness(tag, cap=8):
    return json.loads(_reflekt.wf_witness(tag, cap))


def johnstone_irc(tag="johnstone", bound=6):
    return json.loads(_reflekt.johnstone_irc(tag, bound))


def truncate(tag, n, closed=False):
    return json.loads(_reflekt.truncate(tag, n, closed))


def oracle(tag, level=12, probes=1000, seed=1):
    return json.loads(_reflekt.oracle(tag, level, probes, seed))


def laws(ids=(), **scale):
    return json.loads(_reflekt.laws(list(ids), scale))


def law_ids():
    return _reflekt.law_ids()


def run_cli(*args):
    """(exit code, stdout, stderr) of one command line."""
    return _reflekt.run_cli([str(a) for a in args])
