"""Turn a dataclass into an argparse CLI (one ``--flag`` per field)."""

from __future__ import annotations

import argparse
import dataclasses
import typing


def parse_config(cls, argv=None):
    hints = typing.get_type_hints(cls)
    parser = argparse.ArgumentParser(description=cls.__doc__)
    for f in dataclasses.fields(cls):
        kind = hints[f.name]
        flag = "--" + f.name.replace("_", "-")
        if kind is bool:
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        elif typing.get_origin(kind) is tuple:
            parser.add_argument(flag, nargs="+", default=list(f.default))
        else:
            parser.add_argument(flag, type=kind, default=f.default)
    ns = parser.parse_args(argv)
    values = {}
    for f in dataclasses.fields(cls):
        v = getattr(ns, f.name)
        values[f.name] = tuple(v) if isinstance(v, list) else v
    return cls(**values)
