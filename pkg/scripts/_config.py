"""Turn a dataclass into command-line flags, one ``--field-name`` per field."""

import argparse
import dataclasses


def parse_config(cls, argv=None, description=None):
    parser = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in dataclasses.fields(cls):
        default = f.default
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, bool):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=default)
        else:
            parser.add_argument(flag, type=type(default), default=default,
                                help=f"default: {default}")
    return cls(**vars(parser.parse_args(argv)))
