#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

import io
import csv
import json

from ..config.fa_code import DomainError


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + '\n'


def emit(text, out=None):
    """Write to a path, or return the text for stdout when out is None"""
    if out is None:
        return text
    with open(out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    return None


def read_config(path, allowed):
    """
    Load a JSON config object; dashes in keys read as underscores.

    :param allowed: accepted key names, anything else raises DomainError
    """
    with open(path, encoding='utf-8') as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise DomainError('config file {} must hold a JSON object'.format(path))
    data = {k.replace('-', '_'): v for k, v in data.items()}
    unknown = set(data) - set(allowed)
    if unknown:
        raise DomainError('unknown config keys in {}: {}'.format(path, ', '.join(sorted(unknown))))
    return data
