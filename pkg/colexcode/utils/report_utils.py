import json
import os
import sys
import time

import numpy as np

import colexcode

OUTCOMES = ('pass', 'fail', 'agrees', 'disagrees', 'skipped')
FAILING_OUTCOMES = ('fail',)


def _to_builtin(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if hasattr(value, 'value'):
        return value.value
    raise TypeError('Object of type %s is not JSON serializable' % type(value).__name__)


def dumps(obj, indent=4):
    return json.dumps(obj, sort_keys=True, indent=indent, default=_to_builtin)


class RunReport(object):
    def __init__(self, command, inputs):
        self.command = command
        self.inputs = dict(inputs)
        self.checks = []
        self.version = colexcode.__version__
        self._start_time = time.perf_counter()

    def add_check(self, name, outcome, details=None):
        if outcome not in OUTCOMES:
            raise ValueError('Invalid outcome %s for check %s' % (outcome, name))
        if any(check['name'] == name for check in self.checks):
            raise ValueError('check %s reported twice' % name)
        self.checks.append(dict(name=name, outcome=outcome, details=details or {}))

    def outcome(self, name):
        return next(check['outcome'] for check in self.checks if check['name'] == name)

    @property
    def passed(self):
        return all(check['outcome'] not in FAILING_OUTCOMES for check in self.checks)

    def to_dict(self):
        return dict(command=self.command, inputs=self.inputs, checks=list(self.checks),
                    passed=self.passed, version=self.version,
                    elapsed=time.perf_counter() - self._start_time)


def write_json(obj, path=None):
    text = dumps(obj)
    if path:
        head, _ = os.path.split(path)
        if head and not os.path.exists(head):
            os.makedirs(head)
        with open(path, 'w') as f:
            f.write(text + '\n')
    else:
        sys.stdout.write(text + '\n')


def write_json_lines(objs, path=None):
    lines = [dumps(obj, indent=None) for obj in objs]
    if path:
        head, _ = os.path.split(path)
        if head and not os.path.exists(head):
            os.makedirs(head)
        with open(path, 'w') as f:
            f.writelines(line + '\n' for line in lines)
    else:
        sys.stdout.writelines(line + '\n' for line in lines)


def print_options(args, file=None):
    file = file or sys.stderr
    print('----------------------------------- Options ------------------------------------', file=file)
    for k, v in args._get_kwargs():
        print(k, "=", v, file=file)
    print('------------------------------------- End --------------------------------------', file=file)


def save_options(args, path, hparams=None):
    """Writes the parsed arguments, and the effective hparams, to `<out>_options.json`."""
    options = dict(vars(args))
    if hparams is not None:
        options['hparams'] = hparams
    options_fname = os.path.splitext(path)[0] + '_options.json'
    write_json(options, options_fname)
    return options_fname
