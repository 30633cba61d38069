import json

from ml_collections import config_dict


def split_hparams_string(hparams):
    """
    Splits 'a=1,b=[0.1,0.2],c=x' at the commas that are not inside brackets.
    """
    items = []
    depth = 0
    current = ''
    for t in hparams:
        if t == '[':
            depth += 1
        elif t == ']':
            depth -= 1
        if t == ',' and not depth:
            items.append(current)
            current = ''
        else:
            current += t
    if current:
        items.append(current)
    return [item.strip() for item in items if item.strip()]


def _cast_value(name, default, value):
    if isinstance(default, bool):
        if value.lower() in ('true', '1', 'yes'):
            return True
        if value.lower() in ('false', '0', 'no'):
            return False
        raise ValueError('Could not parse %s=%s as a boolean' % (name, value))
    if isinstance(default, (list, tuple)):
        value = value.strip()
        if value.startswith('['):
            value = value[1:-1]
        elements = [v.strip() for v in value.replace(';', ',').split(',') if v.strip()]
        element_default = default[0] if default else 0.0
        return [_cast_value(name, element_default, v) for v in elements]
    if isinstance(default, int):
        return int(value)
    if isinstance(default, float):
        return float(value)
    if default is None:
        return json.loads(value)
    return value


def parse_hparams(default_hparams_dict, hparams_dict=None, hparams=None):
    """
    Args:
        default_hparams_dict: the recognised names and their defaults.
        hparams_dict: a dict of `name=value` pairs, where `name` must be
            defined in `default_hparams_dict`.
        hparams: a string (or list of strings) of comma separated list of
            `name=value` pairs. These values override any values in
            hparams_dict (if any).

    Returns:
        A locked `ConfigDict`; assigning an unknown name raises.
    """
    parsed_hparams = config_dict.ConfigDict(default_hparams_dict)
    parsed_hparams.lock()
    for name, value in (hparams_dict or {}).items():
        if name not in parsed_hparams:
            raise ValueError('Unknown hparam %s' % name)
        parsed_hparams[name] = value
    if hparams:
        if not isinstance(hparams, (list, tuple)):
            hparams = [hparams]
        for hparam_string in hparams:
            for item in split_hparams_string(hparam_string):
                if '=' not in item:
                    raise ValueError('Malformed hparam %r, expected name=value' % item)
                name, value = item.split('=', 1)
                name = name.strip()
                if name not in parsed_hparams:
                    raise ValueError('Unknown hparam %s' % name)
                parsed_hparams[name] = _cast_value(name, default_hparams_dict[name], value)
    return parsed_hparams


def load_hparams_dict(fname):
    if not fname:
        return {}
    with open(fname) as f:
        return json.loads(f.read())
