import json
import math


def _round_floats(value, digits):
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return None
        return round(value, digits)
    if isinstance(value, dict):
        return {str(k): _round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(v, digits) for v in value]
    return value


def canonical_dumps(document, digits=6):
    """JSON estável: chaves ordenadas, floats arredondados, LF no final."""
    return json.dumps(_round_floats(document, digits), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
