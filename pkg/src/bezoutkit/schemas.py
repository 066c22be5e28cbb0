"""JSON Schemas for every CLI payload (validated before any computation)."""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

POLY_OBJECT = {
    "type": "object",
    "required": ["n", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "re", "im"],
                "properties": {
                    "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "re": RATIONAL,
                    "im": RATIONAL,
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

# input may use the human-readable syntax, e.g. "(1-2i) z1^2 z2 + 3"
POLY = {"oneOf": [{"type": "string", "minLength": 1}, POLY_OBJECT]}

TUPLE = {"type": "array", "minItems": 1, "items": POLY}
TUPLE_STRICT = {"type": "array", "minItems": 1, "items": POLY_OBJECT}

MATRIX = {
    "type": "object",
    "required": ["N", "upper"],
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "upper": {
            "type": "object",
            "patternProperties": {r"^\(\s*\d+\s*,\s*\d+\s*\)$": POLY},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

VAR_COUNT = {"type": "integer", "minimum": 1}

CERTIFY = {
    "type": "object",
    "required": ["f"],
    "properties": {"n": VAR_COUNT, "f": TUPLE},
}

SOLVE = CERTIFY

SHIFT = {
    "type": "object",
    "required": ["a", "x", "H"],
    "properties": {"n": VAR_COUNT, "a": TUPLE, "x": TUPLE, "H": MATRIX},
}

DIFF = {
    "type": "object",
    "required": ["x", "y"],
    "properties": {"n": VAR_COUNT, "x": TUPLE, "y": TUPLE, "a": TUPLE},
}

PERTURBATIONS = {
    "oneOf": [
        {"const": "zero"},
        {"type": "array", "items": MATRIX},
        {
            "type": "object",
            "required": ["power"],
            "properties": {
                "power": MATRIX["properties"]["upper"],
                "factorial": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    ]
}

GLUE = {
    "type": "object",
    "required": ["f", "stages"],
    "properties": {
        "n": VAR_COUNT,
        "f": TUPLE,
        "base": {"oneOf": [{"const": "auto"}, TUPLE]},
        "perturbations": PERTURBATIONS,
        "radii": {"type": "array", "items": RATIONAL, "minItems": 1},
        "stages": {"type": "integer", "minimum": 0},
    },
}

STAGE = {
    "type": "object",
    "required": ["k", "a", "H_upper", "P_upper", "bound"],
    "properties": {
        "k": {"type": "integer", "minimum": 0},
        "a": TUPLE_STRICT,
        "H_upper": MATRIX,
        "P_upper": MATRIX,
        "bound": RATIONAL,
    },
}

TRACE = {
    "type": "object",
    "required": ["f", "schedule", "stages", "a_final", "partial_sums"],
    "properties": {
        "f": TUPLE_STRICT,
        "modulus_bound": {"enum": ["sum", "sqrt"]},
        "schedule": {"type": "array", "items": RATIONAL},
        "stages": {"type": "array", "minItems": 1, "items": STAGE},
        "a_final": TUPLE_STRICT,
        "partial_sums": {"type": "array", "items": TUPLE_STRICT},
    },
}

VERIFY = TRACE

BY_COMMAND = {
    "certify": CERTIFY,
    "solve": SOLVE,
    "shift": SHIFT,
    "diff": DIFF,
    "glue": GLUE,
    "verify": VERIFY,
}
