"""JSON encodings for the library's values.

Partitions, compositions, and words encode as nested arrays of ints.
Elements encode as ``{"terms": [{"coeff": "<signed decimal string>",
"partition": [[...], ...]}, ...]}`` with terms sorted by the canonical
partition string; coefficients travel as strings so arbitrary precision
survives any JSON reader bit-exactly.  Tensor combinations use the same
shape with ``"left"``/``"right"`` factors.
"""

from __future__ import annotations

from .hopf import NCSymElement, TensorElement
from .setparts import SetComposition, SetPartition
from .words import Word

__all__ = [
    "partition_to_obj",
    "partition_from_obj",
    "composition_to_obj",
    "composition_from_obj",
    "word_to_obj",
    "word_from_obj",
    "element_to_obj",
    "element_from_obj",
    "tensor_to_obj",
    "tensor_from_obj",
]


def partition_to_obj(part):
    return [list(block) for block in part.blocks]


def partition_from_obj(obj):
    return SetPartition(obj)


def composition_to_obj(comp):
    return [list(p) for p in comp.parts]


def composition_from_obj(obj):
    return SetComposition(obj)


def word_to_obj(word):
    return [list(letter) for letter in word.letters]


def word_from_obj(obj):
    return Word(obj)


def _coeff_from(text):
    if not isinstance(text, str):
        raise ValueError(f"coefficient must be a decimal string, got {text!r}")
    return int(text, 10)


def element_to_obj(x):
    terms = []
    for part, coeff in sorted(x.items(), key=lambda pc: pc[0].sort_key()):
        terms.append({"coeff": str(coeff), "partition": partition_to_obj(part)})
    return {"terms": terms}


def element_from_obj(obj):
    return NCSymElement(
        (partition_from_obj(term["partition"]), _coeff_from(term["coeff"]))
        for term in obj["terms"]
    )


def tensor_to_obj(t):
    terms = []
    for (left, right), coeff in t.items():
        terms.append(
            {
                "coeff": str(coeff),
                "left": partition_to_obj(left),
                "right": partition_to_obj(right),
            }
        )
    return {"terms": terms}


def tensor_from_obj(obj):
    return TensorElement(
        (
            (partition_from_obj(term["left"]), partition_from_obj(term["right"])),
            _coeff_from(term["coeff"]),
        )
        for term in obj["terms"]
    )
