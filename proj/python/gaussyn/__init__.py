# Copyright 2026 The gaussyn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact synthesis and relation checking for Gaussian dyadic unitaries."""

import json

from ._core import (
    GaussynError,
    equivalent,
    lde,
    main_lemma,
    normal_form,
    normalize_word,
    random_word,
    synthesize,
    verify_relations,
)
from ._core import eval_word as _eval_word


def eval_word(word: str, n: int) -> dict:
    """Matrix of `word` as a document {"n": n, "entries": [[[a, b, k], ...], ...]}."""
    return json.loads(_eval_word(word, n))


def synthesize_matrix(doc: dict) -> str:
    """Normal word for a matrix document given as a Python dict."""
    return synthesize(json.dumps(doc))


__all__ = [
    "GaussynError",
    "equivalent",
    "eval_word",
    "lde",
    "main_lemma",
    "normal_form",
    "normalize_word",
    "random_word",
    "synthesize",
    "synthesize_matrix",
    "verify_relations",
]
