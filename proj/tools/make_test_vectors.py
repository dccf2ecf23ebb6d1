#!/usr/bin/env python3
# Copyright 2026 The decompound Authors.
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

"""Writes tests/data/toy_model.json and tests/data/test_vectors.jsonl.

Expected values come from brute force written here, independent of the C++
code: every boundary set for alignment, every segmentation for encoding.
"""

import itertools
import json
import math
import random
import sys
from pathlib import Path

MARKER = "▁"
ALPHABET = "abcdimstuw"


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def align(word, constituents):
    n, k = len(word), len(constituents)
    best = None
    for cut in itertools.combinations(range(1, n), k - 1):
        bounds = [0, *cut, n]
        costs = [levenshtein(word[bounds[i]:bounds[i + 1]], c)
                 for i, c in enumerate(constituents)]
        # Lower total, then larger cost vector, then smaller boundaries.
        key = (sum(costs), [-c for c in costs], bounds)
        if best is None or key < best[0]:
            best = (key, bounds, costs)
    _, bounds, costs = best
    segments = [word[bounds[i]:bounds[i + 1]] for i in range(k)]
    return bounds, segments, sum(costs)


def toy_model(rng):
    multi = ["▁swim", "▁swi", "msuit", "suit", "▁sum", "mit", "dat", "us",
             "▁a", "wit", "tusi", "▁cat"]
    pieces = [MARKER, *ALPHABET, *multi]
    weights = [rng.uniform(0.2, 1.0) * (8 if len(p) > 1 else 1) for p in pieces]
    total = sum(weights)
    return {p: math.log(w / total) for p, w in zip(pieces, weights)}


def best_segmentation(text, vocab, unk):
    best = None
    for mask in range(1 << (len(text) - 1)):
        pieces, start, score, ok = [], 0, 0.0, True
        for p in range(1, len(text) + 1):
            if p == len(text) or mask >> (p - 1) & 1:
                piece = text[start:p]
                if piece in vocab:
                    score += vocab[piece]
                    pieces.append((piece, False))
                elif len(piece) == 1:
                    score += unk
                    pieces.append((piece, True))
                else:
                    ok = False
                    break
                start = p
        if ok and (best is None or score > best[0] + 1e-12):
            best = (score, pieces)
    return best[1]


def encode_word(word, vocab, unk):
    return best_segmentation(MARKER + word, vocab, unk)


def token_boundaries(pieces):
    out, offset = [0], -1
    for piece, _ in pieces:
        offset += len(piece)
        if offset > out[-1]:
            out.append(offset)
    return out


def random_word(rng, lo, hi, alphabet):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    rng = random.Random(1234)
    vocab = toy_model(rng)
    unk = min(vocab.values()) - 10
    ordered = sorted(vocab.items(), key=lambda kv: (-kv[1], kv[0]))
    with open(root / "toy_model.json", "w", encoding="utf-8", newline="\n") as f:
        f.write('{"version":1,"type":"unigram","marker":"%s","unk_piece":"<unk>",'
                '"training_pretokenization":"whitespace","pieces":[' % MARKER)
        f.write(",".join("\n[%s,%.17g]" % (json.dumps(p, ensure_ascii=False), lp)
                         for p, lp in ordered))
        f.write("\n]}\n")

    cases = []
    for _ in range(400):
        word = random_word(rng, 1, 12, "abcd")
        k = rng.randint(1, min(3, len(word)))
        cons = [random_word(rng, 1, 6, "abcd") for _ in range(k)]
        bounds, segments, cost = align(word, cons)
        cases.append({"kind": "align", "word": word, "lang": "en", "constituents": cons,
                      "boundaries": bounds, "segments": segments, "cost": cost})
    for _ in range(300):
        words = [random_word(rng, 1, 6, ALPHABET + "xy") for _ in range(rng.randint(1, 3))]
        pieces = []
        for w in words:
            pieces += ["<unk>" if u else p for p, u in encode_word(w, vocab, unk)]
        cases.append({"kind": "encode", "text": " ".join(words), "pieces": pieces})
    fragments = ["swim", "suit", "msuit", "mit", "dat", "us", "wit", "tusi", "cat",
                 "sum", "a", "i", "d"]
    for _ in range(300):
        word = "".join(rng.choice(fragments) for _ in range(rng.randint(1, 3)))
        if len(word) < 2:
            word += rng.choice(ALPHABET)
        k = rng.randint(2, min(3, len(word)))
        cut = sorted(rng.sample(range(1, len(word)), k - 1))
        gold = [0, *cut, len(word)]
        tokens = set(token_boundaries(encode_word(word, vocab, unk)))
        cases.append({"kind": "is_hard", "word": word, "lang": "en",
                      "constituents": [word[gold[i]:gold[i + 1]] for i in range(k)],
                      "boundaries": gold, "hard": not set(gold) <= tokens})
    with open(root / "test_vectors.jsonl", "w", encoding="utf-8", newline="\n") as f:
        for c in cases:
            f.write(json.dumps(c, ensure_ascii=False, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
