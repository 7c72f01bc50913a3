"""Regenerate the English 100-document posting spec (english_vsm.postings).

The "mouse" rows are copied from the published index capture; every other
term gets a seeded random posting list with the published document
frequencies. Output is deterministic, so rerunning reproduces the shipped file.
"""

import random
import sys
from pathlib import Path

from concept_ir.index import IndexPair, SemanticPosting, save_index

N_DOCS = 100
SEED = 5303

MOUSE_ALL = (
    "(3,10)(4,4)(6,1)(7,2)(8,18)(12,2)(13,3)(14,2)(15,20)(16,13)(17,19)(18,18)(24,18)"
    "(25,5)(26,2)(27,17)(28,12)(29,13)(30,17)(31,13)(32,1)(33,18)(34,14)(35,8)(36,17)"
    "(37,17)(38,17)(39,15)(40,9)(41,15)(42,7)(43,10)(44,13)(45,14)(46,10)(47,15)(48,6)"
    "(49,12)(50,14)(51,12)(52,3)(53,12)(54,15)(55,4)(56,16)(57,16)(58,3)(59,11)(60,15)"
    "(61,11)(62,15)(63,5)(64,12)(65,4)(74,8)(75,16)(76,3)(77,9)(78,14)(79,5)(80,1)"
    "(81,4)(82,18)(83,20)(87,4)(88,7)(90,9)(100,17)"
)
MOUSE_ANIMAL = (
    "(7,2)(8,18)(12,2)(24,18)(27,17)(28,12)(36,17)(37,17)(38,17)(39,15)(40,9)(41,15)"
    "(50,14)(51,12)(61,11)(62,15)(63,5)(74,8)(75,16)(82,18)(83,20)(87,4)(90,9)(100,17)"
)
MOUSE_ELECTRONIC = (
    "(3,10)(4,4)(6,1)(25,5)(26,2)(42,7)(43,10)(44,13)(45,14)(46,10)(47,15)(48,6)"
    "(49,12)(76,3)(77,9)(78,14)(79,5)(80,1)(81,4)"
)


def parse_pairs(text):
    return [tuple(int(x) for x in item.split(",")) for item in text.strip("()").split(")(")]


def draw(rng, pool, k, fixed=()):
    """k docs from pool, always including ``fixed``."""
    rest = [d for d in pool if d not in fixed]
    return sorted(set(fixed) | set(rng.sample(rest, k - len(fixed))))


def tfs(rng, docs, fixed=None, hi=8):
    fixed = fixed or {}
    return [(d, fixed.get(d, rng.randint(1, hi))) for d in docs]


def build(rng):
    docs = list(range(1, N_DOCS + 1))
    not_doc1 = docs[1:]
    rows = {}

    mouse_all = dict(parse_pairs(MOUSE_ALL))
    animal = parse_pairs(MOUSE_ANIMAL)
    electronic = parse_pairs(MOUSE_ELECTRONIC)
    taken = {d for d, _ in animal + electronic}
    rows[("mouse", "animal")] = animal
    rows[("mouse", "electronic")] = electronic
    rows[("mouse", "fictional")] = sorted((d, tf) for d, tf in mouse_all.items() if d not in taken)

    # apple: 92 docs split 41 geography / 24 company / 27 fruit; doc 1 is geography
    apple = draw(rng, docs, 92, fixed=(1,))
    rest = [d for d in apple if d != 1]
    rng.shuffle(rest)
    geo = sorted([1] + rest[:40])
    company = sorted(rest[40:64])
    fruit = sorted(rest[64:])
    rows[("apple", "geography")] = tfs(rng, geo, {1: 2})
    rows[("apple", "company")] = tfs(rng, company)
    rows[("apple", "fruit")] = tfs(rng, fruit)

    # metropolitan: 93 docs, 35 geography (doc 1 with tf 9), the rest music
    metro = draw(rng, docs, 93, fixed=(1,))
    rest = [d for d in metro if d != 1]
    rng.shuffle(rest)
    rows[("metropolitan", "geography")] = tfs(rng, sorted([1] + rest[:34]), {1: 9})
    rows[("metropolitan", "music")] = tfs(rng, sorted(rest[34:]))

    rows[("corn", "agriculture")] = tfs(rng, draw(rng, docs, 69, fixed=(1,)), {1: 4})

    date = draw(rng, not_doc1, 80)
    rng.shuffle(date)
    rows[("date", "fruit")] = tfs(rng, sorted(date[:45]))
    rows[("date", "time")] = tfs(rng, sorted(date[45:]))

    rows[("eat", "food")] = tfs(rng, draw(rng, not_doc1, 91))
    rows[("computer", "computer")] = tfs(rng, draw(rng, not_doc1, 57))

    keyboard = draw(rng, not_doc1, 52)
    rng.shuffle(keyboard)
    rows[("keyboard", "computer")] = tfs(rng, sorted(keyboard[:40]))
    rows[("keyboard", "music")] = tfs(rng, sorted(keyboard[40:]))

    monitor = draw(rng, docs, 86, fixed=(1,))
    rest = [d for d in monitor if d != 1]
    rng.shuffle(rest)
    rows[("monitor", "computer")] = tfs(rng, sorted([1] + rest[:59]), {1: 13})
    rows[("monitor", "animal")] = tfs(rng, sorted(rest[59:]))

    rows[("system", "computer")] = tfs(rng, draw(rng, not_doc1, 75))
    rows[("dog", "animal")] = tfs(rng, draw(rng, not_doc1, 30))
    return rows


def main(out):
    rows = build(random.Random(SEED))
    semantic = {key: SemanticPosting(key[0], tuple(entries), key[1]) for key, entries in rows.items()}
    save_index(IndexPair.from_semantic(semantic, N_DOCS), out)


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "src/concept_ir/data/english_vsm.postings"
    main(sys.argv[1] if len(sys.argv) > 1 else default)
