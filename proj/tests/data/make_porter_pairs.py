#!/usr/bin/env python3
"""Generates porter_pairs.tsv, the frozen reference list for the stemmer tests.

Independent transcription of the original Porter (1980) algorithm, used only
to produce the expected outputs. Before writing anything the script
self-checks each rewrite step against the word/stem examples published with
the algorithm definition, plus the two published full traces, so a
transcription error here fails loudly instead of freezing bad expectations.

Usage: python3 make_porter_pairs.py <vocabulary.txt> > porter_pairs.tsv
       (one lowercase word per line; non-alphabetic lines are skipped)
"""

import sys

VOWELS = "aeiou"


def is_consonant(word, i):
    c = word[i]
    if c in VOWELS:
        return False
    if c == "y":
        return True if i == 0 else not is_consonant(word, i - 1)
    return True


def measure(stem):
    # m in the [C](VC)^m[V] decomposition.
    m = 0
    prev_consonant = True
    for i in range(len(stem)):
        cons = is_consonant(stem, i)
        if cons and not prev_consonant:
            m += 1
        prev_consonant = cons
    return m


def has_vowel(stem):
    return any(not is_consonant(stem, i) for i in range(len(stem)))


def ends_double_consonant(word):
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and is_consonant(word, len(word) - 1)
    )


def ends_cvc(word):
    if len(word) < 3:
        return False
    if (
        is_consonant(word, len(word) - 3)
        and not is_consonant(word, len(word) - 2)
        and is_consonant(word, len(word) - 1)
    ):
        return word[-1] not in "wxy"
    return False


def apply_rules(word, rules):
    """rules: list of (suffix, replacement, condition-on-stem or None).

    Longest matching suffix wins; its condition gates the replacement and no
    other rule is tried afterwards.
    """
    for suffix, repl, cond in sorted(rules, key=lambda r: -len(r[0])):
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if cond is None or cond(stem):
                return stem + repl
            return word
    return word


def step1a(word):
    return apply_rules(
        word,
        [("sses", "ss", None), ("ies", "i", None), ("ss", "ss", None), ("s", "", None)],
    )


def step1b(word):
    if word.endswith("eed"):
        stem = word[:-3]
        return stem + "ee" if measure(stem) > 0 else word
    fired = False
    if word.endswith("ed") and has_vowel(word[:-2]):
        word = word[:-2]
        fired = True
    elif word.endswith("ing") and has_vowel(word[:-3]):
        word = word[:-3]
        fired = True
    if not fired:
        return word
    if word.endswith(("at", "bl", "iz")):
        return word + "e"
    if ends_double_consonant(word) and word[-1] not in "lsz":
        return word[:-1]
    if measure(word) == 1 and ends_cvc(word):
        return word + "e"
    return word


def step1c(word):
    if word.endswith("y") and has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def positive_m(stem):
    return measure(stem) > 0


def step2(word):
    return apply_rules(
        word,
        [
            ("ational", "ate", positive_m),
            ("tional", "tion", positive_m),
            ("enci", "ence", positive_m),
            ("anci", "ance", positive_m),
            ("izer", "ize", positive_m),
            ("abli", "able", positive_m),
            ("alli", "al", positive_m),
            ("entli", "ent", positive_m),
            ("eli", "e", positive_m),
            ("ousli", "ous", positive_m),
            ("ization", "ize", positive_m),
            ("ation", "ate", positive_m),
            ("ator", "ate", positive_m),
            ("alism", "al", positive_m),
            ("iveness", "ive", positive_m),
            ("fulness", "ful", positive_m),
            ("ousness", "ous", positive_m),
            ("aliti", "al", positive_m),
            ("iviti", "ive", positive_m),
            ("biliti", "ble", positive_m),
        ],
    )


def step3(word):
    return apply_rules(
        word,
        [
            ("icate", "ic", positive_m),
            ("ative", "", positive_m),
            ("alize", "al", positive_m),
            ("iciti", "ic", positive_m),
            ("ical", "ic", positive_m),
            ("ful", "", positive_m),
            ("ness", "", positive_m),
        ],
    )


def step4(word):
    def m_gt1(stem):
        return measure(stem) > 1

    def m_gt1_st(stem):
        return measure(stem) > 1 and stem.endswith(("s", "t"))

    return apply_rules(
        word,
        [
            ("al", "", m_gt1),
            ("ance", "", m_gt1),
            ("ence", "", m_gt1),
            ("er", "", m_gt1),
            ("ic", "", m_gt1),
            ("able", "", m_gt1),
            ("ible", "", m_gt1),
            ("ant", "", m_gt1),
            ("ement", "", m_gt1),
            ("ment", "", m_gt1),
            ("ent", "", m_gt1),
            ("ion", "", m_gt1_st),
            ("ou", "", m_gt1),
            ("ism", "", m_gt1),
            ("ate", "", m_gt1),
            ("iti", "", m_gt1),
            ("ous", "", m_gt1),
            ("ive", "", m_gt1),
            ("ize", "", m_gt1),
        ],
    )


def step5a(word):
    if word.endswith("e"):
        stem = word[:-1]
        m = measure(stem)
        if m > 1:
            return stem
        if m == 1 and not ends_cvc(stem):
            return stem
    return word


def step5b(word):
    if measure(word) > 1 and ends_double_consonant(word) and word.endswith("l"):
        return word[:-1]
    return word


def stem(word):
    if not word or not word.isalpha() or not word.islower() or not word.isascii():
        return word
    for step in (step1a, step1b, step1c, step2, step3, step4, step5a, step5b):
        word = step(word)
    return word


# Per-rule examples published with the algorithm definition. Each is the
# input/output of one rewrite step, not of the whole pipeline.
RULE_CHECKS = [
    (step1a, "caresses", "caress"), (step1a, "ponies", "poni"),
    (step1a, "ties", "ti"), (step1a, "caress", "caress"), (step1a, "cats", "cat"),
    (step1b, "feed", "feed"), (step1b, "agreed", "agree"),
    (step1b, "plastered", "plaster"), (step1b, "bled", "bled"),
    (step1b, "motoring", "motor"), (step1b, "sing", "sing"),
    (step1b, "conflated", "conflate"), (step1b, "troubled", "trouble"),
    (step1b, "sized", "size"), (step1b, "hopping", "hop"),
    (step1b, "tanned", "tan"), (step1b, "falling", "fall"),
    (step1b, "hissing", "hiss"), (step1b, "fizzed", "fizz"),
    (step1b, "failing", "fail"), (step1b, "filing", "file"),
    (step1c, "happy", "happi"), (step1c, "sky", "sky"),
    (step2, "relational", "relate"), (step2, "conditional", "condition"),
    (step2, "rational", "rational"), (step2, "valenci", "valence"),
    (step2, "hesitanci", "hesitance"), (step2, "digitizer", "digitize"),
    (step2, "conformabli", "conformable"), (step2, "radicalli", "radical"),
    (step2, "differentli", "different"), (step2, "vileli", "vile"),
    (step2, "analogousli", "analogous"), (step2, "vietnamization", "vietnamize"),
    (step2, "predication", "predicate"), (step2, "operator", "operate"),
    (step2, "feudalism", "feudal"), (step2, "decisiveness", "decisive"),
    (step2, "hopefulness", "hopeful"), (step2, "callousness", "callous"),
    (step2, "formaliti", "formal"), (step2, "sensitiviti", "sensitive"),
    (step2, "sensibiliti", "sensible"),
    (step3, "triplicate", "triplic"), (step3, "formative", "form"),
    (step3, "formalize", "formal"), (step3, "electriciti", "electric"),
    (step3, "electrical", "electric"), (step3, "hopeful", "hope"),
    (step3, "goodness", "good"),
    (step4, "revival", "reviv"), (step4, "allowance", "allow"),
    (step4, "inference", "infer"), (step4, "airliner", "airlin"),
    (step4, "gyroscopic", "gyroscop"), (step4, "adjustable", "adjust"),
    (step4, "defensible", "defens"), (step4, "irritant", "irrit"),
    (step4, "replacement", "replac"), (step4, "adjustment", "adjust"),
    (step4, "dependent", "depend"), (step4, "adoption", "adopt"),
    (step4, "homologou", "homolog"), (step4, "communism", "commun"),
    (step4, "activate", "activ"), (step4, "angulariti", "angular"),
    (step4, "homologous", "homolog"), (step4, "effective", "effect"),
    (step4, "bowdlerize", "bowdler"),
    (step5a, "probate", "probat"), (step5a, "rate", "rate"),
    (step5a, "cease", "ceas"),
    (step5b, "controll", "control"), (step5b, "roll", "roll"),
]

# Published whole-pipeline traces.
FULL_CHECKS = {
    "generalizations": "gener",
    "oscillators": "oscil",
}


def self_check():
    bad = []
    for fn, w, expected in RULE_CHECKS:
        got = fn(w)
        if got != expected:
            bad.append(f"{fn.__name__}({w}): expected {expected}, got {got}")
    for w, expected in FULL_CHECKS.items():
        got = stem(w)
        if got != expected:
            bad.append(f"stem({w}): expected {expected}, got {got}")
    if bad:
        sys.stderr.write("self-check FAILED:\n" + "\n".join(bad) + "\n")
        sys.exit(1)


def main():
    self_check()
    if len(sys.argv) != 2:
        sys.stderr.write(__doc__)
        sys.exit(2)
    seen = set()
    words = []
    with open(sys.argv[1], encoding="utf-8") as fh:
        for line in fh:
            w = line.strip()
            if w and w.isascii() and w.isalpha() and w.islower() and w not in seen:
                seen.add(w)
                words.append(w)
    for _, w, _ in RULE_CHECKS:
        if w not in seen:
            seen.add(w)
            words.append(w)
    for w in FULL_CHECKS:
        if w not in seen:
            seen.add(w)
            words.append(w)
    for w in sorted(words):
        sys.stdout.write(f"{w}\t{stem(w)}\n")


if __name__ == "__main__":
    main()
