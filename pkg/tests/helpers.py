"""Shared random-word helpers for the test suite."""

from h2orbits.sl2 import Generator, invert_word, word_P, word_R

T, Ti, S, Si = Generator.T, Generator.Tinv, Generator.S, Generator.Sinv

RELATORS = [
    (T, Ti),
    (S, Si),
    word_R() * 4,
    word_P() * 6,
    word_R() * 2 + invert_word(word_P() * 3),
    (T, Si, T) + invert_word((Si, T, Si)),
]


def random_word(rng, length):
    return tuple(rng.choice(list(Generator)) for _ in range(length))


def equal_matrix_pair(rng):
    w1 = random_word(rng, rng.randint(0, 10))
    w2 = list(w1)
    for _ in range(rng.randint(1, 3)):
        u = random_word(rng, rng.randint(0, 3))
        rel = rng.choice(RELATORS)
        if rng.random() < 0.5:
            rel = invert_word(rel)
        pos = rng.randint(0, len(w2))
        w2[pos:pos] = list(u) + list(rel) + list(invert_word(u))
    return w1, tuple(w2)
