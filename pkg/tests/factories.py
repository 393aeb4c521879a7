# ABOUTME: Builders for small hand-made and randomized corpora shared across test modules.
# ABOUTME: Random builders take a seeded numpy generator so every test is reproducible.

import numpy as np

from tempret.corpus.dates import CivilDate
from tempret.corpus.passages import Corpus, Passage

VOCAB = [f"w{i}" for i in range(60)]


def three_version_corpus(year: int = 2018) -> Corpus:
    """Three passages identical except for their year, in text and date."""
    return Corpus(
        [
            Passage(
                id=f"open-{y}",
                text=f"The {y} Harbour Open final was won by Ada Lindahl on {y}-06-15.",
                date=CivilDate(y, 6, 15),
            )
            for y in (year, year + 1, year + 2)
        ]
    )


def random_corpus(
    rng: np.random.Generator, size: int, years: tuple[int, int] = (2000, 2010)
) -> Corpus:
    """Passages with unique random texts and random dates."""
    passages = []
    for i in range(size):
        words = rng.choice(VOCAB, size=int(rng.integers(3, 9)))
        year = int(rng.integers(years[0], years[1] + 1))
        date = CivilDate(year, int(rng.integers(1, 13)), int(rng.integers(1, 29)))
        passages.append(Passage(id=f"p{i:04d}", text=f"{' '.join(words)} u{i}", date=date))
    return Corpus(passages)


def random_question(rng: np.random.Generator) -> str:
    return " ".join(rng.choice(VOCAB, size=int(rng.integers(2, 6))))
