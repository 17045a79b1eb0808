#!/usr/bin/env python3
"""Regenerates fixture.conll: lowercase movie queries plus cased newswire.

Entities deliberately contain function words that also occur outside them
("the", "of"), so omission noise can create ambiguous alignments.
"""
import random

rng = random.Random(20240611)

TITLES = ["the lorax", "the fog", "the lord of the rings", "gone with the wind",
          "the king of comedy", "amélie", "la dolce vita", "up", "heat",
          "the man who knew too much", "a river runs through it", "brazil",
          "the city of lost children", "die hard", "the sound of music"]
PEOPLE = ["steven spielberg", "charlotte brontë", "pedro almodóvar", "tom hanks",
          "meryl streep", "the coen brothers", "guillermo del toro", "björk"]
GENRES = ["comedy", "horror", "science fiction", "drama", "film noir"]
YEARS = ["1985", "the 1990s", "last year", "2004"]

MOVIE = [
    "who directed the film {title}",
    "who directed {title}",
    "what was {title} rated ?",
    "show me a {genre} movie from {year}",
    "is there a {genre} film with {person}",
    "did {person} star in {title}",
    "find the trailer of {title}",
    "list the {genre} films of {person}",
    "what year did the {genre} movie {title} come out",
    "play the soundtrack of {title} by {person}",
]

ORGS = ["Bank of England", "University of São Paulo", "The New York Times",
        "Ministry of the Interior", "Siemens", "Médecins Sans Frontières",
        "European Central Bank", "Department of the Treasury"]
PLACES = ["New York", "Zürich", "São Paulo", "the Isle of Man", "Kraków",
          "the United States", "Côte d'Ivoire", "Reykjavík"]
NAMES = ["Angela Merkel", "José Saramago", "Christine Lagarde",
         "Jacinda Ardern", "Lech Wałęsa", "the Duke of Edinburgh"]

NEWS = [
    "{org} said on Monday that {place} would follow .",
    "{name} met officials of the {org} in {place} .",
    "The head of the {org} ( {name} ) spoke in {place} .",
    "Shares of {org} fell after {name} warned about the economy of {place} .",
    "In {place} , {name} of the {org} declined to comment .",
    "{name} ( {org} ) arrived in {place} on the first day of the summit .",
    "A spokesman for the {org} told reporters in {place} that the talks ended .",
]


def tokens_of(text, label):
    words = text.split()
    return [(w, ("B-" if i == 0 else "I-") + label) for i, w in enumerate(words)]


def render(template, fillers):
    out = []
    for piece in template.split():
        if piece.startswith("{") and piece.endswith("}"):
            label, text = fillers[piece[1:-1]]
            out.extend(tokens_of(text, label))
        else:
            out.append((piece, "O"))
    return out


def movie_sentence():
    t = rng.choice(MOVIE)
    return render(t, {
        "title": ("title", rng.choice(TITLES)),
        "person": ("actor", rng.choice(PEOPLE)),
        "genre": ("genre", rng.choice(GENRES)),
        "year": ("year", rng.choice(YEARS)),
    })


def news_sentence():
    t = rng.choice(NEWS)
    return render(t, {
        "org": ("ORG", rng.choice(ORGS)),
        "place": ("LOC", rng.choice(PLACES)),
        "name": ("PER", rng.choice(NAMES)),
    })


def main():
    lines = ["-DOCSTART- O", ""]
    for i in range(600):
        sent = movie_sentence() if i % 2 == 0 else news_sentence()
        lines.extend(f"{w} {t}" for w, t in sent)
        lines.append("")
    with open("fixture.conll", "w", encoding="utf-8") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main()
