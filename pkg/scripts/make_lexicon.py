#!/usr/bin/env python3
"""Write a small hand-curated demo emotion lexicon.

The real deployments feed the monitor a large hashtag-derived association
lexicon; this one is just big enough to make the CLI and the demo scripts
runnable out of the box.
"""

from __future__ import annotations

import argparse
from pathlib import Path

# (emotion, word, association score); a word may appear under several
# emotions and the loader merges the entries into one vector.
DEMO_ENTRIES = [
    ("anger", "furious", 1.44),
    ("anger", "rage", 1.38),
    ("anger", "angry", 1.21),
    ("anger", "hate", 1.12),
    ("anger", "riot", 0.95),
    ("anger", "fight", 0.92),
    ("anger", "punch", 0.85),
    ("anger", "brawl", 0.81),
    ("anger", "shove", 0.64),
    ("anger", "wtf", 0.58),
    ("anger", "boo", 0.44),
    ("fear", "terrified", 1.52),
    ("fear", "stampede", 1.41),
    ("fear", "panic", 1.36),
    ("fear", "scared", 1.28),
    ("fear", "gunshot", 1.24),
    ("fear", "scream", 1.10),
    ("sadness", "scream", 0.21),
    ("fear", "trapped", 0.94),
    ("fear", "emergency", 0.88),
    ("fear", "crush", 0.79),
    ("sadness", "crush", 0.22),
    ("fear", "help", 0.74),
    ("fear", "run", 0.69),
    ("fear", "shaking", 0.61),
    ("fear", "exits", 0.47),
    ("joy", "happy", 1.31),
    ("joy", "celebrate", 1.12),
    ("joy", "party", 1.04),
    ("joy", "love", 0.99),
    ("joy", "cheer", 0.94),
    ("joy", "winner", 0.93),
    ("joy", "awesome", 0.88),
    ("joy", "laugh", 0.87),
    ("joy", "amazing", 0.84),
    ("joy", "win", 0.82),
    ("joy", "fun", 0.78),
    ("joy", "yay", 0.66),
    ("joy", "epic", 0.59),
    ("sadness", "grief", 1.27),
    ("sadness", "tragic", 1.22),
    ("sadness", "sad", 1.19),
    ("sadness", "cry", 1.08),
    ("sadness", "mourn", 1.01),
    ("sadness", "tears", 0.96),
    ("sadness", "lonely", 0.89),
    ("sadness", "loss", 0.84),
    ("sadness", "hurt", 0.77),
    ("fear", "hurt", 0.24),
    ("sadness", "lost", 0.68),
    ("sadness", "miss", 0.57),
    ("sadness", "sorry", 0.52),
]


def write_demo_lexicon(path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# demo emotion lexicon: emotion<TAB>word<TAB>score"]
    lines += [f"{emotion}\t{word}\t{score}" for emotion, word, score in DEMO_ENTRIES]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="demo_lexicon.tsv", help="output TSV path")
    args = parser.parse_args()
    path = write_demo_lexicon(Path(args.out))
    print(f"wrote {len(DEMO_ENTRIES)} entries to {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
