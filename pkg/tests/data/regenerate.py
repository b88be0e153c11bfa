"""Rewrite the golden reports: python tests/data/regenerate.py"""
import pathlib

from tangentcone.reference import EXAMPLES
from tangentcone.report import Options, analyse, dumps

HERE = pathlib.Path(__file__).parent

for ex in EXAMPLES:
    text = dumps(analyse(ex.params, Options()))
    (HERE / f"{ex.name}.json").write_text(text + "\n", encoding="utf-8")
    print(ex.name, len(text))
