"""Independent helpers shared by the unit and acceptance tests."""
from __future__ import annotations

import re

# The fully expanded 2 x 2 Capelli identity, as typeset.
CAPELLI_2X2_LATEX = (
    r"x_{11}x_{22}\partial_{11}\partial_{22}+x_{12}x_{21}\partial_{12}\partial_{21}"
    r"-x_{11}x_{22}\partial_{12}\partial_{21}-x_{12}x_{21}\partial_{11}\partial_{22}"
)

_WEYL_TERM = re.compile(r"([+-]?)((?:(?:x|\\partial)_\{\d\d\})+)")
_WEYL_FACTOR = re.compile(r"(x|\\partial)_\{(\d)(\d)\}")


def weyl_latex_terms(latex: str) -> set[str]:
    """Signed terms of a typeset Weyl-algebra sum in the package's token syntax."""
    text = latex.replace(" ", "")
    terms, pos = set(), 0
    while pos < len(text):
        match = _WEYL_TERM.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse near {text[pos:]!r}")
        sign, body = match.groups()
        tokens = [("x" if head == "x" else "d") + f"[{i}][{a}]"
                  for head, i, a in _WEYL_FACTOR.findall(body)]
        terms.add(("-" if sign == "-" else "+") + "*".join(tokens))
        pos = match.end()
    return terms


def weyl_text_terms(text: str) -> set[str]:
    """Signed terms of a canonical WeylOp text form."""
    out = set()
    for i, chunk in enumerate(text.replace(" - ", " + -").split(" + ")):
        chunk = chunk.strip()
        out.add(chunk if chunk.startswith("-") else "+" + chunk)
    return out
