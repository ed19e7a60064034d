"""Group elements as freely reduced words over a two-letter free basis.

The group presented by ``<p, q, s | s^-2 p s^2 q>`` is free on ``{p, s}``:
the single relator forces ``q = s^-2 p^-1 s^2``, so every element has a
unique freely reduced spelling over ``{p, s}`` and their inverses.  Words
are plain Python strings over the four letters ``p P s S`` (uppercase is
the inverse of the lowercase letter, so inversion is ``swapcase`` on the
reversed string); the empty string is the identity.

Multiplication by a Cayley generator appends the generator's rewrite image
and cancels at the seam only, which keeps the hot path of ball
construction cheap.  Everything here is pure and immutable, so values may
be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

FREE_LETTERS = "pPsS"

_INVERSE = {"p": "P", "P": "p", "s": "S", "S": "s"}


def letter_base(letter: str) -> str:
    """Base name of a letter, e.g. 'P' -> 'p'."""
    return letter.lower()


def letter_sign(letter: str) -> int:
    """+1 for a generator letter, -1 for its inverse."""
    return -1 if letter.isupper() else 1


def make_letter(base: str, sign: int) -> str:
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    return base if sign == 1 else base.upper()


def is_reduced(word: str) -> bool:
    """True when no adjacent pair of letters cancels."""
    return all(word[i] != _INVERSE.get(word[i + 1], "") for i in range(len(word) - 1))


def free_reduce(letters: Iterable[str]) -> str:
    """Unique freely reduced word equal to the given letter sequence.

    Accepts any iterable of single letters (a word string works).
    Idempotent; the empty result is the identity.
    """
    out: list[str] = []
    for ch in letters:
        if ch not in _INVERSE:
            raise ValueError(f"unknown letter {ch!r}")
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert(word: str) -> str:
    """Inverse word: reversed sequence with all signs flipped."""
    return word[::-1].swapcase()


def multiply(u: str, v: str) -> str:
    """Product of two reduced words, cancelling at the seam only.

    Both inputs must already be reduced; the result is then reduced too.
    """
    i = len(u)
    j = 0
    nv = len(v)
    while i > 0 and j < nv and u[i - 1] == _INVERSE[v[j]]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


@dataclass(frozen=True)
class PresentationSpec:
    """Cayley generating set together with rewrite images over a free basis.

    ``rewrite`` sends every generator name to a freely reduced word over the
    basis letters; basis generators must map to themselves.  This is enough
    to multiply normal forms by any Cayley generator, and therefore to build
    Cayley balls, for any presentation whose word problem reduces to free
    reduction through such a map.
    """

    free_basis: tuple[str, ...]
    generators: tuple[str, ...]
    rewrite: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in self.free_basis + self.generators:
            if not (len(name) == 1 and name.isalpha() and name.islower()):
                raise ValueError(f"generator names must be single lowercase letters, got {name!r}")
        if len(set(self.free_basis)) != len(self.free_basis):
            raise ValueError("duplicate free-basis names")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        if set(self.free_basis) != {"p", "s"}:
            # The word engine is hard-wired to the two-letter basis alphabet.
            raise ValueError("free basis must be exactly {p, s}")
        for name in self.generators:
            image = self.rewrite.get(name)
            if image is None:
                raise ValueError(f"generator {name!r} has no rewrite image")
            if name in self.free_basis and image != name:
                raise ValueError(f"basis generator {name!r} must rewrite to itself")
            if image == "":
                raise ValueError(f"generator {name!r} rewrites to the identity")
            if not is_reduced(image):
                raise ValueError(f"rewrite image for {name!r} is not freely reduced")
            for ch in image:
                if letter_base(ch) not in self.free_basis:
                    raise ValueError(f"rewrite image for {name!r} uses letter {ch!r} outside the basis")
        for name in self.rewrite:
            if name not in self.generators:
                raise ValueError(f"rewrite given for unknown generator {name!r}")

    def gen_letters(self) -> tuple[str, ...]:
        """Cayley generator letters in canonical order, e.g. (p, P, q, Q, s, S)."""
        return tuple(ch for g in self.generators for ch in (g, g.upper()))

    def letter_image(self, letter: str) -> str:
        """Reduced basis word that right-multiplication by ``letter`` appends."""
        base = letter_base(letter)
        if base not in self.generators:
            raise ValueError(f"unknown generator letter {letter!r}")
        image = self.rewrite[base]
        return image if letter == base else invert(image)


#: Default presentation <p, q, s | s^-2 p s^2 q>; the relator forces
#: q = s^-2 p^-1 s^2 (spelled SSPss).
GAMMA = PresentationSpec(
    free_basis=("p", "s"),
    generators=("p", "q", "s"),
    rewrite={"p": "p", "q": "SSPss", "s": "s"},
)

#: Rewrite-free presentation <p, s>; its Cayley graph is the 4-regular tree.
FREE_PS = PresentationSpec(
    free_basis=("p", "s"),
    generators=("p", "s"),
    rewrite={"p": "p", "s": "s"},
)


def q_image() -> str:
    """Normal form of the generator q, i.e. s^-2 p^-1 s^2."""
    return GAMMA.rewrite["q"]


def apply_gen(word: str, letter: str, spec: PresentationSpec = GAMMA) -> str:
    """Normal form of ``word`` right-multiplied by one Cayley generator letter."""
    return multiply(word, spec.letter_image(letter))


def _expand_token(token: str) -> str:
    """Expand a token like ``s^-2`` into letters (here ``SS``)."""
    if "^" in token:
        base, _, exp = token.partition("^")
        try:
            k = int(exp)
        except ValueError:
            raise ValueError(f"bad exponent in token {token!r}") from None
    else:
        base, k = token, 1
    if len(base) != 1 or not base.isalpha() or not base.islower():
        raise ValueError(f"bad letter in token {token!r}")
    if k == 0:
        raise ValueError(f"zero exponent in token {token!r}")
    return make_letter(base, 1 if k > 0 else -1) * abs(k)


def parse_presentation(text: str) -> PresentationSpec:
    """Parse the line-oriented presentation format.

    Recognized directives::

        free_basis: p s
        gens: p q s
        rewrite: q -> s^-2 p^-1 s^2

    Basis generators may omit their (identity) rewrite lines.  Blank lines
    and ``#`` comments are ignored.
    """
    basis: tuple[str, ...] | None = None
    gens: tuple[str, ...] | None = None
    rewrites: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        if key == "free_basis":
            basis = tuple(rest.split())
        elif key == "gens":
            gens = tuple(rest.split())
        elif key == "rewrite":
            name, _, image_text = rest.partition("->")
            name = name.strip()
            tokens = image_text.split()
            word = free_reduce("".join(_expand_token(t) for t in tokens))
            rewrites[name] = word
        else:
            raise ValueError(f"unknown directive {key!r}")
    if basis is None or gens is None:
        raise ValueError("presentation needs both free_basis: and gens: lines")
    for name in gens:
        if name in basis:
            rewrites.setdefault(name, name)
    return PresentationSpec(free_basis=basis, generators=gens, rewrite=rewrites)


def format_presentation(spec: PresentationSpec) -> str:
    """Serialize a presentation in the format accepted by parse_presentation."""
    lines = [
        "free_basis: " + " ".join(spec.free_basis),
        "gens: " + " ".join(spec.generators),
    ]
    for name in spec.generators:
        if name in spec.free_basis:
            continue
        image = spec.rewrite[name]
        tokens = []
        i = 0
        while i < len(image):
            j = i
            while j < len(image) and image[j] == image[i]:
                j += 1
            k = (j - i) * letter_sign(image[i])
            base = letter_base(image[i])
            tokens.append(base if k == 1 else f"{base}^{k}")
            i = j
        lines.append(f"rewrite: {name} -> " + " ".join(tokens))
    return "\n".join(lines) + "\n"
