"""Combinatorial model of the closed genus-g surface: pi_1 words, mod-2
homology, the curve catalog (Lickorish curves, canonical-class family,
sausage positions, auxiliary curves), and tabulated intersection numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

# A letter is (kind, index, exponent) with kind in {"a", "b"}, index 1-based,
# exponent +1 or -1.
Letter = Tuple[str, int, int]


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus-g surface with its fixed sausage decomposition.

    The pants count is 2g: the written sausage definition says 2g-2, but the
    Euler characteristic of the surface minus two disks forces 2g, and the
    arrow-elimination operator identities use the exponent 2g.  We keep 2g.
    """

    genus: int
    k0: int = 0  # position parameter for decorated sausage diagrams

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        n = 2 * self.genus
        k0 = self.k0 if self.k0 else self.genus
        if not (1 <= k0 <= n - 1):
            raise ValueError("k0 must lie strictly between the sausage ends")
        object.__setattr__(self, "k0", k0)

    @property
    def pants_count(self) -> int:
        return 2 * self.genus


class Pi1Word:
    """A freely reduced word in the standard generators a_1,b_1,...,a_g,b_g."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: Tuple[Letter, ...] = free_reduce(letters)

    @classmethod
    def identity(cls) -> "Pi1Word":
        return cls(())

    @classmethod
    def gen(cls, kind: str, index: int, exponent: int = 1) -> "Pi1Word":
        if kind not in ("a", "b") or index < 1 or exponent not in (1, -1):
            raise ValueError(f"bad generator ({kind}, {index}, {exponent})")
        return cls(((kind, index, exponent),))

    def __mul__(self, other: "Pi1Word") -> "Pi1Word":
        return Pi1Word(self.letters + other.letters)

    def inverse(self) -> "Pi1Word":
        return Pi1Word(tuple((k, i, -e) for (k, i, e) in reversed(self.letters)))

    def __pow__(self, n: int) -> "Pi1Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Pi1Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Pi1Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def cyclic_reduce(self) -> "Pi1Word":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == ls[-1][1] \
                and ls[0][2] == -ls[-1][2]:
            ls = ls[1:-1]
        return Pi1Word(tuple(ls))

    def cyclic_rotations(self) -> List["Pi1Word"]:
        red = self.cyclic_reduce()
        ls = red.letters
        return [Pi1Word(ls[i:] + ls[:i]) for i in range(max(1, len(ls)))]

    def is_cyclic_rotation_of(self, other: "Pi1Word") -> bool:
        return other.cyclic_reduce() in self.cyclic_rotations()

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for (k, i, e) in self.letters:
            parts.append(f"{k}{i}" if e == 1 else f"{k}{i}^-1")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Pi1Word({self})"


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for (k, i, e) in letters:
        es, cur = int(e), []
        # split exponent blocks into single letters; e is always ±1 here but
        # accept larger exponents from parsing
        step = 1 if es > 0 else -1
        for _ in range(abs(es)):
            cur.append((k, i, step))
        for letter in cur:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == letter[1] \
                    and stack[-1][2] == -letter[2]:
                stack.pop()
            else:
                stack.append(letter)
    return tuple(stack)


_WORD_TOKEN = re.compile(r"([ab])(\d+)(?:\^(-?\d+))?")


def parse_word(text: str) -> Pi1Word:
    """Parse 'a1 b1^-1 a2' style words; '1' or '' is the identity."""
    text = text.strip()
    if text in ("", "1"):
        return Pi1Word.identity()
    letters: List[Letter] = []
    pos = 0
    for m in _WORD_TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse word near {text[pos:m.start()]!r}")
        k, i, e = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        letters.append((k, i, e))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse word near {text[pos:]!r}")
    return Pi1Word(letters)


class Homology2Class:
    """Element of H_1(Sigma, Z/2) as a bit vector (eps_1, del_1, ..., eps_g, del_g):
    bit 2i-2 is the a_i component, bit 2i-1 the b_i component."""

    __slots__ = ("bits",)

    def __init__(self, bits: Sequence[int]):
        self.bits: Tuple[int, ...] = tuple(int(b) % 2 for b in bits)

    @classmethod
    def zero(cls, genus: int) -> "Homology2Class":
        return cls((0,) * (2 * genus))

    @classmethod
    def generator(cls, kind: str, index: int, genus: int) -> "Homology2Class":
        bits = [0] * (2 * genus)
        offset = 2 * (index - 1) + (0 if kind == "a" else 1)
        bits[offset] = 1
        return cls(bits)

    @property
    def genus(self) -> int:
        return len(self.bits) // 2

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: "Homology2Class") -> "Homology2Class":
        if len(self.bits) != len(other.bits):
            raise ValueError("homology classes of different genus")
        return Homology2Class(tuple(x ^ y for x, y in zip(self.bits, other.bits)))

    def eps(self, i: int) -> int:
        return self.bits[2 * (i - 1)]

    def delta(self, i: int) -> int:
        return self.bits[2 * (i - 1) + 1]

    def pairing(self, other: "Homology2Class") -> int:
        """Mod-2 symplectic intersection pairing."""
        total = 0
        for i in range(1, self.genus + 1):
            total ^= (self.eps(i) & other.delta(i)) ^ (self.delta(i) & other.eps(i))
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, Homology2Class) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __repr__(self) -> str:
        return f"Homology2Class({self})"

    @classmethod
    def parse(cls, text: str) -> "Homology2Class":
        return cls([int(ch) for ch in text.strip()])


def homology_of_word(w: Pi1Word, genus: int) -> Homology2Class:
    """Exponent-parity map pi_1 -> H_1(Sigma, Z/2)."""
    bits = [0] * (2 * genus)
    for (k, i, e) in w.letters:
        if i > genus:
            raise ValueError(f"generator index {i} exceeds genus {genus}")
        offset = 2 * (i - 1) + (0 if k == "a" else 1)
        bits[offset] ^= 1
    return Homology2Class(bits)


def surface_relator(genus: int) -> Pi1Word:
    """[a_1,b_1][a_2,b_2]...[a_g,b_g]."""
    w = Pi1Word.identity()
    for i in range(1, genus + 1):
        a, b = Pi1Word.gen("a", i), Pi1Word.gen("b", i)
        w = w * a * b * a.inverse() * b.inverse()
    return w


def f_representative(h: Homology2Class) -> Pi1Word:
    """The canonical-family word a_1^{eps_1} b_1^{-del_1} ... a_g^{eps_g} b_g^{-del_g}
    for a non-zero class h."""
    if h.is_zero():
        raise ValueError("the canonical family has no element in the zero class")
    letters: List[Letter] = []
    for i in range(1, h.genus + 1):
        if h.eps(i):
            letters.append(("a", i, 1))
        if h.delta(i):
            letters.append(("b", i, -1))
    return Pi1Word(letters)


def f_family(genus: int) -> List[Pi1Word]:
    """All 2^{2g}-1 canonical-class words."""
    out = []
    for mask in range(1, 1 << (2 * genus)):
        bits = [(mask >> j) & 1 for j in range(2 * genus)]
        out.append(f_representative(Homology2Class(bits)))
    return out


def is_f_word(w: Pi1Word, genus: int) -> bool:
    """Check membership in the canonical family by shape."""
    if w.is_identity():
        return False
    expect_i, expect_kind = 1, "a"
    seen_any = False
    idx = 0
    ls = w.letters
    for i in range(1, genus + 1):
        if idx < len(ls) and ls[idx] == ("a", i, 1):
            idx += 1
            seen_any = True
        if idx < len(ls) and ls[idx] == ("b", i, -1):
            idx += 1
            seen_any = True
    return idx == len(ls) and seen_any


# -- curve catalog -------------------------------------------------------------


@dataclass(frozen=True)
class CurveCatalogEntry:
    """A named isotopy class of simple closed curve on Sigma.

    kind: 'trivial' | 'alpha' | 'beta' | 'gamma' | 'f_word' |
          'sausage_boundary' | 'auxiliary'
    param: generator index, homology class string, sausage position, or
           auxiliary tag, depending on kind.
    """

    kind: str
    param: object = None
    word: Optional[Pi1Word] = None
    homology: Optional[Homology2Class] = None
    separating: bool = False

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        if self.kind in ("alpha", "beta", "gamma"):
            return f"{self.kind}{self.param}"
        if self.kind == "f_word":
            return f"f[{self.homology}]"
        if self.kind == "sausage_boundary":
            return f"sep(pos={self.param})"
        return f"aux[{self.param}]"


def gamma_word(i: int) -> Pi1Word:
    """gamma_i represents the free homotopy class a_{i+1}^{-1} b_i a_i b_i^{-1}."""
    return (Pi1Word.gen("a", i + 1, -1) * Pi1Word.gen("b", i)
            * Pi1Word.gen("a", i) * Pi1Word.gen("b", i, -1))


AUX_WORDS = {
    "A": lambda i: parse_word(f"a{i} a{i+1}^-1 b{i}"),
    "B": lambda i: parse_word(f"a{i} b{i}^-1 b{i+1}^-1"),
    "B'": lambda i: parse_word(f"a{i} b{i}^-1 a{i+1} b{i+1}^-1"),
    "C": lambda i: parse_word(f"b{i}^-1 a{i+1}"),
    "D": lambda i: parse_word(f"b{i}^-1 b{i+1}^-1"),
    "D'": lambda i: parse_word(f"b{i}^-1 a{i+1} b{i+1}^-1"),
}


class CurveCatalog:
    """Factory for catalog entries over a fixed surface."""

    def __init__(self, spec: SurfaceSpec):
        self.spec = spec

    @property
    def genus(self) -> int:
        return self.spec.genus

    def trivial(self) -> CurveCatalogEntry:
        return CurveCatalogEntry("trivial", None, None,
                                 Homology2Class.zero(self.genus), False)

    def alpha(self, i: int) -> CurveCatalogEntry:
        self._check_index(i, self.genus)
        w = Pi1Word.gen("a", i)
        return CurveCatalogEntry("alpha", i, w,
                                 homology_of_word(w, self.genus), False)

    def beta(self, i: int) -> CurveCatalogEntry:
        self._check_index(i, self.genus)
        w = Pi1Word.gen("b", i)
        return CurveCatalogEntry("beta", i, w,
                                 homology_of_word(w, self.genus), False)

    def gamma(self, i: int) -> CurveCatalogEntry:
        self._check_index(i, self.genus - 1)
        w = gamma_word(i)
        return CurveCatalogEntry("gamma", i, w,
                                 homology_of_word(w, self.genus), False)

    def f_curve(self, h: Homology2Class) -> CurveCatalogEntry:
        w = f_representative(h)
        return CurveCatalogEntry("f_word", str(h), w, h, False)

    def sausage_boundary(self, position: int) -> CurveCatalogEntry:
        """Separating curve at an interior sausage position; cutting there
        splits the genus as position | genus - position."""
        if not (1 <= position <= self.genus - 1):
            raise ValueError(f"separating position {position} out of range")
        return CurveCatalogEntry("sausage_boundary", position, None,
                                 Homology2Class.zero(self.genus), True)

    def auxiliary(self, tag: str, i: int) -> CurveCatalogEntry:
        if tag not in AUX_WORDS:
            raise ValueError(f"unknown auxiliary tag {tag!r}")
        self._check_index(i, self.genus - 1)
        w = AUX_WORDS[tag](i)
        return CurveCatalogEntry("auxiliary", f"{tag}{i}", w,
                                 homology_of_word(w, self.genus), False)

    @staticmethod
    def _check_index(i: int, top: int) -> None:
        if not (1 <= i <= top):
            raise ValueError(f"curve index {i} out of range 1..{top}")


# -- tabulated intersection numbers ---------------------------------------------

_GAMMA_I0 = {"", "a", "bB", "a bB", "b aa bB", "a b aa bB"}  # encoded middles


def _middle_code(t: Pi1Word, i: int) -> str:
    """Encode the middle word t in generators a_i, b_i, a_{i+1}, b_{i+1} as a
    string over {a=a_i, b=b_i^-1, c=a_{i+1}, d=b_{i+1}^-1}."""
    code = []
    for (k, j, e) in t.letters:
        if k == "a" and j == i and e == 1:
            code.append("a")
        elif k == "b" and j == i and e == -1:
            code.append("b")
        elif k == "a" and j == i + 1 and e == 1:
            code.append("c")
        elif k == "b" and j == i + 1 and e == -1:
            code.append("d")
        else:
            raise ValueError(f"word {t} is not a canonical middle at index {i}")
    return "".join(code)


# middle-word table from the eight-case analysis: code -> i([t], gamma_i)
GAMMA_MIDDLE_INTERSECTIONS: Dict[str, int] = {
    "": 0, "a": 0, "bd": 0, "abd": 0, "bcd": 0, "abcd": 0,
    "b": 1, "ab": 1, "bc": 1, "abc": 1, "d": 1, "ad": 1, "cd": 1, "acd": 1,
    "c": 2, "ac": 2,
}


def f_middle(c: Pi1Word, i: int, genus: int) -> Pi1Word:
    """Extract the a_i..b_{i+1} middle of a canonical-family word."""
    letters = [l for l in c.letters if l[1] in (i, i + 1)]
    return Pi1Word(letters)


def intersection_number(x: CurveCatalogEntry, y: CurveCatalogEntry,
                        genus: int) -> int:
    """Tabulated geometric intersection numbers for the supported pairs:
    Lickorish generator vs canonical-family word, and the auxiliary pairs.
    General intersection numbers are out of scope."""
    # auxiliary pairs (either order)
    aux = {("A", "B"): 1, ("C", "D"): 1, ("A", "B'"): 1, ("C", "D'"): 1}
    if x.kind == "auxiliary" and y.kind == "auxiliary":
        tx, ty = str(x.param), str(y.param)
        mx, ix = re.match(r"([A-D]'?)(\d+)", tx).groups()
        my, iy = re.match(r"([A-D]'?)(\d+)", ty).groups()
        if ix == iy:
            if (mx, my) in aux:
                return aux[(mx, my)]
            if (my, mx) in aux:
                return aux[(my, mx)]
        raise ValueError(f"intersection not tabulated for {x} vs {y}")

    gen, target = (x, y) if x.kind in ("alpha", "beta", "gamma") else (y, x)
    if gen.kind not in ("alpha", "beta", "gamma") or target.kind != "f_word":
        raise ValueError(f"intersection not tabulated for {x} vs {y}")
    h = target.homology
    i = int(gen.param)
    if gen.kind == "alpha":
        return 1 if h.delta(i) else 0
    if gen.kind == "beta":
        return 1 if h.eps(i) else 0
    t = f_middle(target.word, i, genus)
    code = _middle_code(t, i)
    return GAMMA_MIDDLE_INTERSECTIONS[code]
