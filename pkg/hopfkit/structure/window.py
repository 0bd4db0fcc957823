from typing import Dict, List, Optional, Sequence

from hopfkit.algebra.alphabet import WeightScheme, Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.rewrite.word_basis import WindowSpec, word_basis


class BasisWindow:
    """
    A finite set of normal words standing in for a truncation of H, with the coordinate
    index of each word.
    """
    def __init__(self, spec: WindowSpec, words: Sequence[Word]) -> None:
        self.spec = spec
        self.words: List[Word] = list(words)
        self.index: Dict[Word, int] = {word: i for i, word in enumerate(self.words)}

    @classmethod
    def build(cls, presentation: HopfPresentation, spec: Optional[WindowSpec] = None) -> "BasisWindow":
        spec = spec or presentation.metadata.window
        if spec is None:
            spec = WindowSpec(WeightScheme.GRADE, 1)
        return cls(spec, word_basis(presentation.rules, spec.bound, spec.weights, spec.length_cap))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word: Word) -> bool:
        return tuple(word) in self.index

    def spans(self, element: NcPoly) -> bool:
        return all(word in self.index for word in element)

    def words_up_to(self, presentation: HopfPresentation, degree: int,
                    scheme: WeightScheme = WeightScheme.FILTRATION) -> List[Word]:
        return [word for word in self.words if presentation.alphabet.weight(word, scheme) <= degree]

    def __repr__(self) -> str:
        return "BasisWindow({}, {} words)".format(self.spec, len(self.words))
