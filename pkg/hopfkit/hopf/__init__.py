from hopfkit.hopf.presentation import HopfPresentation, PresentationMetadata, antipode, counit, delta
from hopfkit.hopf.verification import verify, verify_antipode, verify_bialgebra
from hopfkit.hopf.document import (PresentationDocument, export, parse_presentation,
                                   presentation_from_document, to_document)
