from hopfkit.examples.families import ExampleSpec, ExpectedResults, Family, expected_results
from hopfkit.examples.builders import build, build_document
