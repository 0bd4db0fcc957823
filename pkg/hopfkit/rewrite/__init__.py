from hopfkit.rewrite.monomial_order import MonomialOrder
from hopfkit.rewrite.rules import RewriteRule, RuleSet, normalize, quotient_mul
from hopfkit.rewrite.confluence import NonJoinable, confluence_report
from hopfkit.rewrite.word_basis import WindowSpec, word_basis
