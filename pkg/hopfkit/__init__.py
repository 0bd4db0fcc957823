"""
Exact computation with finitely presented pointed Hopf algebras: Hopf-axiom verification,
skew-primitive spaces and ``m_H``, and the order of the antipode.
"""
