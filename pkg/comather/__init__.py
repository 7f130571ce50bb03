# comather/__init__.py
"""
comather - Chern-Mather classes of cominuscule Schubert varieties

Exact computations in the (torus-equivariant) Chow ring of flag manifolds G/P:

- roots, weyl: root systems, Weyl groups, Bruhat order, parabolic quotients
- diagrams: partition / strict-partition labels of cominuscule Schubert varieties
- poly: sparse polynomials in the simple roots and hbar
- chow: Schubert classes, the Chevalley formula, push-forward and pull-back
- mather: Mather, dual Mather and Segre-Mather classes, Mather polynomials
- csm: CSM classes of Schubert cells and local Euler obstructions
- kl: Kazhdan-Lusztig classes and characteristic-cycle multiplicities
- loc: localization at torus-fixed points and of conormal spaces
- golden, emit, cli: fixture tables, output formats and the command line
"""

__version__ = "1.0.0"
__author__ = "comather developers"

__all__ = []

# Command configuration
COMMAND_CONFIG = {
    'mather': {
        'description': 'Chern-Mather class of a Schubert variety (--dual for the dual class)',
        'category': 'classes'
    },
    'csm': {
        'description': 'CSM class of a Schubert cell',
        'category': 'classes'
    },
    'euler': {
        'description': 'Local Euler obstructions of a Schubert variety',
        'category': 'singularities'
    },
    'klclass': {
        'description': 'Kazhdan-Lusztig class sum_v P_{w,v}(1) c_SM(cell v)',
        'category': 'singularities'
    },
    'cc': {
        'description': 'Characteristic-cycle multiplicities of the IH sheaf',
        'category': 'singularities'
    },
    'segre-mather': {
        'description': 'Segre-Mather class (--conormal for the conormal Segre class)',
        'category': 'classes'
    },
    'pullback-mather': {
        'description': 'Mather class of the preimage in G/B or a smaller G/Q',
        'category': 'classes'
    },
    'conormal-loc': {
        'description': 'Localization of a conormal space at a torus-fixed point',
        'category': 'localization'
    },
    'table': {
        'description': 'Full Mather, Euler or CSM table as CSV, JSON or LaTeX',
        'category': 'tables'
    },
    'golden-diff': {
        'description': 'Recompute a stored table and list mismatching cells',
        'category': 'tables'
    },
    'scan': {
        'description': 'Scan spaces for positivity, unimodality and log-concavity failures',
        'category': 'conjectures'
    },
    'mather-poly': {
        'description': 'Mather polynomial with unimodality and log-concavity verdicts',
        'category': 'conjectures'
    }
}

# Stored golden tables (see comather/fixtures)
GOLDEN_TABLES = [
    'Gr36',
    'Gr37',
    'Gr48',
    'LG48-mather',
    'LG48-euler',
    'E6-mather',
    'LG510-euler'
]
