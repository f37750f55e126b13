from .automaton import Alphabet, Automaton, Scc
from .diagnostics import Diagnostic, DiagnosticCode
from .lasso_word import LassoWord
from .cocoa import Cocoa
from .constraints import ParityConstraint, Polarity, ResidualPartition
from .family_params import FamilyParams, IndexPair
from .certificate import CertificateNode, LowerBoundCertificate
from .size_report import SizeReport, SizeRow

__all__ = [
    'Alphabet', 'Automaton', 'Scc', 'Diagnostic', 'DiagnosticCode', 'LassoWord',
    'Cocoa', 'ParityConstraint', 'Polarity', 'ResidualPartition', 'FamilyParams',
    'IndexPair', 'CertificateNode', 'LowerBoundCertificate', 'SizeReport', 'SizeRow',
]
