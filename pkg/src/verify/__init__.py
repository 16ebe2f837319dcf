"""
Verification package initialization
Version: 1.0.0
"""
from .pipeline import CLAIMS, SuiteResult, VerificationPipeline, VerificationReport

__version__ = "1.0.0"
__all__ = ['CLAIMS', 'SuiteResult', 'VerificationPipeline', 'VerificationReport']
