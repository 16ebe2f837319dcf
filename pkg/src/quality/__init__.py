from .validator import FORMATS, MAX_N_ENV, MODES, ConfigValidator, RunConfig, VerificationSettings

__all__ = ['FORMATS', 'MAX_N_ENV', 'MODES', 'ConfigValidator', 'RunConfig', 'VerificationSettings']
