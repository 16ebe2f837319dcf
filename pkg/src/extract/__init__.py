from .extract import InvolutionReader

__all__ = ['InvolutionReader']
