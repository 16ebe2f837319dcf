from .commands import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    cmd_compare,
    cmd_degenerate,
    cmd_enumerate,
    cmd_hasse,
    cmd_verify,
)

__all__ = [
    'EXIT_FAILED', 'EXIT_OK', 'EXIT_USAGE', 'cmd_compare', 'cmd_degenerate',
    'cmd_enumerate', 'cmd_hasse', 'cmd_verify',
]
