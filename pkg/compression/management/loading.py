from django.core.management.base import CommandError

from compression import fileformat
from compression.exceptions import FormatError

DATA_ERROR = 1
USAGE_ERROR = 2


def load_compressed(path):
    """Read a .cz file, turning I/O and format problems into CommandError."""
    try:
        return fileformat.load(path)
    except OSError as exc:
        raise CommandError(f'cannot read {path}: {exc.strerror or exc}', returncode=DATA_ERROR)
    except FormatError as exc:
        raise CommandError(f'{path}: {exc}', returncode=DATA_ERROR)
