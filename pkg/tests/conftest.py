import sys
from pathlib import Path

try:
    import skein  # noqa: F401
except ImportError:  # running from a fresh checkout without installing
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
