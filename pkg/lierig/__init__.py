"""lierig: exact verification of rigid solvable real Lie algebras of dimension up to 8."""

__version__ = "0.1.0"

from lierig.errors import LierigError  # noqa: E402
from lierig.lie import (  # noqa: E402
    StructureConstants,
    distinguish,
    fingerprint,
    full_report,
    is_lie_algebra,
    nilradical,
    semidirect_sum,
)
