import logging
from typing import Iterable, List

from .._model import Identity, IdentityRow
from .identities import SuiteContext, checks

logger = logging.getLogger(__name__)


def expand_identities(identities: Iterable[Identity]) -> List[Identity]:
    """Resolve ``all`` and drop repeats, keeping suite order."""
    requested = {Identity(i) for i in identities}
    if Identity.all in requested:
        return list(checks)
    return [i for i in checks if i in requested]


def run_suite(ctx: SuiteContext, identities: Iterable[Identity]) -> List[IdentityRow]:
    """
    Check identities on seeded samples.

    Parameters
    ----------
    ctx
        field, order and sampling parameters
    identities
        identities to check, ``all`` for the whole suite

    Returns
    -------
    List[IdentityRow]
        one row per identity in suite order
    """
    rows = []
    for identity in expand_identities(identities):
        logger.info("Checking %s", identity.value)
        row = checks[identity](ctx)
        logger.info(
            "%s: %d samples, %d failures, %d skipped",
            row.name,
            row.samples,
            row.failures,
            row.skipped,
        )
        rows.append(row)
    return rows
