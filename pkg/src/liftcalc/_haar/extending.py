from collections import OrderedDict
from typing import Optional

from .base import Integrand, IntegralResult, Integrator
from .concrete import AdaptiveIntegrator
from .space import MeasureSpace


class ExtendingIntegrator(Integrator):
    """
    Base class for integrators that extend other integrators.

    Parameters
    ----------
    integrator
        integrator to delegate to, :class:`AdaptiveIntegrator` if not specified
    """

    def __init__(self, integrator: Optional[Integrator] = None):
        self.integrator = integrator or AdaptiveIntegrator()

    def __repr__(self):
        return type(self).__name__ + f"(integrator={self.integrator!r})"


default_cache_size = 4096


class CachingIntegrator(ExtendingIntegrator):
    """
    Cache integration results.

    Results are keyed by the space, the integrand and the depth cap.
    All of them are immutable values, so cached results never go stale.
    Note that if the cache has no maximum size it can grow without limit.
    Use :meth:`CachingIntegrator.clear` to empty the cache.

    Parameters
    ----------
    max_size
        maximum cache size (amount of results), if specified the least
        recently used result is discarded when the cache would overflow
    integrator
        integrator to delegate to, :class:`AdaptiveIntegrator` if not specified

    Examples
    --------
    .. code:: python

        integrator = CachingIntegrator(max_size=1024)
        lifting = Lifting(order, integrator=integrator)
    """

    def __init__(
        self, max_size: Optional[int] = None, integrator: Optional[Integrator] = None
    ):
        super().__init__(integrator)
        self._max_size = max_size
        self._cache: "OrderedDict[tuple, IntegralResult]" = OrderedDict()
        self.hits = 0
        self.misses = 0

    def __repr__(self):
        contains = f"(max_size={self._max_size}, integrator={self.integrator!r})"
        return type(self).__name__ + contains

    @property
    def max_size(self) -> Optional[int]:
        """
        Maximum amount of results stored in the cache.

        Returns
        -------
        Optional[int]
            maximum cache size
        """
        return self._max_size

    def __len__(self) -> int:
        return len(self._cache)

    def clear(self) -> None:
        """Clear integrator cache."""
        self._cache.clear()
        self.hits = 0
        self.misses = 0

    def integrate(
        self,
        space: MeasureSpace,
        integrand: Integrand,
        depth_cap: Optional[int] = None,
    ) -> IntegralResult:
        """Load a result from cache, or delegate to the underlying integrator."""
        key = (space, integrand, depth_cap)
        cached = self._cache.get(key, None)
        if cached is not None:
            self.hits += 1
            self._cache.move_to_end(key)
            return cached

        self.misses += 1
        result = self.integrator.integrate(space, integrand, depth_cap)
        self._cache[key] = result

        # Remove LRU item
        if self.max_size is not None and len(self._cache) > self.max_size:
            self._cache.popitem(last=False)
        return result
