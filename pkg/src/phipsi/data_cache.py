import collections
import logging
import threading

from .cruncher.groupring import IdealSubspace, phi
from .cruncher.groups import FiniteAbelianGroup, Subgroup
from .cruncher.modring import RingDescriptor


class PhiCache:
    """
    Keeps the most recently used Phi(N) subspaces, keyed by (p, group orders,
    subgroup elements). Shared between suite workers, hence the lock.
    """

    max_cache_size = 4096

    def __init__(self, max_cache_size=None):
        if max_cache_size is not None:
            self.max_cache_size = max_cache_size
        self.cache = collections.OrderedDict()
        self.hits = 0
        self.misses = 0
        self.lock = threading.Lock()

    def get_phi(self, R: RingDescriptor, G: FiniteAbelianGroup, N: Subgroup) -> IdealSubspace:
        uid = (R.modulus, G.orders, N.elements)
        with self.lock:
            if uid in self.cache:
                self.hits += 1
                self.cache.move_to_end(uid)
                return self.cache[uid]
            self.misses += 1

        J = phi(R, G, N)

        with self.lock:
            self.cache[uid] = J
            if len(self.cache) > self.max_cache_size:
                old_uid, _ = self.cache.popitem(last=False)
                logging.debug(f"Removing Phi of order-{len(old_uid[2])} subgroup in F_{old_uid[0]}{list(old_uid[1])} from cache")
        return J

    def __len__(self):
        return len(self.cache)

    def clear(self):
        with self.lock:
            self.cache.clear()
            self.hits = self.misses = 0
