"""SplitMix64 streams.

Every task ``i`` of a run with seed ``s`` gets its own generator seeded with
``s ^ ((i + 1) * GOLDEN mod 2^64)``, so results never depend on the order in
which tasks are evaluated.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in [0, m) by rejection; m <= 2^64."""
        if m <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            v = self.next()
            if v < limit:
                return v % m


def task_stream(seed: int, index: int) -> SplitMix64:
    return SplitMix64((seed & MASK64) ^ (((index + 1) * GOLDEN) & MASK64))
