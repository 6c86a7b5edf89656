"""SplitMix64, a small fully specified 64-bit generator.

Instances must be reproducible from a seed in any language, so the generator
and every derived draw are spelled out here instead of delegating to
``random``:

* state advances by 0x9E3779B97F4A7C15 (mod 2**64) per draw; the output is
  the advanced state passed through the SplitMix64 finaliser
  (xor-shift 30, * 0xBF58476D1CE4E5B9, xor-shift 27, * 0x94D049BB133111EB,
  xor-shift 31).
* ``below(b)`` returns ``x % b`` for the first draw ``x`` with
  ``x < 2**64 - (2**64 % b)`` (rejection removes modulo bias).
* ``coin()`` is the top bit of one draw.
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

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def coin(self) -> bool:
        return bool(self.next() >> 63)
