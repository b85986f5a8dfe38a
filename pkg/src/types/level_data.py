class LevelData(object):
    """
    Divisor data of a level N
    Args:
        N: positive integer
        divisors: ascending divisors of N
        squarefree: True if no square > 1 divides N
    """
    def __init__(self, N, divisors, squarefree):
        self.N = N
        self.divisors = tuple(divisors)
        self.squarefree = squarefree

    @property
    def divisor_count(self):
        return len(self.divisors)

    def pairs(self):
        """
        Fricke pairs (d, N/d) with d^2 < N, in ascending order of d
        """
        return [(d, self.N // d) for d in self.divisors if d * d < self.N]

    def __repr__(self):
        return "LevelData(N={:}, divisors={:}, squarefree={:})".format(
            self.N, list(self.divisors), self.squarefree)
