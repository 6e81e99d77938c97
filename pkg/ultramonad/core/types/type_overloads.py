from fractions import Fraction

PointLabel = str
PointIndex = int
Rational = Fraction
DistanceRow = tuple[Fraction, ...]
DistanceMatrix = tuple[DistanceRow, ...]

# one-line image of a permutation of {0..n-1}
Permutation = tuple[int, ...]
PointTuple = tuple[PointLabel, ...]
