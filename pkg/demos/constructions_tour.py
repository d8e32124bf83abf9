"""Building the explicit two-weight code families and checking them live.

Each family comes with predicted parameters; here we enumerate the actual
codewords and confirm distances, antipodality, orthogonal-array strength
and weight counts.
"""
from twodist import (
    TwoDistParams,
    distance_distribution,
    is_antipodal,
    strength,
    verify_two_distance,
)
from twodist.constructions import (
    arc_code,
    complementary_code,
    dm_code,
    pencil_code,
    seed_code,
    small_family_code,
    su1_code,
    su2_code,
)

# Difference matrices D(q, mu) give antipodal two-distance codes with
# n = q*mu, N = q^2*mu and distances {(q-1)mu, q*mu}.  The binary one
# below attains the Gray-Rankin bound: 16 words is optimal.
code = dm_code(2, 1, 2)
report = verify_two_distance(code, TwoDistParams(2, 8, 4, 4))
print(f"dm(2,1,2): ({code.n}, {code.size}) distances {report.observed}, "
      f"antipodal={is_antipodal(code)}, strength={strength(code)}")

code = dm_code(3, 1, 1)
print(f"dm(3,1,1): ({code.n}, {code.size}) distances "
      f"{distance_distribution(code).support()} over q=3")

# Concatenating a two-weight MDS seed with a simplex gives the classic
# binary [9, 4] code with weights {4, 6} (9 and 6 words respectively).
g = su2_code(2, 2, 3)
print(f"\nsu2(2,2,3): [{g.n}, {g.k}] weights {g.weight_distribution()}")

# Removing copies of an embedded subgeometry from stacked simplex copies:
# the [12, 4, {6, 8}] code is length-optimal for its dimension and
# minimum distance (Griesmer bound with equality).
g1 = su1_code(2, 4, 2, 1, 1)
print(f"su1(2,4,2,1,1): [{g1.n}, {g1.k}] weights {g1.weight_distribution()}")

# Every linear two-weight code has a complementary code completing its
# generator columns to full copies of projective space; side by side the
# two generators span an equidistant code.
comp = complementary_code(g)
print(f"complement of su2(2,2,3): [{comp.n}, {comp.k}] weights {comp.weight_distribution()}")

# Hyperovals in even-characteristic projective planes give [q+2, 3]
# codes whose larger distance equals the length.
a = arc_code(4)
print(f"\narc(4): [{a.n}, {a.k}] over GF(4), weights {a.weight_distribution()}")

# Two-dimensional codes exist for every distance gap: pad one generator
# of the equidistant [q+1, 2, q] seed with zeros and the other with ones.
p = pencil_code(3, 2)
print(f"pencil(3,2): [{p.n}, {p.k}] over GF(3), weights {p.weight_distribution()}")

# Small nonlinear families: all weight-2 words (distances {2, 4}) and
# disjoint weight-d blocks (distances {d, 2d} - exactly optimal for odd d).
w2 = small_family_code("weight2", 7)
print(f"\nweight2(7): {w2.size} words, distances {distance_distribution(w2).support()}")
dj = small_family_code("disjoint", 15, d=3)
print(f"disjoint(15, d=3): {dj.size} words, distances {distance_distribution(dj).support()}")

# Seeds on their own: the simplex is equidistant, the short MDS code has
# two weights already.
s = seed_code("simplex", 2, 3)
print(f"\nsimplex(2,3): [{s.n}, {s.k}] weights {s.weight_distribution()}")
m = seed_code("mds2", 4, 3)
print(f"mds2(4,3): [{m.n}, {m.k}] over GF(4), weights {m.weight_distribution()}")
