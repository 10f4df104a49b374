"""
Two disjoint monochromatic tight cycles, with parity control
============================================================

Desk-scale exact search: find a red and a blue tight cycle, vertex-disjoint,
covering all but a budgeted number of vertices, with chosen length parities.
"""

from rcover import Color, loose_from_tight, search_cycle_pair, verify_loose_cycle
from rcover.cycles import verify_cycle_pair
from rcover.generators import uniform_instance

col = uniform_instance(9, 0.5, seed=31)

# Ask for a pair leaving at most 1 vertex uncovered, any parities.
out = search_cycle_pair(col.host, col, max_uncovered=1)
print("status:", out.status)
if out.found:
    print("red cycle order: ", out.pair.red.order)
    print("blue cycle order:", out.pair.blue.order)
    print("uncovered:", out.pair.uncovered)
    print("pair verifies:", verify_cycle_pair(out.pair, col.host, col)[0])

# Parity control: demand an even red cycle.  The search enumerates covers
# largest-first, so a found pair has the minimum possible uncovered count.
out = search_cycle_pair(col.host, col, max_uncovered=3, parity_red="even")
print("even red:", out.status, out.found and out.pair.red.length)

# An even tight cycle of length >= 6 contains a loose cycle on the same
# vertices: take every other implied edge.  Demonstrated on an all-red host,
# where the spanning even cycle always exists.
from rcover.generators import monochromatic_instance

mono = monochromatic_instance(10, Color.RED)
out = search_cycle_pair(mono.host, mono, max_uncovered=0, parity_red="even")
tight = out.pair.red
loose = loose_from_tight(tight)
print("tight order:", tight.order)
print("loose edges:", list(loose.edges))
print("loose verifies:", verify_loose_cycle(loose, mono.host, mono, Color.RED))

# Infeasible demands end in an exhausted (proof of absence) status: an
# odd+odd pair can never cover an even vertex count exactly.
out = search_cycle_pair(col.host, col, max_uncovered=0, parity_red="odd", parity_blue="odd")
print("odd/odd exact cover of 9:", out.status)
