"""Why the automorphism must be fixed-point-free of order 3.

An odd-prime automorphism of a self-dual [48,24,10] code has a type
p-(c,f): p-cycles and fixed points.  Counting bounds cut the infinite
grid of candidates to eight types, weight congruences remove the two
largest primes, and published classifications remove everything else
except 3-(16,0).
"""

from cubicsd import feasibility

print("staircase bound g(k, 10):")
for k in (1, 2, 4, 8, 16):
    print("  g(%2d) = %d" % (k, feasibility.g(k, 10)))

survivors = feasibility.surviving_types(48, 10)
print("\ntypes passing the counting bounds:")
print(" ", ", ".join(str(t) for t in survivors))

print("\nfull elimination pipeline:")
for report in feasibility.full_pipeline(48, 10):
    if str(report.type) not in {str(t) for t in survivors}:
        continue
    tag = " [%s]" % report.citation if report.citation else ""
    print("  %-10s %-24s%s" % (report.type, report.status, tag))
    print("      %s" % report.detail)
