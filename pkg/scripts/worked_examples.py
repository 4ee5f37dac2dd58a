"""Print the small worked examples: the R_6 census, the lambda=332 case table,
and both remove-then-add ways for 4322 -> 631."""
from jmkit.identities import analyze_pair_cancellation, remove_add_paths
from jmkit.permutations import build_R, parse_cycles
from jmkit.symfunc import lhs_eq3, rhs_eq3

sigma = parse_cycles("(2 5 3)(1)(4)", 6)
print(f"R_6({sigma}):")
for perm, _ in build_R(sigma).terms:
    print("   ", perm)
print("census:", build_R(sigma).cycle_type_census())

lam = (3, 3, 2)
print(f"\nsum_j p_j Dp_(j+1) s_{lam} = {lhs_eq3(lam)!r}")
print(f"sum_x c(x) s_(lam-x)     = {rhs_eq3(lam)!r}")
for zeta in [(3, 2, 2), (4, 3)]:
    print(f"  paths to {zeta}:")
    for path in remove_add_paths(lam, zeta):
        print(f"    j={path.j} nu={path.nu} ht_removed={path.height_removed} "
              f"ht_added={path.height_added} sign={path.sign:+d}")

report = analyze_pair_cancellation((4, 3, 2, 2), (6, 3, 1))
print("\n4322 -> 631:")
for way in report.ways:
    print(f"    j={way.j} nu={way.nu} d={way.d} a={way.a} r={way.r} sign={way.net_sign:+d}")
