"""Count degree-h irreducibles over GF(2) by their residue modulo T^2+T+1 and
compare each count with the explicit error bound."""
from foldecode import chebotarev, field_new

F = field_new(2)
Q = [1, 1, 1]

print(f"{'h':>2} {'class':>6} {'count':>6} {'expected':>9} {'bound':>7}")
for h in range(4, 11):
    hist = chebotarev.chebotarev_check(F, Q, h)
    for r in hist.rows:
        cls = "".join(map(str, r.class_repr[::-1]))
        print(f"{h:>2} {cls:>6} {r.count:>6} {float(r.expected):>9.2f} {float(r.bound):>7.1f}")
    print(f"   max deviation / q^(h/2) = {hist.normalized_deviation:.3f}")
