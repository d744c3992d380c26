"""The Carlitz action over GF(2)[T] and its Q-torsion for a few small moduli."""
from foldecode import carlitz, field_new, poly

F = field_new(2)
C = carlitz.CarlitzModule(F)


def show(tw):
    terms = []
    for i, c in enumerate(tw):
        if c:
            terms.append(f"({poly.to_string(F, c)})*pi^{i}")
    return " + ".join(terms) or "0"


for a in ("T", "T^2", "T^2+1"):
    print(f"phi_{a} =", show(C.phi(poly.parse(F, a))))

print()
for text in ("T", "T^2+T+1", "T^2", "T^3+T+1"):
    Q = poly.parse(F, text)
    rep = carlitz.torsion_report(F, Q)
    print(f"Q = {text:8s}  |Lambda| = {rep.root_count:2d}  generators = {rep.generator_count}"
          f"  Phi(Q) = {rep.phi_Q}  [K(Lambda):K] = {rep.extension_degree}  ok = {rep.ok}")

print()
for q, d in ((2, 2), (3, 3), (4, 2)):
    print(f"q={q} d={d}: narrow ray class order {carlitz.narrow_ray_class_order(q, d)},"
          f" class field genus {carlitz.class_field_genus(q, d)}")
