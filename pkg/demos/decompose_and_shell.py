"""
Certificates, shellings and spheres
===================================

Decompose Ind_r of a random tree, turn the certificate into a shelling,
and read off the homotopy type as a wedge of spheres.
"""

from indvd import decompose, ind_complex, random_tree, reduced_betti, verify_certificate
from indvd.oracle import certificate_size, dumps_certificate, shelling_from_vd, verify_shelling
from indvd.topology import sphere_counts

t = random_tree(9, seed=3)
print("edges:", t.edges)

for r in (1, 2, 3):
    k = ind_complex(t, r)
    cert = decompose(t, r)
    assert verify_certificate(cert, k)
    order = shelling_from_vd(cert, k)
    print(f"r={r}: {len(k)} facets, shelling ok={verify_shelling(k, order.facets)}")
    # facets whose restriction is the whole facet each add one sphere
    print("   spheres by dimension:", sphere_counts(k, order))
    print("   reduced Betti numbers:", reduced_betti(k).as_dict())

cert = decompose(t, 3)
print("certificate nodes:", certificate_size(cert), "JSON bytes:", len(dumps_certificate(cert)))
