"""Definition-level vertex decomposability, certificates and shellings.

``vd_check`` decides vertex decomposability by trying shedding vertices in
ascending label order, memoized on the exact facet antichain.  Its output is
either a :class:`Certificate` tree or a :class:`NonVDWitness`; both can be
replayed independently (``verify_certificate`` / ``replay_witness``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Union

from ._bits import from_mask, iter_bits, to_mask
from .complex import (
    VOID,
    SimplicialComplex,
    _face_mask,
    deletion,
    is_face,
    is_simplex,
    join_all,
    link,
    restrict,
)


class CertificateFormatError(ValueError):
    pass


# -- certificate nodes --------------------------------------------------------

@dataclass(frozen=True)
class SimplexLeaf:
    """Certifies the simplex on ``face``; ``face=None`` stands for the void complex."""

    face: frozenset[int] | None
    facets: tuple[frozenset[int], ...] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class JoinNode:
    children: tuple["Certificate", ...]
    partition: tuple[frozenset[int], ...]
    facets: tuple[frozenset[int], ...] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class ShedNode:
    vertex: int
    deletion: "Certificate"
    link: "Certificate"
    facets: tuple[frozenset[int], ...] | None = field(default=None, compare=False)


Certificate = Union[SimplexLeaf, JoinNode, ShedNode]


@dataclass(frozen=True)
class NotShedding:
    facet: frozenset[int]  # facet F of del(v) with F ∪ {v} still a face


@dataclass(frozen=True)
class DelFails:
    witness: "NonVDWitness"


@dataclass(frozen=True)
class LinkFails:
    witness: "NonVDWitness"


@dataclass(frozen=True)
class NonVDWitness:
    key: tuple[int, ...]
    reasons: dict[int, Union[NotShedding, DelFails, LinkFails]]

    @property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.key)


def leaf_for(k: SimplicialComplex) -> SimplexLeaf:
    if not is_simplex(k):
        raise ValueError("not a simplex")
    return SimplexLeaf(None if k.is_void else from_mask(k.masks[0]))


# -- shedding -----------------------------------------------------------------

def _offending_facet(k: SimplicialComplex, v: int) -> int | None:
    bit = 1 << v
    for f in deletion(k, bit).masks:
        g = f | bit
        if any(g & m == g for m in k.masks):
            return f
    return None


def is_shedding(k: SimplicialComplex, v: int) -> bool:
    if not k.support_mask >> v & 1:
        raise ValueError(f"{v} is not a vertex of the complex")
    return _offending_facet(k, v) is None


def shedding_vertices(k: SimplicialComplex) -> list[int]:
    return [v for v in iter_bits(k.support_mask) if _offending_facet(k, v) is None]


# -- decision -----------------------------------------------------------------

class VDOracle:
    """One memoized decision session.  The memo is insert-only."""

    def __init__(self, memo: bool = True):
        self.use_memo = memo
        self.memo: dict[tuple[int, ...], Certificate | NonVDWitness] = {}

    def check(self, k: SimplicialComplex) -> Certificate | NonVDWitness:
        if self.use_memo:
            hit = self.memo.get(k.masks)
            if hit is not None:
                return hit
        out = self._check(k)
        if self.use_memo:
            out = self.memo.setdefault(k.masks, out)
        return out

    def _check(self, k: SimplicialComplex) -> Certificate | NonVDWitness:
        if is_simplex(k):
            return leaf_for(k)
        reasons = {}
        for v in iter_bits(k.support_mask):
            bad = _offending_facet(k, v)
            if bad is not None:
                reasons[v] = NotShedding(from_mask(bad))
                continue
            d = self.check(deletion(k, 1 << v))
            if isinstance(d, NonVDWitness):
                reasons[v] = DelFails(d)
                continue
            lk = self.check(link(k, 1 << v))
            if isinstance(lk, NonVDWitness):
                reasons[v] = LinkFails(lk)
                continue
            return ShedNode(v, d, lk)
        return NonVDWitness(k.masks, reasons)


def vd_check(k: SimplicialComplex, memo: bool = True) -> Certificate | NonVDWitness:
    return VDOracle(memo).check(k)


def is_vertex_decomposable(k: SimplicialComplex) -> bool:
    return not isinstance(vd_check(k), NonVDWitness)


def replay_witness(w: NonVDWitness) -> bool:
    """Re-derive every recorded reason from scratch."""
    k = w.complex
    if is_simplex(k) or set(w.reasons) != set(iter_bits(k.support_mask)):
        return False
    for v, reason in w.reasons.items():
        bad = _offending_facet(k, v)
        if isinstance(reason, NotShedding):
            if bad is None or from_mask(bad) != reason.facet:
                return False
            continue
        if bad is not None:
            return False
        if isinstance(reason, DelFails):
            sub, expected = reason.witness, deletion(k, 1 << v)
        else:
            sub, expected = reason.witness, link(k, 1 << v)
            if isinstance(vd_check(deletion(k, 1 << v)), NonVDWitness):
                return False
        if sub.complex != expected or not replay_witness(sub):
            return False
    return True


# -- verification -------------------------------------------------------------

def certified_complex(cert: Certificate) -> SimplicialComplex:
    """Rebuild the complex a certificate talks about (no validity checks)."""
    if isinstance(cert, SimplexLeaf):
        return VOID if cert.face is None else SimplicialComplex((to_mask(cert.face),))
    if isinstance(cert, JoinNode):
        return join_all(certified_complex(c) for c in cert.children)
    d = certified_complex(cert.deletion)
    lk = certified_complex(cert.link)
    bit = 1 << cert.vertex
    return SimplicialComplex.from_masks(list(d.masks) + [m | bit for m in lk.masks])


def _facets_match(cert: Certificate, k: SimplicialComplex) -> bool:
    return cert.facets is None or tuple(sorted(to_mask(f) for f in cert.facets)) == tuple(sorted(k.masks))


def verify_certificate(cert: Certificate, k: SimplicialComplex) -> bool:
    if not _facets_match(cert, k):
        return False
    if isinstance(cert, SimplexLeaf):
        if cert.face is None:
            return k.is_void
        return k.masks == (to_mask(cert.face),)
    if isinstance(cert, JoinNode):
        parts = [to_mask(p) for p in cert.partition]
        if len(parts) != len(cert.children):
            return False
        union = 0
        for p in parts:
            if union & p:
                return False
            union |= p
        if union != k.support_mask or k.is_void:
            return False
        pieces = [restrict(k, p) for p in parts]
        if any(piece.support_mask != p for piece, p in zip(pieces, parts)):
            return False
        if join_all(pieces) != k:
            return False
        return all(verify_certificate(c, piece) for c, piece in zip(cert.children, pieces))
    if isinstance(cert, ShedNode):
        v = cert.vertex
        if not k.support_mask >> v & 1 or _offending_facet(k, v) is not None:
            return False
        return verify_certificate(cert.deletion, deletion(k, 1 << v)) and verify_certificate(
            cert.link, link(k, 1 << v)
        )
    return False


# -- certificates for links ---------------------------------------------------

def certificate_link(cert: Certificate, f: Iterable[int] | int, k: SimplicialComplex | None = None) -> Certificate:
    """A certificate for link(k, f) obtained by rewriting ``cert``.

    ``k`` is the complex certified by ``cert``; it is rebuilt from the
    certificate when omitted.
    """
    if k is None:
        k = certified_complex(cert)
    f = _face_mask(f)
    if not is_face(k, f):
        raise ValueError(f"{sorted(iter_bits(f))} is not a face")
    return _cert_link(cert, f, k)


def _cert_link(cert: Certificate, f: int, k: SimplicialComplex) -> Certificate:
    if f == 0:
        return cert
    if isinstance(cert, SimplexLeaf):
        return SimplexLeaf(from_mask(to_mask(cert.face) & ~f))
    if isinstance(cert, JoinNode):
        children, parts = [], []
        for child, p in zip(cert.children, cert.partition):
            pm = to_mask(p)
            sub = _cert_link(child, f & pm, restrict(k, pm))
            children.append(sub)
            parts.append(certified_complex(sub).vertices)
        return JoinNode(tuple(children), tuple(parts))
    v = cert.vertex
    bit = 1 << v
    if f & bit:
        return _cert_link(cert.link, f & ~bit, link(k, bit))
    if not is_face(k, f | bit):
        return _cert_link(cert.deletion, f, deletion(k, bit))
    out = ShedNode(
        v,
        _cert_link(cert.deletion, f, deletion(k, bit)),
        _cert_link(cert.link, f, link(k, bit)),
    )
    target = link(k, f)
    if _offending_facet(target, v) is None:
        return out
    fallback = vd_check(target)
    if isinstance(fallback, NonVDWitness):
        raise AssertionError("link of a vertex decomposable complex refuted; input certificate was invalid")
    return fallback


# -- shellings ----------------------------------------------------------------

@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[frozenset[int], ...]
    restriction: tuple[frozenset[int], ...]


def _shelling_masks(cert: Certificate) -> list[int]:
    if isinstance(cert, SimplexLeaf):
        return [] if cert.face is None else [to_mask(cert.face)]
    if isinstance(cert, JoinNode):
        order = [0]
        for child in cert.children:
            sub = _shelling_masks(child)
            order = [a | b for a in order for b in sub]
        return order
    bit = 1 << cert.vertex
    return _shelling_masks(cert.deletion) + [m | bit for m in _shelling_masks(cert.link)]


def shelling_from_vd(cert: Certificate, k: SimplicialComplex | None = None) -> ShellingOrder:
    """Shelling read off a certificate: deletion facets first, then v * link."""
    if k is None:
        k = certified_complex(cert)
    if not verify_certificate(cert, k):
        raise ValueError("certificate does not verify")
    order = _shelling_masks(cert)
    restr = _restrictions(order)
    return ShellingOrder(tuple(from_mask(m) for m in order), tuple(from_mask(m) for m in restr))


def _restrictions(order: list[int]) -> list[int]:
    out = []
    for j, fj in enumerate(order):
        r = 0
        for x in iter_bits(fj):
            ridge = fj & ~(1 << x)
            if any(ridge & fi == ridge for fi in order[:j]):
                r |= 1 << x
        out.append(r)
    return out


def verify_shelling(k: SimplicialComplex, order: Iterable[Iterable[int]]) -> bool:
    masks = [to_mask(f) for f in order]
    if len(masks) != len(set(masks)) or sorted(masks) != sorted(k.masks):
        return False
    restr = _restrictions(masks)
    for j, fj in enumerate(masks):
        for fi in masks[:j]:
            # need x in R(F_j) with x not in F_i
            if not (fj & ~fi & restr[j]):
                return False
    return True


def restriction_sets(k: SimplicialComplex, order: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    order = [to_mask(f) for f in order]
    if not verify_shelling(k, [from_mask(m) for m in order]):
        raise ValueError("order is not a shelling of the complex")
    return [from_mask(m) for m in _restrictions(order)]


# -- document format ----------------------------------------------------------

def _facets_out(facets):
    return [sorted(f) for f in sorted(facets, key=sorted)]


def cert_to_dict(cert: Certificate) -> dict:
    if isinstance(cert, SimplexLeaf):
        doc = {"node": "simplex", "vertices": None if cert.face is None else sorted(cert.face)}
    elif isinstance(cert, JoinNode):
        doc = {
            "node": "join",
            "partition": [sorted(p) for p in cert.partition],
            "children": [cert_to_dict(c) for c in cert.children],
        }
    else:
        doc = {"node": "shed", "vertex": cert.vertex, "del": cert_to_dict(cert.deletion), "link": cert_to_dict(cert.link)}
    if cert.facets is not None:
        doc["facets"] = _facets_out(cert.facets)
    return doc


def cert_from_dict(doc: dict) -> Certificate:
    try:
        tag = doc["node"]
        facets = doc.get("facets")
        facets = None if facets is None else tuple(frozenset(int(v) for v in f) for f in facets)
        if tag == "simplex":
            verts = doc["vertices"]
            return SimplexLeaf(None if verts is None else frozenset(int(v) for v in verts), facets)
        if tag == "join":
            return JoinNode(
                tuple(cert_from_dict(c) for c in doc["children"]),
                tuple(frozenset(int(v) for v in p) for p in doc["partition"]),
                facets,
            )
        if tag == "shed":
            return ShedNode(int(doc["vertex"]), cert_from_dict(doc["del"]), cert_from_dict(doc["link"]), facets)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"malformed certificate node: {exc!r}") from None
    raise CertificateFormatError(f"unknown node tag {tag!r}")


def with_facets(cert: Certificate, k: SimplicialComplex | None = None) -> Certificate:
    """Copy of ``cert`` recording at every node the facets of the complex it certifies."""
    if k is None:
        k = certified_complex(cert)
    facets = tuple(k.facets)
    if isinstance(cert, SimplexLeaf):
        return SimplexLeaf(cert.face, facets)
    if isinstance(cert, JoinNode):
        kids = tuple(with_facets(c, restrict(k, to_mask(p))) for c, p in zip(cert.children, cert.partition))
        return JoinNode(kids, cert.partition, facets)
    bit = 1 << cert.vertex
    return ShedNode(cert.vertex, with_facets(cert.deletion, deletion(k, bit)), with_facets(cert.link, link(k, bit)), facets)


def witness_to_dict(w: NonVDWitness) -> dict:
    reasons = {}
    for v, reason in sorted(w.reasons.items()):
        if isinstance(reason, NotShedding):
            reasons[str(v)] = {"reason": "not_shedding", "facet": sorted(reason.facet)}
        elif isinstance(reason, DelFails):
            reasons[str(v)] = {"reason": "del_fails", "witness": witness_to_dict(reason.witness)}
        else:
            reasons[str(v)] = {"reason": "link_fails", "witness": witness_to_dict(reason.witness)}
    return {"node": "witness", "facets": _facets_out(from_mask(m) for m in w.key), "reasons": reasons}


def witness_from_dict(doc: dict) -> NonVDWitness:
    key = SimplicialComplex.from_masks(to_mask(f) for f in doc["facets"]).masks
    reasons = {}
    for v, r in doc["reasons"].items():
        if r["reason"] == "not_shedding":
            reasons[int(v)] = NotShedding(frozenset(r["facet"]))
        elif r["reason"] == "del_fails":
            reasons[int(v)] = DelFails(witness_from_dict(r["witness"]))
        else:
            reasons[int(v)] = LinkFails(witness_from_dict(r["witness"]))
    return NonVDWitness(key, reasons)


def dumps_certificate(cert: Certificate) -> str:
    return json.dumps(cert_to_dict(cert), indent=1) + "\n"


def loads_certificate(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(str(exc)) from None
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate document must be an object")
    return cert_from_dict(doc)


def certificate_size(cert: Certificate) -> int:
    if isinstance(cert, SimplexLeaf):
        return 1
    if isinstance(cert, JoinNode):
        return 1 + sum(certificate_size(c) for c in cert.children)
    return 1 + certificate_size(cert.deletion) + certificate_size(cert.link)


__all__ = [
    "Certificate", "SimplexLeaf", "JoinNode", "ShedNode", "NonVDWitness", "NotShedding", "DelFails",
    "LinkFails", "ShellingOrder", "VDOracle", "is_shedding", "shedding_vertices", "vd_check",
    "is_vertex_decomposable", "replay_witness", "verify_certificate", "certified_complex",
    "certificate_link", "shelling_from_vd", "verify_shelling", "restriction_sets", "cert_to_dict",
    "cert_from_dict", "witness_to_dict", "witness_from_dict", "dumps_certificate", "loads_certificate",
    "with_facets", "certificate_size", "leaf_for",
]
