"""Iterated tensor products over label trees.

A multi-factor product state is a LabeledVector whose labels are trees:
a leaf is a ket label of one factor irrep, a pair (left, right) records one
tensorization step.  Trees are built strictly in the association order of
the otimes calls, so (((4,3),1),-1) is a state of ((a x b) x c) x d.

A TensorNode couples an irrep (generic or imported from a two-factor
decomposition) with the expansion of each of its states over such trees.
Expansions are computed on demand and memoized per node, since a fully
eager 4-fold expansion can be very large.

Reserved negative leaf labels (-1, -2, ...) denote rotated basis
directions introduced by chbasis_list, e.g. a vev direction -1.
"""

from __future__ import annotations

from .exactnum import FieldElem, ZERO
from .linalg import LabeledVector, invert_matrix
from .irrep import Irrep, new_imported_irrep
from .tensor import Decomposition, decompose, prepare_with_states

__all__ = [
    "TensorNode",
    "wrap",
    "otimes",
    "expand",
    "untree",
    "tree_str",
    "tree_leaves",
    "filter_factor",
    "chbasis",
    "chbasis_list",
    "is_sym",
    "scale",
    "tensor_coeff",
    "e_lower",
    "comm",
    "scp",
    "scalar_products",
]


def tree_leaves(tree) -> list:
    """Leaf labels left to right."""
    if isinstance(tree, tuple):
        return tree_leaves(tree[0]) + tree_leaves(tree[1])
    return [tree]


def tree_str(tree) -> str:
    if isinstance(tree, tuple):
        return "(%s,%s)" % (tree_str(tree[0]), tree_str(tree[1]))
    return str(tree)


def _graft(shape, it):
    """Rebuild a tree of the given shape taking leaves from the iterator."""
    if isinstance(shape, tuple):
        left = _graft(shape[0], it)
        return (left, _graft(shape[1], it))
    return next(it)


class TensorNode:
    """An irrep together with the expansion of its states over label trees."""

    def __init__(self, irrep: Irrep, fn, factors, shape):
        self.irrep = irrep
        self.factors = factors  # factor Irreps in leaf order
        self.shape = shape  # nested tuple, leaves are None placeholders
        self._fn = fn
        self._memo = {}

    @property
    def nfactors(self) -> int:
        return len(self.factors)

    def expand(self, state: int) -> LabeledVector:
        if state not in self.irrep.kets:
            raise ValueError(f"no state labeled {state}")
        got = self._memo.get(state)
        if got is None:
            got = self._fn(state)
            self._memo[state] = got
        return got

    def __repr__(self):
        return f"TensorNode({self.irrep!r}, {self.nfactors} factors)"


def wrap(r: Irrep) -> TensorNode:
    """A single-factor node: each ket expands to its own leaf."""
    return TensorNode(r, LabeledVector.unit, [r], None)


def otimes(a: TensorNode, b: TensorNode, k: int) -> TensorNode:
    """Tensor two nodes and select the k-th irrep (1-based, construction
    order) of the decomposition of a.irrep x b.irrep."""
    d = Decomposition(a.irrep, b.irrep)
    decompose(d)
    if not 1 <= k <= len(d.found):
        raise ValueError(
            f"irrep index {k} out of range: the product has {len(d.found)} irreps"
        )
    data, states = prepare_with_states(d.found[k - 1], a.irrep, b.irrep)
    imp = new_imported_irrep(a.irrep.algebra, data)

    def fn(s):
        terms = []
        for c, (al, bl) in states[s].terms:
            for ca, ta in a.expand(al).terms:
                for cb, tb in b.expand(bl).terms:
                    terms.append((c * ca * cb, (ta, tb)))
        return LabeledVector(terms)

    return TensorNode(imp, fn, a.factors + b.factors, (a.shape, b.shape))


def expand(t: TensorNode, state: int) -> LabeledVector:
    return t.expand(state)


def untree(t: TensorNode, fmt: str = "plain") -> list:
    """All states with their expansions rendered as (coeff, tree) listings."""
    out = []
    for lab in sorted(t.irrep.kets):
        e = t.expand(lab)
        body = "; ".join(
            '("%s", "%s")' % (c.render(fmt), tree_str(tr)) for c, tr in e.terms
        )
        out.append((lab, "[" + body + "]"))
    return out


def _check_factor(t: TensorNode, factor: int):
    if not 1 <= factor <= t.nfactors:
        raise ValueError(
            f"factor {factor} out of range: the node has {t.nfactors} factors"
        )
    return factor - 1


def filter_factor(t: TensorNode, factor: int, keep) -> TensorNode:
    """Keep only terms whose leaf at the factor position is in keep.
    No renormalization is applied."""
    idx = _check_factor(t, factor)
    keep_set = set(keep)

    def fn(s):
        return LabeledVector(
            (c, tr) for c, tr in t.expand(s).terms
            if tree_leaves(tr)[idx] in keep_set
        )

    return TensorNode(t.irrep, fn, t.factors, t.shape)


def chbasis(t: TensorNode, factor: int, trafo) -> TensorNode:
    """Substitute leaf labels at the factor position through trafo, a list
    of (old label, LabeledVector over new labels).  Encountering a leaf
    missing from trafo is an error."""
    idx = _check_factor(t, factor)
    tmap = dict(trafo)

    def fn(s):
        terms = []
        for c, tr in t.expand(s).terms:
            leaves = tree_leaves(tr)
            sub = tmap.get(leaves[idx])
            if sub is None:
                raise ValueError(
                    f"label {leaves[idx]} at factor {factor} has no image "
                    "in the basis transformation"
                )
            for c2, new_lab in sub.terms:
                leaves2 = list(leaves)
                leaves2[idx] = new_lab
                terms.append((c * c2, _graft(tr, iter(leaves2))))
        return LabeledVector(terms)

    return TensorNode(t.irrep, fn, t.factors, t.shape)


def chbasis_list(basis, offset: int):
    """Transformation rule expressing the generic labels offset+1.. in a
    new basis; the i-th basis vector becomes the reserved label -(i).

    basis[i] gives the new vector in terms of the old labels; the returned
    trafo holds the inverse, suitable for chbasis.  A basis vector touching
    labels outside offset+1..offset+len(basis) or a singular basis is an
    error.
    """
    m = len(basis)
    if m == 0:
        return []
    labels = [offset + 1 + j for j in range(m)]
    lset = set(labels)
    for v in basis:
        for lab in v.labels():
            if lab not in lset:
                raise ValueError(
                    f"basis vector touches label {lab} outside "
                    f"{labels[0]}..{labels[-1]}"
                )
    mat = [[basis[i].get(labels[j]) for i in range(m)] for j in range(m)]
    inv = invert_matrix(mat)
    trafo = []
    for j in range(m):
        vec = LabeledVector(
            (inv[i][j], -(i + 1)) for i in range(m) if not inv[i][j].is_zero()
        )
        trafo.append((labels[j], vec))
    return trafo


def is_sym(t: TensorNode, f1: int, f2: int) -> int:
    """+1 / -1 if swapping the two factors fixes / negates every state's
    expansion, 0 for mixed or undecided symmetry."""
    i1 = _check_factor(t, f1)
    i2 = _check_factor(t, f2)
    fa, fb = t.factors[i1], t.factors[i2]
    if fa.algebra != fb.algebra or fa.hw != fb.hw:
        raise ValueError(
            f"factors {f1} and {f2} carry different irreps "
            f"({fa.hw} vs {fb.hw})"
        )
    verdict = 0
    for lab in t.irrep.kets:
        e = t.expand(lab)
        if e.is_zero():
            continue
        swapped = LabeledVector(
            (c, _graft(tr, iter(_swapped_leaves(tr, i1, i2))))
            for c, tr in e.terms
        )
        if swapped == e:
            v = 1
        elif swapped == -e:
            v = -1
        else:
            return 0
        if verdict == 0:
            verdict = v
        elif verdict != v:
            return 0
    return verdict


def _swapped_leaves(tr, i1, i2):
    leaves = tree_leaves(tr)
    leaves[i1], leaves[i2] = leaves[i2], leaves[i1]
    return leaves


def scale(t: TensorNode, c: FieldElem) -> TensorNode:
    return TensorNode(
        t.irrep, lambda s: t.expand(s).scaled(c), t.factors, t.shape
    )


def tensor_coeff(t: TensorNode, state: int, leaves) -> FieldElem:
    """Coefficient of the given leaf combination in a state's expansion."""
    if len(leaves) != t.nfactors:
        raise ValueError(
            f"expected {t.nfactors} leaf labels, got {len(leaves)}"
        )
    tr = _graft(t.shape, iter(leaves))
    return t.expand(state).get(tr)


# --------------------------------------------------- operator helpers

def e_lower(r: Irrep, root: int):
    """The lowering operator E_-root of r as a function on vectors."""
    if not 1 <= root <= r.algebra.rank:
        raise ValueError(f"root index must lie in 1..{r.algebra.rank}")

    def op(v: LabeledVector) -> LabeledVector:
        terms = []
        for c, lab in v.terms:
            for c2, t2 in r.lower(root, lab).terms:
                terms.append((c * c2, t2))
        return LabeledVector(terms)

    return op


def comm(op_a, op_b):
    """Commutator of two operators on vectors."""

    def op(v: LabeledVector) -> LabeledVector:
        return op_a(op_b(v)) - op_b(op_a(v))

    return op


def scp(r: Irrep, u: LabeledVector, v: LabeledVector) -> FieldElem:
    """Scalar product of two vectors over r's basis labels."""
    return r.vector_scp(u, v)


def scalar_products(r: Irrep, start: int, count: int):
    """Gram matrix of the states start .. start+count-1."""
    labels = list(range(start, start + count))
    for lab in labels:
        if lab not in r.kets:
            raise ValueError(f"no state labeled {lab}")
    return [[r.scalar_product(a, b) for b in labels] for a in labels]
