import enum


class RingKind(str, enum.Enum):
    """Variable universes used by the encodings"""
    W = "W"   # e, f, x, y, z
    V = "V"   # e, f, z, xt, yt
    L = "L"   # e, f, z (fixed-graph pair checks)


class Side(str, enum.Enum):
    G = "G"
    H = "H"


class Verdict(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    ABORTED = "aborted"

    @classmethod
    def of(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE


class ProductEdges(str, enum.Enum):
    """Which tensor-product edges the J family encodes"""
    MONOTONE = "monotone"   # (i,i')-(j,j') for i<j, i'<j' only, as displayed
    FULL = "full"           # plus the mirror edges (i,j')-(j,i')


class V3Mode(str, enum.Enum):
    """How the 'vertex in no (k-1)-clique' condition is read"""
    LITERAL = "literal"
    VERTEX1 = "vertex1"


class PairSetKind(str, enum.Enum):
    W = "W"
    V = "V"
    VPRIME = "Vprime"
