"""Line-bundle cohomology bookkeeping on the flag variety.

Exact statements only: Bott's theorem in characteristic zero; in
characteristic l the Borel-Weil-Bott statement inside the bounded alcove
region, plus the characteristic-free vanishing for weights mu with
<mu, kappa_vee> = -1 for a simple root kappa (equivalently, mu + rho on a
simple wall).  Everything else is refused with NotDecidable rather than
guessed.

Euler characteristics, potential supports (psupp) and the table verifier are
combinatorial in the weight multiset and need no cohomology beyond this.
"""

from __future__ import annotations

from dataclasses import dataclass

from .breps import WeightMultiset, build_rep, parse_rep
from .weights import A2, Located, OutsideLocus, RootDatum, Singular, Weight


class NotDecidable(Exception):
    """Cohomology cannot be pinned down by the implemented statements."""


class NotBWBGood(Exception):
    """A weight multiset leaves the decidable locus; carries the witnesses."""

    def __init__(self, witnesses: WeightMultiset):
        super().__init__(f"weights outside the BWB locus: {witnesses}")
        self.witnesses = witnesses


class GrothendieckElement:
    """Formal integer combination of dominant weights, sum of c_lam [V(lam)]."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[Weight, int] = {}
        pairs = terms.items() if isinstance(terms, dict) else terms
        for lam, c in pairs:
            if any(x < 0 for x in lam):
                raise ValueError(f"non-dominant weight {lam} in a Grothendieck class")
            if c:
                acc[lam] = acc.get(lam, 0) + c
        self.terms: tuple[tuple[Weight, int], ...] = tuple(
            sorted((lam, c) for lam, c in acc.items() if c)
        )

    @classmethod
    def of(cls, lam: Weight, c: int = 1) -> "GrothendieckElement":
        return cls([(lam, c)])

    @classmethod
    def zero(cls) -> "GrothendieckElement":
        return cls()

    def __eq__(self, other):
        return isinstance(other, GrothendieckElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return GrothendieckElement(list(self.terms) + list(other.terms))

    def __sub__(self, other):
        return GrothendieckElement(list(self.terms) + [(l, -c) for l, c in other.terms])

    def __neg__(self):
        return GrothendieckElement([(l, -c) for l, c in self.terms])

    def scale(self, n: int) -> "GrothendieckElement":
        return GrothendieckElement([(l, n * c) for l, c in self.terms])

    def coefficient(self, lam: Weight) -> int:
        for l, c in self.terms:
            if l == lam:
                return c
        return 0

    def dimension(self, datum: RootDatum = A2) -> int:
        return sum(c * weyl_dim(lam, datum) for lam, c in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        # descending weights read better: [V(1,1)] before [V(0,0)]
        parts = []
        for lam, c in sorted(self.terms, reverse=True):
            v = "[V(" + ",".join(str(x) for x in lam) + ")]"
            if not parts:
                if c == 1:
                    parts.append(v)
                elif c == -1:
                    parts.append("-" + v)
                else:
                    parts.append(f"{c}{v}")
            else:
                sign = " + " if c > 0 else " - "
                a = abs(c)
                parts.append(sign + (v if a == 1 else f"{a}{v}"))
        return "".join(parts)

    def __repr__(self):
        return f"<{self}>"


def weyl_dim(lam: Weight, datum: RootDatum = A2) -> int:
    """Dimension of the characteristic-zero irreducible V(lam)."""
    if not datum.dominant(lam):
        raise ValueError(f"weyl_dim needs a dominant weight, got {lam}")
    shifted = datum.add(lam, datum.rho)
    num = 1
    den = 1
    for c in datum.positive_coroots:
        num *= datum.pairing(shifted, c)
        den *= datum.pairing(datum.rho, c)
    assert num % den == 0
    return num // den


def euler_char(rep: WeightMultiset, datum: RootDatum = A2) -> GrothendieckElement:
    """chi(V) = sum over weights of (-1)^{l(w)} [V(w . mu)], zero on walls.

    Characteristic independent and total: this is the Weyl/Bott algorithm in
    the Grothendieck group.
    """
    terms = []
    for mu, mult in rep:
        res = datum.locate(mu, 0)
        if isinstance(res, Singular):
            continue
        assert isinstance(res, Located)
        terms.append((res.lam, (-1) ** res.w.length * mult))
    return GrothendieckElement(terms)


def line_cohomology(mu: Weight, l: int, datum: RootDatum = A2) -> dict[int, GrothendieckElement]:
    """H^i(G/B, O(mu)) as {degree: class}, omitting zero groups.

    l = 0 is Bott's theorem.  For prime l the answer is asserted only when
    <mu + rho, kappa_vee> = 0 for a simple kappa (characteristic-free
    vanishing) or the dot orbit of mu meets the closed bottom alcove;
    otherwise NotDecidable is raised.
    """
    res = datum.locate(mu, l)
    if isinstance(res, Singular):
        if l == 0:
            return {}
        shifted = datum.add(mu, datum.rho)
        simple = datum.positive_coroots[: datum.rank]
        if any(datum.pairing(shifted, c) == 0 for c in simple):
            return {}
        # singular only for a non-simple wall: decidable only inside the locus
        if datum.in_bwb_locus(mu, l):
            return {}
        raise NotDecidable(f"singular weight {mu} outside the bounded region at l={l}")
    if isinstance(res, OutsideLocus):
        raise NotDecidable(f"regular weight {mu} outside the bounded region at l={l}")
    assert isinstance(res, Located)
    return {res.w.length: GrothendieckElement.of(res.lam)}


def bwb_good(rep: WeightMultiset, l: int, datum: RootDatum = A2) -> tuple[bool, WeightMultiset]:
    """Whether every weight lies in the BWB locus; witnesses on failure."""
    bad = {}
    for mu, mult in rep:
        if not datum.in_bwb_locus(mu, l):
            bad[mu] = mult
    witnesses = WeightMultiset(bad)
    return (not bad, witnesses)


def psupp(rep: WeightMultiset, i: int, l: int, datum: RootDatum = A2) -> WeightMultiset:
    """Potential support in cohomological degree i for a BWB-good multiset.

    The multiplicity of a dominant lam in the bounded region is the sum of
    the multiplicities of w . lam over all w of length i.
    """
    good, witnesses = bwb_good(rep, l, datum)
    if not good:
        raise NotBWBGood(witnesses)
    acc: dict[Weight, int] = {}
    length_i = [w for w in datum.weyl if w.length == i]
    for mu, mult in rep:
        for w in length_i:
            lam = datum.dot_action(datum.inverse(w), mu)
            if datum.in_c0(lam, l):
                acc[lam] = acc.get(lam, 0) + mult
    return WeightMultiset(acc)


# -- claimed cohomology tables -------------------------------------------------

UNKNOWN = "?"


@dataclass(frozen=True)
class TableRow:
    family: str
    j: int
    rep_text: str
    # cohomology claims per degree 0..3; GrothendieckElement or UNKNOWN
    claims: tuple


@dataclass(frozen=True)
class CohomologyTable:
    name: str
    l_min: int
    rows: tuple[TableRow, ...]


MAX_DEGREE = 3  # dim G/B for SL3


def serialize_table(table: CohomologyTable) -> str:
    lines = [f"table {table.name} lmin={table.l_min}"]
    for row in table.rows:
        for i in range(MAX_DEGREE + 1):
            claim = row.claims[i]
            body = claim if claim == UNKNOWN else _print_claim(claim)
            lines.append(f'{table.name} {row.family} j={row.j} i={i} rep="{row.rep_text}" : {body}')
    return "\n".join(lines) + "\n"


def _print_claim(el: GrothendieckElement) -> str:
    if not el.terms:
        return "0"
    parts = []
    for lam, c in sorted(el.terms, reverse=True):
        parts.append(f"{c}*V(" + ",".join(str(x) for x in lam) + ")")
    return " + ".join(parts)


def _parse_claim(text: str) -> GrothendieckElement:
    text = text.strip()
    if text == "0":
        return GrothendieckElement.zero()
    terms = []
    for part in text.split(" + "):
        coeff_s, v = part.split("*V(")
        coords = tuple(int(x) for x in v.rstrip(")").split(","))
        terms.append((coords, int(coeff_s)))
    return GrothendieckElement(terms)


def serialize_tables(tables: dict[str, CohomologyTable]) -> str:
    return "".join(serialize_table(t) for t in tables.values())


def parse_tables(text: str) -> dict[str, CohomologyTable]:
    """Parse the shipped table format; inverse of serialize_table per table."""
    headers: dict[str, int] = {}
    rows: dict[tuple[str, str, int], dict] = {}
    order: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("table "):
            _, name, lmin = line.split()
            headers[name] = int(lmin.removeprefix("lmin="))
            continue
        head, _, body = line.partition(" : ")
        fields = head.split()
        if len(fields) < 5:
            raise ValueError(f"line {lineno}: malformed table entry {raw!r}")
        tname, family = fields[0], fields[1]
        j = int(fields[2].removeprefix("j="))
        i = int(fields[3].removeprefix("i="))
        rep_text = head.split('rep="', 1)[1].rsplit('"', 1)[0]
        key = (tname, family, j)
        if key not in rows:
            rows[key] = {"rep": rep_text, "claims": [None] * (MAX_DEGREE + 1)}
            order.append(key)
        body = body.strip()
        rows[key]["claims"][i] = UNKNOWN if body == UNKNOWN else _parse_claim(body)
    tables: dict[str, CohomologyTable] = {}
    for name, lmin in headers.items():
        trows = []
        for key in order:
            if key[0] != name:
                continue
            data = rows[key]
            claims = tuple(
                GrothendieckElement.zero() if c is None else c for c in data["claims"]
            )
            trows.append(TableRow(key[1], key[2], data["rep"], claims))
        tables[name] = CohomologyTable(name, lmin, tuple(trows))
    return tables


@dataclass
class TableCheck:
    check_id: str
    passed: bool
    skipped: bool = False
    expected: str = ""
    actual: str = ""
    note: str = ""


def verify_table(table: CohomologyTable, l: int, datum: RootDatum = A2) -> list[TableCheck]:
    """Consistency checks for a claimed cohomology table at characteristic l.

    Per entry: (a) a vanishing psupp forces a vanishing claim; (b) claimed
    multiplicities are bounded by psupp multiplicities; per row: (c) the
    alternating sum of known claims equals the Euler characteristic.  Rows
    with unknown entries skip (c); unknown entries skip (a) and (b).
    """
    out: list[TableCheck] = []
    for row in table.rows:
        rep = build_rep(parse_rep(row.rep_text), datum)
        rid = f"{table.name}.{row.family}.j{row.j}"
        good, witnesses = bwb_good(rep, l, datum)
        if not good:
            out.append(TableCheck(f"{rid}.bwb-good", False, expected="all weights in locus",
                                  actual=f"witnesses {witnesses}"))
            continue
        has_unknown = any(c == UNKNOWN for c in row.claims)
        for i in range(MAX_DEGREE + 1):
            claim = row.claims[i]
            if claim == UNKNOWN:
                out.append(TableCheck(f"{rid}.i{i}", True, skipped=True, note="marked unknown"))
                continue
            support = psupp(rep, i, l, datum)
            ok = True
            detail = ""
            if support.dimension == 0 and claim:
                ok = False
                detail = "psupp empty but claim nonzero"
            else:
                for lam, c in claim.terms:
                    if c < 0 or c > support.multiplicity(lam):
                        ok = False
                        detail = f"claimed {c}x[V{lam}] exceeds psupp bound {support.multiplicity(lam)}"
                        break
            out.append(TableCheck(f"{rid}.i{i}", ok,
                                  expected=f"claims within psupp^{i} = {support}",
                                  actual=_print_claim(claim) if claim != UNKNOWN else UNKNOWN,
                                  note=detail))
        if has_unknown:
            out.append(TableCheck(f"{rid}.chi", True, skipped=True, note="row has unknown entries"))
        else:
            total = GrothendieckElement.zero()
            for i in range(MAX_DEGREE + 1):
                term = row.claims[i]
                total = total + (term.scale((-1) ** i))
            chi = euler_char(rep, datum)
            out.append(TableCheck(f"{rid}.chi", total == chi,
                                  expected=str(chi), actual=str(total)))
    return out
