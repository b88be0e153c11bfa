"""Published worked examples, transcribed verbatim, used as regression fixtures.

Bases keep the printed orientation and labels.  Series are kept exactly as
printed, including any transcription slips, so that comparisons can expose
them rather than hide them.
"""

from dataclasses import dataclass, field
from typing import Optional

from .algebra import parse_polynomial
from .semigroup import FamilyInvariants, PseudoSymmetricParams
from .series import parse_series


@dataclass(frozen=True)
class ReferenceExample:
    name: str
    params: PseudoSymmetricParams
    basis: tuple                      # (label or None, polynomial text)
    invariants: Optional[FamilyInvariants] = None
    k: Optional[int] = None
    P: Optional[str] = None
    Q: Optional[str] = None
    notes: tuple = field(default_factory=tuple)

    def basis_polynomials(self):
        return [parse_polynomial(text) for _, text in self.basis]

    def printed_P(self):
        return parse_series(self.P) if self.P else None

    def printed_Q(self):
        return parse_series(self.Q) if self.Q else None


ALPHA4_TWO = ReferenceExample(
    name="alpha4-two",
    params=PseudoSymmetricParams(alpha1=22, alpha2=13, alpha3=5, alpha4=2, alpha21=4),
    k=2,
    basis=tuple([
        (None, 'X1^22 - X3*X4'),
        (None, 'X2^13 - X1^4*X4'),
        (None, 'X3^5 - X1^17*X2'),
        (None, 'X4^2 - X1*X2^12*X3^4'),
        (None, 'X1^5*X3^4 - X2*X4'),
        (None, 'X1^26 - X2^13*X3'),
        (None, 'X1^9*X3^4 - X2^14'),
        (None, 'X1^35*X3^3 - X2^27'),
    ]),
)

LARGE_EXPONENTS = ReferenceExample(
    name="large-exponents",
    params=PseudoSymmetricParams(alpha1=501, alpha2=340, alpha3=18, alpha4=3, alpha21=101),
    k=2,
    basis=tuple([
        (None, 'X2*X4^2 - X1^102*X3^17'),
        (None, 'X3*X4^2 - X1^501'),
        (None, 'X4^3 - X1*X2^339*X3^17'),
        (None, 'X3^18 - X1^399*X2'),
        (None, 'X1^101*X4 - X2^340'),
        (None, 'X1^203*X3^17 - X2^341*X4'),
        (None, 'X2^340*X3*X4 - X1^602'),
        (None, 'X2^680*X3 - X1^703'),
        (None, 'X1^906*X3^16 - X2^1021*X4'),
        (None, 'X1^1609*X3^15 - X2^1701*X4'),
        (None, 'X1^2312*X3^14 - X2^2381*X4'),
        (None, 'X1^3015*X3^13 - X2^3061*X4'),
        (None, 'X1^3718*X3^12 - X2^3741*X4'),
        (None, 'X2^4421*X4 - X1^4421*X3^11'),
        (None, 'X1^4522*X3^11 - X2^4761'),
        (None, 'X1^5225*X3^10 - X2^5441'),
        (None, 'X1^5928*X3^9 - X2^6121'),
        (None, 'X1^6631*X3^8 - X2^6801'),
        (None, 'X1^7334*X3^7 - X2^7481'),
        (None, 'X1^8037*X3^6 - X2^8161'),
        (None, 'X1^8740*X3^5 - X2^8841'),
        (None, 'X1^9443*X3^4 - X2^9521'),
        (None, 'X1^10146*X3^3 - X2^10201'),
        (None, 'X1^10849*X3^2 - X2^10881'),
        (None, 'X1^11552*X3 - X2^11561'),
        (None, 'X2^12241 - X1^12255'),
    ]),
)

FAMILY_L0 = ReferenceExample(
    name="family-l0",
    params=PseudoSymmetricParams(alpha1=38, alpha2=20, alpha3=8, alpha4=3, alpha21=12),
    invariants=FamilyInvariants(k=1, s=0, l=0),
    k=1,
    basis=tuple([
        ('f1', 'X1^38 - X3*X4^2'),
        ('f2', 'X2^20 - X1^12*X4'),
        ('f3', 'X3^8 - X1^25*X2'),
        ('f4', 'X4^3 - X1*X2^19*X3^7'),
        ('f5', 'X1^13*X3^7 - X2*X4^2'),
        ('f6', 'X1^50 - X2^20*X3*X4'),
        ('f7', 'X1^62 - X2^40*X3'),
        ('g0', 'X2^21*X4 - X1^25*X3^7'),
        ('h0', 'X2^41 - X1^37*X3^7'),
    ]),
    P=(
        '1 - 3*t^3 + 3*t^4 - t^5 - t^8 + t^10 - t^13 + 3*t^15 - 3*t^16 + t^17 '
        '+ t^21 - 3*t^22 + 3*t^23 - t^24 + t^29 - t^30 + 2*t^34 - 3*t^35 + '
        't^36 - 3*t^41 + 4*t^42 - t^43 + t^48 - t^49'
    ),
    Q=(
        '1 + 3*t + 6*t^2 + 7*t^3 + 9*t^4 + 11*t^5 + 13*t^6 + 15*t^7 + 16*t^8 '
        '+ 16*t^9 + 16*t^10 + 16*t^11 + 16*t^12 + 15*t^13 + 13*t^14 + 13*t^15 '
        '+ 12*t^16 + 11*t^17 + 10*t^18 + 9*t^19 + 8*t^20 + 8*t^21 + 6*t^22 + '
        '5*t^23 + 4*t^24 + 3*t^25 + 2*t^26 + t^27 + 2*t^34 + 3*t^35 + 4*t^36 '
        '+ 5*t^37 + 6*t^38 + 7*t^39 + 8*t^40 + 6*t^41 + 5*t^42 + 4*t^43 + '
        '3*t^44 + 2*t^45 + t^46'
    ),
)

# the h-family is printed as h4..h13; the binomials are h_j for j = 3..12
FAMILY_L12 = ReferenceExample(
    name="family-l12",
    params=PseudoSymmetricParams(alpha1=62, alpha2=40, alpha3=14, alpha4=3, alpha21=11),
    invariants=FamilyInvariants(k=2, s=3, l=12),
    k=2,
    basis=tuple([
        ('f1', 'X1^62 - X3*X4^2'),
        ('f2', 'X2^40 - X1^11*X4'),
        ('f3', 'X3^14 - X1^50*X2'),
        ('f4', 'X4^3 - X1*X2^39*X3^13'),
        ('f5', 'X1^12*X3^13 - X2*X4^2'),
        ('f6', 'X1^73 - X2^40*X3*X4'),
        ('f7', 'X1^84 - X2^80*X3'),
        ('g0', 'X2^41*X4 - X1^23*X3^13'),
        ('g1', 'X2^121*X4 - X1^107*X3^12'),
        ('g2', 'X2^201*X4 - X1^191*X3^11'),
        ('g3', 'X2^281*X4 - X1^275*X3^10'),
        ('h4', 'X2^321 - X1^286*X3^10'),
        ('h5', 'X2^401 - X1^370*X3^9'),
        ('h6', 'X2^481 - X1^454*X3^8'),
        ('h7', 'X2^561 - X1^538*X3^7'),
        ('h8', 'X2^641 - X1^622*X3^6'),
        ('h9', 'X2^721 - X1^706*X3^5'),
        ('h10', 'X2^801 - X1^790*X3^4'),
        ('h11', 'X2^881 - X1^874*X3^3'),
        ('h12', 'X2^961 - X1^958*X3^2'),
        ('h13', 'X2^1041 - X1^1042*X3'),
    ]),
    P=(
        '1 - 3*t^3 + 3*t^4 - t^5 - t^12 + 2*t^14 - 3*t^15 + 2*t^16 + t^26 - '
        't^27 - t^36 + 2*t^37 - t^38 - t^42 + t^43 + t^53 - t^54 + t^55 - '
        't^56 - t^66 + t^67 - t^81 + t^82 + t^94 - t^95 + t^116 - 2*t^117 + '
        't^118 - t^119 + 2*t^120 - t^121 + t^199 - 2*t^200 + t^201 - t^202 + '
        '2*t^203 - t^204 + 2*t^293 - 2*t^294 + t^295 - t^296 + 2*t^297 - '
        't^298 + t^376 - 2*t^377 + t^378 - t^379 + 2*t^380 - t^381 + t^459 - '
        '2*t^460 + t^461 - t^462 + 2*t^463 - t^464 + t^542 - 2*t^543 + t^544 '
        '- t^545 + 2*t^546 - t^547 + t^625 - 2*t^626 + t^627 - t^628 + '
        '2*t^629 - t^630 + t^708 - 2*t^709 + t^710 - t^711 + 2*t^712 - t^713 '
        '+ t^791 - t^792 + t^793 - t^794 + 2*t^795 - t^796 + t^824 - 2*t^875 '
        '+ t^876 - t^877 + 2*t^878 - t^879 + t^957 - 2*t^958 + t^959 - t^960 '
        '+ 2*t^961 - t^962 + t^1040 - 3*t^1041 + 3*t^1042 - t^1043'
    ),
    Q=(
        '1 + 3*t + 6*t^2 + 7*t^3 + 9*t^4 + 11*t^5 + 13*t^6 + 15*t^7 + 17*t^8 '
        '+ 19*t^9 + 21*t^10 + 23*t^11 + 24*t^12 + 24*t^13 + 25*t^14 + 24*t^15 '
        '+ 23*t^16 + 22*t^17 + 21*t^18 + 20*t^19 + 19*t^20 + 18*t^21 + '
        '17*t^22 + 16*t^23 + 15*t^24 + 14*t^25 + 14*t^26 + 14*t^27 + 14*t^28 '
        '+ 14*t^29 + 14*t^30 + 14*t^31 + 14*t^32 + 14*t^33 + 14*t^34 + '
        '14*t^35 + 13*t^36 + 13*t^37 + 13*t^38 + 13*t^39 + 13*t^40 + 13*t^41 '
        '+ 12*t^42 + 11*t^43 + 10*t^44 + 9*t^45 + 8*t^46 + 7*t^47 + 6*t^48 + '
        '5*t^49 + 4*t^50 + 3*t^51 + 2*t^52 + 2*t^53 + 2*t^54 + 3*t^55 + '
        '4*t^56 + 5*t^57 + 6*t^58 + 7*t^59 + 8*t^60 + 9*t^61 + 10*t^62 + '
        '11*t^63 + 12*t^64 + 13*t^65 + 13*t^66 + 13*t^67 + 13*t^68 + 13*t^69 '
        '+ 13*t^70 + 13*t^71 + 13*t^72 + 13*t^73 + 13*t^74 + 13*t^75 + '
        '13*t^76 + 13*t^77 + 13*t^78 + 13*t^79 + 13*t^80 + 12*t^81 + 11*t^82 '
        '+ 10*t^83 + 9*t^84 + 8*t^85 + 7*t^86 + 6*t^87 + 5*t^88 + 4*t^89 + '
        '3*t^90 + 2*t^91 + t^92 + t^116 + t^117 + t^118 + t^199 + t^200 + '
        't^201 + t^293 + t^294 + t^295 + t^376 + t^377 + t^378 + t^459 + '
        't^460 + t^461 + t^542 + t^543 + t^544 + t^625 + t^626 + t^627 + '
        't^708 + t^709 + t^710 + t^791 + t^792 + t^793 + t^874 + t^875 + '
        't^876 + t^957 + t^958 + t^959 + t^1040'
    ),
    notes=("printed P is not divisible by (1-t)^3 and disagrees with printed Q",),
)

EXAMPLES = (ALPHA4_TWO, LARGE_EXPONENTS, FAMILY_L0, FAMILY_L12)


def find(params: PseudoSymmetricParams) -> Optional[ReferenceExample]:
    for ex in EXAMPLES:
        if ex.params == params:
            return ex
    return None
