"""Catalogue of printed closed forms that disagree with the Fock oracle.

Each entry records the printed reading, the corrected reading that the
oracle certifies, and a short note.  :func:`typo_table` attaches grid
evidence (worst literal and corrected errors) from a validation run.
"""
import csv
import io
from dataclasses import dataclass

from .quantities import Quantity, Status


@dataclass(frozen=True)
class Typo:
    quantity: Quantity
    literal: str
    corrected: str
    note: str


TYPOS = (
    Typo(Quantity.CohMeanN, "|lambda|^2/4 {...}", "|lambda|^2/2 {...}",
         "prefactor off by 2; the s=0 limit |alpha|^2 fixes it"),
    Typo(Quantity.CohA2A2, "|lambda|^2/4 {...}, exp(2 i s |alpha| sin phi)",
         "|lambda|^2/2 {...}, exp(2 i s Im alpha)",
         "prefactor off by 2; exponent as in <a†a>, printed phi read as system azimuth"),
    Typo(Quantity.CohXphi, "|lambda|^2/sqrt2 {(1+|w|^2)|alpha| cos(phi - theta) ...}",
         "sqrt2 |lambda|^2 {(1+|w|^2)|alpha| cos(phi - vartheta) ...}",
         "theta is the preselection angle; the coherent phase vartheta is meant"),
    Typo(Quantity.CohA2, "|lambda|^2/4 {...}", "|lambda|^2/2 {...}", "prefactor off by 2"),
    Typo(Quantity.SqMeanN,
         "I = G[sh^2 + s^2/4 - s^2/2 (1 + i sin(delta) sinh 2eta)]",
         "I = G[sh^2 - s^2/4 - s^2 sh (ch cos delta + sh) - s^2 sh^2 |ch + e^{i delta} sh|^2]",
         "cross element rederived; G = exp(-s^2/2 |ch + e^{i delta} sh|^2)"),
    Typo(Quantity.SqXphi,
         "cos(phi)|1+w|^2 - cos(phi)|1+w|^2 + 2G Re[e^{-i theta} ...] - 2G Re[e^{+i theta} ...]",
         "cos(phi)|1+w|^2 - cos(phi)|1-w|^2 + 2G Re[e^{-i phi} ...] - 2G Re[e^{-i phi} ...]",
         "first pair cancels as printed; both cross terms carry the quadrature phase e^{-i phi}, "
         "swapping |1+w|^2 -> |1-w|^2 alone does not fix it"),
    Typo(Quantity.SqX2,
         "II = kappa^2/4 {D(|1+w|^2+|1-w|^2) + (1-|w|^2) III}, phases e^{-i delta}",
         "II = kappa^2/4 {D(|1+w|^2+|1-w|^2) + 2(1-|w|^2) conj(III)}, phases e^{+i delta}",
         "III as printed (unbalanced brace closed before the Gaussian) is the conjugate "
         "of the cross element and lacks a factor 2"),
    Typo(Quantity.CatA2A2, "... + e^{-i omega} x (alpha* + s/2)(alpha - s/2)^2",
         "... + e^{-i omega} x (alpha* + s/2)^2 (alpha - s/2)^2", "missing square"),
    Typo(Quantity.CatAmean, "e^{+-i phi} factors", "e^{+-i omega} factors",
         "<a> cannot depend on the quadrature angle; the cat phase omega is meant"),
    Typo(Quantity.CatA2, "2 e^{-s^2/4}(cos(2s Im alpha)(alpha^2 + s^2/4) - i s alpha sin(2s Im alpha))",
         "2 e^{-s^2/2}(cos(2s Im alpha)(alpha^2 + s^2/4) - i s alpha sin(2s Im alpha))",
         "branch overlap damping is e^{-s^2/2}"),
    Typo(Quantity.CatInitSphi,
         "|alpha|^2 e^{-4|alpha|^2}/(1+x cos w)^2 [1 + (cos 2phi (e^{2|alpha|^2}+cos w)^2 + sin^2 w cos^2 phi - 1)]",
         "|alpha|^2 e^{-4|alpha|^2}/(1+x cos w)^2 [e^{4|alpha|^2} - 1 + cos 2(phi-delta) ((e^{2|alpha|^2}+cos w)^2 + sin^2 w)]",
         "x = e^{-2|alpha|^2}; the printed form gives S = |alpha|^2 for the even cat at phi=0"),
)

BY_QUANTITY = {t.quantity: t for t in TYPOS}

FIELDS = ("quantity", "literal", "corrected", "note", "points", "flagged",
          "max_literal_err", "max_corrected_err")


def typo_table(reports=()):
    """Rows of the typo table, with evidence aggregated from validation reports."""
    rows = []
    for t in TYPOS:
        mine = [r for r in reports if r.quantity is t.quantity]
        flagged = sum(r.status is Status.PaperTypoSuspected for r in mine)
        rows.append({
            "quantity": t.quantity.value,
            "literal": t.literal,
            "corrected": t.corrected,
            "note": t.note,
            "points": len(mine),
            "flagged": flagged,
            "max_literal_err": format(max((r.abs_err for r in mine), default=0.0), ".3e"),
            "max_corrected_err": format(max((r.corrected_err for r in mine), default=0.0), ".3e"),
        })
    return rows


def typo_csv(reports=()):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(typo_table(reports))
    return buf.getvalue()
