"""
The eight non-isomorphic 4-CS(9) of the reference table, and matching of
arbitrary 4-CS(9) against them.
"""
import logging
from functools import lru_cache

from fourcycles import catalog
from fourcycles.model import CycleSystem, NotADecomposition, InvalidCycle, parse_compact
from fourcycles.decompose.isomorph import canonical_label

logger = logging.getLogger(__name__)


class TableRowInvalid(ValueError):

    def __init__(self, msg, row=None, edge=None):
        super(TableRowInvalid, self).__init__(msg)
        self.row = row
        self.edge = edge


def reference_system(label, validate=True):
    """Built-in system S1..S8 as a CycleSystem"""
    try:
        row = catalog.REFERENCE_SYSTEMS[label]
    except KeyError:
        raise KeyError("no reference system '%s' (expecting one of %s)" % (label, ", ".join(catalog.REFERENCE_LABELS)))
    try:
        return CycleSystem(9, [parse_compact(c) for c in catalog.split(row)], validate=validate)
    except (NotADecomposition, InvalidCycle) as e:
        raise TableRowInvalid("reference row %s is not a 4-CS(9): %s" % (label, e), row=label,
                              edge=getattr(e, "edge", None))


def reference_systems():
    return [(label, reference_system(label)) for label in catalog.REFERENCE_LABELS]


@lru_cache(maxsize=1)
def reference_classes():
    """
    {label: IsoClass} for the 8 reference rows. Rows are validated first;
    an invalid row or two rows of the same class raise TableRowInvalid.
    """
    classes = {}
    seen = {}
    for label, system in reference_systems():
        iso = canonical_label(system).with_label(label)
        if iso.canonical_system in seen:
            raise TableRowInvalid("reference rows %s and %s are isomorphic" % (seen[iso.canonical_system], label),
                                  row=label)
        seen[iso.canonical_system] = label
        classes[label] = iso
    return classes


def match_reference_class(system):
    """Label S1..S8 of the reference class of a 4-CS(9), or None"""
    if system.order != 9:
        return None
    canonical = canonical_label(system).canonical_system
    for label, iso in reference_classes().items():
        if iso.canonical_system == canonical:
            return label
    return None


def identify(system):
    """
    (label, sigma) such that apply_permutation(reference_system(label), sigma)
    equals system, or (None, None).
    """
    if system.order != 9:
        return (None, None)
    iso = canonical_label(system)
    for label, ref in reference_classes().items():
        if ref.canonical_system == iso.canonical_system:
            return (label, ref.witness * iso.witness.inverse())
    return (None, None)


def label_class(iso):
    """Attach the reference label to a 4-CS(9) IsoClass"""
    if iso.order != 9:
        return iso
    for label, ref in reference_classes().items():
        if ref.canonical_system == iso.canonical_system:
            return iso.with_label(label)
    return iso


def check_reference_rows():
    """[(label, ok, message)] for every reference row, errata logged"""
    report = []
    for label in catalog.REFERENCE_LABELS:
        try:
            reference_system(label)
            report.append((label, True, "valid 4-CS(9)"))
        except TableRowInvalid as e:
            logger.warning("table erratum: %s" % e)
            report.append((label, False, str(e)))
    return report
