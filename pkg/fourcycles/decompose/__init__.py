from .exactcover import ExactCover
from .systems import admissible, enumerate_systems, SystemEnumerator, OrderTooLarge, system_cover
from .cyclic import CyclicStarter, develop_cyclic, is_shift_invariant, shift_permutation
from .isomorph import IsoClass, canonical_label, classify_systems, isomorphism, are_isomorphic, \
    system_orbit, OrbitClassifier
from .reference import TableRowInvalid, reference_system, reference_systems, reference_classes, \
    match_reference_class, identify, label_class, check_reference_rows
