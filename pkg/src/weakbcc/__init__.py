"""Finite weak BCC-algebras: axioms, branches, identities, lattices,
theorem audits and enumeration up to isomorphism."""
from .audit import THEOREMS, AuditReport, audit_algebra, audit_catalog, parse_theorems
from .axioms import ClassReport, ConsistencyError, check_axioms, classify, exchange_identity, is_weak_bcc
from .enumeration import (
    FILTERS,
    Catalog,
    IsoCertificate,
    are_isomorphic,
    canonical_algebra,
    canonical_form,
    enumerate_order,
    fingerprint,
    load_catalog,
    naive_enumerate,
    save_catalog,
)
from .lattice import ap_lattice_check, branch_lattice_check, branch_meet_check, glb, lub
from .model import (
    Algebra,
    ParseError,
    Verdict,
    Witness,
    fixtures,
    load_fixture,
    parse_table,
    product,
    read_table,
    relabel,
    serialize,
    write_table,
)
from .properties import (
    CATALOG,
    check_identity,
    circle_group_check,
    condition_s,
    identity,
    is_solid,
    min_commutative_fold,
    property_vector,
)
from .structure import (
    NotWeakBCCError,
    PrerequisiteError,
    derive_order,
    is_bcc_ideal,
    is_bck_ideal,
    is_group_like,
    n_op,
    restricted_info,
)

__version__ = "0.1.0"
