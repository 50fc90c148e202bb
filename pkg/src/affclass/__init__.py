"""Divisor class groups, affine complements and height bounds for affine monoid rings."""

from .bounds import KnowledgeBase, assert_fact, combine, from_facts, propagate, query
from .cone import build_monoid, facet_valuations, saturation_check, segre_monoid
from .divisors import (MonomialDivisor, affine_class_group, complement_is_affine,
                       divisor_class_group, support_realizable)
from .errors import DomainError
from .lattice import AbelianGroup, IntegerMatrix, cokernel, smith_normal_form

__version__ = "0.1.0"
