"""Exact Hopf cyclic homology of small Hopf algebras."""

from .fields import QQ, QQq, GF, field_from_name
from .instances import build_instance, pair_for, InstanceSpec
from .report import CheckReport, SCHEMA_VERSION

__version__ = "0.1.0"

__all__ = ["QQ", "QQq", "GF", "field_from_name", "build_instance",
           "pair_for", "InstanceSpec", "CheckReport", "SCHEMA_VERSION",
           "__version__"]
