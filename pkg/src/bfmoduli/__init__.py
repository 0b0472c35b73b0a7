"""Exact moduli-space dimensions and constraint algebra for BF-type gauge theories."""
from .charclasses import BundleData
from .errors import (BFModuliError, CatalogError, ConfigError, DomainError, NotInvertible,
                     OrderError, PoleError, SingularLimit, WindowError)
from .exact import GaussRat, GradedClass, Rat
from .index import assemble_integrand, h1_of_lambda, h1_of_m, lambda_of_m, regularize
from .moduli import Manifold, catalog, dim2, dim4, m_of_h1, plotdata, sequence_cp2, table

__version__ = "0.1.0"

__all__ = [
    "BundleData", "GaussRat", "GradedClass", "Rat", "Manifold",
    "assemble_integrand", "regularize", "h1_of_lambda", "h1_of_m", "lambda_of_m",
    "catalog", "dim2", "dim4", "m_of_h1", "plotdata", "sequence_cp2", "table",
    "BFModuliError", "CatalogError", "ConfigError", "DomainError", "NotInvertible",
    "OrderError", "PoleError", "SingularLimit", "WindowError",
]
