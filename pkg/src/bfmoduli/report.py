"""Collects every exact result that disagrees with a printed reference value."""
from __future__ import annotations

from fractions import Fraction
from typing import List

from . import published
from .charclasses import BundleData
from .divergence import Divergence, dedupe
from .index import (assemble_integrand, h1_of_lambda, h1_of_m, lambda_of_m, lambda_of_m_printed,
                    regularize)
from .moduli import (_poly_eval, get_manifold, load_catalog, sequence_divergences,
                     table_divergences)

SAMPLE_M = (Fraction(3), Fraction(6), Fraction(15), Fraction(-1, 2))


def lambda_divergences(b: BundleData | None = None) -> List[Divergence]:
    b = b or BundleData.su(2)
    cp2 = get_manifold("CP2")
    bad = [m for m in SAMPLE_M
           if h1_of_lambda(b, cp2, lambda_of_m_printed(m)) != h1_of_m(b, cp2, m)]
    good = all(h1_of_lambda(b, cp2, lambda_of_m(m)) == h1_of_m(b, cp2, m) for m in SAMPLE_M)
    if bad and good:
        return [Divergence("regularization weight as a function of m",
                           f"lambda = {published.LAMBDA_OF_M_TEXT}", "lambda = -m/(9+3m)", "index")]
    return []


def integrand_divergences() -> List[Divergence]:
    """The exact Chern-character and Todd series shift the Euler coefficient."""
    paper = regularize(assemble_integrand("paper"))
    full = regularize(assemble_integrand("full"))
    if paper == full:
        return []
    return [Divergence("4-form of the regularized integrand with untruncated series",
                       f"({paper.c_euler}) e + ({paper.c_pontr}) p1",
                       f"({full.c_euler}) e + ({full.c_pontr}) p1", "index")]


def catalog_divergences() -> List[Divergence]:
    entries = load_catalog()
    k3 = entries["K3"].instantiate()
    sd = entries["S_d"].instantiate(4)
    printed_chi = _poly_eval(published.S_D_CHI_POLY, 4)
    out = []
    if printed_chi != k3.chi and sd.chi == k3.chi:
        out.append(Divergence("Euler characteristic of degree-d hypersurfaces",
                              f"chi = {published.S_D_CHI_TEXT} (gives {printed_chi} at d=4)",
                              f"chi = d(d^2-4d+6) (gives {sd.chi} at d=4, the K3 value)", "catalog"))
    return out


def caption_divergences() -> List[Divergence]:
    return [Divergence("units of the CP2 sequence", published.SEQUENCE_UNITS_TEXT,
                       "h1 = n * 3 dimG", "caption")]


def moduli_divergences(b: BundleData | None = None) -> List[Divergence]:
    """Tables and sequence only; these are the entries compared against defaults."""
    return table_divergences(b) + sequence_divergences()


def all_divergences(b: BundleData | None = None, constraints: bool = True,
                    seed: int = 0, configs: int = 5) -> List[Divergence]:
    out = moduli_divergences(b) + lambda_divergences(b) + integrand_divergences()
    out += catalog_divergences() + caption_divergences()
    if constraints:
        from .constraints import constraint_divergences, verify
        out += constraint_divergences(verify(seed=seed, configs=configs))
    return dedupe(out)
