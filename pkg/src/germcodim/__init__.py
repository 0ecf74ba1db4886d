"""Finite-determinacy invariants of weighted-homogeneous map-germs over F_p."""
from ._jit import HAVE_NUMBA, backend
from .errors import (ExponentOverflow, GermcodimError, NotHomogeneous, ParseError,
                     RingMismatch, StageTimeout)
from .orders import Block, Lex, WeightedDegRevLex, cmp_monomials, degrevlex
from .poly import (DEFAULT_CHARACTERISTIC, PolyMatrix, PolyRing, Polynomial, PrimeField,
                   RingMap, evaluate, partial_derivative, rank_mod_p, weighted_degree)
from .parse import format_poly, parse_poly
from .groebner import (INFINITE, GroebnerBasis, Ideal, ModuleOrder, ModuleVector, Submodule,
                       buchberger, groebner, is_groebner, krull_dim, modulo, normal_form,
                       reduce_gb, vdim)
from .ideal_ops import (eliminate, fitting_ideal, ideal_membership, jacobian_matrix, minors,
                        preimage, product_ring, relative_quotient_dim)
from .invariants import (CODIM_GREATER, EQUAL, MU_GREATER, NOT_APPLICABLE, NOT_FINITE,
                         GermReport, HypothesisUnmet, ImageNotHypersurface, MapGerm,
                         Ramification, Timings, ae_codim, corank, family_index, greuel_mu,
                         image_ideal, mond_verdict, mu_image_family, multiplicity,
                         nf_dimension, ramification, ramification_dim, validate_germ, verdict)
from .germfile import GermFile, GermFileError, format_germ, load_germ, parse_germ_text

__all__ = [
    "HAVE_NUMBA",
    "backend",
    "ExponentOverflow",
    "GermcodimError",
    "NotHomogeneous",
    "ParseError",
    "RingMismatch",
    "StageTimeout",
    "Block",
    "Lex",
    "WeightedDegRevLex",
    "cmp_monomials",
    "degrevlex",
    "DEFAULT_CHARACTERISTIC",
    "PolyMatrix",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "RingMap",
    "evaluate",
    "partial_derivative",
    "rank_mod_p",
    "weighted_degree",
    "format_poly",
    "parse_poly",
    "INFINITE",
    "GroebnerBasis",
    "Ideal",
    "ModuleOrder",
    "ModuleVector",
    "Submodule",
    "buchberger",
    "groebner",
    "is_groebner",
    "krull_dim",
    "modulo",
    "normal_form",
    "reduce_gb",
    "vdim",
    "eliminate",
    "fitting_ideal",
    "ideal_membership",
    "jacobian_matrix",
    "minors",
    "preimage",
    "product_ring",
    "relative_quotient_dim",
    "CODIM_GREATER",
    "EQUAL",
    "MU_GREATER",
    "NOT_APPLICABLE",
    "NOT_FINITE",
    "GermReport",
    "HypothesisUnmet",
    "ImageNotHypersurface",
    "MapGerm",
    "Ramification",
    "Timings",
    "ae_codim",
    "corank",
    "family_index",
    "greuel_mu",
    "image_ideal",
    "mond_verdict",
    "mu_image_family",
    "multiplicity",
    "nf_dimension",
    "ramification",
    "ramification_dim",
    "validate_germ",
    "verdict",
    "GermFile",
    "GermFileError",
    "format_germ",
    "load_germ",
    "parse_germ_text",
]

__version__ = "0.1.0"
