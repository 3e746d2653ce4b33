"""supercong: a verification engine for supercongruences of truncated binomial
sums modulo p, p^2 and p^3, with an independent exact-rational oracle."""

from .errors import (BaseDivisibleByP, CongruenceError, DenominatorDivisibleByP,
                     KTooLarge, NotDivisible, NotInvertible, OraclePrimeTooLarge,
                     TermNotInvertible, UnknownStatement, Unsatisfiable)
from .kernel import (CoeffPoly, binom_transform, gbinom, hyper_sum, legendre_pn,
                     pn_coeffs, pn_eval, poly_derivative, sn_eval)
from .padic import (PRational, Residue, RingSpec, div_by_p, fermat_quotient,
                    harmonic, inv, is_prime, jacobi_symbol, least_residue,
                    legendre_symbol, odd_primes, reduce_rational)
from .quadforms import FormSpec, NormalizationRule, Representation, find_rep, normalize
from .report import Report, VerificationOutcome
from .statements import (REGISTRY, all_ids, applicability, delta_p, get_statement,
                         verify_one, verify_range)

__version__ = "0.1.0"
