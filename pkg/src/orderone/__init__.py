"""Order one invariants of stable surface immersions in 3-space, evaluated
exactly on census data (chamber Euler characteristics and triple points)."""

from .abelian import GUElement, OElement, Z2, F_map, eta, h2, in_image_phi, phi, t2, theta, x, y
from .census import Census, fk_of, k_of, mirror, standard_census, u_of, uhat_of, validate
from .delta1 import CESymbol, check_relations, g_universal, seven_step_eval, u_k_closed, u_M, u_Q, u_U
from .moves import apply_move, apply_sequence, census_delta

__version__ = "0.1.0"
