"""Explicit constants for the least prime in the Chebotarev density theorem.

Submodules:

* ``numerics``     digamma, the g(sigma, T0) bound, quadrature and root finding
* ``profiles``     per-degree discriminant floors (n0, d0, L0, Q0)
* ``kernels``      Mellin kernel pairs and the weight function phi_theta
* ``turan``        witness finder for the power-sum inequality
* ``zerodensity``  explicit zero-counting bounds
* ``repulsion``    zero-repulsion constant pairs and the c3 exponent
* ``leastprime``   the five case inequalities and the exponent B
* ``frobenius``    least Frobenius prime verification for concrete fields
* ``cli``          command-line front end
"""

__version__ = "0.1.0"
