"""coxlab: exact computation in Coxeter quotients of torus-degeneration
dual graphs — complexes, presentations, semidirect models, coset
enumeration and integer Smith normal form."""

__version__ = "0.1.0"
