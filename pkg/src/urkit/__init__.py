"""Exact verification toolkit for the spinor, Fock-algebra and large-number core of ur-theory."""

__version__ = "0.1.0"
