"""torigen: exact toric genus and cobordism invariants of homogeneous spaces."""

__version__ = "0.1.0"
