"""Exact presentations of cohomology rings of genus-0 stable map spaces to P^n."""

__version__ = "0.1.0"
# bump when slice computation or relation generation changes; keys the cache
ENGINE_VERSION = "tautring-engine-1"
