"""Feature-fusion MT evaluation toolkit for low-resource language pairs."""

__version__ = "0.1.0"
