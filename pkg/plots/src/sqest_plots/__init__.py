"""Figure scripts for the squeezing-estimation CSV/JSON file contract."""

from .figures import fig1, fig2, fig_scaling

__version__ = "0.1.0"

__all__ = ["fig1", "fig2", "fig_scaling"]
