"""Closed forms for the three pointers and their validation against the Fock oracle."""
from .quantities import Quantity, Status
from .validate import ClosedFormReport, GridPoint, Summary, default_grid, evaluate_point, validate_all
from .typos import TYPOS, typo_table, typo_csv
