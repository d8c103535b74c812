# Chebyshev Permutation-Code Toolkit Package

import sys

# Exact volumes run to many thousands of decimal digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
