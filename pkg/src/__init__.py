"""
continuant-lab
Exact experiments with noncommutative continuants, the projective elementary
group PE(2,R) and unit-translate properties of finite rings.
"""

__version__ = "1.0.0"
__author__ = "continuant-lab"
__description__ = "Noncommutative continuants, PE(2,R) word lengths and unit-translate certificates"
