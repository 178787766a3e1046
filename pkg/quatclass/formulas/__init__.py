# Class number formulas package
from quatclass.formulas.class_numbers import (
    FormulaInput, spinor_trace_sum, classical_trace_rhs, h1_value, h1, h_sc_value, h_sc,
    spinor_inner_sums, h1_general_thm,
)
