from hypothesis import strategies as st

from pencilforge.scalar import ComplexScalar, ExactScalar

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
exact = st.builds(ExactScalar, small, small, small, small)
nonzero_exact = exact.filter(bool)
complex_exact = st.builds(ComplexScalar, exact, exact)
