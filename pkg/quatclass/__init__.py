# quatclass - exact class number formulas for totally definite quaternion orders
__version__ = "1.0.0"
