"""AB phase shift routes, quadrature and the sinusoidal-flux factor"""
