"""Polynomial data for the modified Bessel function K1 in double precision.

Lower range (0 < x <= 2) uses the classical ascending series

    x*K1(x) = x*log(x/2)*I1(x) + 1 - (x^2/4) * sum_k C[k] * (x^2/4)^k
    I1(x)   = (x/2) * sum_k D[k] * (x^2/4)^k

with D[k] = 1/(k! (k+1)!) and C[k] = (psi(k+1) + psi(k+2)) * D[k]; fourteen
terms bound the truncation error below 1e-19 on the interval.

Upper range (x >= 2) uses a degree-22 Chebyshev fit of

    f(u) = exp(x) * sqrt(x) * K1(x),   u = 2/x in (0, 1],  t = 2u - 1,

built from 60-digit series evaluations on 4000 Chebyshev nodes; the fit's
relative error is below 8e-16 on [2, inf).
"""

import numpy as np

# I1 ascending-series coefficients, D[k] = 1/(k! (k+1)!)
I1_SERIES = np.array([
    1.0,
    0.5,
    0.08333333333333333,
    0.006944444444444444,
    0.00034722222222222224,
    1.1574074074074073e-05,
    2.755731922398589e-07,
    4.920949861426052e-09,
    6.834652585313961e-11,
    7.594058428126623e-13,
    6.903689480115112e-15,
    5.230067787965994e-17,
    3.352607556388458e-19,
    1.842092063949702e-21,
])

# K1 ascending-series coefficients, C[k] = (psi(k+1) + psi(k+2)) / (k! (k+1)!)
K1_SERIES = np.array([
    -0.15443132980306573,
    0.6727843350984671,
    0.18157516696085563,
    0.019182189839330562,
    0.001115359491966528,
    4.142247689271143e-05,
    1.071545914091181e-06,
    2.045286003593878e-08,
    3.002048746589188e-10,
    3.495928729692882e-12,
    3.309914735250272e-14,
    2.5986411321011286e-16,
    1.7195232826992565e-18,
    9.721207518823618e-21,
])

# Chebyshev coefficients of exp(x) sqrt(x) K1(x) in t = 4/x - 1 on x in [2, inf)
K1_TAIL_CHEB = np.array([
    1.360313095242222,
    0.10392373657681725,
    -0.0028578168596227953,
    0.00019521551847134528,
    -1.936197974162732e-05,
    2.4064849478592737e-06,
    -3.501960603113981e-07,
    5.7410841241718437e-08,
    -1.0345762446343744e-08,
    2.0150497841672886e-09,
    -4.190354525726968e-10,
    9.218316385022109e-11,
    -2.129968145698011e-11,
    5.139651588352434e-12,
    -1.2891744300039134e-12,
    3.348401874342177e-13,
    -8.978062558984555e-14,
    2.4807957071747864e-14,
    -6.986954456534878e-15,
    2.0630726168552748e-15,
    -5.946267786009759e-16,
    1.9993073484319666e-16,
    -4.5422908252680984e-17,
])
