"""Published low-degree members of the family, in compressed form.

Entries are (a_0, ..., a_{[n(n+1)/6]}) with a_0 the leading coefficient;
the full polynomial is sum_s a_s * z**(n(n+1)/2 - 3s), times z when
n = 1 mod 3.
"""

COMPRESSED = {
    0: (1,),
    1: (1,),
    2: (1, 4),
    3: (1, 20, -80),
    4: (1, 60, 0, 11200),
    5: (1, 140, 2800, 78400, -3136000, -6272000),
    6: (1, 280, 18480, 627200, -17248000, 1448832000, 19317760000,
        -38635520000),
    7: (1, 504, 75600, 5174400, 62092800, 13039488000, -828731904000,
        -49723914240000, 0, -3093932441600000),
    8: (1, 840, 240240, 32771200, 2018016000, 124309785600, -6629855232000,
        407736096768000, 126696533483520000, 1769729356595200000,
        37164316488499200000, -743286329769984000000,
        -991048439693312000000),
}
