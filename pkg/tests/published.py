"""Reference values the test suite freezes against.

CENSUS and ORTHOGONAL_COUNTS are the known census of G_t (per-class vertex
counts, degrees, totals) and the per-(k, s) orthogonal-vector counts.
The clique lists are published search results; they are valid cliques of
their G_t and double as fixtures for the verification paths.
"""

# t -> (per-k vertex counts, per-k degrees, total vertices, total edges)
CENSUS = {
    1: ([1, 1], [0, 0], 2, 0),
    2: ([1, 16, 1], [16, 8, 16], 18, 80),
    3: ([1, 81, 81, 1], [0, 64, 64, 0], 164, 5184),
    4: ([1, 256, 1296, 256, 1], [1296, 648, 648, 648, 1296], 1810, 587088),
    5: ([1, 625, 10000, 10000, 625, 1],
        [0, 6912, 6912, 6912, 6912, 0], 21252, 73440000),
    6: ([1, 1296, 50625, 160000, 50625, 1296, 1],
        [160000, 80000, 79808, 79712, 79808, 80000, 160000], 263844, 10521080000),
    7: ([1, 2401, 194481, 1500625, 1500625, 194481, 2401, 1],
        [0, 960000, 960000, 960000, 960000, 960000, 960000, 0],
        3395016, 1629606720000),
}

# t -> {s: [count for k = 0 .. floor(t/2)]}
ORTHOGONAL_COUNTS = {
    3: {0: [0, 0], 1: [0, 32]},
    4: {0: [0, 0, 1], 1: [0, 81, 96], 2: [1296, 486, 454]},
    5: {0: [0, 0, 0], 1: [0, 0, 216], 2: [0, 3456, 3240]},
    6: {0: [0, 0, 0, 1], 1: [0, 0, 256, 486], 2: [0, 10000, 14688, 15795],
        3: [160000, 60000, 49920, 47148]},
    7: {0: [0, 0, 0, 0], 1: [0, 0, 0, 768], 2: [0, 0, 40000, 57024],
        3: [0, 480000, 440000, 422208]},
    8: {0: [0, 0, 0, 0, 1], 1: [0, 0, 0, 625, 1536],
        2: [0, 0, 50625, 147000, 183904],
        3: [0, 1500625, 2352000, 2601000, 2655744],
        4: [24010000, 9003750, 7183750, 6483750, 6297030]},
    9: {0: [0, 0, 0, 0, 0], 1: [0, 0, 0, 0, 2000],
        2: [0, 0, 0, 243000, 464000],
        3: [0, 0, 7203000, 11210000, 12912000],
        4: [0, 76832000, 69629000, 65367000, 63430000]},
    10: {0: [0, 0, 0, 0, 0, 1], 1: [0, 0, 0, 0, 1296, 3750],
         2: [0, 0, 0, 194481, 858600, 1200625],
         3: [0, 0, 9834496, 32773650, 48326400, 53560000],
         4: [0, 252047376, 407209600, 453248775, 468312600, 472003750],
         5: [4032758016, 1512284256, 1180754176, 1041640236, 978746976,
             960098756]},
}

# published greedy-search cliques, t = 2 .. 10
GREEDY_CLIQUES = {
    2: [166, 101, 106, 169, 60],
    3: [2396, 730, 881, 940, 1386, 2482, 1433, 2281, 1268],
    4: [22166, 22874, 11698, 34776, 13251, 19428, 49971, 13116, 39594,
        43606, 38246, 7793, 26218],
    5: [615882, 81761, 124596, 682665, 315178, 323811, 183761, 808837,
        405190, 572306, 350936, 677490, 193356, 813428, 219558, 406968,
        564460],
    6: [1943217, 2913196, 4896610, 1866067, 13689735, 5584078, 10118748,
        4943241, 3324617, 6759253, 5685752, 8874722, 14710001, 8830356,
        6614554, 4840148, 8771401, 3272036, 3364754, 13712184, 11117018],
    7: [30121113, 153038560, 15673110, 73300362, 41266505, 117929485,
        86698833, 43440080, 105500358, 176876844, 41595557, 156361628,
        172841777, 119125298, 205299228, 79251369, 210612677],
    8: [1305024466, 1295442290, 2999574898, 3795589971, 3631000788,
        3248355466, 364489541, 2896517604, 2629324346, 1255832164,
        504314142, 3570677031, 965647459, 1387503024, 1483592489],
    9: [56453847575, 43074435680, 41936051018, 22138975396, 23156633420,
        41987793978, 37225385892, 18981806746, 45452914326, 7371644105,
        53995320335, 52910835425, 60376161688, 19823315036, 10578923147,
        28478917930],
    10: [611551599738, 585720653408, 381375537029, 727566346115,
         90629862411, 851419790210, 418284730924, 524680378162,
         364580931042, 154503136551, 747357767564, 199828304181,
         99982406086, 319408643342, 422206490833, 34030595756],
}

# published genetic-search cliques, t = 2 .. 9
GA_CLIQUES = {
    2: [89, 169, 195, 149, 101],
    3: [2396, 922, 3347, 3214, 2635, 2290, 2854, 2473, 1386],
    4: [11633, 27850, 20148, 40089, 29719, 6098, 14940, 43414, 22981,
        40038, 15011, 42693, 13740],
    5: [355028, 694485, 626266, 436558, 57188, 250510, 647277, 308937,
        189682, 809194, 832054, 113080, 211555, 381267, 603590, 684888,
        584579],
    6: [9162129, 15599647, 12071353, 7947574, 2834188, 10323501, 6722981,
        7449237, 5936794, 3845219, 2986835, 13186247, 14739211, 5822797,
        5711193, 13280116, 14785656, 11687509, 9747734, 11764174,
        13835043],
    7: [206229172, 136297864, 145421137, 239938137, 244421436, 78464909,
        111023826, 96903644, 49849529, 150232156, 47868686, 213067927,
        46619057, 237397306, 193760535, 174494351, 223891867],
    8: [925672665, 545242888, 131329093, 1388111142, 3800772080,
        2494264851, 2084807742, 3004829231, 432983728, 1265186469,
        1437667228, 2976213301, 766141292, 455842134, 3399920157,
        3380112474, 2022530125, 1674167067, 3521287529, 517486905,
        1394045560],
    9: [6263028814, 17380851458, 66723786135, 13185706648, 61523714894,
        11518454374, 28777615826, 31813316858, 7484361626, 45216625720,
        10357786275, 32845624107, 64532207782, 48511720424, 46756144798,
        24818822896, 53243861654, 27484036889],
}

# published constructive-search cliques; the t=6 listing is omitted (it
# declares size 10 but prints 14 codes, four of them copied from the t=6
# greedy clique, and the codes are not pairwise orthogonal)
FAST_CLIQUES = {
    2: [86, 101, 149, 89, 60],
    3: [1452, 2396, 1393, 874, 756, 2482, 921, 1242, 2281],
    4: [25542, 15462, 13769, 39626, 50538, 22099, 38294, 22188, 22876,
        52421, 22947, 27802],
    5: [193425, 586090, 808611, 420073, 350674, 408358, 222834, 109987,
        315192, 341833, 604856, 662897, 171722, 308468, 121445, 218540,
        552900],
    7: [159860692, 161016643, 73886147, 142481171, 173143250, 170760901,
        21953176, 43986594, 203259148],
    8: [866473426, 1497876124, 1273533381, 1697995341, 1439971764,
        3784746441, 2345981979, 2309832360, 242628440],
    9: [56095030680, 38163367817, 41103334725, 54854789721, 22744355553,
        45279148512, 4785499937, 52133944916, 60209197830],
}

# vertices added by the constructive search on top of Paley-style seeds;
# each list is itself a clique of its G_t
EXTENSION_VERTICES = {
    4: [21930, 50745, 25500, 13107, 37740, 42330, 51510],
    5: [118659, 341714],
    6: [3099915, 9123660, 8841105, 10606050, 4844385, 4692870],
    7: [],
    8: [1923517785, 3032697660, 1695521520, 2956808130],
}

# largest published clique size per t (any algorithm)
LARGEST_SIZE = {2: 5, 3: 9, 4: 13, 5: 17, 6: 21, 7: 17, 8: 15, 9: 16, 10: 16}
