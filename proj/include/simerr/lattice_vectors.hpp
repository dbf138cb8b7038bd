// Generated by tools/gen_lattice.py -- do not edit by hand.
// Rank-1 lattice generating vectors (CBC search, P2 criterion,
// product weights 1/j^2) for the randomized QMC integrator.
#pragma once

#include <array>
#include <cstdint>

namespace simerr::detail {

inline constexpr std::size_t kLatticeStages = 10;
inline constexpr std::size_t kLatticeMaxDim = 99;

inline constexpr std::array<std::uint32_t, kLatticeStages> kLatticeSizes = {
    1024, 2048, 4096, 8192, 16384, 32768, 65536, 131072, 262144, 524288};

inline constexpr std::array<std::array<std::uint32_t, kLatticeMaxDim>,
                             kLatticeStages>
    kLatticeGenerators = {{
    {{  // N = 1024
        1, 277, 225, 183, 431, 211, 671, 305, 905, 333,
        37, 543, 405, 145, 483, 527, 63, 921, 825, 641,
        165, 151, 321, 889, 765, 87, 561, 1001, 975, 131,
        457, 793, 323, 877, 507, 561, 311, 679, 299, 339,
        129, 411, 769, 99, 131, 389, 457, 769, 233, 285,
        613, 903, 621, 337, 893, 835, 953, 311, 597, 791,
        925, 893, 99, 519, 975, 599, 505, 835, 311, 703,
        923, 507, 389, 505, 505, 835, 877, 597, 131, 769,
        621, 265, 687, 713, 233, 635, 457, 265, 189, 71,
        687, 877, 517, 121, 881, 457, 135, 425, 457
    }},
    {{  // N = 2048
        1, 795, 1747, 713, 515, 1907, 1473, 869, 1067, 405,
        1453, 425, 837, 1799, 643, 561, 665, 1981, 1561, 1921,
        1107, 689, 1569, 347, 1601, 1935, 965, 31, 1859, 1705,
        633, 1225, 1297, 231, 471, 1983, 933, 1527, 97, 469,
        1971, 1279, 1717, 175, 329, 1303, 617, 701, 523, 893,
        1457, 557, 1567, 1823, 885, 1001, 1051, 1885, 245, 525,
        1729, 1157, 591, 977, 1885, 1985, 1041, 977, 591, 1729,
        387, 1519, 95, 617, 1681, 1047, 387, 1155, 751, 1519,
        1619, 743, 1109, 555, 2009, 387, 1091, 1579, 1109, 1823,
        319, 1493, 1523, 1661, 1519, 751, 1985, 1305, 977
    }},
    {{  // N = 4096
        1, 2365, 1233, 3193, 1009, 3713, 1661, 2599, 655, 3431,
        697, 93, 525, 3013, 4015, 2837, 3775, 1447, 689, 2119,
        2307, 1683, 1421, 3815, 3565, 3509, 2513, 1305, 3879, 875,
        1843, 1619, 1679, 3489, 3345, 1553, 2175, 1195, 3639, 3295,
        3617, 257, 3491, 3949, 717, 1953, 1877, 2103, 671, 2575,
        853, 2157, 1607, 2223, 2887, 2201, 3651, 3223, 3123, 305,
        2987, 2489, 1951, 335, 1397, 1487, 2823, 3137, 2523, 2715,
        3821, 1161, 1603, 2721, 3819, 1111, 1953, 307, 1951, 3581,
        3951, 3283, 307, 3051, 2571, 1159, 3043, 261, 351, 1441,
        1873, 3137, 3161, 3551, 1873, 1847, 873, 3883, 1555
    }},
    {{  // N = 8192
        1, 2507, 1213, 7725, 3891, 6653, 6125, 8067, 5961, 5993,
        2651, 7409, 6035, 5501, 5901, 2393, 7243, 1361, 4731, 293,
        7687, 7385, 4449, 7615, 7823, 6337, 2559, 3217, 5165, 3155,
        891, 5365, 7401, 6879, 2985, 3209, 1427, 7465, 1905, 3111,
        2447, 4685, 3753, 3663, 5373, 7187, 267, 1047, 1177, 1911,
        4589, 7469, 6211, 4537, 7165, 1185, 5285, 7139, 2175, 7981,
        7035, 2925, 7993, 6723, 1351, 6421, 1647, 7131, 4951, 6215,
        71, 2315, 4193, 3247, 3813, 6101, 3345, 6219, 4207, 6741,
        1523, 4991, 4775, 2107, 1913, 555, 6883, 2545, 5591, 6697,
        1749, 873, 3103, 7673, 5257, 1667, 4405, 4801, 399
    }},
    {{  // N = 16384
        1, 6691, 4259, 12487, 1281, 10023, 495, 13527, 3963, 13331,
        7065, 10707, 2337, 937, 14203, 8255, 4491, 4979, 3515, 11843,
        7445, 10481, 10835, 8055, 5969, 14245, 6777, 8311, 10221, 3137,
        5345, 7601, 1887, 9493, 13839, 10807, 13447, 12931, 12573, 15981,
        7111, 4149, 5135, 3873, 10735, 12737, 13195, 13731, 8017, 15253,
        10397, 15357, 5595, 14727, 2287, 4893, 6535, 11105, 13315, 15537,
        8859, 14531, 11959, 8305, 14351, 14173, 15989, 4465, 6431, 4049,
        11417, 5609, 15975, 4597, 8263, 11051, 947, 14393, 11119, 14299,
        11653, 6295, 1761, 13243, 4655, 3295, 11595, 16215, 8377, 13851,
        8929, 2393, 7853, 14297, 9511, 577, 9233, 4193, 6303
    }},
    {{  // N = 32768
        1, 4901, 11971, 21955, 8073, 17447, 10267, 23073, 9903, 28023,
        14969, 4105, 15953, 2719, 22265, 5261, 21349, 26553, 31823, 8701,
        8915, 10119, 3963, 19281, 30969, 5277, 16995, 4229, 13301, 6043,
        5791, 22411, 17731, 9103, 16593, 23225, 18157, 25465, 32005, 2095,
        8393, 28387, 2523, 6679, 17277, 293, 29351, 24955, 15601, 10325,
        26177, 20559, 14877, 23411, 22085, 11265, 7433, 24461, 21311, 26241,
        715, 29323, 25985, 10567, 27119, 20369, 12639, 7893, 17179, 31523,
        30889, 1863, 8177, 29519, 9117, 18909, 19349, 9635, 8329, 24963,
        7157, 8129, 13995, 9467, 24093, 21227, 25307, 31157, 13809, 17565,
        32325, 8771, 1791, 21169, 1043, 12669, 25293, 1665, 10101
    }},
    {{  // N = 65536
        1, 50609, 8613, 49835, 35353, 63867, 48561, 2093, 59763, 21783,
        38399, 23835, 37861, 58569, 13511, 6173, 36643, 16023, 31761, 28323,
        62355, 14053, 4797, 3797, 30975, 5391, 54861, 64611, 13551, 42697,
        47193, 61055, 17409, 2603, 59325, 35013, 27925, 8049, 20543, 39295,
        49603, 17953, 46977, 20337, 8119, 43333, 54255, 34001, 63319, 60897,
        49203, 39039, 11567, 12703, 10605, 32953, 60013, 20921, 7309, 55149,
        26449, 9373, 54225, 35211, 579, 38009, 28755, 44981, 55533, 45515,
        21259, 31445, 63195, 14197, 45765, 10035, 56299, 27341, 43221, 21391,
        59927, 63707, 44203, 31787, 61003, 26333, 34301, 43459, 54973, 5215,
        61331, 36085, 61653, 10391, 40883, 58249, 53435, 40113, 46747
    }},
    {{  // N = 131072
        1, 95145, 80237, 104245, 78763, 36455, 17623, 62031, 88425, 4683,
        67949, 122465, 49165, 20245, 48051, 111549, 23617, 114295, 115767, 20325,
        50655, 101769, 67381, 91287, 35033, 21297, 43283, 13305, 98575, 119781,
        64577, 95941, 41995, 127655, 53575, 4167, 1297, 8321, 54807, 123539,
        465, 11401, 82193, 129485, 60297, 3489, 27175, 98825, 27699, 117167,
        40249, 7475, 122063, 92133, 101009, 100121, 35675, 93953, 122103, 112535,
        19311, 111617, 125619, 60845, 63031, 106477, 97281, 68627, 94237, 53115,
        88677, 126489, 122851, 55567, 70019, 1261, 120739, 40443, 55833, 112299,
        86211, 7219, 36555, 96359, 84311, 14113, 34949, 76013, 28581, 76477,
        93397, 14005, 111933, 40033, 129745, 43525, 77731, 5449, 120549
    }},
    {{  // N = 262144
        1, 159685, 25441, 190733, 187555, 140037, 88655, 132901, 242061, 120025,
        16045, 133441, 138743, 105913, 146769, 155401, 173201, 114037, 161221, 43661,
        86115, 183283, 238033, 101627, 244407, 38525, 164401, 245431, 226495, 206833,
        97065, 236407, 63829, 239057, 28387, 213633, 211715, 65357, 193459, 39531,
        98227, 54367, 193877, 5711, 115827, 86799, 31221, 61793, 18657, 108567,
        84429, 72701, 86673, 176373, 78161, 261143, 167369, 144001, 71909, 247147,
        184787, 86893, 144865, 126001, 102931, 234885, 226117, 69855, 164953, 18903,
        202335, 214865, 226641, 255321, 36257, 95257, 228155, 49295, 199423, 188439,
        155113, 157135, 30101, 181699, 197619, 258023, 121395, 42961, 48043, 135247,
        234517, 179255, 126971, 21411, 19013, 224443, 95309, 26501, 229779
    }},
    {{  // N = 524288
        1, 406665, 49085, 206693, 121759, 111811, 301965, 433173, 411115, 454325,
        217175, 418341, 364521, 358563, 219797, 301145, 504415, 459337, 83225, 163775,
        179559, 329947, 327253, 101711, 142477, 199323, 337731, 320249, 389141, 56401,
        283005, 362987, 268111, 317051, 427257, 155535, 261153, 375259, 272847, 392951,
        481397, 383253, 102451, 169893, 331523, 210197, 470089, 335843, 476001, 435327,
        350571, 87881, 80041, 267841, 181087, 496291, 85109, 95721, 130443, 230645,
        389455, 19665, 298625, 363665, 164791, 453505, 308595, 522709, 63293, 520025,
        64167, 77001, 332757, 501467, 486471, 96133, 98481, 409099, 16685, 340905,
        390481, 225721, 159433, 211169, 332621, 295349, 465013, 487787, 282227, 22449,
        491829, 66583, 321893, 229529, 399703, 36373, 418191, 400105, 445927
    }},
}};

}  // namespace simerr::detail
