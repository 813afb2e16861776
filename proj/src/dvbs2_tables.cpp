// Parity-address tables for the 64800-bit IRA LDPC codes.
// Generated by scripts/gen_parity_tables.py (fixed seeds); do not hand-edit.

#include "dvbs2_tables.h"

namespace pas::dvbs2 {

const int k_r34_degrees[135] = {
    12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
};
const int k_r34_entries[540] = {
    12509, 3257, 1675, 12206, 4671, 1129, 2761, 15900, 15294, 11578, 7626, 7771, 2796, 6505,
    15188, 8665, 3614, 589, 2289, 10171, 1202, 4886, 7294, 4796, 2711, 9441, 3900, 8564,
    5382, 6703, 8498, 4544, 3298, 10317, 2583, 13572, 2552, 14230, 12833, 4704, 6224, 15609,
    2105, 13353, 7624, 429, 314, 310, 12872, 12192, 15685, 9998, 3296, 16015, 13012, 8019,
    12198, 11021, 353, 7495, 8905, 14521, 14443, 5783, 10455, 6513, 12869, 14488, 5328, 5576,
    6793, 11986, 1211, 3660, 12289, 11040, 11134, 1628, 12006, 12442, 12976, 13360, 6127, 10632,
    14000, 5373, 6957, 13852, 10031, 13282, 12512, 15406, 464, 8149, 12233, 14704, 15218, 13879,
    2131, 5288, 799, 5450, 12811, 13114, 11679, 7569, 13593, 12302, 3198, 15807, 12087, 11228,
    5908, 15465, 14844, 1377, 5091, 11960, 13174, 15479, 5842, 8426, 12133, 5639, 15090, 5517,
    667, 28, 1524, 8190, 6546, 3781, 7507, 12967, 12714, 1579, 3744, 11223, 11030, 10596,
    10032, 7197, 1033, 15473, 5377, 2522, 3092, 2374, 16157, 15167, 227, 9253, 13982, 1905,
    5697, 3749, 6502, 10737, 6747, 10102, 454, 5717, 14578, 1910, 9459, 10727, 3795, 8335,
    11414, 11896, 3182, 5658, 597, 9357, 2593, 7090, 4824, 3932, 14535, 14292, 15422, 1747,
    11586, 10700, 13052, 8673, 2347, 11137, 3724, 8651, 4070, 12902, 9148, 3939, 14992, 9929,
    405, 9694, 1775, 10188, 8370, 5702, 15605, 2611, 9816, 8259, 2534, 2019, 14838, 1437,
    3605, 16136, 7621, 16100, 6309, 10215, 5903, 13838, 14523, 11296, 14489, 10231, 10956, 5971,
    11135, 10974, 7849, 13850, 60, 2650, 8260, 9529, 3111, 2787, 5041, 10359, 8481, 12695,
    13557, 936, 2700, 2092, 3715, 12080, 13186, 485, 5785, 12044, 3378, 9282, 5445, 10106,
    4358, 5556, 12879, 2469, 8385, 13185, 4699, 2363, 6381, 13711, 2773, 15531, 7330, 4664,
    11094, 10685, 11861, 1182, 13825, 1637, 3180, 13779, 4587, 16113, 4506, 11108, 13364, 10061,
    135, 13011, 7649, 488, 9494, 413, 6928, 1331, 6355, 1648, 11917, 2218, 12843, 6602,
    10563, 3921, 3150, 10398, 8681, 7146, 7121, 5379, 13777, 12396, 857, 3090, 1376, 7840,
    12179, 14866, 9323, 1300, 14467, 2892, 2139, 4200, 13267, 12989, 5751, 16098, 14002, 13702,
    7279, 15492, 3208, 11497, 13912, 9641, 6000, 15473, 13383, 12691, 5187, 6725, 9157, 3174,
    6101, 7658, 10097, 13712, 15543, 8569, 6471, 5598, 14826, 1792, 6184, 13199, 13511, 15986,
    5653, 5765, 10897, 3082, 15593, 9286, 3241, 15755, 11876, 3834, 2903, 4347, 8377, 6321,
    10955, 11798, 13551, 2776, 2208, 710, 9479, 14974, 7186, 14070, 1741, 6426, 9509, 3400,
    5725, 10052, 14755, 2913, 9896, 6546, 15301, 15981, 4215, 13898, 2418, 15778, 3747, 14665,
    3565, 6297, 8477, 2749, 10346, 14809, 2084, 4073, 8383, 14929, 11426, 238, 11345, 5925,
    2885, 9397, 15462, 10781, 7059, 12662, 2699, 14293, 15989, 10988, 9333, 6682, 9792, 263,
    13997, 12630, 2081, 6445, 7517, 916, 8314, 1835, 13226, 540, 4520, 9434, 13697, 13669,
    13894, 14294, 10350, 14301, 10959, 13767, 538, 8702, 11578, 9362, 14409, 6175, 11290, 2535,
    6740, 7702, 1923, 7848, 6638, 7453, 2659, 11258, 9564, 12360, 5764, 6038, 12359, 13143,
    5705, 7788, 3640, 10843, 11211, 3829, 13700, 8434, 6837, 13756, 5482, 15562, 15021, 8870,
    12754, 6628, 700, 5398, 10559, 6510, 4352, 10533, 2190, 8829, 14611, 12412, 8994, 15396,
    2656, 4160, 13115, 6366, 8996, 9197, 16123, 1533, 3028, 2411, 9739, 4349, 2836, 6198,
    293, 4139, 12149, 13494, 11730, 8306, 203, 2818, 5303, 4390, 12205, 7070, 15176, 12929,
    6753, 4197, 11986, 15408, 9846, 1490, 11746, 14996, 537, 8276, 2140, 4088, 5485, 8311,
    7100, 2485, 2559, 12058, 2953, 13633, 976, 7682,
};
const int k_r34_rows = 135;
const int k_r34_q = 45;

const int k_r45_degrees[144] = {
    11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
};
const int k_r45_entries[576] = {
    3087, 9284, 2674, 12478, 2522, 6281, 12541, 10422, 5160, 985, 1584, 11815, 2063, 7735,
    8561, 9770, 5687, 2227, 585, 1859, 6235, 79, 4612, 4409, 4795, 10789, 388, 4978,
    5761, 5915, 8464, 5006, 10814, 4142, 796, 888, 8141, 2268, 4364, 5462, 2211, 10565,
    6471, 7522, 8940, 6693, 10754, 10027, 4052, 5236, 11800, 1993, 2081, 3586, 10985, 6586,
    12578, 12190, 11342, 12235, 11124, 1712, 11596, 9561, 5252, 1754, 1165, 6409, 1437, 3457,
    10779, 8706, 12729, 11476, 12081, 11026, 10443, 9670, 2577, 9933, 4619, 5036, 1973, 7581,
    3303, 8528, 2169, 8954, 717, 457, 4349, 3460, 4331, 5110, 6366, 11683, 10414, 11350,
    2327, 5936, 6876, 5371, 220, 1033, 9421, 2060, 11100, 6924, 10310, 7385, 6796, 8442,
    8454, 11898, 9121, 5575, 2766, 10708, 3332, 4034, 8122, 6308, 3172, 631, 3741, 11195,
    2816, 11105, 10485, 11640, 10286, 12864, 8810, 12210, 2579, 4349, 1698, 7521, 8740, 7596,
    564, 11133, 1365, 12361, 8957, 12300, 12899, 6406, 9633, 12549, 11426, 2019, 10816, 5802,
    7628, 9041, 1114, 2079, 6012, 7081, 5687, 7224, 12025, 10004, 8598, 3748, 4596, 6947,
    9683, 12827, 4956, 11439, 9863, 1341, 3207, 8768, 12628, 9041, 8330, 7577, 8034, 8854,
    9375, 6050, 8332, 2831, 9574, 3671, 6804, 182, 10050, 1321, 6409, 2235, 5925, 4610,
    12658, 8151, 6195, 9882, 455, 583, 5747, 10573, 5724, 11, 1739, 6834, 5612, 10121,
    5496, 12559, 2148, 5651, 6526, 11562, 7609, 4060, 745, 2543, 1075, 11705, 3239, 6786,
    6724, 3203, 5830, 4612, 5650, 12912, 5407, 4890, 5099, 9343, 2532, 11553, 5881, 12781,
    4162, 6040, 5145, 12595, 717, 11122, 106, 5267, 4629, 5964, 2143, 4657, 723, 5264,
    7776, 11734, 8057, 6171, 2761, 12357, 1296, 2764, 9453, 1113, 5923, 10253, 3581, 1916,
    9171, 1028, 8483, 12252, 1764, 10695, 1342, 6087, 3560, 10364, 2030, 9952, 1829, 461,
    9175, 1797, 4939, 5447, 10553, 8752, 4751, 6632, 8506, 4007, 7843, 7042, 9843, 10966,
    6506, 489, 11330, 5862, 5607, 6672, 7322, 12659, 7497, 9631, 2461, 12684, 2527, 2516,
    12718, 6571, 3754, 2782, 3775, 3247, 2622, 9108, 1213, 11774, 7364, 10917, 1950, 12548,
    7384, 12560, 5676, 10962, 11124, 9683, 10601, 3654, 1598, 493, 4544, 11384, 12094, 4001,
    2897, 8980, 26, 11251, 6532, 837, 9849, 5092, 2364, 1313, 10849, 7619, 4474, 6687,
    6457, 10219, 8283, 4556, 12807, 7429, 6182, 12892, 8665, 4595, 9480, 10081, 6098, 1210,
    9990, 11023, 1818, 8461, 7738, 6896, 5622, 1484, 11719, 634, 10685, 2671, 4548, 10936,
    10122, 5256, 1341, 6906, 6175, 6750, 403, 12673, 9939, 2659, 5047, 3757, 9165, 1435,
    12502, 5991, 2777, 9994, 10648, 8787, 6562, 10275, 638, 11535, 189, 3934, 3806, 11730,
    7548, 3551, 6531, 7119, 12050, 8763, 5336, 4007, 11027, 11567, 11442, 4950, 7576, 6257,
    546, 413, 8598, 8410, 7382, 183, 2845, 5391, 11518, 12438, 5709, 8584, 10789, 8438,
    1770, 2577, 5182, 389, 267, 2712, 7645, 7601, 4124, 6700, 8397, 11576, 2663, 3111,
    561, 9650, 12853, 4241, 4885, 2561, 11742, 12164, 5216, 9830, 2130, 1706, 4123, 3388,
    12316, 1979, 6227, 8135, 3933, 6960, 3373, 6219, 11396, 2714, 8322, 12717, 12294, 2140,
    8599, 4275, 5741, 2436, 87, 5577, 2008, 338, 9678, 12696, 3498, 4469, 9387, 12097,
    5705, 6726, 12799, 4954, 9088, 12711, 6452, 5958, 497, 2421, 10499, 6707, 4123, 11871,
    7093, 7456, 7051, 8390, 8512, 2919, 4274, 8642, 556, 11501, 7969, 4728, 3348, 12644,
    12128, 10963, 9462, 12340, 2242, 10031, 3118, 9019, 7423, 9861, 3209, 8739, 10820, 9480,
    10826, 3997, 12473, 1658, 2341, 10329, 11468, 12495, 5001, 8663, 2160, 12509, 9366, 317,
    3035, 752, 1786, 1659, 12209, 11718, 6608, 7444, 5498, 520, 11060, 4832, 3536, 10801,
    801, 8413, 8655, 11174, 7758, 14, 2468, 9787, 5703, 11212, 5892, 12677, 4841, 182,
    9907, 4816,
};
const int k_r45_rows = 144;
const int k_r45_q = 36;

}  // namespace pas::dvbs2
