#pragma once

// Case-study fixtures: the 23-fault dependency matrix of the Tarantula vocabulary
// application (row = dependent fault, column = leading fault), the faults each of
// its 16 regression tests revealed, and the published test ordering. The same
// content ships as data/tarantula_matrix.csv, data/tarantula_exposure.csv and
// data/paper_order.txt.

#include <string_view>

namespace faultrank::tarantula {

inline constexpr std::string_view matrix_csv = R"csv(fault,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23
1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
2,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
3,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
4,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
5,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
6,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
7,1,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
8,1,1,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
9,1,1,1,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
10,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
11,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
12,1,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0
13,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
14,1,1,1,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0
15,1,1,1,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0
16,1,1,1,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0
17,1,1,1,1,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0
18,1,1,0,0,0,0,0,0,0,0,0,0,0,1,1,0,1,0,0,0,0,0,0
19,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
20,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
21,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0
22,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
23,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
)csv";

inline constexpr std::string_view exposure_csv = R"csv(test,fault
1,1
2,2
2,3
3,4
3,5
4,6
4,7
5,8
5,9
6,10
6,11
7,12
8,13
9,14
9,15
10,16
11,17
12,18
13,19
14,20
14,21
15,22
16,23
)csv";

inline constexpr std::string_view published_order = R"txt(T1
T2
T3
T4
T9
T11
T5
T8
T14
T6
T10
T12
T13
T7
T16
T15
)txt";

/// Values reported for the case study, used for match/divergence annotations.
namespace reported {
inline constexpr double avg_in_degree = 3.95;
inline constexpr double avg_path_length = 1.074;
inline constexpr double avg_clustering = 0.416;
inline constexpr double random_path_length = 1.675;
inline constexpr double random_clustering = 0.295;
inline constexpr int giant_component_nodes = 22;
inline constexpr int edges = 97;
inline constexpr int pareto_edges = 78;
inline constexpr double apfdd_comreg = 85.10;
inline constexpr double apfdd_random = 45.32;
inline constexpr double apfdd_relevant_slices = 54.10;
inline constexpr double apfdd_function_call_paths = 66.73;
} // namespace reported

} // namespace faultrank::tarantula
