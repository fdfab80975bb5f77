// Copyright 2026 The Ludo Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ludo_lab/fixtures.h"

namespace ludo_lab {
namespace {

// Printed win percentages, point means and SDs. The two-seat tables report
// only the first seat's win percentage; the second seat column is left empty.
// No printed table has a draw column.
constexpr char k2p16[] = R"(strategy_p1,strategy_p2,games,win_pct_p1,win_pct_p2,draw_pct,mean_p1,sd_p1,mean_p2,sd_p2
N,N,10000,49.83,,,159.7,41.01,157.2,42.39
N,A,10000,0.22,,,75,53.16,209.6,48.65
N,RP,10000,13.6,,,82.2,54.1,135.1,39.51
A,N,10000,97.07,,,211.5,48.67,74.7,52.83
A,A,10000,48.12,,,120.6,59.06,121.9,58.57
A,RP,10000,44.42,,,114.5,71.78,109.3,44.37
RP,N,10000,83.6,,,133.6,38.77,86.6,54.09
RP,A,10000,49.88,,,105.3,43.59,117.7,69.59
RP,RP,10000,49.68,,,99.1,16.02,99.3,16.31
)";

constexpr char k2p20[] = R"(strategy_p1,strategy_p2,games,win_pct_p1,win_pct_p2,draw_pct,mean_p1,sd_p1,mean_p2,sd_p2
N,N,10000,49.68,,,210.2,50.31,209.1,51.66
N,A,10000,1.3,,,99.4,61.64,269.9,50.9
N,RP,10000,13.01,,,125.1,61.73,194.4,53.91
A,N,10000,98.19,,,268.4,52.32,100.1,60.98
A,A,10000,48.69,,,159.6,69.49,160.8,69.9
A,RP,10000,50.06,,,162.4,78.72,148,52.93
RP,N,10000,84.97,,,191.2,52.7,130.4,61.53
RP,A,10000,47.09,,,143.4,50.61,164,76.29
RP,RP,10000,48.49,,,128.3,28.7,129.4,29.27
)";

constexpr char k2p24[] = R"(strategy_p1,strategy_p2,games,win_pct_p1,win_pct_p2,draw_pct,mean_p1,sd_p1,mean_p2,sd_p2
N,N,10000,49.49,,,259.3,53.49,257.8,54.2
N,A,10000,0.95,,,128.5,68.96,331.3,55.15
N,RP,10000,13.25,,,168.8,65.66,262.3,65.99
A,N,10000,98.93,,,330.2,56.23,126,68.43
A,A,10000,49.31,,,196.6,77.5,196.9,77.49
A,RP,10000,58.99,,,213,84.53,181.8,55.93
RP,N,10000,84.1,,,260.1,67.04,173.8,65.27
RP,A,10000,35.89,,,177.3,53.83,216.7,82.24
RP,RP,10000,48.77,,,189.9,57.99,191.4,57.15
)";

constexpr char k4p16[] = R"(sl_no,s1,s2,s3,s4,games,win_pct_1,win_pct_2,win_pct_3,win_pct_4,draw_pct,mean_1,sd_1,mean_2,sd_2,mean_3,sd_3,mean_4,sd_4
1,N,N,N,N,1000,26.22,24.58,24.58,24.62,,108.2,49.4,105.66,51.59,106.36,49.97,108.95,48.89
2,A,N,N,N,1000,89.25,2.4,4.3,4.05,,183.89,59.72,37.05,36.67,53.38,49.17,65.61,52.74
3,RP,N,N,N,1000,55.8,11.25,15.15,17.8,,114.11,40.47,66.92,49.3,55.35,46.64,57.72,49.26
4,N,A,N,N,1000,4.4,89.45,2.65,3.5,,66.08,53.16,189.58,57.99,41.16,41.4,51.81,48.18
5,A,A,N,N,1000,63.2,33.3,1.2,2.3,,137.19,62.2,96.39,64.72,22.15,24.4,29.43,33.76
6,RP,A,N,N,1000,33.7,53.4,5.9,7,,90.43,52.58,115.94,75.92,28.54,30.08,32.9,36.69
7,N,RP,N,N,1000,19,50.75,15.8,14.45,,61.66,51.26,112.22,38.35,73.02,51.59,55.55,46.61
8,A,RP,N,N,1000,73.6,17.9,2.8,5.7,,132.67,65.96,73.43,25.3,28.81,32.02,34.8,39.46
9,RP,RP,N,N,1000,23.45,55.7,8.35,12.5,,68.92,24.19,84.55,27.43,35.7,37.36,36.16,38.49
10,N,N,N,A,1000,1.45,2.4,3.1,93.05,,39.11,39.89,52.47,49.85,64.66,52.07,192.54,57.09
11,A,N,N,A,1000,27.6,1.15,3.15,68.1,,93.15,63.74,19.97,23.14,29.54,37.45,142.4,60.65
12,RP,N,N,A,1000,19.05,2.5,3.2,75.25,,73.97,25.84,27.74,34.03,28.01,33.93,137.58,66.84
13,N,A,N,A,1000,3.8,44.45,3.5,48.25,,24.36,31.25,112.38,65.32,21.92,27.01,113.13,63.49
14,A,A,N,A,1000,33.55,25.05,2.7,38.7,,65.59,56.57,56.08,54.75,13.22,15.89,76.71,61.34
15,RP,A,N,A,1000,25.25,27.6,2.8,44.35,,54.46,39.54,64.25,58.93,15.95,20.01,79.87,61.94
16,N,RP,N,A,1000,2.9,26.35,4.55,66.2,,24.04,28.32,80.86,27.05,32.34,36.5,122.71,68.6
17,A,RP,N,A,1000,28.35,28.1,2,41.55,,64.54,57.47,61.84,23.3,16.37,22.27,83.27,61.71
18,RP,RP,N,A,1000,10.3,36.05,1.7,51.95,,50.76,20.98,68.37,22.31,17.32,22.67,85.76,61.93
19,N,N,N,RP,1000,8.6,13.15,18.65,59.6,,63.41,49.22,49.94,46.63,60.27,49.94,117.21,41.91
20,A,N,N,RP,1000,50.55,4.2,6.6,38.65,,113.6,72.9,26.41,31.19,31.39,37.59,95.75,56.36
21,RP,N,N,RP,1000,55.65,6.7,10.6,27.05,,85.67,26.9,33.29,36.14,32.2,35.57,72.13,24.56
22,N,A,N,RP,1000,3.6,63.2,3.3,29.9,,30.9,37.2,118.38,69.46,25.25,29.36,83.46,29.02
23,A,A,N,RP,1000,36.8,26.75,1.95,34.5,,79.66,63.97,60.5,55.27,14.75,17.48,66.92,47.66
24,RP,A,N,RP,1000,23.25,35.4,3,38.35,,58.62,43.4,74.54,64.26,17.52,21.17,59.96,28.32
25,N,RP,N,RP,1000,6.4,40.7,8.35,44.55,,35.89,37.79,90.99,29.12,38.65,39.21,92.64,28.74
26,A,RP,N,RP,1000,36.45,39.3,3.2,21.05,,79.28,65.17,69.01,21.65,19.1,24.35,67.93,44.25
27,RP,RP,N,RP,1000,17.25,56.75,5.1,20.9,,55.01,21.08,74.15,22.6,21.45,26.51,58.15,21.89
28,N,N,A,N,1000,3.1,4.1,89.55,3.25,,51.09,49.36,66.5,53.26,184.01,60.81,44.34,41.05
29,A,N,A,N,1000,45.55,2.7,49.35,2.4,,116,68.4,22.21,26.29,115.98,67.77,23.94,27.08
30,RP,N,A,N,1000,28.2,4.9,62.9,4,,82.65,27.98,34.53,40.89,117.03,66.43,28.84,30.18
31,N,A,A,N,1000,2.9,61.75,33.2,2.15,,29.36,37.29,132.27,63.86,94.89,63.46,23.9,25.35
32,A,A,A,N,1000,41.65,31.35,25,2,,80.36,63.54,65.26,57.18,57.18,52.14,14.74,15.09
33,RP,A,A,N,1000,30.85,35.1,31.75,2.3,,61.64,43.25,77.07,63.61,64.33,56.22,17.31,17.59
34,N,RP,A,N,1000,8.45,34.15,53.25,4.15,,32.54,39.84,89.3,55.17,113.17,73.41,28.37,29.78
35,A,RP,A,N,1000,46.15,22.95,28.75,2.15,,85.33,63.22,55.63,39.83,67.99,62.2,17.59,18.34
36,RP,RP,A,N,1000,34.98,25.93,36.03,3.05,,57.01,29.19,59.69,43.91,74.21,64.11,19.03,20.6
37,N,N,A,A,1000,2.6,2.15,58.75,36.5,,21.6,27.72,26.65,34.37,133.15,63.06,99.08,63.03
38,A,N,A,A,1000,25.93,1.45,35.13,37.48,,54.67,51.03,11.59,13.76,72.34,58.5,71.33,58.63
39,RP,N,A,A,1000,28.05,1.95,39.9,30.1,,62.22,22.29,15.64,20.78,79.85,61.68,66.85,55.45
40,N,A,A,A,1000,2.05,34.58,30.63,32.73,,12.52,16.53,72.04,59.22,62.09,55.72,60.84,52.74
41,A,A,A,A,1000,22.9,21.95,25.25,29.9,,36.88,43.5,36.01,43.26,37.68,44.91,40.77,43.17
42,RP,A,A,A,1000,29.7,21.45,23.1,25.75,,39.77,29.14,42.73,49.56,42.03,45.07,43.99,46.07
43,N,RP,A,A,1000,2.85,26.8,33.75,36.6,,13.84,16.69,60.21,43.02,75.27,64.04,70.4,59.08
44,A,RP,A,A,1000,19.53,33.93,22.15,24.38,,38.13,43.71,39.76,28.05,43.31,48.06,43.6,46.01
45,RP,RP,A,A,1000,26.2,25.65,21.65,26.5,,40.86,21.79,44.51,31.06,46.71,52.69,47.89,49.27
46,N,N,A,RP,1000,3.7,4.9,68.7,22.7,,28.77,34.54,30.07,37.31,124.05,66.83,76.06,27.22
47,A,N,A,RP,1000,28.2,1.7,40.55,29.55,,64.35,58.47,15.02,18.64,75.53,61.82,58,38.77
48,RP,N,A,RP,1000,41.8,2.4,44.9,10.9,,70.34,21.59,17.83,23.01,74.11,59.48,52.76,20.37
49,N,A,A,RP,1000,1.45,37.5,29.5,31.55,,15.35,20.7,76.92,62.65,62.66,55.84,64.22,22.04
50,A,A,A,RP,1000,21.45,22,20.85,35.7,,43.69,49.51,39.63,46.18,38.31,44.82,42.49,28.66
51,RP,A,A,RP,1000,28.3,23.15,20.5,28.05,,44.49,31.78,47.37,54.37,40.96,45.79,42.74,21.73
52,N,RP,A,RP,1000,2.55,19.7,36.65,41.1,,16.89,23.47,63.28,42.92,77.03,64.2,70.42,21.23
53,A,RP,A,RP,1000,21.5,26.85,21.9,29.75,,43.89,50.67,42.43,27.65,46.01,49.52,45.92,29.02
54,RP,RP,A,RP,1000,25.85,22.65,25.4,26.1,,44.33,23,45.2,31.26,48.46,51.95,46.67,19.95
55,N,N,RP,N,1000,14.7,20.25,52.3,12.75,,55.19,47.01,63.98,52.4,111.7,38.73,68.1,51.46
56,A,N,RP,N,1000,63.55,3.45,28.05,4.95,,119.19,68.81,24.27,28.27,82.16,28.29,36.13,38.07
57,RP,N,RP,N,1000,42.9,7.25,42.15,7.7,,91.7,28.97,38.59,38.04,92.67,28.91,41.2,38.32
58,N,A,RP,N,1000,4.7,74.1,17.85,3.35,,29.4,36.07,129.68,64.17,74.37,24.65,30.9,31.89
59,A,A,RP,N,1000,39.05,28.65,30,2.3,,78.28,62.96,66.92,57.9,62.33,21.42,17.86,20.47
60,RP,A,RP,N,1000,22.55,37.2,37.95,2.3,,64.81,43.5,79.89,65.38,68.71,21.62,20.33,23.38
61,N,RP,RP,N,1000,13.2,21.85,58.15,6.8,,34.73,39.29,67.96,22.85,84.9,25.8,34.51,34.04
62,A,RP,RP,N,1000,49.9,8.75,38.95,2.4,,83.68,65.02,48.98,19.56,69.74,21.2,19.41,22.47
63,RP,RP,RP,N,1000,18.6,14.7,62.6,4.1,,56.87,21.5,54.22,21,75.77,21.49,22.07,24.76
64,N,N,RP,A,1000,2.65,6.65,33.75,56.95,,23.45,27.47,29.14,34.88,94.3,54.95,121.47,72.08
65,A,N,RP,A,1000,27.85,2.1,30.75,39.3,,57.93,55.25,13.27,16.03,61.37,43.65,79.83,65.27
66,RP,N,RP,A,1000,39.55,2.4,19.6,38.45,,68.04,22.4,16.65,22.16,63.16,43.68,79.85,63.81
67,N,A,RP,A,1000,1.85,39.25,23.65,35.25,,14.33,16.32,75.72,61.4,53.32,39.67,71.91,60.36
68,A,A,RP,A,1000,22.15,20.08,30.48,27.28,,40.63,45.49,38.88,45.54,40.15,28.63,46.91,48.81
69,RP,A,RP,A,1000,27.45,23.85,24.55,24.15,,45.43,31.59,47.82,51.03,42.94,30.11,47.6,49.69
70,N,RP,RP,A,1000,3,31.4,25.05,40.55,,16.99,20.51,54.09,27.58,57.67,42.61,77.65,63.64
71,A,RP,RP,A,1000,22.3,26.2,24.6,26.9,,43.55,47.81,41.07,21.06,41.74,32.17,50.97,50.54
72,RP,RP,RP,A,1000,22.65,26.75,23.85,26.75,,43.61,19.51,42.98,21.67,44.41,30.88,51.92,53.25
73,N,N,RP,RP,1000,5.9,10.75,22.4,60.95,,32.1,35.26,30.67,36.19,68.07,24.13,86.28,28.66
74,A,N,RP,RP,1000,36.7,2.75,29.95,30.6,,76.88,66.37,17.59,22.34,56.76,29.86,64.89,44.98
75,RP,N,RP,RP,1000,60.75,3.9,17.35,18,,76.2,22.24,20.43,26.62,55.4,21.55,56.61,21.21
76,N,A,RP,RP,1000,2.45,48.45,9.7,39.4,,17.86,24.37,80.36,63.5,49.43,21.05,70.37,21.73
77,A,A,RP,RP,1000,22.45,21.85,25.2,30.5,,45.84,51.91,41.48,46.41,40.98,22.06,45.23,30.97
78,RP,A,RP,RP,1000,25.05,25.05,23.55,26.35,,46.94,32.87,49.69,53.4,44.71,20.95,48.36,22.28
79,N,RP,RP,RP,1000,4.3,17.75,14.35,63.6,,20.39,26.36,56.15,21.7,54.01,22.26,76.92,22.99
80,A,RP,RP,RP,1000,22.95,26.6,21.7,28.75,,48.16,53.78,44.06,20.58,43.49,23.35,48.63,30.9
81,RP,RP,RP,RP,1000,26.5,23.78,23.53,26.18,,46.83,21.53,46.58,21.2,45.12,20.96,47.6,19.45
)";

constexpr char k4p12[] = R"(sl_no,s1,s2,s3,s4,games,win_pct_1,win_pct_2,win_pct_3,win_pct_4,draw_pct,mean_1,sd_1,mean_2,sd_2,mean_3,sd_3,mean_4,sd_4
1,N,N,N,N,1000,25.05,23.6,25.8,25.55,,72.43,43.32,70.32,43.23,70.32,43.03,72.25,42.49
2,A,N,N,N,1000,86.75,2.8,5.25,5.2,,132.72,46.09,27.52,24.83,35.53,33.85,44.79,40.27
3,RP,N,N,N,1000,61.4,9.7,13.15,15.75,,77.69,22.24,41.74,34.38,38.21,36.06,41.29,37.27
4,N,A,N,N,1000,6.2,85.1,3.6,5.1,,44.58,41.87,130.19,47.54,30.8,25.35,35.05,33.02
5,A,A,N,N,1000,56.45,37.75,2.9,2.9,,97.37,50.84,71.98,53.62,18.76,15.75,22.45,26.12
6,RP,A,N,N,1000,33.4,53,5.3,8.3,,58.61,38.25,80.68,58.79,20.47,18.36,23.64,26.79
7,N,RP,N,N,1000,14.15,63.1,10.3,12.45,,37.95,36.2,75.65,21.51,42.07,33.89,37.51,33.81
8,A,RP,N,N,1000,64.55,30,1.9,3.55,,91.58,55.54,55.62,18.24,21.24,21.73,22.65,23.45
9,RP,RP,N,N,1000,28.7,57.95,4.9,8.45,,50.87,20.36,62.86,17.88,24.63,24.19,25.46,26.08
10,N,N,A,N,1000,3,5.15,89.85,2,,32.41,33.19,44.63,39.42,134.09,43.21,28.81,22.65
11,A,N,A,N,1000,49.68,3.23,43.18,3.9,,80.98,57.31,17.24,18.05,77.75,54.08,18.99,15.85
12,RP,N,A,N,1000,40.65,3.55,54,1.8,,63.26,19.28,22.54,25.04,83.1,56.22,19.25,18.25
13,N,A,A,N,1000,3.35,51.5,42.9,2.25,,18.62,23.03,93.76,52.86,73.72,52.68,18.9,15.4
14,A,A,A,N,1000,38.3,30.35,27.9,3.45,,56.18,51.73,48.08,45.64,43.04,42.31,13.52,11.75
15,RP,A,A,N,1000,31.35,37.6,28.45,2.6,,42.18,26.38,55.41,49.9,45.7,44.41,14.86,13.43
16,N,RP,A,N,1000,6.05,32.9,55.7,5.35,,19.81,24.27,59.29,39.05,82.22,56.45,22.19,18.05
17,A,RP,A,N,1000,38.93,27.75,30.08,3.23,,59.07,53.49,38.82,25.58,50.63,46.96,14.49,13.61
18,RP,RP,A,N,1000,36.05,25.57,34.85,3.53,,42.52,21.11,40.39,25.98,55.76,51.23,16.14,14.54
19,N,N,RP,N,1000,11.55,15.95,60.45,12.05,,35.22,34.24,39.81,38.8,76.1,21.67,44.44,34.68
20,A,N,RP,N,1000,46.95,2.85,46.9,3.3,,76.93,56.08,17.87,18.21,63.7,19.26,24.04,23.17
21,RP,N,RP,N,1000,43.3,4.9,47.6,4.2,,68.98,18.56,24.77,26.76,69.44,19.58,26.34,24.25
22,N,A,RP,N,1000,4.85,57.05,34.9,3.2,,20.98,25.53,85.91,56.02,56.96,17.27,22.55,22.37
23,A,A,RP,N,1000,35.75,24.95,37.95,1.35,,58.46,52.84,46.47,45.02,49.02,17.48,13.79,13.04
24,RP,A,RP,N,1000,22.5,30.5,45.3,1.7,,45.78,26.44,52.74,49.48,53.32,17.63,16.05,15.6
25,N,RP,RP,N,1000,7.7,25.55,61.7,5.05,,22.12,25.67,50.3,19.36,63.25,17.52,24.71,23.7
26,A,RP,RP,N,1000,38.95,13.9,44.6,2.55,,58.15,52.77,38.33,16.83,53.78,17.42,16.93,16.27
27,RP,RP,RP,N,1000,24.5,17.55,54.45,3.5,,45.13,19.96,41.21,18.07,57.74,17.22,18.14,18.89
28,N,N,N,A,1000,2.35,4.4,4.65,88.6,,29.16,28.3,34.83,35.64,42.96,40.53,134.5,46.69
29,A,N,N,A,1000,33.9,2.55,3.6,59.95,,70.12,53.07,17.45,16.58,20.18,23.88,97.28,52.58
30,RP,N,N,A,1000,31.65,2.8,4.85,60.7,,57.04,18.07,20.32,21.57,23.58,26.75,90.21,55.65
31,N,A,N,A,1000,3.95,43.25,4.7,48.1,,16.84,19.87,79.84,55.09,18.74,19.88,79.69,53.17
32,A,A,N,A,1000,29.95,24.35,4.15,41.55,,49.03,47.29,42.92,44.18,11.71,12.07,59.15,49.88
33,RP,A,N,A,1000,24.85,30.15,2.25,42.75,,37.92,24.8,47.85,48.29,12.75,12.69,56,50.24
34,N,RP,N,A,1000,1.55,42.55,3.85,52.05,,17.21,17.92,62.22,19.83,23.39,24.47,81.18,55.2
35,A,RP,N,A,1000,24,37.55,1.75,36.7,,45.97,44.61,49.05,18.72,13.41,15.17,60.05,53.47
36,RP,RP,N,A,1000,16.8,44.45,1.7,37.05,,39.72,17.93,51.15,17.59,13.98,15.79,56.6,50.95
37,N,N,A,A,1000,2.15,3.7,55.05,39.1,,16.68,15.4,20.74,25.88,95.08,51.67,72.9,51.94
38,A,N,A,A,1000,28.05,2.3,31.75,37.9,,43.13,43.1,10.73,10.83,49.62,48.74,51.81,46.96
39,RP,N,A,A,1000,39.1,1.2,32.2,27.5,,48.87,17.09,12.74,13.98,53.73,49.69,48.84,46.42
40,N,A,A,A,1000,1.85,31.95,32.8,33.4,,10.22,10.01,51.36,49.28,47.59,45.2,45.57,42.03
41,A,A,A,A,1000,23.82,24.07,23.3,28.82,,28,33.36,27.09,34.06,28.2,33.31,30.33,32.08
42,RP,A,A,A,1000,32.45,19.85,23.25,24.45,,31.96,19.51,30.2,36.61,30.88,37.07,30.62,31.96
43,N,RP,A,A,1000,2.05,29.4,35.1,33.45,,11.29,11.74,40.95,26.79,52.1,48.22,49.9,46.13
44,A,RP,A,A,1000,19.5,30.75,23.25,26.5,,30.74,37.33,30.87,18.19,32.55,37.39,34.9,36.44
45,RP,RP,A,A,1000,27.98,25.73,21.65,24.63,,33.92,17.69,32.4,20.8,33.84,40.51,37.16,38.33
46,N,N,RP,A,1000,3.1,8.83,30.98,57.08,,17.55,16.86,22.61,27.52,55.04,36.55,83.24,57.16
47,A,N,RP,A,1000,24.85,2.45,31.75,40.95,,42.59,43.99,12.03,12.92,43.21,29.95,61.02,52.78
48,RP,N,RP,A,1000,45.3,2.15,18.25,34.3,,53.6,18.56,13.07,15.04,42.84,26.21,56.64,50.47
49,N,A,RP,A,1000,3.15,35.55,23.9,37.4,,11.76,13.85,55.17,50.8,38.27,24.36,51.92,47.79
50,A,A,RP,A,1000,21.3,20.4,29.1,29.2,,29.84,34.86,29,34.51,29.68,19.16,36.03,38.58
51,RP,A,RP,A,1000,29.35,16.9,30.75,23,,32.43,19.45,29.29,34.9,32.44,19.37,34.52,37.1
52,N,RP,RP,A,1000,2.7,32.9,25.9,38.5,,12.55,13.31,40.54,19.37,39.66,25.41,57.57,50.12
53,A,RP,RP,A,1000,17.88,29.38,25.13,27.6,,30.45,35.27,32.86,17.42,31.71,20.23,40.88,42.24
54,RP,RP,RP,A,1000,26.5,23.15,23.9,26.45,,35.53,17.92,33.34,17.22,33.97,20.47,39.83,41.22
55,N,N,N,RP,1000,9.3,10.5,16.25,63.95,,39.99,35.34,34,33.9,41.14,39.13,79.92,23.62
56,A,N,N,RP,1000,51.3,3.35,6.25,39.1,,82.98,57.86,18.11,17.88,20.89,25.36,64.8,40.16
57,RP,N,N,RP,1000,60.2,3.85,7.4,28.55,,62.41,17.32,22.88,23.57,22.62,25.93,52.94,19.07
58,N,A,N,RP,1000,2.45,50.45,3.2,43.9,,20.84,22.97,79.86,56.9,18.33,20.05,63.81,18.87
59,A,A,N,RP,1000,38.3,24.05,1.85,35.8,,57.74,52.87,43.6,45.62,12.71,11.92,46.07,29.17
60,RP,A,N,RP,1000,25.5,32.55,3.65,38.3,,40.35,26.79,50.6,50.02,14.85,15.32,42.77,20.85
61,N,RP,N,RP,1000,3.9,47.45,3.35,45.3,,23.5,25.54,68.54,18.79,22.41,22.11,68.82,19.52
62,A,RP,N,RP,1000,28.2,43.25,2,26.55,,52.96,50.66,52.64,18.16,14.42,16.31,48.88,29.95
63,RP,RP,N,RP,1000,18.8,56.9,2.95,21.35,,42.81,17.92,57.97,17.08,15.72,17.83,44.89,18.82
64,N,N,A,RP,1000,3.55,3.45,59.35,33.65,,20.06,22.18,19.99,22.9,86.02,55.06,58.01,17.68
65,A,N,A,RP,1000,25.8,2.7,38.05,33.45,,45.92,47.07,12.89,13.45,52.78,49.93,42.74,25.79
66,RP,N,A,RP,1000,49,1.25,32.9,16.85,,53.93,17.02,12.98,13.58,50.88,48.23,40.63,16.34
67,N,A,A,RP,1000,1.25,31,23.15,44.6,,11.56,13.45,52.77,50.25,44.23,44.14,49.75,16.45
68,A,A,A,RP,1000,20.1,20.65,20.55,38.7,,31.32,36.74,28.95,35.28,28.78,33.68,34.41,19.89
69,RP,A,A,RP,1000,27,21.7,19.35,31.95,,32.81,20.78,33.95,39.1,29.26,32.51,34.1,16.67
70,N,RP,A,RP,1000,2.35,21.8,30.2,45.65,,13.04,15.32,43.36,26.24,51.41,48.6,54.12,18.2
71,A,RP,A,RP,1000,21.43,28.13,20.6,29.83,,34.05,39.57,32.9,18.64,31.68,35.29,35.66,20.1
72,RP,RP,A,RP,1000,29,22.7,19.3,29,,35.61,18.56,34.72,21.02,33.16,39.45,36.87,16.57
73,N,N,RP,RP,1000,3.45,8,27.55,61,,21.03,22.89,23.04,27.77,50.71,19.12,62.92,17.96
74,A,N,RP,RP,1000,37,2.65,30.25,30.1,,54.99,51.28,13.65,14.84,39.99,19.49,43.66,28.23
75,RP,N,RP,RP,1000,57.3,2.7,20.05,19.95,,57.85,16.69,15.79,18.05,42.93,19.19,43.23,16.66
76,N,A,RP,RP,1000,2.35,33.95,15.15,48.55,,13.87,17.69,53.21,50.43,38.75,17.06,53.6,16.5
77,A,A,RP,RP,1000,21.9,19.85,27.6,30.65,,34.74,40.23,30.82,37.79,32.72,17.55,35.4,21.15
78,RP,A,RP,RP,1000,23.8,23.3,24.5,28.4,,35.2,22.5,37.16,43.14,33.87,16.98,36.34,17.68
79,N,RP,RP,RP,1000,2.2,22.8,18.1,56.9,,14.61,17.61,44.35,18.7,41.36,18.15,58.35,16.97
80,A,RP,RP,RP,1000,21.85,26.45,24.1,27.6,,37.53,42.78,35.12,17.43,33.7,17.7,37.51,21.3
81,RP,RP,RP,RP,1000,24.2,27.43,22.73,25.63,,36.84,18.04,37.89,18.32,35.81,17.64,37.89,18.21
)";

constexpr char k4p8[] = R"(sl_no,s1,s2,s3,s4,games,win_pct_1,win_pct_2,win_pct_3,win_pct_4,draw_pct,mean_1,sd_1,mean_2,sd_2,mean_3,sd_3,mean_4,sd_4
1,N,N,N,N,1000,24.73,24.87,24.82,25.58,,38.23,21.81,38.01,22.17,37.86,20.34,39.54,22.01
2,A,N,N,N,1000,81.6,6.4,5.3,6.7,,80.64,42.32,22.32,12.99,22.44,17.37,25.37,19.41
3,RP,N,N,N,1000,78.1,3.5,7.9,10.5,,52.55,13.43,27.84,13.57,23.15,18.29,24.62,19.62
4,N,A,N,N,1000,6.45,82.95,5.9,4.7,,25.11,20.74,76.54,41.14,23.5,13.62,22.98,17.36
5,A,A,N,N,1000,53.35,35.2,6.55,4.9,,53.5,40.5,38.76,32.21,15.99,10.86,15.62,11.89
6,RP,A,N,N,1000,36.45,49.5,7.75,6.3,,36.46,17.49,45.85,38.41,18.08,11.78,16.08,13.23
7,N,RP,N,N,1000,9.6,77.3,4.1,9,,20.79,18.62,51.77,12.88,28.3,13.79,25.8,18.39
8,A,RP,N,N,1000,52.35,40.6,3.45,3.6,,54.09,43.2,40.26,12.78,17.67,12.18,16.54,13.09
9,RP,RP,N,N,1000,30.95,59.95,3.25,5.85,,35.95,16.38,44.22,11.67,20.82,13.23,17.89,15.57
10,N,N,A,N,1000,5,6.45,80.55,8,,20.94,18.53,25.43,20.2,76.84,42.13,25.06,12.94
11,A,N,A,N,1000,44.7,6,42.8,6.5,,48.19,40.13,13.25,11.23,45.85,36.42,16.13,12.59
12,RP,N,A,N,1000,52.05,2.22,41.2,4.53,,43.21,14.15,16.58,14.04,46.61,38.71,16.07,11.9
13,N,A,A,N,1000,4.4,49,40.4,6.2,,13.6,12.88,49.54,37.81,39.96,30.09,16.44,10.65
14,A,A,A,N,1000,33.98,31.18,29.05,5.78,,31.88,32,27.92,24.1,26.39,21.94,12.29,9.39
15,RP,A,A,N,1000,36.08,31.2,27.08,5.63,,29.91,14.76,29.43,25.22,26.88,23.54,12.84,9.95
16,N,RP,A,N,1000,5.6,31.8,52.45,10.15,,13.79,13.38,34.23,16.18,46.99,37.44,19.62,12.06
17,A,RP,A,N,1000,34.15,28.3,31.6,5.95,,33.19,33.73,26.82,12.63,29.48,25.1,13.16,9.7
18,RP,RP,A,N,1000,36.15,28.25,30.35,5.25,,30.72,15.14,28.13,14.49,30.48,27.05,13.49,10.1
19,N,N,RP,N,1000,6.8,11.05,77.35,4.8,,21.26,17.34,22.29,20.74,51.91,13.56,29.19,13.18
20,A,N,RP,N,1000,41.75,2.5,52.3,3.45,,46.57,37.98,13.14,11.01,43.49,14.71,18.28,13.24
21,RP,N,RP,N,1000,45.85,2.2,50,1.95,,47.81,13.1,16.74,13.67,47.72,14.33,17.64,13.12
22,N,A,RP,N,1000,3.3,45.95,46.65,4.1,,14.68,13.6,46.3,37.85,40.4,13.3,19.54,13.66
23,A,A,RP,N,1000,26.98,24.68,44.9,3.43,,30.88,31.58,26.3,25.17,34.39,13.38,13.59,10.97
24,RP,A,RP,N,1000,29.7,29.7,38.15,2.45,,31.9,15.55,31.38,29.87,36.39,13.07,13.4,10.6
25,N,RP,RP,N,1000,6.2,26.35,63,4.45,,15.21,15.39,33.88,15.51,44.72,12.14,21.76,13.92
26,A,RP,RP,N,1000,28.7,21.9,47.85,1.55,,34.21,36.41,28.29,14.69,37.64,13.26,13.92,11.14
27,RP,RP,RP,N,1000,29.5,21.7,45.2,3.6,,33.66,15.46,29.64,14.88,39.92,12.06,15.77,12.8
28,N,N,N,A,1000,4.7,5.35,5.7,84.25,,20.16,13.84,21.07,17.78,23.41,19.29,78.71,41.83
29,A,N,N,A,1000,31.5,4.2,4.25,60.05,,38.74,34.34,13.32,10.65,14.82,13.6,55.32,38.72
30,RP,N,N,A,1000,42.7,3.2,3.45,50.65,,40.14,13.2,16.63,13.22,14.96,14.17,50.01,39.04
31,N,A,N,A,1000,5.95,41.8,6.25,46,,13.44,12.45,46.95,38.81,14.65,12.78,45.53,34.68
32,A,A,N,A,1000,33.45,24.65,4.15,37.75,,27.25,24.27,24.77,24.56,10.58,9.3,31.69,28.02
33,RP,A,N,A,1000,28.33,28.33,6.4,36.93,,27.05,13.94,29.61,30.14,11.67,10.54,32.57,31.1
34,N,RP,N,A,1000,2.7,53.13,1.73,42.43,,12.43,11.18,44.44,14.72,17.16,14.09,49.35,39.23
35,A,RP,N,A,1000,21.15,44.15,2.5,32.2,,26.4,26.23,33.77,13.26,11.76,11.06,34.03,31.87
36,RP,RP,N,A,1000,21.93,47.43,2.65,27.98,,28.81,14.28,37.8,13.9,12.7,11.12,31.87,30.15
37,N,N,A,A,1000,3.9,3.6,49.6,42.9,,13.35,10.93,12.74,12.5,49.29,37.98,40.26,28.95
38,A,N,A,A,1000,25.75,4.4,29.25,40.6,,24.18,22.29,9.73,8.86,28.66,28.9,32.6,25.47
39,RP,N,A,A,1000,43.6,2.5,24.65,29.25,,34.23,14.26,10.71,9.7,28.22,26.67,29.35,23.55
40,N,A,A,A,1000,2.6,32.88,27.98,36.53,,9.81,8.97,32.1,31.83,26.82,24.14,28.44,21.41
41,A,A,A,A,1000,23.23,21.38,23.25,32.13,,19.09,18.9,17.66,18.17,18.22,17.8,22.48,18.71
42,RP,A,A,A,1000,31.8,22.4,20.6,25.2,,24.07,13.43,20.59,21.66,19.47,19.69,21.62,18.4
43,N,RP,A,A,1000,3.4,32.15,27.95,36.5,,10.5,10.04,28.24,14.79,28.82,25.73,29.98,24.26
44,A,RP,A,A,1000,18.03,34.23,22.5,25.23,,18.55,19.49,23.76,13.53,21.62,22.89,21.96,18.78
45,RP,RP,A,A,1000,27.6,27,19.95,25.45,,25.05,14.6,24.62,13.46,20.8,20.99,23.02,19.52
46,N,N,RP,A,1000,6.35,6.85,31.2,55.6,,15.07,11.68,14.48,13.95,33.04,16.33,46.01,34.21
47,A,N,RP,A,1000,21.6,3.65,32.4,42.35,,26.5,25.76,9.78,8.81,28.68,15.41,35.92,28.43
48,RP,N,RP,A,1000,47.47,1.25,20.12,31.17,,37.32,13.95,10.66,10.36,29.12,15.02,33.63,29.19
49,N,A,RP,A,1000,5.1,30.8,27.2,36.9,,10.35,9.35,30.08,30.41,26.39,13.74,31.57,24.78
50,A,A,RP,A,1000,22.35,18.73,29.43,29.48,,19.27,18.88,18.43,19.63,22.62,12.67,23.12,20.41
51,RP,A,RP,A,1000,29.53,19.8,28.18,22.48,,24.71,13.27,20.9,22.19,23.69,13.21,21.55,18.37
52,N,RP,RP,A,1000,3.58,31.88,25.05,39.48,,11.28,10.01,27.79,15.66,27.6,13.54,35.54,28.99
53,A,RP,RP,A,1000,19.4,27.25,26.45,26.9,,20.61,22.54,23.17,13.98,24.29,13.75,24.93,22.29
54,RP,RP,RP,A,1000,28.2,22.7,21.55,27.55,,26.77,14.14,23.84,14.08,24.1,13.41,26.49,24.06
55,N,N,N,RP,1000,3.2,6.4,10.75,79.65,,26.78,15.11,21.07,18.35,21.67,20.66,53.81,13.18
56,A,N,N,RP,1000,44.72,5.72,6.8,42.77,,43.63,38.11,15.6,10.99,13.66,12.37,37.73,18.23
57,RP,N,N,RP,1000,58.95,3.5,4.25,33.3,,44.21,11.84,18.7,13.42,15.11,13.39,36.56,15.6
58,N,A,N,RP,1000,3.35,37.35,2.85,56.45,,16.13,14.16,46.66,41.17,13.58,11.52,44.53,13.78
59,A,A,N,RP,1000,32.6,26.5,3.6,37.3,,31.81,30.73,27.86,26.89,11.03,9.14,32.28,15.84
60,RP,A,N,RP,1000,29.7,31.05,2.95,36.3,,28.2,14.63,32.18,30.84,11.36,9.24,30.85,14.55
61,N,RP,N,RP,1000,2.2,43.9,2.3,51.6,,15.61,14.49,47.28,14.12,16.56,14.55,48.55,13.34
62,A,RP,N,RP,1000,21.37,45.47,3.1,30.07,,28.33,28.49,37.08,13.25,11.8,11.42,32.95,15.38
63,RP,RP,N,RP,1000,21.18,49.63,3,26.18,,30.29,14.74,39.72,12.69,13.29,12.21,32.61,14.17
64,N,N,A,RP,1000,2.25,3.85,46.9,47,,16.87,12.74,14.31,13.34,46.13,39.47,41.07,13.08
65,A,N,A,RP,1000,24.28,4.93,30.43,40.35,,26.41,25.63,11.6,9.76,29.22,29.34,30.16,14.11
66,RP,N,A,RP,1000,46.35,2.9,24.45,26.3,,37.15,13.46,12.87,11.36,28.76,29.1,30.22,13.84
67,N,A,A,RP,1000,1.9,24.05,23.65,50.4,,10.58,10.39,29.53,30.55,26.92,25.52,36.24,13.11
68,A,A,A,RP,1000,22.33,16.53,20.85,40.28,,21.1,22.91,17.84,17.41,18.2,17.28,26.64,12.8
69,RP,A,A,RP,1000,29.48,18.88,17.93,33.7,,24.77,13.95,20.58,21.46,19.44,20.46,26.09,13.48
70,N,RP,A,RP,1000,1.6,22.6,23.25,52.55,,11.2,11.22,29.38,15.8,29.47,29.06,39.07,12.98
71,A,RP,A,RP,1000,19.7,29.3,18.25,32.75,,21.47,22.37,24.83,13.18,19.69,18.84,27.02,12.62
72,RP,RP,A,RP,1000,26.65,25.65,18,29.7,,25.97,14.47,25.59,13.27,20.93,20.63,27.88,13.04
73,N,N,RP,RP,1000,2.65,4,30.7,62.65,,17.98,13.95,14.61,14.45,35.03,15.91,44.2,11.5
74,A,N,RP,RP,1000,27.8,2.7,32.45,37.05,,30,29.89,10.85,9.14,28.24,15.57,31.29,14.61
75,RP,N,RP,RP,1000,53.3,1.85,21.75,23.1,,40.66,12.71,12.67,11.27,30.91,15.65,31.61,13.61
76,N,A,RP,RP,1000,2,24.5,17.75,55.75,,12.22,12.19,29.43,29.57,26.56,14.13,38.68,12.11
77,A,A,RP,RP,1000,20,18,29.45,32.55,,20.72,21.76,19.05,19.86,23.85,13.09,27.03,13.66
78,RP,A,RP,RP,1000,25.5,18.7,24.55,31.25,,24.92,14.1,21.85,22.28,24.39,13.41,27.61,13.66
79,N,RP,RP,RP,1000,1.6,23.65,22.45,52.3,,12.11,11.92,30.8,15.12,29.67,14.26,41.11,11.78
80,A,RP,RP,RP,1000,18.4,28.4,23.85,29.35,,22.27,22.45,26.46,13.73,24.55,14.22,28.04,13.08
81,RP,RP,RP,RP,1000,28.28,23.73,21.9,26.08,,27.88,13.89,26.64,14.44,26.3,13.67,28.61,13.56
)";

}  // namespace

std::string_view FixtureCsv(FixtureId id) {
  switch (id) {
    case FixtureId::k2p16: return k2p16;
    case FixtureId::k2p20: return k2p20;
    case FixtureId::k2p24: return k2p24;
    case FixtureId::k4p8: return k4p8;
    case FixtureId::k4p12: return k4p12;
    case FixtureId::k4p16: return k4p16;
  }
  return {};
}

}  // namespace ludo_lab
