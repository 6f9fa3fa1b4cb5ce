#pragma once

// Aggregate leaderboard rows as published for the second challenge, in
// published order. Columns that a table does not report are left at 0.

#include <string>
#include <vector>

#include "ccbench/leaderboard.hpp"

namespace ccbench::published {

inline LeaderboardRow general_row(std::string team, std::string algo, double w25, double w5, double w1, double worst,
                                  double mean, double median, double trimean) {
  LeaderboardRow r;
  r.team = std::move(team);
  r.algorithm = std::move(algo);
  r.summary.worst25_mean = w25;
  r.summary.worst5_mean = w5;
  r.summary.worst1_mean = w1;
  r.summary.worst = worst;
  r.summary.mean = mean;
  r.summary.median = median;
  r.summary.trimean = trimean;
  return r;
}

inline std::vector<LeaderboardRow> general_track() {
  return {
      general_row("Z. Li", "CAUnet", 4.084077, 8.240, 13.313, 16.579, 1.605, 0.966, 1.084),
      general_row("Z. Li", "CAUnet", 4.321251, 8.270, 13.064, 20.294, 1.725, 1.084, 1.207),
      general_row("X. Xing et al.", "AL-AWB (sub. # 2)", 4.419051, 8.421, 13.299, 19.995, 1.822, 1.197, 1.317),
      general_row("X. Xing et al.", "AL-AWB (sub. # 1)", 4.656795, 8.851, 13.338, 19.995, 1.891, 1.230, 1.352),
      general_row("Y. Qian", "sde-awb", 4.979334, 10.283, 16.712, 21.626, 1.914, 1.164, 1.269),
      general_row("Y. Qian", "sde-awb", 5.112188, 9.854, 15.325, 19.915, 1.952, 1.149, 1.292),
      general_row("Y. Qian", "sde-awb", 5.377026, 11.200, 16.970, 30.767, 2.034, 1.150, 1.282),
      general_row("J. Qiu et al.", "illumGAN", 9.999407, 15.037, 21.654, 28.589, 4.643, 3.588, 3.841),
      general_row("BASELINE", "GreyWorld", 10.419472, 15.813, 21.671, 29.379, 4.500, 3.319, 3.611),
      general_row("BASELINE", "Constant", 17.023748, 27.369, 35.637, 40.972, 7.081, 4.020, 5.275),
      general_row("J. Qiu et al.", "illGAN1.0", 25.954709, 32.458, 38.497, 40.849, 19.325, 18.278, 18.499),
      general_row("J. Qiu et al.", "illGAN1.0", 26.058358, 32.505, 39.388, 42.599, 19.360, 18.328, 18.498),
      general_row("J. Qiu et al.", "illGAN1.0", 26.459121, 32.924, 39.715, 42.599, 19.408, 18.468, 18.710),
  };
}

inline LeaderboardRow indoor_row(std::string team, std::string algo, double mean, double median, double trimean,
                                 double w5, double worst) {
  LeaderboardRow r;
  r.team = std::move(team);
  r.algorithm = std::move(algo);
  r.summary.mean = mean;
  r.summary.median = median;
  r.summary.trimean = trimean;
  r.summary.worst5_mean = w5;
  r.summary.worst = worst;
  return r;
}

inline std::vector<LeaderboardRow> indoor_track() {
  return {
      indoor_row("X. Xing et al.", "AL-AWB (sub. # 2)", 2.500120, 2.293, 2.201, 8.443, 11.923),
      indoor_row("Y. Qian", "sde-awb", 2.541370, 1.763, 1.943, 9.993, 10.976),
      indoor_row("X. Xing et al.", "AL-AWB (sub. # 1)", 2.855412, 2.293, 2.407, 10.954, 13.665),
      indoor_row("J. Qiu et al.", "illumGAN", 3.191023, 2.596, 2.674, 11.183, 12.043),
      indoor_row("R. Riva et al.", "PCGAN, MCGAN", 3.301088, 2.312, 2.298, 16.861, 22.862),
      indoor_row("R. Riva et al.", "PCGAN, MCGAN", 3.376422, 2.312, 2.337, 16.861, 22.862),
      indoor_row("BASELINE", "GreyWorld", 4.105811, 3.673, 3.545, 14.594, 18.674),
      indoor_row("BASELINE", "Constant", 15.269933, 14.802, 15.332, 29.241, 29.996),
  };
}

inline LeaderboardRow two_row(std::string team, std::string algo, double mean_squared, double mean, double median,
                              double trimean) {
  LeaderboardRow r;
  r.team = std::move(team);
  r.algorithm = std::move(algo);
  r.summary.mean_squared = mean_squared;
  r.summary.mean = mean;
  r.summary.median = median;
  r.summary.trimean = trimean;
  return r;
}

inline std::vector<LeaderboardRow> two_illuminant_track() {
  return {
      two_row("Y. Qian", "sde-awb (sub. # 1)", 31.026217, 2.751, 2.262, 2.290),
      two_row("Y. Qian", "sde-awb (sub. # 2)", 31.542930, 2.737, 2.171, 2.309),
      two_row("X. Xing et al.", "AL-AWB (sub. # 2)", 33.079119, 2.657, 1.844, 2.082),
      two_row("Y. Liu et al.", "3du-awb", 37.305135, 2.863, 2.503, 2.497),
      two_row("X. Xing et al.", "AL-AWB (sub. # 1)", 41.883269, 2.920, 2.107, 2.316),
      two_row("BASELINE", "GreyWorld", 81.840743, 4.127, 3.538, 3.715),
      two_row("BASELINE", "Constant", 144.745182, 5.264, 3.475, 3.815),
  };
}

}  // namespace ccbench::published
