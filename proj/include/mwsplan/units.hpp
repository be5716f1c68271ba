// Copyright 2026 The mwsplan Authors.
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

// dB/linear helpers shared by the budget and link models. Powers in dBm are
// referenced to 1 mW.

#ifndef MWSPLAN_UNITS_HPP_
#define MWSPLAN_UNITS_HPP_

#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>

namespace mwsplan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

inline double LinearToDb(double ratio) { return 10.0 * std::log10(ratio); }

inline double DbmToWatt(double dbm) { return 1e-3 * DbToLinear(dbm); }

inline double WattToDbm(double watt) { return LinearToDb(watt / 1e-3); }

// Combines independent noise contributions expressed as SNRs in dB:
// 1/total = sum(1/term). Infinite terms contribute nothing.
inline double InverseSumDb(std::span<const double> terms_db) {
  double inverse = 0.0;
  for (double t : terms_db) inverse += 1.0 / DbToLinear(t);
  if (inverse == 0.0) return kInfinity;
  return -LinearToDb(inverse);
}

inline double InverseSumDb(std::initializer_list<double> terms_db) {
  return InverseSumDb(std::span<const double>(terms_db.begin(), terms_db.size()));
}

}  // namespace mwsplan

#endif  // MWSPLAN_UNITS_HPP_
