// Builds the first example end to end: its difference set at a few depths,
// the persistent gaps, the exact measure and the matching series.
#include <iostream>

#include "cantorval/cantorval.hpp"

using namespace cantorval;

int main() {
  const LambdaSpec spec({}, {Rational(7, 15), Rational(5, 21)});

  for (std::size_t n = 0; n <= 4; ++n) {
    const IntervalUnion u = build_diff_n(spec, n);
    std::cout << "depth " << n << ": " << u.size() << " parts, measure " << to_string(u.measure()) << "\n";
  }

  const KIndexView view(spec, 0);
  const GapFamily family = gap_family(view, TernaryCode{}, 2);
  for (const auto& [level, gaps] : family.levels)
    std::cout << "level " << level << ": " << gaps.size() << " persistent gaps\n";

  const TrichotomyCertificate cert = classify(spec);
  std::cout << to_string(cert.verdict) << " with measure " << to_string(*cert.measure) << "\n";

  const SeriesSpec series = lambda_to_series(spec);
  std::cout << "x_1 = " << to_string(series.term(1)) << ", x_2 = " << to_string(series.term(2))
            << ", sum " << to_string(series.sum()) << "\n";
  return 0;
}
