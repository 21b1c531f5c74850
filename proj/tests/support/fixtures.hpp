#pragma once

#include <string>
#include <vector>

namespace autobva::testing {

// Input tuple in render_tuple form and the exact outcome text.
struct Golden {
  std::string input;
  std::string output;
  bool valid;
};

const std::vector<Golden>& bytecount_golden();
const std::vector<Golden>& date_golden();
const std::vector<Golden>& bmi_value_golden();
const std::vector<Golden>& bmi_class_golden();

// Hand-worked bytecount pairs with their distances and quotients. Jaccard
// values are quoted at two decimals.
struct WorkedPair {
  std::string input1, input2, output1, output2;
  long strlen_distance;
  double jaccard1_2dp;
  long input_distance;
  double pdq1;
  double pdq2_2dp;
};

const std::vector<WorkedPair>& bytecount_worked_pairs();

// Overflowing year pair whose rendered dates bear no resemblance to the input.
struct OverflowDate {
  std::string input1, output1, input2, output2;
};
const OverflowDate& overflow_date_pair();

}  // namespace autobva::testing
