#include "fixtures.hpp"

namespace autobva::testing {

const std::vector<Golden>& bytecount_golden() {
  static const std::vector<Golden> rows = {
      {"false", "falseB", true},
      {"true", "trueB", true},
      {"-1", "-1B", true},
      {"0", "0B", true},
      {"9", "9B", true},
      {"10", "10B", true},
      {"-10", "-10B", true},
      {"-9", "-9B", true},
      {"999", "999B", true},
      {"1000", "1.0 kB", true},
      {"9950", "9.9 kB", true},
      {"9951", "10.0 kB", true},
      {"99948", "99.9 kB", true},
      {"99949", "99.9 kB", true},
      {"99950", "100.0 kB", true},
      {"99951", "100.0 kB", true},
      {"99952", "100.0 kB", true},
      {"999949", "999.9 kB", true},
      {"999950", "1.0 MB", true},
      {"999949999", "999.9 MB", true},
      {"999950000", "1.0 GB", true},
      {"99949999999999999", "99.9 PB", true},
      {"99950000000000000", "100.0 PB", true},
      {"9950000000000001999", "9.9 EB", true},
      {"9950000000000002000", "10.0 EB", true},
      {"-1000000000000000000000000000000", "-1000000000000000000000000000000B", true},
      {"-999999999999999999999999999999", "-999999999999999999999999999999B", true},
      {"999999999999994822656", "1000.0 EB", true},
      {"999999999999994822657", "BoundsError(\"kMGTPE\", 7)", false},
      {"999999999999990520104160854016", "BoundsError(\"kMGTPE\", 9)", false},
      {"999999999999990520104160854017", "BoundsError(\"kMGTPE\", 10)", false},
  };
  return rows;
}

const std::vector<Golden>& date_golden() {
  static const std::vector<Golden> rows = {
      {"(-10000,2,3)", "-10000-02-03", true},
      {"(-9999,2,3)", "-9999-02-03", true},
      {"(-1,9,3)", "-0001-09-03", true},
      {"(0,9,3)", "0000-09-03", true},
      {"(9999,5,9)", "9999-05-09", true},
      {"(10000,5,9)", "10000-05-09", true},
      {"(0,2,0)", "ArgumentError(\"Day: 0 out of range (1:29)\")", false},
      {"(0,2,1)", "0000-02-01", true},
      {"(330,5,0)", "ArgumentError(\"Day: 0 out of range (1:31)\")", false},
      {"(330,5,1)", "0330-05-01", true},
      {"(-8,3,-1)", "ArgumentError(\"Day: -1 out of range (1:31)\")", false},
      {"(-8,3,0)", "ArgumentError(\"Day: 0 out of range (1:31)\")", false},
      {"(0,0,92)", "ArgumentError(\"Month: 0 out of range (1:12)\")", false},
      {"(0,1,92)", "ArgumentError(\"Day: 92 out of range (1:31)\")", false},
      {"(0,4,99)", "ArgumentError(\"Day: 99 out of range (1:30)\")", false},
      {"(0,4,100)", "ArgumentError(\"Day: 100 out of range (1:30)\")", false},
      // The month pair is quoted only as nines followed by a power of ten.
      {"(0,99,0)", "ArgumentError(\"Month: 99 out of range (1:12)\")", false},
      {"(0,100,0)", "ArgumentError(\"Month: 100 out of range (1:12)\")", false},
      {"(0,999999,0)", "ArgumentError(\"Month: 999999 out of range (1:12)\")", false},
      {"(0,1000000,0)", "ArgumentError(\"Month: 1000000 out of range (1:12)\")", false},
      {"(2021,2,29)", "ArgumentError(\"Day: 29 out of range (1:28)\")", false},
  };
  return rows;
}

const std::vector<Golden>& bmi_value_golden() {
  static const std::vector<Golden> rows = {
      {"(0,93)", "Inf", true},
      {"(1,93)", "930000.0", true},
      {"(106,11)", "9.8", true},
      {"(106,12)", "10.7", true},
      {"(-1,0)", "DomainError(\"height or weight negative\")", false},
      {"(0,0)", "NaN", true},
      {"(-1,1)", "DomainError(\"height or weight negative\")", false},
      {"(0,1)", "Inf", true},
      {"(1,-1)", "DomainError(\"height or weight negative\")", false},
      {"(1,0)", "0.0", true},
  };
  return rows;
}

const std::vector<Golden>& bmi_class_golden() {
  static const std::vector<Golden> rows = {
      {"(1,0)", "Underweight", true},
      {"(1,1)", "Severely obese", true},
      {"(21,1)", "Normal", true},
      {"(21,2)", "Severely obese", true},
      {"(26,1)", "Underweight", true},
      {"(26,2)", "Obese", true},
      {"(29,1)", "Underweight", true},
      {"(29,2)", "Overweight", true},
      {"(29,3)", "Severely obese", true},
      {"(101,18)", "Underweight", true},
      {"(101,19)", "Normal", true},
      {"(101,30)", "Obese", true},
      {"(101,31)", "Severely obese", true},
      {"(108,26)", "Normal", true},
      {"(108,27)", "Overweight", true},
      {"(115,32)", "Overweight", true},
      {"(115,33)", "Obese", true},
      {"(132,44)", "Obese", true},
      {"(133,44)", "Overweight", true},
      {"(133,41)", "Overweight", true},
      {"(134,41)", "Normal", true},
      {"(1015,3087)", "Severely obese", true},
      {"(1016,3087)", "Obese", true},
      {"(-1,0)", "DomainError(\"height or weight negative\")", false},
      {"(0,0)", "Severely obese", true},
      {"(1,-1)", "DomainError(\"height or weight negative\")", false},
  };
  return rows;
}

const std::vector<WorkedPair>& bytecount_worked_pairs() {
  static const std::vector<WorkedPair> rows = {
      {"9", "10", "9B", "10B", 1, 0.75, 1, 1.0, 0.75},
      {"999949999", "999950000", "999.9 MB", "1.0 GB", 2, 0.63, 1, 2.0, 0.63},
      {"99949", "99950", "99.9 kB", "100.0 kB", 1, 0.43, 1, 1.0, 0.43},
      {"99949", "99951", "99.9 kB", "100.0 kB", 1, 0.43, 2, 0.50, 0.21},
      {"99951", "99952", "100.0 kB", "100.0 kB", 0, 0.0, 1, 0.0, 0.0},
      {"99948", "99949", "99.9 kB", "99.9 kB", 0, 0.0, 1, 0.0, 0.0},
  };
  return rows;
}

const OverflowDate& overflow_date_pair() {
  static const OverflowDate pair = {"(757576862466481,2,21)", "252522163911150-6028347736506391-02",
                                    "(757576862466482,2,21)",
                                    "-252522163911150-12056695473012777-30"};
  return pair;
}

}  // namespace autobva::testing
