#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace malvis {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long long support = 0;
};

/// Two-class classification report: confusion matrix (rows = true class,
/// columns = predicted), per-class precision/recall/F1, accuracy, macro and
/// support-weighted averages. Zero-denominator rates are reported as 0 with
/// an advisory flag.
struct EvalReport {
  std::array<std::array<long long, 2>, 2> confusion{{{0, 0}, {0, 0}}};
  std::array<ClassMetrics, 2> per_class;
  ClassMetrics macro_avg;
  ClassMetrics weighted_avg;
  double accuracy = 0.0;
  long long total = 0;
  std::vector<std::string> zero_division_flags;
};

EvalReport evaluate_predictions(const std::vector<int>& y_true,
                                const std::vector<int>& y_pred);

/// Plain-text classification report (Benign / Malign / Acc / macro avg /
/// weighted avg rows, 4-decimal rates).
std::string format_report(const EvalReport& report);
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json_file(const std::filesystem::path& path);
void write_confusion_csv(const EvalReport& report,
                         const std::filesystem::path& path);

/// Side-by-side A/B presentation with deltas. Throws on mismatched supports.
std::string format_comparison(const EvalReport& a, const EvalReport& b);
std::string comparison_to_json(const EvalReport& a, const EvalReport& b);

}  // namespace malvis
