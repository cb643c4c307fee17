#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netopt {

/// Step-size sequence a(nu) evaluated at local update counts. Families:
///   reciprocal-affine  a(nu) = 1 / (nu/alpha + beta)
///   power              a(nu) = scale / (nu + 1)^exponent
///   constant           a(nu) = value
///   table              a(nu) = values[min(nu, last)]
/// Construction only enforces positivity and finiteness; the assumption
/// checks in verify decide whether a schedule is usable (sup <= 1,
/// monotone, square-summable, ...), so that deliberately bad schedules can
/// be loaded and failed.
class StepSizeSchedule {
public:
  enum class Family { ReciprocalAffine, Power, Constant, Table };

  static StepSizeSchedule reciprocal_affine(double alpha, double beta);
  static StepSizeSchedule power(double scale, double exponent);
  static StepSizeSchedule constant(double value);
  static StepSizeSchedule table(std::vector<double> values);

  double operator()(std::int64_t nu) const;

  Family family() const { return family_; }
  std::string describe() const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  double exponent() const { return exponent_; }
  double value() const { return value_; }
  const std::vector<double>& values() const { return values_; }

  /// True when values beyond any finite horizon follow the closed form
  /// (everything except table, whose tail is the constant last entry).
  bool has_closed_form_tail() const { return family_ != Family::Table; }

private:
  StepSizeSchedule() = default;

  Family family_ = Family::Constant;
  double alpha_ = 0.0, beta_ = 0.0;
  double scale_ = 0.0, exponent_ = 0.0;
  double value_ = 0.0;
  std::vector<double> values_;
};

}  // namespace netopt
