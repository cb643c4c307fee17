#include "netopt/schedule.hpp"

#include <cmath>
#include <sstream>

#include "netopt/errors.hpp"

namespace netopt {

StepSizeSchedule StepSizeSchedule::reciprocal_affine(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw ConfigError("schedule: reciprocal-affine needs alpha > 0 and beta > 0");
  StepSizeSchedule s;
  s.family_ = Family::ReciprocalAffine;
  s.alpha_ = alpha;
  s.beta_ = beta;
  return s;
}

StepSizeSchedule StepSizeSchedule::power(double scale, double exponent) {
  if (!(scale > 0.0) || !(exponent >= 0.0))
    throw ConfigError("schedule: power needs scale > 0 and exponent >= 0");
  StepSizeSchedule s;
  s.family_ = Family::Power;
  s.scale_ = scale;
  s.exponent_ = exponent;
  return s;
}

StepSizeSchedule StepSizeSchedule::constant(double value) {
  if (!(value > 0.0)) throw ConfigError("schedule: constant value must be > 0");
  StepSizeSchedule s;
  s.family_ = Family::Constant;
  s.value_ = value;
  return s;
}

StepSizeSchedule StepSizeSchedule::table(std::vector<double> values) {
  if (values.empty()) throw ConfigError("schedule: table must not be empty");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("schedule: table values must be positive and finite");
  StepSizeSchedule s;
  s.family_ = Family::Table;
  s.values_ = std::move(values);
  return s;
}

double StepSizeSchedule::operator()(std::int64_t nu) const {
  if (nu < 0) throw std::invalid_argument("schedule: nu must be >= 0");
  switch (family_) {
    case Family::ReciprocalAffine:
      return 1.0 / (static_cast<double>(nu) / alpha_ + beta_);
    case Family::Power:
      return scale_ / std::pow(static_cast<double>(nu) + 1.0, exponent_);
    case Family::Constant:
      return value_;
    case Family::Table: {
      const std::size_t i = static_cast<std::size_t>(nu);
      return i < values_.size() ? values_[i] : values_.back();
    }
  }
  return 0.0;  // unreachable
}

std::string StepSizeSchedule::describe() const {
  std::ostringstream out;
  switch (family_) {
    case Family::ReciprocalAffine:
      out << "1/(nu/" << alpha_ << " + " << beta_ << ")";
      break;
    case Family::Power:
      out << scale_ << "/(nu+1)^" << exponent_;
      break;
    case Family::Constant:
      out << "constant " << value_;
      break;
    case Family::Table:
      out << "table[" << values_.size() << "]";
      break;
  }
  return out.str();
}

}  // namespace netopt
