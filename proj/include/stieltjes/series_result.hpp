#ifndef STIELTJES_SERIES_RESULT_HPP
#define STIELTJES_SERIES_RESULT_HPP

#include <cstddef>
#include <string_view>

#include "stieltjes/real.hpp"

namespace stieltjes {

enum class Method { taylor, asymptotic, hybrid, quadrature, closed_form };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::taylor: return "taylor";
    case Method::asymptotic: return "asymptotic";
    case Method::hybrid: return "hybrid";
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

/// Value of a series or integral evaluation with an absolute error estimate.
struct SeriesResult {
  Real value;
  Real error_estimate;
  std::size_t terms_used = 0;
  Method method = Method::closed_form;
};

/// Error-propagating combinations used when results are assembled from parts.
inline SeriesResult operator+(const SeriesResult& a, const SeriesResult& b) {
  return {a.value + b.value, a.error_estimate + b.error_estimate, a.terms_used + b.terms_used,
          a.method == b.method ? a.method : Method::hybrid};
}

inline SeriesResult operator-(const SeriesResult& a, const SeriesResult& b) {
  return {a.value - b.value, a.error_estimate + b.error_estimate, a.terms_used + b.terms_used,
          a.method == b.method ? a.method : Method::hybrid};
}

inline SeriesResult scaled(const SeriesResult& a, const Real& factor) {
  return {a.value * factor, a.error_estimate * abs(factor), a.terms_used, a.method};
}

}  // namespace stieltjes

#endif  // STIELTJES_SERIES_RESULT_HPP
