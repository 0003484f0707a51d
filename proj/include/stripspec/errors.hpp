// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_ERRORS_HPP
#define STRIPSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stripspec {

/// Invalid argument values (sizes, exponents, truncations out of range).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A requested operation needs data the input does not carry
/// (e.g. analytic derivatives) and no fallback was requested.
struct capability_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Unknown name in a published lookup table (catalog, check registry).
struct lookup_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Index outside the represented range (e.g. Riesz cut beyond truncation).
struct range_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Input is degenerate for the requested quantity (zero denominator).
struct degenerate_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// File/stream failures surfaced by the I/O layer.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stripspec

#endif  // STRIPSPEC_ERRORS_HPP
