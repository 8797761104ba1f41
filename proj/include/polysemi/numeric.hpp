#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace polysemi {

// Exact arithmetic throughout: unbounded integers for lattice coordinates,
// rationals for volumes and linear algebra. Floating point would break the
// equality tests every identity in this library relies on.
using Int = mpz_class;
using Rat = mpq_class;

enum class errc {
  mixed_dimension,
  negative_coordinate,
  zero_element,
  mixed_degree,
  not_graded,
  length_mismatch,
  index_out_of_range,
  not_type_one,
  index_not_in_index_set,
  not_a_polynomial_syzygy,
  parse_error,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw error(errc::internal, "integer out of machine range: " + v.get_str());
  return v.get_si();
}

}  // namespace polysemi
