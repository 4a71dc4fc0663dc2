#include "fracrs/stats.hpp"

#include <boost/math/special_functions/beta.hpp>

#include "fracrs/errors.hpp"

namespace fracrs {

std::pair<double, double> clopper_pearson(std::uint64_t x, std::uint64_t n, double confidence) {
  if (n == 0 || x > n) raise(Errc::bad_config, "need 0 <= x <= n with n > 0");
  if (!(confidence > 0.0 && confidence < 1.0))
    raise(Errc::bad_config, "confidence must be in (0, 1)");
  const double a = 1.0 - confidence;
  const double lower =
      x == 0 ? 0.0
             : boost::math::ibeta_inv(static_cast<double>(x), static_cast<double>(n - x + 1),
                                      a / 2.0);
  const double upper =
      x == n ? 1.0
             : boost::math::ibeta_inv(static_cast<double>(x + 1), static_cast<double>(n - x),
                                      1.0 - a / 2.0);
  return {lower, upper};
}

}  // namespace fracrs
