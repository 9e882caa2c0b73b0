#include "oddres/precision.hpp"

#include <cstdio>
#include <vector>

namespace oddres {

std::string format_real(const Real& x, unsigned sig_digits) {
  // mpfr_snprintf gives exact control over the digit count and never consults
  // locale, so files re-generated under the same config are byte-identical.
  std::vector<char> buf(sig_digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(sig_digits - 1),
                x.backend().data());
  return std::string(buf.data());
}

std::string format_real_hex(const Real& x) {
  std::vector<char> buf(precision::bits() / 4 + 48);
  mpfr_snprintf(buf.data(), buf.size(), "%Ra", x.backend().data());
  return std::string(buf.data()) + "@" + std::to_string(precision::bits());
}

}  // namespace oddres
